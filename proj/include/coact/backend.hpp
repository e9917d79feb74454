#pragma once

#include <string>

#include "coact/func1d.hpp"

namespace coact {

enum class BasisKind { lagrange, pwlinear, trig_dual, midpoint_hat };

inline std::string to_string(BasisKind k) {
    switch (k) {
        case BasisKind::lagrange: return "lagrange";
        case BasisKind::pwlinear: return "pwlinear";
        case BasisKind::trig_dual: return "trig-dual";
        case BasisKind::midpoint_hat: return "midpoint-hat";
    }
    return "?";
}

inline std::string to_string(BreakConvention c) {
    switch (c) {
        case BreakConvention::require_continuous: return "require-continuous";
        case BreakConvention::left: return "left";
        case BreakConvention::right: return "right";
        case BreakConvention::average: return "average";
    }
    return "?";
}

}  // namespace coact
