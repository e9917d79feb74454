#pragma once

#include <cstdint>
#include <vector>

#include "coact/func1d.hpp"
#include "coact/func2d.hpp"
#include "coact/rational.hpp"

namespace coact_test {

// Small deterministic generator for property-style tests.
struct Rng {
    uint64_t state;
    explicit Rng(uint64_t seed) : state(seed) {}
    uint64_t next() {
        state += 0x9e3779b97f4a7c15ull;
        uint64_t z = state;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }
    int64_t range(int64_t lo, int64_t hi) {  // inclusive
        return lo + int64_t(next() % uint64_t(hi - lo + 1));
    }
};

inline coact::Rational random_rational(Rng& rng, int64_t max_num = 20,
                                       int64_t max_den = 8) {
    int64_t num = rng.range(-max_num, max_num);
    int64_t den = rng.range(1, max_den);
    return coact::Rational(num, den);
}

inline coact::GaussRational random_gauss(Rng& rng) {
    return coact::GaussRational(random_rational(rng), random_rational(rng));
}

// Random piecewise polynomial over Q on [0,1] with up to three pieces.
inline coact::Func1D<coact::Rational> random_piecewise_poly(Rng& rng,
                                                            int max_deg = 4) {
    using coact::Rational;
    int npieces = int(rng.range(1, 3));
    std::vector<Rational> breaks{Rational(0)};
    if (npieces == 2) breaks.push_back(Rational(rng.range(1, 3), 4));
    if (npieces == 3) {
        breaks.push_back(Rational(1, 4));
        breaks.push_back(Rational(rng.range(2, 3), 4));
    }
    breaks.push_back(Rational(1));
    std::vector<std::vector<coact::Term1D<Rational>>> pieces;
    for (int p = 0; p < npieces; ++p) {
        std::vector<coact::Term1D<Rational>> terms;
        for (int n = 0; n <= max_deg; ++n)
            if (rng.range(0, 1)) terms.push_back({n, 0, random_rational(rng)});
        pieces.push_back(terms);
    }
    return coact::Func1D<coact::Rational>(breaks, pieces);
}

// Continuous member of the class (antiderivative of a random piecewise poly).
inline coact::Func1D<coact::Rational> random_continuous_poly(Rng& rng,
                                                             int max_deg = 4) {
    return random_piecewise_poly(rng, max_deg).antiderivative(coact::Rational(0));
}

inline coact::Func2D<coact::Rational> random_poly2d(Rng& rng, int max_deg = 3) {
    std::vector<coact::Term2D<coact::Rational>> terms;
    for (int n = 0; n <= max_deg; ++n)
        for (int m = 0; n + m <= max_deg; ++m)
            if (rng.range(0, 1)) terms.push_back({n, m, random_rational(rng)});
    return coact::Func2D<coact::Rational>(terms);
}

}  // namespace coact_test
