#include "coact/scalar.hpp"

namespace coact {

namespace {

// Exact variants promote Rational -> GaussRational when mixed with each
// other; exact and float never mix.
enum class Kind { Rat, Gauss, Float };

Kind kind_of(const Scalar& s) {
    if (s.is_rational()) return Kind::Rat;
    if (s.is_gauss()) return Kind::Gauss;
    return Kind::Float;
}

Kind common_kind(const Scalar& a, const Scalar& b) {
    Kind ka = kind_of(a), kb = kind_of(b);
    if ((ka == Kind::Float) != (kb == Kind::Float))
        throw std::invalid_argument(
            "Scalar: cannot mix exact and float variants in one expression");
    if (ka == Kind::Float) return Kind::Float;
    if (ka == Kind::Gauss || kb == Kind::Gauss) return Kind::Gauss;
    return Kind::Rat;
}

GaussRational to_gauss(const Scalar& s) {
    return s.is_gauss() ? s.as_gauss() : GaussRational(s.as_rational());
}

Scalar demote(GaussRational g) {
    if (g.is_real()) return Scalar(g.real());
    return Scalar(std::move(g));
}

template <class Op>
Scalar apply(const Scalar& a, const Scalar& b, Op op) {
    switch (common_kind(a, b)) {
        case Kind::Rat:
            return Scalar(op(a.as_rational(), b.as_rational()));
        case Kind::Gauss:
            return demote(op(to_gauss(a), to_gauss(b)));
        case Kind::Float:
        default:
            return Scalar(op(a.as_float(), b.as_float()));
    }
}

}  // namespace

Cplx Scalar::to_complex() const {
    if (is_rational()) return ScalarField<Rational>::to_complex(as_rational());
    if (is_gauss()) return ScalarField<GaussRational>::to_complex(as_gauss());
    return as_float();
}

bool Scalar::is_zero() const {
    if (is_rational()) return as_rational().is_zero();
    if (is_gauss()) return as_gauss().is_zero();
    return as_float() == Cplx(0.0, 0.0);
}

std::string Scalar::str() const {
    if (is_rational()) return as_rational().str();
    if (is_gauss()) return as_gauss().str();
    return ScalarField<Cplx>::str(as_float());
}

Scalar Scalar::operator-() const {
    if (is_rational()) return Scalar(-as_rational());
    if (is_gauss()) return Scalar(-as_gauss());
    return Scalar(-as_float());
}

Scalar operator+(const Scalar& a, const Scalar& b) {
    return apply(a, b, [](const auto& x, const auto& y) { return x + y; });
}

Scalar operator-(const Scalar& a, const Scalar& b) {
    return apply(a, b, [](const auto& x, const auto& y) { return x - y; });
}

Scalar operator*(const Scalar& a, const Scalar& b) {
    return apply(a, b, [](const auto& x, const auto& y) { return x * y; });
}

Scalar operator/(const Scalar& a, const Scalar& b) {
    return apply(a, b, [](const auto& x, const auto& y) { return x / y; });
}

bool operator==(const Scalar& a, const Scalar& b) {
    if ((kind_of(a) == Kind::Float) != (kind_of(b) == Kind::Float)) return false;
    if (a.is_float()) return a.as_float() == b.as_float();
    GaussRational ga = to_gauss(a), gb = to_gauss(b);
    return ga == gb;
}

}  // namespace coact
