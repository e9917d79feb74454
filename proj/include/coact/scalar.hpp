#pragma once

#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <variant>

#include "coact/rational.hpp"

namespace coact {

using Cplx = std::complex<double>;

/// Field traits for the three coefficient fields the library is instantiated
/// over: exact rationals, exact Gaussian rationals, and complex doubles.
/// `Real` is the type used for domain coordinates (breakpoints, nodes).
template <class S>
struct ScalarField;

template <>
struct ScalarField<Rational> {
    using Real = Rational;
    static constexpr bool is_exact = true;
    static constexpr bool has_imag = false;

    static Rational zero() { return Rational(0); }
    static Rational one() { return Rational(1); }
    static Rational from_int(long long n) { return Rational(n); }
    static Rational from_rational(const Rational& r) { return r; }
    static Rational imag_unit() {
        throw std::domain_error("Rational field has no imaginary unit");
    }
    static bool is_zero(const Rational& x) { return x.is_zero(); }
    static double abs_approx(const Rational& x) { return std::abs(x.to_double()); }
    static Cplx to_complex(const Rational& x) { return Cplx(x.to_double(), 0.0); }
    static double real_to_double(const Rational& t) { return t.to_double(); }
    static Rational from_real(const Rational& t) { return t; }
    static Rational real_zero() { return Rational(0); }
    static Rational real_one() { return Rational(1); }
    /// e^{ikt} as a field element; only k = 0 stays inside Q.
    static Rational exp_ikt(int k, const Rational&) {
        if (k != 0)
            throw std::domain_error("e^{ikt} with k != 0 is not rational");
        return one();
    }
    static std::string str(const Rational& x) { return x.str(); }
};

template <>
struct ScalarField<GaussRational> {
    using Real = Rational;
    static constexpr bool is_exact = true;
    static constexpr bool has_imag = true;

    static GaussRational zero() { return GaussRational(); }
    static GaussRational one() { return GaussRational(1); }
    static GaussRational from_int(long long n) { return GaussRational(n); }
    static GaussRational from_rational(const Rational& r) { return GaussRational(r); }
    static GaussRational imag_unit() { return GaussRational::i(); }
    static bool is_zero(const GaussRational& x) { return x.is_zero(); }
    static double abs_approx(const GaussRational& x) {
        return std::abs(to_complex(x));
    }
    static Cplx to_complex(const GaussRational& x) {
        return Cplx(x.real().to_double(), x.imag().to_double());
    }
    static double real_to_double(const Rational& t) { return t.to_double(); }
    static GaussRational from_real(const Rational& t) { return GaussRational(t); }
    static Rational real_zero() { return Rational(0); }
    static Rational real_one() { return Rational(1); }
    /// e^{ikt} lies in Q(i) only at t = 0 (or trivially k = 0).
    static GaussRational exp_ikt(int k, const Rational& t) {
        if (k == 0 || t.is_zero()) return one();
        throw std::domain_error("e^{ikt} at a nonzero rational t is not in Q(i)");
    }
    static std::string str(const GaussRational& x) { return x.str(); }
};

template <>
struct ScalarField<Cplx> {
    using Real = double;
    static constexpr bool is_exact = false;
    static constexpr bool has_imag = true;

    static Cplx zero() { return Cplx(0.0, 0.0); }
    static Cplx one() { return Cplx(1.0, 0.0); }
    static Cplx from_int(long long n) { return Cplx(double(n), 0.0); }
    static Cplx from_rational(const Rational& r) { return Cplx(r.to_double(), 0.0); }
    static Cplx imag_unit() { return Cplx(0.0, 1.0); }
    static bool is_zero(const Cplx& x) { return x == zero(); }
    static double abs_approx(const Cplx& x) { return std::abs(x); }
    static Cplx to_complex(const Cplx& x) { return x; }
    static double real_to_double(double t) { return t; }
    static Cplx from_real(double t) { return Cplx(t, 0.0); }
    static double real_zero() { return 0.0; }
    static double real_one() { return 1.0; }
    static Cplx exp_ikt(int k, double t) { return std::exp(Cplx(0.0, k * t)); }
    static std::string str(const Cplx& x) {
        return "(" + std::to_string(x.real()) + "," + std::to_string(x.imag()) + ")";
    }
};

/// Lossless conversions between coefficient fields (exact stays exact,
/// anything converts to complex doubles).
template <class To, class From>
To scalar_cast(const From& x) {
    if constexpr (std::is_same_v<To, From>)
        return x;
    else if constexpr (std::is_same_v<To, GaussRational> && std::is_same_v<From, Rational>)
        return GaussRational(x);
    else if constexpr (std::is_same_v<To, Cplx>)
        return ScalarField<From>::to_complex(x);
    else
        static_assert(sizeof(To) == 0, "unsupported scalar conversion");
}

/// Runtime scalar: the serialization-facing sum type. Exact and float
/// variants never mix silently; cross-variant arithmetic throws.
class Scalar {
public:
    using Storage = std::variant<Rational, GaussRational, Cplx>;

    Scalar() : v_(Rational(0)) {}
    Scalar(Rational r) : v_(std::move(r)) {}
    Scalar(GaussRational g) : v_(std::move(g)) {}
    Scalar(Cplx c) : v_(c) {}

    bool is_exact() const { return v_.index() != 2; }
    bool is_rational() const { return v_.index() == 0; }
    bool is_gauss() const { return v_.index() == 1; }
    bool is_float() const { return v_.index() == 2; }

    const Rational& as_rational() const { return std::get<Rational>(v_); }
    const GaussRational& as_gauss() const { return std::get<GaussRational>(v_); }
    Cplx as_float() const { return std::get<Cplx>(v_); }

    Cplx to_complex() const;
    bool is_zero() const;
    std::string str() const;

    Scalar operator-() const;
    friend Scalar operator+(const Scalar& a, const Scalar& b);
    friend Scalar operator-(const Scalar& a, const Scalar& b);
    friend Scalar operator*(const Scalar& a, const Scalar& b);
    friend Scalar operator/(const Scalar& a, const Scalar& b);
    friend bool operator==(const Scalar& a, const Scalar& b);

    const Storage& storage() const { return v_; }

private:
    Storage v_;
};

}  // namespace coact
