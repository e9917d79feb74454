#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace coact {

/// Exact rational number. Arbitrary precision, always stored in lowest terms.
class Rational {
public:
    using Backend = boost::multiprecision::cpp_rational;

    Rational() = default;
    Rational(long long n) : v_(n) {}
    Rational(long long num, long long den) {
        if (den == 0) throw std::domain_error("Rational: zero denominator");
        v_ = Backend(num, den);
    }
    explicit Rational(Backend v) : v_(std::move(v)) {}

    /// Parses "p" or "p/q".
    static Rational from_string(const std::string& s) {
        auto slash = s.find('/');
        try {
            if (slash == std::string::npos)
                return Rational(Backend(boost::multiprecision::cpp_int(s)));
            boost::multiprecision::cpp_int num(s.substr(0, slash));
            boost::multiprecision::cpp_int den(s.substr(slash + 1));
            if (den == 0) throw std::domain_error("Rational: zero denominator");
            return Rational(Backend(num, den));
        } catch (const std::runtime_error&) {
            throw std::invalid_argument("Rational: cannot parse '" + s + "'");
        }
    }

    std::string str() const {
        const auto& num = boost::multiprecision::numerator(v_);
        const auto& den = boost::multiprecision::denominator(v_);
        if (den == 1) return num.str();
        return num.str() + "/" + den.str();
    }

    double to_double() const { return v_.convert_to<double>(); }
    bool is_zero() const { return v_.is_zero(); }
    bool is_one() const { return v_ == 1; }
    int sign() const { return v_.sign(); }
    const Backend& backend() const { return v_; }

    Rational operator-() const { return Rational(Backend(-v_)); }
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw std::domain_error("Rational: division by zero");
        v_ /= o.v_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

    Rational abs() const { return v_ < 0 ? -*this : *this; }

private:
    Backend v_;
};

inline Rational abs(const Rational& r) { return r.abs(); }

/// Element of Q(i): re + im*i with exact rational parts.
class GaussRational {
public:
    GaussRational() = default;
    GaussRational(long long n) : re_(n) {}
    GaussRational(Rational re) : re_(std::move(re)) {}
    GaussRational(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}

    static GaussRational i() { return GaussRational(Rational(0), Rational(1)); }

    const Rational& real() const { return re_; }
    const Rational& imag() const { return im_; }
    bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
    bool is_real() const { return im_.is_zero(); }

    std::string str() const {
        if (im_.is_zero()) return re_.str();
        if (im_.sign() < 0) return "(" + re_.str() + "-" + (-im_).str() + "i)";
        return "(" + re_.str() + "+" + im_.str() + "i)";
    }

    GaussRational conj() const { return GaussRational(re_, -im_); }
    Rational norm2() const { return re_ * re_ + im_ * im_; }

    GaussRational operator-() const { return GaussRational(-re_, -im_); }
    GaussRational& operator+=(const GaussRational& o) { re_ += o.re_; im_ += o.im_; return *this; }
    GaussRational& operator-=(const GaussRational& o) { re_ -= o.re_; im_ -= o.im_; return *this; }
    GaussRational& operator*=(const GaussRational& o) {
        Rational r = re_ * o.re_ - im_ * o.im_;
        Rational i = re_ * o.im_ + im_ * o.re_;
        re_ = std::move(r);
        im_ = std::move(i);
        return *this;
    }
    GaussRational& operator/=(const GaussRational& o) {
        Rational n2 = o.norm2();
        if (n2.is_zero()) throw std::domain_error("GaussRational: division by zero");
        *this *= o.conj();
        re_ /= n2;
        im_ /= n2;
        return *this;
    }

    friend GaussRational operator+(GaussRational a, const GaussRational& b) { return a += b; }
    friend GaussRational operator-(GaussRational a, const GaussRational& b) { return a -= b; }
    friend GaussRational operator*(GaussRational a, const GaussRational& b) { return a *= b; }
    friend GaussRational operator/(GaussRational a, const GaussRational& b) { return a /= b; }

    friend bool operator==(const GaussRational& a, const GaussRational& b) {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }
    friend bool operator!=(const GaussRational& a, const GaussRational& b) { return !(a == b); }

private:
    Rational re_, im_;
};

}  // namespace coact
