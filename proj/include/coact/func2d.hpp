#pragma once

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "coact/func1d.hpp"
#include "coact/scalar.hpp"

namespace coact {

/// coeff * x^xpow * y^ypow
template <class S>
struct Term2D {
    int xpow = 0;
    int ypow = 0;
    S coeff = ScalarField<S>::zero();
};

/// Bivariate polynomial on [0,1]^2. Closed under +, *, partial derivatives
/// and iterated antiderivatives from the lower-left corner.
template <class S>
class Func2D {
public:
    using SF = ScalarField<S>;
    using R = typename SF::Real;
    using Term = Term2D<S>;

    Func2D() = default;
    explicit Func2D(std::vector<Term> terms) : terms_(std::move(terms)) { normalize(); }

    static Func2D constant(S c) { return Func2D({Term{0, 0, std::move(c)}}); }
    static Func2D monomial(int n, int m, S c = SF::one()) {
        return Func2D({Term{n, m, std::move(c)}});
    }

    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    double max_coeff_abs() const {
        double mx = 0.0;
        for (const auto& t : terms_) mx = std::max(mx, SF::abs_approx(t.coeff));
        return mx;
    }

    int total_degree() const {
        int d = 0;
        for (const auto& t : terms_) d = std::max(d, t.xpow + t.ypow);
        return d;
    }

    Func2D operator-() const {
        Func2D r = *this;
        for (auto& t : r.terms_) t.coeff = -t.coeff;
        return r;
    }

    Func2D scaled(const S& c) const {
        Func2D r = *this;
        for (auto& t : r.terms_) t.coeff = t.coeff * c;
        r.normalize();
        return r;
    }

    friend Func2D operator+(const Func2D& a, const Func2D& b) {
        Func2D r = a;
        r.terms_.insert(r.terms_.end(), b.terms_.begin(), b.terms_.end());
        r.normalize();
        return r;
    }

    friend Func2D operator-(const Func2D& a, const Func2D& b) { return a + (-b); }

    friend Func2D operator*(const Func2D& a, const Func2D& b) {
        std::vector<Term> prod;
        prod.reserve(a.terms_.size() * b.terms_.size());
        for (const auto& ta : a.terms_)
            for (const auto& tb : b.terms_)
                prod.push_back(
                    Term{ta.xpow + tb.xpow, ta.ypow + tb.ypow, ta.coeff * tb.coeff});
        return Func2D(std::move(prod));
    }

    friend bool operator==(const Func2D& a, const Func2D& b) {
        return (a - b).is_zero();
    }

    Func2D dx() const {
        std::vector<Term> d;
        for (const auto& t : terms_)
            if (t.xpow > 0)
                d.push_back(Term{t.xpow - 1, t.ypow, t.coeff * SF::from_int(t.xpow)});
        return Func2D(std::move(d));
    }

    Func2D dy() const {
        std::vector<Term> d;
        for (const auto& t : terms_)
            if (t.ypow > 0)
                d.push_back(Term{t.xpow, t.ypow - 1, t.coeff * SF::from_int(t.ypow)});
        return Func2D(std::move(d));
    }

    /// F(x,y) = integral_0^x f(u,y) du
    Func2D antiderivative_x() const {
        std::vector<Term> a;
        for (const auto& t : terms_)
            a.push_back(Term{t.xpow + 1, t.ypow, t.coeff / SF::from_int(t.xpow + 1)});
        return Func2D(std::move(a));
    }

    /// F(x,y) = integral_0^y f(x,v) dv
    Func2D antiderivative_y() const {
        std::vector<Term> a;
        for (const auto& t : terms_)
            a.push_back(Term{t.xpow, t.ypow + 1, t.coeff / SF::from_int(t.ypow + 1)});
        return Func2D(std::move(a));
    }

    /// Substitute x := value (a constant), leaving a polynomial in y.
    Func2D substitute_x(const S& value) const {
        std::vector<Term> out;
        for (const auto& t : terms_)
            out.push_back(Term{0, t.ypow, t.coeff * power(value, t.xpow)});
        return Func2D(std::move(out));
    }

    Func2D substitute_y(const S& value) const {
        std::vector<Term> out;
        for (const auto& t : terms_)
            out.push_back(Term{t.xpow, 0, t.coeff * power(value, t.ypow)});
        return Func2D(std::move(out));
    }

    S evaluate(const S& x, const S& y) const {
        S v = SF::zero();
        for (const auto& t : terms_) v = v + t.coeff * power(x, t.xpow) * power(y, t.ypow);
        return v;
    }

    /// Exact integral over the rectangle [x0,x1] x [y0,y1].
    S integral_rect(const S& x0, const S& x1, const S& y0, const S& y1) const {
        Func2D F = antiderivative_x().antiderivative_y();
        return F.evaluate(x1, y1) - F.evaluate(x0, y1) - F.evaluate(x1, y0) +
               F.evaluate(x0, y0);
    }

    /// Restriction to the affine segment p0 -> p1 as a polynomial in the
    /// parameter s on [0,1].
    Func1D<S> restrict_to_segment(const S& x0, const S& y0, const S& x1,
                                  const S& y1) const {
        // (x,y)(s) = (x0 + s*(x1-x0), y0 + s*(y1-y0)); expand binomially.
        std::vector<S> result;  // coefficients in s
        auto add_coeff = [&](size_t k, const S& c) {
            if (result.size() <= k) result.resize(k + 1, SF::zero());
            result[k] = result[k] + c;
        };
        S dxs = x1 - x0, dys = y1 - y0;
        for (const auto& t : terms_) {
            // (x0 + s dx)^n (y0 + s dy)^m
            std::vector<S> px = binomial_expand(x0, dxs, t.xpow);
            std::vector<S> py = binomial_expand(y0, dys, t.ypow);
            for (size_t i = 0; i < px.size(); ++i)
                for (size_t j = 0; j < py.size(); ++j)
                    add_coeff(i + j, t.coeff * px[i] * py[j]);
        }
        R zero_r = SF::real_zero();
        R one_r = SF::real_one();
        std::vector<Term1D<S>> terms;
        for (size_t k = 0; k < result.size(); ++k)
            terms.push_back(Term1D<S>{int(k), 0, result[k]});
        return Func1D<S>({zero_r, one_r}, {terms});
    }

    void normalize() {
        std::sort(terms_.begin(), terms_.end(), [](const Term& a, const Term& b) {
            return a.xpow != b.xpow ? a.xpow < b.xpow : a.ypow < b.ypow;
        });
        std::vector<Term> out;
        for (auto& t : terms_) {
            if (!out.empty() && out.back().xpow == t.xpow && out.back().ypow == t.ypow)
                out.back().coeff = out.back().coeff + t.coeff;
            else
                out.push_back(t);
        }
        std::erase_if(out, [](const Term& t) { return SF::is_zero(t.coeff); });
        terms_ = std::move(out);
    }

private:
    std::vector<Term> terms_;

    static S power(const S& base, int n) {
        S p = SF::one();
        for (int i = 0; i < n; ++i) p = p * base;
        return p;
    }

    // Coefficients of (a + b s)^n as a polynomial in s.
    static std::vector<S> binomial_expand(const S& a, const S& b, int n) {
        std::vector<S> coeffs{SF::one()};
        for (int step = 0; step < n; ++step) {
            std::vector<S> next(coeffs.size() + 1, SF::zero());
            for (size_t i = 0; i < coeffs.size(); ++i) {
                next[i] = next[i] + coeffs[i] * a;
                next[i + 1] = next[i + 1] + coeffs[i] * b;
            }
            coeffs = std::move(next);
        }
        return coeffs;
    }
};

}  // namespace coact
