#pragma once

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "coact/scalar.hpp"

namespace coact {

/// How to evaluate a piecewise function at an interior breakpoint.
enum class BreakConvention { require_continuous, left, right, average };

/// coeff * t^pow * e^{i freq t}
template <class S>
struct Term1D {
    int pow = 0;
    int freq = 0;
    S coeff = ScalarField<S>::zero();
};

/// Piecewise function on [lo, hi], each piece a finite sum of terms
/// a * t^n * e^{ikt}. Closed under +, *, d/dt and antiderivative, which is
/// everything the 1D retracts need. Values are immutable after construction.
template <class S>
class Func1D {
public:
    using SF = ScalarField<S>;
    using R = typename SF::Real;
    using Term = Term1D<S>;

    Func1D() = default;

    Func1D(R lo, R hi) : breaks_{lo, hi}, pieces_(1) { check_domain(); }

    Func1D(std::vector<R> breaks, std::vector<std::vector<Term>> pieces)
        : breaks_(std::move(breaks)), pieces_(std::move(pieces)) {
        check_domain();
        if (pieces_.size() + 1 != breaks_.size())
            throw std::invalid_argument("Func1D: piece count must match partition");
        for (auto& p : pieces_) normalize_terms(p);
    }

    static Func1D constant(R lo, R hi, S c) {
        Func1D f(lo, hi);
        f.pieces_[0] = {Term{0, 0, std::move(c)}};
        f.normalize();
        return f;
    }

    static Func1D monomial(R lo, R hi, int n, S c = SF::one()) {
        Func1D f(lo, hi);
        f.pieces_[0] = {Term{n, 0, std::move(c)}};
        f.normalize();
        return f;
    }

    static Func1D exponential(R lo, R hi, int k, S c = SF::one()) {
        Func1D f(lo, hi);
        f.pieces_[0] = {Term{0, k, std::move(c)}};
        f.normalize();
        return f;
    }

    R lo() const { return breaks_.front(); }
    R hi() const { return breaks_.back(); }
    const std::vector<R>& breakpoints() const { return breaks_; }
    const std::vector<std::vector<Term>>& pieces() const { return pieces_; }

    bool is_zero() const {
        for (const auto& p : pieces_)
            if (!p.empty()) return false;
        return true;
    }

    double max_coeff_abs() const {
        double m = 0.0;
        for (const auto& p : pieces_)
            for (const auto& t : p) m = std::max(m, SF::abs_approx(t.coeff));
        return m;
    }

    bool same_domain(const Func1D& o) const { return lo() == o.lo() && hi() == o.hi(); }

    Func1D operator-() const {
        Func1D r = *this;
        for (auto& p : r.pieces_)
            for (auto& t : p) t.coeff = -t.coeff;
        return r;
    }

    Func1D scaled(const S& c) const {
        Func1D r = *this;
        for (auto& p : r.pieces_)
            for (auto& t : p) t.coeff = t.coeff * c;
        r.normalize();
        return r;
    }

    friend Func1D operator+(const Func1D& a, const Func1D& b) {
        return combine(a, b, false);
    }
    friend Func1D operator-(const Func1D& a, const Func1D& b) {
        return combine(a, b, true);
    }

    friend Func1D operator*(const Func1D& a, const Func1D& b) {
        auto [fa, fb] = refine_pair(a, b);
        Func1D r = fa;
        for (size_t i = 0; i < r.pieces_.size(); ++i) {
            std::vector<Term> prod;
            for (const auto& ta : fa.pieces_[i])
                for (const auto& tb : fb.pieces_[i])
                    prod.push_back(Term{ta.pow + tb.pow, ta.freq + tb.freq,
                                        ta.coeff * tb.coeff});
            r.pieces_[i] = std::move(prod);
        }
        r.normalize();
        return r;
    }

    /// Exact symbolic d/dt, taken piece by piece; breakpoints unchanged.
    Func1D derivative() const {
        Func1D r = *this;
        for (size_t i = 0; i < pieces_.size(); ++i) {
            std::vector<Term> d;
            for (const auto& t : pieces_[i]) {
                if (t.pow > 0)
                    d.push_back(Term{t.pow - 1, t.freq, t.coeff * SF::from_int(t.pow)});
                if (t.freq != 0)
                    d.push_back(Term{t.pow, t.freq,
                                     t.coeff * SF::imag_unit() * SF::from_int(t.freq)});
            }
            r.pieces_[i] = std::move(d);
        }
        r.normalize();
        return r;
    }

    /// F with F' = this, F(basepoint) = 0, continuous across breakpoints.
    Func1D antiderivative(const R& basepoint) const {
        if (basepoint < lo() || basepoint > hi())
            throw std::invalid_argument("Func1D: antiderivative basepoint outside domain");
        Func1D r = *this;
        std::vector<S> left_values(pieces_.size());  // F(piece lo) before shift
        S acc = SF::zero();
        for (size_t i = 0; i < pieces_.size(); ++i) {
            left_values[i] = acc;
            r.pieces_[i] = antiderivative_terms(pieces_[i]);
            if (i + 1 < pieces_.size())
                acc = acc + eval_terms(r.pieces_[i], breaks_[i + 1]) -
                      eval_terms(r.pieces_[i], breaks_[i]);
        }
        for (size_t i = 0; i < pieces_.size(); ++i) {
            S shift = left_values[i] - eval_terms(r.pieces_[i], breaks_[i]);
            if (!SF::is_zero(shift)) r.pieces_[i].push_back(Term{0, 0, shift});
        }
        r.normalize();
        S at_base = r.evaluate(basepoint, BreakConvention::left);
        if (!SF::is_zero(at_base)) {
            for (auto& p : r.pieces_) p.push_back(Term{0, 0, -at_base});
            r.normalize();
        }
        return r;
    }

    /// Exact definite integral over [a, b] within the domain. A degenerate
    /// region integrates to zero; callers that care can test a == b.
    S integral(const R& a, const R& b) const {
        if (b < a) return -integral(b, a);
        if (a < lo() || b > hi())
            throw std::invalid_argument("Func1D: integration region outside domain");
        S total = SF::zero();
        for (size_t i = 0; i < pieces_.size(); ++i) {
            R u = std::max(a, breaks_[i]);
            R v = std::min(b, breaks_[i + 1]);
            if (!(u < v)) continue;
            auto anti = antiderivative_terms(pieces_[i]);
            total = total + eval_terms(anti, v) - eval_terms(anti, u);
        }
        return total;
    }

    S evaluate(const R& t, BreakConvention conv = BreakConvention::require_continuous) const {
        if (t < lo() || t > hi())
            throw std::invalid_argument("Func1D: evaluation point outside domain");
        // Interior breakpoint?
        for (size_t i = 1; i + 1 < breaks_.size(); ++i) {
            if (breaks_[i] == t) {
                S lv = eval_terms(pieces_[i - 1], t);
                S rv = eval_terms(pieces_[i], t);
                switch (conv) {
                    case BreakConvention::left: return lv;
                    case BreakConvention::right: return rv;
                    case BreakConvention::average:
                        return (lv + rv) / SF::from_int(2);
                    case BreakConvention::require_continuous:
                        if (!values_agree(lv, rv))
                            throw std::domain_error(
                                "Func1D: discontinuous at breakpoint; pass an explicit "
                                "evaluation convention");
                        return lv;
                }
            }
        }
        size_t idx = piece_index(t);
        return eval_terms(pieces_[idx], t);
    }

    /// Syntactic equality after normalization (partition-insensitive).
    friend bool operator==(const Func1D& a, const Func1D& b) {
        return (a - b).is_zero();
    }

    /// Merges redundant breakpoints (adjacent pieces with equal terms).
    void normalize() {
        for (auto& p : pieces_) normalize_terms(p);
        std::vector<R> nb{breaks_.front()};
        std::vector<std::vector<Term>> np;
        for (size_t i = 0; i < pieces_.size(); ++i) {
            if (!np.empty() && terms_equal(np.back(), pieces_[i])) {
                nb.back() = breaks_[i + 1];
            } else {
                np.push_back(pieces_[i]);
                nb.push_back(breaks_[i + 1]);
            }
        }
        breaks_ = std::move(nb);
        pieces_ = std::move(np);
    }

    /// Copy of this function refined to include the given breakpoints.
    Func1D refined(const std::vector<R>& extra) const {
        Func1D r = *this;
        for (const R& b : extra) r.insert_breakpoint(b);
        return r;
    }

private:
    std::vector<R> breaks_;
    std::vector<std::vector<Term>> pieces_;

    void check_domain() const {
        if (breaks_.size() < 2)
            throw std::invalid_argument("Func1D: need at least two breakpoints");
        for (size_t i = 0; i + 1 < breaks_.size(); ++i)
            if (!(breaks_[i] < breaks_[i + 1]))
                throw std::invalid_argument("Func1D: breakpoints must strictly increase");
    }

    static bool values_agree(const S& a, const S& b) {
        if constexpr (SF::is_exact) {
            return SF::is_zero(a - b);
        } else {
            double scale = 1.0 + std::max(SF::abs_approx(a), SF::abs_approx(b));
            return SF::abs_approx(a - b) <= 1e-9 * scale;
        }
    }

    static void normalize_terms(std::vector<Term>& terms) {
        std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) {
            return a.pow != b.pow ? a.pow < b.pow : a.freq < b.freq;
        });
        std::vector<Term> out;
        for (auto& t : terms) {
            if (!out.empty() && out.back().pow == t.pow && out.back().freq == t.freq)
                out.back().coeff = out.back().coeff + t.coeff;
            else
                out.push_back(t);
        }
        std::erase_if(out, [](const Term& t) { return SF::is_zero(t.coeff); });
        terms = std::move(out);
    }

    static bool terms_equal(const std::vector<Term>& a, const std::vector<Term>& b) {
        if (a.size() != b.size()) return false;
        for (size_t i = 0; i < a.size(); ++i)
            if (a[i].pow != b[i].pow || a[i].freq != b[i].freq ||
                !SF::is_zero(a[i].coeff - b[i].coeff))
                return false;
        return true;
    }

    static S eval_terms(const std::vector<Term>& terms, const R& t) {
        S v = SF::zero();
        for (const auto& term : terms) {
            S p = SF::one();
            S tf = SF::from_real(t);
            for (int i = 0; i < term.pow; ++i) p = p * tf;
            v = v + term.coeff * p * SF::exp_ikt(term.freq, t);
        }
        return v;
    }

    // Closed-form antiderivative of a term list; integration by parts for
    // t^n e^{ikt}, power rule for k = 0.
    static std::vector<Term> antiderivative_terms(const std::vector<Term>& terms) {
        std::vector<Term> out;
        for (const auto& t : terms) {
            if (t.freq == 0) {
                out.push_back(Term{t.pow + 1, 0, t.coeff / SF::from_int(t.pow + 1)});
            } else {
                S ik = SF::imag_unit() * SF::from_int(t.freq);
                S c = t.coeff / ik;
                out.push_back(Term{t.pow, t.freq, c});
                for (int m = t.pow; m >= 1; --m) {
                    c = -(c * SF::from_int(m)) / ik;
                    out.push_back(Term{m - 1, t.freq, c});
                }
            }
        }
        return out;
    }

    size_t piece_index(const R& t) const {
        for (size_t i = 0; i < pieces_.size(); ++i)
            if ((breaks_[i] < t || breaks_[i] == t) && (t < breaks_[i + 1] || t == breaks_[i + 1]))
                return i;
        throw std::logic_error("Func1D: point not covered by partition");
    }

    void insert_breakpoint(const R& b) {
        if (b < lo() || b > hi())
            throw std::invalid_argument("Func1D: breakpoint outside domain");
        for (size_t i = 0; i < breaks_.size(); ++i) {
            if (breaks_[i] == b) return;
            if (b < breaks_[i]) {
                if constexpr (!SF::is_exact) {
                    if (std::abs(SF::real_to_double(breaks_[i]) - SF::real_to_double(b)) < 1e-12 ||
                        (i > 0 &&
                         std::abs(SF::real_to_double(breaks_[i - 1]) - SF::real_to_double(b)) < 1e-12))
                        throw std::runtime_error("Func1D: near-duplicate breakpoints; "
                                                 "inconsistent partitions");
                }
                breaks_.insert(breaks_.begin() + i, b);
                auto split_piece = pieces_[i - 1];
                pieces_.insert(pieces_.begin() + i, std::move(split_piece));
                return;
            }
        }
    }

    static std::pair<Func1D, Func1D> refine_pair(const Func1D& a, const Func1D& b) {
        if (!a.same_domain(b))
            throw std::invalid_argument("Func1D: mismatched domains");
        return {a.refined(b.breaks_), b.refined(a.breaks_)};
    }

    static Func1D combine(const Func1D& a, const Func1D& b, bool subtract) {
        auto [fa, fb] = refine_pair(a, b);
        for (size_t i = 0; i < fa.pieces_.size(); ++i)
            for (const auto& t : fb.pieces_[i])
                fa.pieces_[i].push_back(
                    Term{t.pow, t.freq, subtract ? -t.coeff : t.coeff});
        fa.normalize();
        return fa;
    }
};

}  // namespace coact
