#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "coact/backend.hpp"
#include "coact/forms.hpp"

namespace coact {

/// The interval retract: nodes 0 = t_0 < ... < t_n = 1, 0-form basis alpha_j
/// dual to point evaluations, 1-form basis beta_j dual to piece integrals,
/// with projector P and contracting homotopy h satisfying d h + h d = id - P.
///
/// Basis index layout: 0..n are alpha (degree 0), n+1..2n are beta (degree 1).
template <class S = Rational>
class IntervalComplex {
public:
    using Scalar = S;
    using SF = ScalarField<S>;
    using R = typename SF::Real;
    using FormT = Form1D<S>;
    using ChainT = Chain1D<S>;
    using Field = VectorField1D<S>;
    static constexpr int dimension = 1;

    static IntervalComplex build(const std::vector<Rational>& nodes, BasisKind kind,
                                 BreakConvention conv = BreakConvention::require_continuous) {
        static_assert(SF::is_exact, "interval backend runs over an exact field");
        if (nodes.size() < 2)
            throw std::invalid_argument("interval: need at least 2 nodes");
        for (size_t i = 0; i + 1 < nodes.size(); ++i)
            if (!(nodes[i] < nodes[i + 1]))
                throw std::invalid_argument("interval: nodes must strictly increase");
        if (!nodes.front().is_zero() || !(nodes.back() == Rational(1)))
            throw std::invalid_argument("interval: nodes must start at 0 and end at 1");
        if (kind != BasisKind::lagrange && kind != BasisKind::pwlinear)
            throw std::invalid_argument("interval: basis must be lagrange or pwlinear");
        if (kind == BasisKind::pwlinear && conv == BreakConvention::require_continuous)
            throw std::invalid_argument(
                "interval: pwlinear basis requires a one-sided evaluation convention");

        IntervalComplex cx;
        cx.kind_ = kind;
        cx.conv_ = conv;
        for (const auto& t : nodes) cx.nodes_.push_back(t);
        const int n = int(nodes.size()) - 1;

        if (kind == BasisKind::lagrange) {
            for (int j = 0; j <= n; ++j) cx.alphas_.push_back(FormT(0, cx.lagrange_poly(j)));
        } else {
            for (int j = 0; j <= n; ++j) cx.alphas_.push_back(FormT(0, cx.hat(j)));
        }

        // beta_j = d(sum_{k>j} alpha_k)
        for (int j = 0; j < n; ++j) {
            Func1D<S> tail(cx.lo(), cx.hi());
            for (int k = j + 1; k <= n; ++k) tail = tail + cx.alphas_[k].comp();
            cx.betas_.push_back(exterior_derivative(FormT(0, tail)));
        }

        for (int i = 0; i <= n; ++i) cx.chains_.push_back(Point1<S>{cx.nodes_[i]});
        for (int j = 0; j < n; ++j)
            cx.chains_.push_back(Edge1<S>{cx.nodes_[j], cx.nodes_[j + 1]});

        for (int j = 0; j < n; ++j)
            cx.int_betas_.push_back(cx.betas_[j].comp().antiderivative(cx.lo()));

        cx.validate();
        return cx;
    }

    int num_basis() const { return int(alphas_.size() + betas_.size()); }
    int num_nodes() const { return int(nodes_.size()); }
    const std::vector<R>& nodes() const { return nodes_; }
    R lo() const { return nodes_.front(); }
    R hi() const { return nodes_.back(); }
    BasisKind basis_kind() const { return kind_; }
    BreakConvention convention() const { return conv_; }

    int cochain_degree(int idx) const { return idx < int(alphas_.size()) ? 0 : 1; }

    const FormT& cochain(int idx) const {
        return idx < int(alphas_.size()) ? alphas_[idx]
                                         : betas_[idx - int(alphas_.size())];
    }

    const ChainT& chain(int idx) const { return chains_[idx]; }

    std::string basis_name(int idx) const {
        int na = int(alphas_.size());
        return idx < na ? "alpha_" + std::to_string(idx)
                        : "beta_" + std::to_string(idx - na);
    }

    S pair_chain(int i, const FormT& w) const { return pair(chains_[i], w, conv_); }

    /// P: evaluate 0-forms at nodes, integrate 1-forms over pieces.
    FormT project(const FormT& w) const {
        if (w.degree() == 0) {
            Func1D<S> acc(lo(), hi());
            for (size_t j = 0; j < alphas_.size(); ++j)
                acc = acc + alphas_[j].comp().scaled(w.comp().evaluate(nodes_[j], conv_));
            return FormT(0, acc);
        }
        if (w.degree() == 1) {
            Func1D<S> acc(lo(), hi());
            for (size_t j = 0; j < betas_.size(); ++j)
                acc = acc + betas_[j].comp().scaled(w.comp().integral(nodes_[j], nodes_[j + 1]));
            return FormT(1, acc);
        }
        return w;  // zero-of-top
    }

    /// h(f dt) = int_0^t f - sum_j (int over piece j of f) * int_0^t beta_j;
    /// h kills 0-forms.
    FormT homotopy(const FormT& w) const {
        if (w.degree() == 0) return FormT::zero(0, lo(), hi());
        if (w.degree() == 2) return FormT::zero(1, lo(), hi());
        Func1D<S> acc = w.comp().antiderivative(lo());
        for (size_t j = 0; j < betas_.size(); ++j)
            acc = acc - int_betas_[j].scaled(w.comp().integral(nodes_[j], nodes_[j + 1]));
        return FormT(0, acc);
    }

    FormT d(const FormT& w) const { return exterior_derivative(w); }
    FormT lie(const Field& v, const FormT& w) const { return lie_derivative(v, w); }

private:
    BasisKind kind_ = BasisKind::lagrange;
    BreakConvention conv_ = BreakConvention::require_continuous;
    std::vector<R> nodes_;
    std::vector<FormT> alphas_, betas_;
    std::vector<ChainT> chains_;
    std::vector<Func1D<S>> int_betas_;  // int_0^t beta_j

    Func1D<S> lagrange_poly(int j) const {
        // prod_{m != j} (t - t_m) / (t_j - t_m), expanded exactly
        std::vector<S> coeffs{SF::one()};
        S denom = SF::one();
        for (size_t m = 0; m < nodes_.size(); ++m) {
            if (int(m) == j) continue;
            S tm = SF::from_real(nodes_[m]);
            std::vector<S> next(coeffs.size() + 1, SF::zero());
            for (size_t i = 0; i < coeffs.size(); ++i) {
                next[i + 1] = next[i + 1] + coeffs[i];
                next[i] = next[i] - coeffs[i] * tm;
            }
            coeffs = std::move(next);
            denom = denom * (SF::from_real(nodes_[j]) - tm);
        }
        std::vector<Term1D<S>> terms;
        for (size_t i = 0; i < coeffs.size(); ++i)
            terms.push_back({int(i), 0, coeffs[i] / denom});
        return Func1D<S>({lo(), hi()}, {terms});
    }

    Func1D<S> hat(int j) const {
        const int n = int(nodes_.size()) - 1;
        std::vector<std::vector<Term1D<S>>> pieces(n);
        if (j > 0) {
            // (t - t_{j-1}) / (t_j - t_{j-1}) on [t_{j-1}, t_j]
            S d = SF::from_real(nodes_[j]) - SF::from_real(nodes_[j - 1]);
            pieces[j - 1] = {{0, 0, -SF::from_real(nodes_[j - 1]) / d}, {1, 0, SF::one() / d}};
        }
        if (j < n) {
            // (t_{j+1} - t) / (t_{j+1} - t_j) on [t_j, t_{j+1}]
            S d = SF::from_real(nodes_[j + 1]) - SF::from_real(nodes_[j]);
            pieces[j] = {{0, 0, SF::from_real(nodes_[j + 1]) / d}, {1, 0, -(SF::one() / d)}};
        }
        return Func1D<S>(nodes_, pieces);
    }

    void validate() const {
        // duality: <chain_i, cochain_j> = delta_ij, exactly
        for (int i = 0; i < num_basis(); ++i)
            for (int j = 0; j < num_basis(); ++j) {
                if (chain_degree(chains_[i]) != cochain(j).degree()) continue;
                S v = pair_chain(i, cochain(j));
                S want = (i == j) ? SF::one() : SF::zero();
                if (!SF::is_zero(v - want))
                    throw std::runtime_error("interval: duality failed at chain " +
                                             std::to_string(i) + ", cochain " +
                                             std::to_string(j));
            }
        // partition of unity
        Func1D<S> sum(lo(), hi());
        for (const auto& a : alphas_) sum = sum + a.comp();
        if (!(sum == Func1D<S>::constant(lo(), hi(), SF::one())))
            throw std::runtime_error("interval: alphas do not sum to 1");
        // d-closure: d(alpha_j) lies in the beta span
        for (size_t j = 0; j < alphas_.size(); ++j) {
            FormT da = exterior_derivative(alphas_[j]);
            Func1D<S> resid = da.comp();
            for (size_t i = 0; i < betas_.size(); ++i) {
                S c = pair_chain(int(alphas_.size() + i), da);
                resid = resid - betas_[i].comp().scaled(c);
            }
            if (!resid.is_zero())
                throw std::runtime_error("interval: d(alpha) leaves the cochain span");
        }
    }
};

}  // namespace coact
