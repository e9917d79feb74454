#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "coact/backend.hpp"
#include "coact/forms.hpp"

namespace coact {

/// The circle retract on n equispaced nodes t_j = 2 pi j / n, coordinates on
/// [0, 2pi], complex-double arithmetic. The 1-form basis beta_j = theta_j dt
/// is fixed by the piece-integral conditions; with the trig-dual kind,
/// theta_j is the exponential sum over the window k in [-(n-1)/2 .. n/2]
/// solving them, obtained from one dense linear solve. alpha_0 = 1 +
/// int_0^t (theta_{n-1} - theta_0), alpha_j = int_0^t (theta_{j-1} - theta_j).
///
/// Basis index layout: 0..n-1 alpha (degree 0), n..2n-1 beta (degree 1).
class CircleComplex {
public:
    using Scalar = Cplx;
    using S = Cplx;
    using SF = ScalarField<Cplx>;
    using R = double;
    using FormT = Form1D<Cplx>;
    using ChainT = Chain1D<Cplx>;
    using Field = VectorField1D<Cplx>;
    static constexpr int dimension = 1;

    static CircleComplex build(int n, BasisKind kind,
                               BreakConvention conv = BreakConvention::require_continuous) {
        if (n < 2) throw std::invalid_argument("circle: need n >= 2 nodes");
        if (kind != BasisKind::trig_dual && kind != BasisKind::midpoint_hat)
            throw std::invalid_argument("circle: basis must be trig-dual or midpoint-hat");
        CircleComplex cx;
        cx.n_ = n;
        cx.kind_ = kind;
        cx.conv_ = conv;
        for (int j = 0; j <= n; ++j) cx.nodes_.push_back(2.0 * M_PI * j / n);

        if (kind == BasisKind::trig_dual)
            cx.build_trig_dual();
        else
            cx.build_midpoint_hat();

        // alpha_j: antiderivatives of differences of consecutive theta's
        for (int j = 0; j < n; ++j) {
            const Func1D<Cplx>& prev = cx.thetas_[(j + n - 1) % n];
            Func1D<Cplx> a = (prev - cx.thetas_[j]).antiderivative(0.0);
            if (j == 0) a = a + Func1D<Cplx>::constant(0.0, cx.hi(), SF::one());
            cx.alphas_.push_back(FormT(0, a));
        }
        for (int j = 0; j < n; ++j) cx.betas_.push_back(FormT(1, cx.thetas_[j]));

        for (int i = 0; i < n; ++i) cx.chains_.push_back(Point1<Cplx>{cx.nodes_[i]});
        for (int j = 0; j < n; ++j)
            cx.chains_.push_back(Edge1<Cplx>{cx.nodes_[j], cx.nodes_[j + 1]});

        for (int j = 0; j < n; ++j)
            cx.int_betas_.push_back(cx.thetas_[j].antiderivative(0.0));

        cx.validate();
        return cx;
    }

    int num_basis() const { return 2 * n_; }
    int num_nodes() const { return n_; }
    const std::vector<double>& nodes() const { return nodes_; }
    double lo() const { return 0.0; }
    double hi() const { return nodes_.back(); }
    BasisKind basis_kind() const { return kind_; }
    BreakConvention convention() const { return conv_; }
    int window_lo() const { return win_lo_; }
    int window_hi() const { return win_hi_; }
    double duality_residual() const { return duality_residual_; }

    int cochain_degree(int idx) const { return idx < n_ ? 0 : 1; }

    const FormT& cochain(int idx) const {
        return idx < n_ ? alphas_[idx] : betas_[idx - n_];
    }

    const ChainT& chain(int idx) const { return chains_[idx]; }

    std::string basis_name(int idx) const {
        return idx < n_ ? "alpha_" + std::to_string(idx)
                        : "beta_" + std::to_string(idx - n_);
    }

    Cplx pair_chain(int i, const FormT& w) const { return pair(chains_[i], w, conv_); }

    FormT project(const FormT& w) const {
        if (w.degree() == 0) {
            Func1D<Cplx> acc(lo(), hi());
            for (int j = 0; j < n_; ++j)
                acc = acc + alphas_[j].comp().scaled(w.comp().evaluate(nodes_[j], conv_));
            return FormT(0, acc);
        }
        if (w.degree() == 1) {
            Func1D<Cplx> acc(lo(), hi());
            for (int j = 0; j < n_; ++j)
                acc = acc + thetas_[j].scaled(w.comp().integral(nodes_[j], nodes_[j + 1]));
            return FormT(1, acc);
        }
        return w;
    }

    FormT homotopy(const FormT& w) const {
        if (w.degree() == 0) return FormT::zero(0, lo(), hi());
        if (w.degree() == 2) return FormT::zero(1, lo(), hi());
        Func1D<Cplx> acc = w.comp().antiderivative(0.0);
        for (int j = 0; j < n_; ++j)
            acc = acc - int_betas_[j].scaled(w.comp().integral(nodes_[j], nodes_[j + 1]));
        return FormT(0, acc);
    }

    FormT d(const FormT& w) const { return exterior_derivative(w); }
    FormT lie(const Field& v, const FormT& w) const { return lie_derivative(v, w); }

private:
    int n_ = 0;
    BasisKind kind_ = BasisKind::trig_dual;
    BreakConvention conv_ = BreakConvention::require_continuous;
    int win_lo_ = 0, win_hi_ = 0;
    double duality_residual_ = 0.0;
    std::vector<double> nodes_;          // n+1 entries, last = 2pi
    std::vector<Func1D<Cplx>> thetas_;   // beta_j = theta_j dt
    std::vector<FormT> alphas_, betas_;
    std::vector<ChainT> chains_;
    std::vector<Func1D<Cplx>> int_betas_;

    void build_trig_dual() {
        win_lo_ = -((n_ - 1) / 2);
        win_hi_ = n_ / 2;
        Eigen::MatrixXcd A(n_, n_);
        for (int i = 0; i < n_; ++i)
            for (int k = win_lo_; k <= win_hi_; ++k) {
                Func1D<Cplx> ek = Func1D<Cplx>::exponential(lo(), hi(), k);
                A(i, k - win_lo_) = ek.integral(nodes_[i], nodes_[i + 1]);
            }
        Eigen::FullPivLU<Eigen::MatrixXcd> lu(A);
        if (!lu.isInvertible())
            throw std::runtime_error(
                "circle: singular dual-basis system for window [" +
                std::to_string(win_lo_) + ".." + std::to_string(win_hi_) +
                "], n=" + std::to_string(n_));
        Eigen::MatrixXcd D = lu.solve(Eigen::MatrixXcd::Identity(n_, n_));
        duality_residual_ = (A * D - Eigen::MatrixXcd::Identity(n_, n_))
                                .cwiseAbs()
                                .maxCoeff();
        for (int j = 0; j < n_; ++j) {
            std::vector<Term1D<Cplx>> terms;
            for (int k = win_lo_; k <= win_hi_; ++k)
                terms.push_back({0, k, D(k - win_lo_, j)});
            thetas_.push_back(Func1D<Cplx>({lo(), hi()}, {terms}));
        }
    }

    // Degenerate stress basis: hats supported on [t_j, t_{j+1}] peaking at the
    // midpoint, zero at every node, unit piece integral.
    void build_midpoint_hat() {
        win_lo_ = win_hi_ = 0;
        std::vector<double> breaks;
        for (int j = 0; j < n_; ++j) {
            breaks.push_back(nodes_[j]);
            breaks.push_back(0.5 * (nodes_[j] + nodes_[j + 1]));
        }
        breaks.push_back(nodes_.back());
        for (int j = 0; j < n_; ++j) {
            std::vector<std::vector<Term1D<Cplx>>> pieces(breaks.size() - 1);
            double a = nodes_[j], b = nodes_[j + 1], mid = 0.5 * (a + b);
            double halfw = mid - a;
            double peak = 2.0 / (b - a);
            double slope = peak / halfw;
            // rising piece: slope*(t - a); falling: slope*(b - t)
            pieces[2 * j] = {{0, 0, Cplx(-slope * a, 0)}, {1, 0, Cplx(slope, 0)}};
            pieces[2 * j + 1] = {{0, 0, Cplx(slope * b, 0)}, {1, 0, Cplx(-slope, 0)}};
            thetas_.push_back(Func1D<Cplx>(breaks, pieces));
        }
        duality_residual_ = 0.0;
    }

    void validate() {
        double res = duality_residual_;
        for (int i = 0; i < num_basis(); ++i)
            for (int j = 0; j < num_basis(); ++j) {
                if (chain_degree(chains_[i]) != cochain(j).degree()) continue;
                Cplx v = pair_chain(i, cochain(j));
                Cplx want = (i == j) ? SF::one() : SF::zero();
                res = std::max(res, std::abs(v - want));
            }
        duality_residual_ = res;
        if (res > 1e-6)
            throw std::runtime_error("circle: duality residual " + std::to_string(res) +
                                     " too large; dual-basis solve is ill-conditioned");
    }
};

}  // namespace coact
