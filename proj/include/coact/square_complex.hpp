#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "coact/backend.hpp"
#include "coact/forms.hpp"

namespace coact {

/// The unit-square retract with the bilinear corner basis
///   alpha_0 = (1-x)(1-y), alpha_1 = x(1-y), alpha_2 = xy, alpha_3 = y(1-x),
/// edge 1-forms
///   beta_0 = (1-y)dx, beta_1 = x dy, beta_2 = -y dx, beta_3 = -(1-x)dy,
/// and gamma = dx^dy, dual to corners, the counterclockwise edge loop, and
/// the face. The homotopy is built from the averaging operator I.
///
/// Basis index layout: 0..3 alpha, 4..7 beta, 8 gamma.
template <class S = Rational>
class SquareComplex {
public:
    using Scalar = S;
    using SF = ScalarField<S>;
    using FormT = Form2D<S>;
    using ChainT = Chain2D<S>;
    using Field = VectorField2D<S>;
    static constexpr int dimension = 2;

    static SquareComplex build() {
        SquareComplex cx;
        using F2 = Func2D<S>;
        F2 one = F2::constant(SF::one());
        F2 x = F2::monomial(1, 0), y = F2::monomial(0, 1);

        cx.cochains_.push_back(FormT::f0((one - x) * (one - y)));
        cx.cochains_.push_back(FormT::f0(x * (one - y)));
        cx.cochains_.push_back(FormT::f0(x * y));
        cx.cochains_.push_back(FormT::f0(y * (one - x)));
        cx.cochains_.push_back(FormT::f1(one - y, F2()));        // (1-y) dx
        cx.cochains_.push_back(FormT::f1(F2(), x));              // x dy
        cx.cochains_.push_back(FormT::f1(-y, F2()));             // -y dx
        cx.cochains_.push_back(FormT::f1(F2(), -(one - x)));     // -(1-x) dy
        cx.cochains_.push_back(FormT::f2(one));                  // dx^dy

        S z = SF::zero(), o = SF::one();
        cx.chains_.push_back(Point2<S>{z, z});
        cx.chains_.push_back(Point2<S>{o, z});
        cx.chains_.push_back(Point2<S>{o, o});
        cx.chains_.push_back(Point2<S>{z, o});
        cx.chains_.push_back(Edge2<S>{z, z, o, z});  // bottom, rightward
        cx.chains_.push_back(Edge2<S>{o, z, o, o});  // right, upward
        cx.chains_.push_back(Edge2<S>{o, o, z, o});  // top, reversed
        cx.chains_.push_back(Edge2<S>{z, o, z, z});  // left, downward
        cx.chains_.push_back(Face{});

        cx.validate();
        return cx;
    }

    int num_basis() const { return 9; }

    int cochain_degree(int idx) const {
        if (idx < 4) return 0;
        return idx < 8 ? 1 : 2;
    }

    const FormT& cochain(int idx) const { return cochains_[idx]; }
    const ChainT& chain(int idx) const { return chains_[idx]; }

    std::string basis_name(int idx) const {
        if (idx < 4) return "alpha_" + std::to_string(idx);
        if (idx < 8) return "beta_" + std::to_string(idx - 4);
        return "gamma";
    }

    BreakConvention convention() const { return BreakConvention::require_continuous; }

    S pair_chain(int i, const FormT& w) const { return pair(chains_[i], w); }

    FormT project(const FormT& w) const {
        switch (w.degree()) {
            case 0: {
                Func2D<S> acc;
                for (int j = 0; j < 4; ++j)
                    acc = acc + cochains_[j].f().scaled(pair_chain(j, w));
                return FormT::f0(acc);
            }
            case 1: {
                Func2D<S> ax, ay;
                for (int j = 4; j < 8; ++j) {
                    S c = pair_chain(j, w);
                    ax = ax + cochains_[j].fx().scaled(c);
                    ay = ay + cochains_[j].fy().scaled(c);
                }
                return FormT::f1(ax, ay);
            }
            case 2:
                return cochains_[8].scaled(pair_chain(8, w));
            default:
                return w;
        }
    }

    /// I averages antiderivatives toward the lower-left corner: on 2-forms
    /// I(e dx^dy) = 1/2 (int_0^x e) dy - 1/2 (int_0^y e) dx; on 1-forms the
    /// four-edge integral 0-form; I kills 0-forms.
    FormT apply_I(const FormT& w) const {
        switch (w.degree()) {
            case 0: return FormT::zero(0);
            case 1: {
                Func2D<S> g =
                    w.fx().substitute_y(SF::zero()).antiderivative_x() +
                    w.fy().antiderivative_y() +
                    w.fy().substitute_x(SF::zero()).antiderivative_y() +
                    w.fx().antiderivative_x();
                return FormT::f0(g.scaled(half()));
            }
            case 2: {
                Func2D<S> e = w.e();
                return FormT::f1(-(e.antiderivative_y().scaled(half())),
                                 e.antiderivative_x().scaled(half()));
            }
            default: return FormT::zero(2);
        }
    }

    /// h(e) = I(e) - sum_i <beta^i, I(e)> beta_i on 2-forms,
    /// h(f) = I(f - sum_i <beta^i, f> beta_i) on 1-forms, h = 0 on 0-forms.
    FormT homotopy(const FormT& w) const {
        switch (w.degree()) {
            case 0: return FormT::zero(0);
            case 1: {
                FormT r = w;
                for (int i = 4; i < 8; ++i)
                    r = r - cochains_[i].scaled(pair_chain(i, w));
                return apply_I(r);
            }
            case 2: {
                FormT iw = apply_I(w);
                FormT r = iw;
                for (int i = 4; i < 8; ++i)
                    r = r - cochains_[i].scaled(pair_chain(i, iw));
                return r;
            }
            default: return FormT::zero(2);
        }
    }

    FormT d(const FormT& w) const { return exterior_derivative(w); }
    FormT lie(const Field& v, const FormT& w) const { return lie_derivative(v, w); }

private:
    std::vector<FormT> cochains_;
    std::vector<ChainT> chains_;

    static S half() { return SF::one() / SF::from_int(2); }

    void validate() const {
        for (int i = 0; i < 9; ++i)
            for (int j = 0; j < 9; ++j) {
                if (chain_degree(chains_[i]) != cochains_[j].degree()) continue;
                S v = pair_chain(i, cochains_[j]);
                S want = (i == j) ? SF::one() : SF::zero();
                if (!SF::is_zero(v - want))
                    throw std::runtime_error("square: duality failed at chain " +
                                             std::to_string(i) + ", cochain " +
                                             std::to_string(j));
            }
    }
};

}  // namespace coact
