#pragma once

#include <Eigen/Core>

#include "coact/scalar.hpp"

namespace Eigen {

template <>
struct NumTraits<coact::Rational> : GenericNumTraits<coact::Rational> {
    typedef coact::Rational Real;
    typedef coact::Rational NonInteger;
    typedef coact::Rational Literal;
    typedef coact::Rational Nested;
    enum {
        IsComplex = 0,
        IsInteger = 0,
        IsSigned = 1,
        RequireInitialization = 1,
        ReadCost = 8,
        AddCost = 40,
        MulCost = 40
    };
    static inline Real epsilon() { return coact::Rational(0); }
    static inline Real dummy_precision() { return coact::Rational(0); }
    static inline int digits10() { return 0; }
};

template <>
struct NumTraits<coact::GaussRational> : GenericNumTraits<coact::GaussRational> {
    typedef coact::GaussRational Real;
    typedef coact::GaussRational NonInteger;
    typedef coact::GaussRational Literal;
    typedef coact::GaussRational Nested;
    enum {
        IsComplex = 0,  // treated as a plain ring scalar; no real/imag dispatch
        IsInteger = 0,
        IsSigned = 1,
        RequireInitialization = 1,
        ReadCost = 16,
        AddCost = 80,
        MulCost = 160
    };
    static inline Real epsilon() { return coact::GaussRational(); }
    static inline Real dummy_precision() { return coact::GaussRational(); }
    static inline int digits10() { return 0; }
};

}  // namespace Eigen

namespace coact {

template <class S>
using Mat = Eigen::Matrix<S, Eigen::Dynamic, Eigen::Dynamic>;

template <class S>
Mat<S> zero_matrix(Eigen::Index rows, Eigen::Index cols) {
    Mat<S> m(rows, cols);
    for (Eigen::Index j = 0; j < cols; ++j)
        for (Eigen::Index i = 0; i < rows; ++i) m(i, j) = ScalarField<S>::zero();
    return m;
}

template <class S>
bool matrix_is_zero(const Mat<S>& m) {
    for (Eigen::Index j = 0; j < m.cols(); ++j)
        for (Eigen::Index i = 0; i < m.rows(); ++i)
            if (!ScalarField<S>::is_zero(m(i, j))) return false;
    return true;
}

template <class S>
double matrix_max_abs(const Mat<S>& m) {
    double mx = 0.0;
    for (Eigen::Index j = 0; j < m.cols(); ++j)
        for (Eigen::Index i = 0; i < m.rows(); ++i)
            mx = std::max(mx, ScalarField<S>::abs_approx(m(i, j)));
    return mx;
}

}  // namespace coact
