#pragma once

#include <stdexcept>
#include <variant>

#include "coact/func1d.hpp"
#include "coact/func2d.hpp"

namespace coact {

// ---------------------------------------------------------------------------
// 1D: forms on an interval [lo, hi] (the circle is the interval [0, 2pi]
// with periodic basis data supplied by the backend).
// ---------------------------------------------------------------------------

template <class S>
struct VectorField1D {
    Func1D<S> nu;  // nu(t) d/dt
};

/// Graded form in one dimension. degree 0: a function; degree 1: f dt.
/// degree 2 is the canonical zero-of-top marker produced by d on top degree.
template <class S>
class Form1D {
public:
    using R = typename ScalarField<S>::Real;

    Form1D() = default;
    Form1D(int degree, Func1D<S> comp) : degree_(degree), comp_(std::move(comp)) {
        if (degree_ < 0 || degree_ > 2)
            throw std::invalid_argument("Form1D: degree out of range");
        if (degree_ == 2 && !comp_.is_zero())
            throw std::invalid_argument("Form1D: degree 2 only as the zero-of-top marker");
    }

    static Form1D zero(int degree, R lo, R hi) {
        return Form1D(degree, Func1D<S>(lo, hi));
    }
    static Form1D zero_of_top(R lo, R hi) { return Form1D(2, Func1D<S>(lo, hi)); }

    int degree() const { return degree_; }
    bool is_zero_of_top() const { return degree_ == 2; }
    const Func1D<S>& comp() const { return comp_; }
    bool is_zero() const { return comp_.is_zero(); }
    double max_coeff_abs() const { return comp_.max_coeff_abs(); }
    R lo() const { return comp_.lo(); }
    R hi() const { return comp_.hi(); }

    Form1D operator-() const { return Form1D(degree_, -comp_); }
    Form1D scaled(const S& c) const { return Form1D(degree_, comp_.scaled(c)); }

    friend Form1D operator+(const Form1D& a, const Form1D& b) {
        if (a.degree_ != b.degree_)
            throw std::invalid_argument("Form1D: degree mismatch in sum");
        return Form1D(a.degree_, a.comp_ + b.comp_);
    }
    friend Form1D operator-(const Form1D& a, const Form1D& b) { return a + (-b); }

private:
    int degree_ = 0;
    Func1D<S> comp_;  // identically zero when degree_ == 2
};

template <class S>
Form1D<S> exterior_derivative(const Form1D<S>& w) {
    if (w.degree() == 0) return Form1D<S>(1, w.comp().derivative());
    return Form1D<S>::zero_of_top(w.lo(), w.hi());
}

template <class S>
Form1D<S> interior_product(const VectorField1D<S>& v, const Form1D<S>& w) {
    if (w.degree() == 0)
        throw std::invalid_argument("interior_product: degree-0 input");
    if (w.degree() == 2) return Form1D<S>::zero(1, w.lo(), w.hi());
    return Form1D<S>(0, v.nu * w.comp());
}

/// Cartan formula L_v = d i_v + i_v d.
template <class S>
Form1D<S> lie_derivative(const VectorField1D<S>& v, const Form1D<S>& w) {
    if (w.is_zero_of_top()) return w;
    Form1D<S> term = interior_product(v, exterior_derivative(w));
    if (w.degree() == 0) return term;
    return exterior_derivative(interior_product(v, w)) + term;
}

template <class S>
struct Point1 {
    typename ScalarField<S>::Real t;
};
template <class S>
struct Edge1 {
    typename ScalarField<S>::Real a, b;  // oriented a -> b
};
template <class S>
using Chain1D = std::variant<Point1<S>, Edge1<S>>;

template <class S>
int chain_degree(const Chain1D<S>& z) {
    return std::holds_alternative<Point1<S>>(z) ? 0 : 1;
}

/// Integration pairing <chain, form>. Point: evaluation; edge: oriented
/// line integral. Degrees must match.
template <class S>
S pair(const Chain1D<S>& z, const Form1D<S>& w,
       BreakConvention conv = BreakConvention::require_continuous) {
    if (chain_degree(z) != w.degree())
        throw std::invalid_argument("pair: chain/form degree mismatch");
    if (const auto* p = std::get_if<Point1<S>>(&z)) return w.comp().evaluate(p->t, conv);
    const auto& e = std::get<Edge1<S>>(z);
    return w.comp().integral(e.a, e.b);
}

// ---------------------------------------------------------------------------
// 2D: forms on the unit square.
// ---------------------------------------------------------------------------

template <class S>
struct VectorField2D {
    Func2D<S> nux, nuy;  // nux d/dx + nuy d/dy
};

/// degree 0: g; degree 1: fx dx + fy dy; degree 2: e dx^dy;
/// degree 3 is the zero-of-top marker.
template <class S>
class Form2D {
public:
    Form2D() = default;

    static Form2D zero(int degree) {
        Form2D w;
        w.degree_ = degree;
        return w;
    }
    static Form2D zero_of_top() { return zero(3); }
    static Form2D f0(Func2D<S> g) {
        Form2D w;
        w.degree_ = 0;
        w.a_ = std::move(g);
        return w;
    }
    static Form2D f1(Func2D<S> fx, Func2D<S> fy) {
        Form2D w;
        w.degree_ = 1;
        w.a_ = std::move(fx);
        w.b_ = std::move(fy);
        return w;
    }
    static Form2D f2(Func2D<S> e) {
        Form2D w;
        w.degree_ = 2;
        w.a_ = std::move(e);
        return w;
    }

    int degree() const { return degree_; }
    bool is_zero_of_top() const { return degree_ == 3; }
    const Func2D<S>& f() const { return a_; }    // degree 0
    const Func2D<S>& fx() const { return a_; }   // degree 1
    const Func2D<S>& fy() const { return b_; }   // degree 1
    const Func2D<S>& e() const { return a_; }    // degree 2

    bool is_zero() const { return a_.is_zero() && b_.is_zero(); }
    double max_coeff_abs() const {
        return std::max(a_.max_coeff_abs(), b_.max_coeff_abs());
    }

    Form2D operator-() const {
        Form2D w = *this;
        w.a_ = -w.a_;
        w.b_ = -w.b_;
        return w;
    }
    Form2D scaled(const S& c) const {
        Form2D w = *this;
        w.a_ = w.a_.scaled(c);
        w.b_ = w.b_.scaled(c);
        return w;
    }

    friend Form2D operator+(const Form2D& x, const Form2D& y) {
        if (x.degree_ != y.degree_)
            throw std::invalid_argument("Form2D: degree mismatch in sum");
        Form2D w = x;
        w.a_ = w.a_ + y.a_;
        w.b_ = w.b_ + y.b_;
        return w;
    }
    friend Form2D operator-(const Form2D& x, const Form2D& y) { return x + (-y); }

private:
    int degree_ = 0;
    Func2D<S> a_, b_;
};

template <class S>
Form2D<S> exterior_derivative(const Form2D<S>& w) {
    switch (w.degree()) {
        case 0: return Form2D<S>::f1(w.f().dx(), w.f().dy());
        case 1: return Form2D<S>::f2(w.fy().dx() - w.fx().dy());
        default: return Form2D<S>::zero_of_top();
    }
}

template <class S>
Form2D<S> interior_product(const VectorField2D<S>& v, const Form2D<S>& w) {
    switch (w.degree()) {
        case 0: throw std::invalid_argument("interior_product: degree-0 input");
        case 1: return Form2D<S>::f0(v.nux * w.fx() + v.nuy * w.fy());
        case 2:
            // i_v(e dx^dy) = e*nux dy - e*nuy dx
            return Form2D<S>::f1(-(v.nuy * w.e()), v.nux * w.e());
        default: return Form2D<S>::zero(2);
    }
}

template <class S>
Form2D<S> lie_derivative(const VectorField2D<S>& v, const Form2D<S>& w) {
    if (w.is_zero_of_top()) return w;
    Form2D<S> term = interior_product(v, exterior_derivative(w));
    if (w.degree() == 0) return term;
    return exterior_derivative(interior_product(v, w)) + term;
}

template <class S>
struct Point2 {
    S x, y;
};
template <class S>
struct Edge2 {
    S x0, y0, x1, y1;  // oriented (x0,y0) -> (x1,y1), straight segment
};
struct Face {};
template <class S>
using Chain2D = std::variant<Point2<S>, Edge2<S>, Face>;

template <class S>
int chain_degree(const Chain2D<S>& z) {
    if (std::holds_alternative<Point2<S>>(z)) return 0;
    return std::holds_alternative<Edge2<S>>(z) ? 1 : 2;
}

template <class S>
S pair(const Chain2D<S>& z, const Form2D<S>& w,
       BreakConvention /*conv*/ = BreakConvention::require_continuous) {
    using SF = ScalarField<S>;
    if (chain_degree(z) != w.degree())
        throw std::invalid_argument("pair: chain/form degree mismatch");
    if (const auto* p = std::get_if<Point2<S>>(&z))
        return w.f().evaluate(p->x, p->y);
    if (const auto* e = std::get_if<Edge2<S>>(&z)) {
        // pullback along the affine parametrization, then a 1D integral
        Func1D<S> gx = w.fx().restrict_to_segment(e->x0, e->y0, e->x1, e->y1);
        Func1D<S> gy = w.fy().restrict_to_segment(e->x0, e->y0, e->x1, e->y1);
        Func1D<S> integrand = gx.scaled(e->x1 - e->x0) + gy.scaled(e->y1 - e->y0);
        return integrand.integral(SF::real_zero(), SF::real_one());
    }
    return w.e().integral_rect(SF::zero(), SF::one(), SF::zero(), SF::one());
}

}  // namespace coact
