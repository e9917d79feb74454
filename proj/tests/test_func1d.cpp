#include "doctest.h"

#include <cmath>
#include <stdexcept>

#include "coact/func1d.hpp"
#include "test_support.hpp"

using namespace coact;
using coact_test::Rng;

namespace {
const Rational Q0(0), Q1(1);
using FQ = Func1D<Rational>;
using FG = Func1D<GaussRational>;
using FC = Func1D<Cplx>;
}  // namespace

TEST_CASE("products stay in the class") {
    // t * t = t^2
    CHECK(FQ::monomial(Q0, Q1, 1) * FQ::monomial(Q0, Q1, 1) == FQ::monomial(Q0, Q1, 2));
    // e^{it} * e^{2it} = e^{3it}
    CHECK(FG::exponential(Q0, Q1, 1) * FG::exponential(Q0, Q1, 2) ==
          FG::exponential(Q0, Q1, 3));
}

TEST_CASE("mismatched domains are an error") {
    FQ a = FQ::monomial(Q0, Q1, 1);
    FQ b = FQ::monomial(Q0, Rational(2), 1);
    CHECK_THROWS_AS(a + b, std::invalid_argument);
    CHECK_THROWS_AS(a * b, std::invalid_argument);
}

TEST_CASE("derivative: product rule on t^2 e^{it}") {
    FG f = FG::monomial(Q0, Q1, 2) * FG::exponential(Q0, Q1, 1);
    FG expected = FG::monomial(Q0, Q1, 1, GaussRational(2)) * FG::exponential(Q0, Q1, 1) +
                  FG::monomial(Q0, Q1, 2, GaussRational::i()) * FG::exponential(Q0, Q1, 1);
    CHECK(f.derivative() == expected);
}

TEST_CASE("derivative of a piecewise hat") {
    Rational half(1, 2);
    // {t on [0,1/2], 1-t on [1/2,1]}
    FQ f({Q0, half, Q1},
         {{{1, 0, Rational(1)}}, {{0, 0, Rational(1)}, {1, 0, Rational(-1)}}});
    FQ expected({Q0, half, Q1}, {{{0, 0, Rational(1)}}, {{0, 0, Rational(-1)}}});
    CHECK(f.derivative() == expected);
    CHECK(f.derivative().breakpoints() == expected.breakpoints());
}

TEST_CASE("antiderivative basics") {
    // integral of t from 0 is t^2/2
    CHECK(FQ::monomial(Q0, Q1, 1).antiderivative(Q0) ==
          FQ::monomial(Q0, Q1, 2, Rational(1, 2)));
    // integral of e^{ikt}, k=2: (e^{2it} - 1)/(2i)
    GaussRational inv2i = GaussRational(1) / (GaussRational(2) * GaussRational::i());
    FG expected = FG::exponential(Q0, Q1, 2, inv2i) + FG::constant(Q0, Q1, -inv2i);
    CHECK(FG::exponential(Q0, Q1, 2).antiderivative(Q0) == expected);
}

TEST_CASE("antiderivative of a step function is continuous") {
    Rational half(1, 2);
    FQ step({Q0, half, Q1}, {{{0, 0, Rational(1)}}, {}});
    FQ expected({Q0, half, Q1}, {{{1, 0, Rational(1)}}, {{0, 0, half}}});
    CHECK(step.antiderivative(Q0) == expected);
}

TEST_CASE("round trip: derivative of antiderivative is the identity") {
    Rng rng(7);
    for (int iter = 0; iter < 60; ++iter) {
        FQ f = coact_test::random_piecewise_poly(rng);
        Rational base(rng.range(0, 1));
        FQ F = f.antiderivative(base);
        CHECK(F.derivative() == f);
        CHECK(F.evaluate(base, BreakConvention::left) == Rational(0));
    }
    // exponential-polynomial single-piece case over Q(i)
    for (int iter = 0; iter < 20; ++iter) {
        std::vector<Term1D<GaussRational>> terms;
        for (int n = 0; n <= 2; ++n)
            for (int k = -2; k <= 2; ++k)
                if (rng.range(0, 2) == 0) terms.push_back({n, k, coact_test::random_gauss(rng)});
        FG f({Q0, Q1}, {terms});
        CHECK(f.antiderivative(Q0).derivative() == f);
    }
}

TEST_CASE("definite integral additivity") {
    Rng rng(11);
    for (int iter = 0; iter < 40; ++iter) {
        FQ f = coact_test::random_piecewise_poly(rng);
        Rational a(0), b(rng.range(1, 3), 4), c(1);
        CHECK(f.integral(a, c) == f.integral(a, b) + f.integral(b, c));
    }
}

TEST_CASE("circle-style integrals of exponentials") {
    double twopi = 2.0 * M_PI;
    for (int k = -3; k <= 3; ++k) {
        FC f = FC::exponential(0.0, twopi, k);
        Cplx v = f.integral(0.0, twopi);
        if (k == 0)
            CHECK(std::abs(v - Cplx(twopi, 0.0)) < 1e-12);
        else
            CHECK(std::abs(v) < 1e-12);
    }
}

TEST_CASE("integration by parts identity on t^n e^{ikt}") {
    // exact route: compare antiderivatives as functions over Q(i), so no
    // endpoint exponentials are ever evaluated
    for (int n = 1; n <= 3; ++n)
        for (int k = -2; k <= 3; ++k) {
            if (k == 0) continue;
            FG u = FG::monomial(Q0, Q1, n);
            FG vp = FG::exponential(Q0, Q1, k);
            FG v = vp.antiderivative(Q0);
            FG lhs = (u * vp).antiderivative(Q0);
            FG rhs = u * v - (u.derivative() * v).antiderivative(Q0);
            CHECK(lhs == rhs);  // both vanish at 0, so no boundary constant
        }
    // numeric route: definite integrals with the boundary term
    for (int n = 1; n <= 3; ++n)
        for (int k = 1; k <= 3; ++k) {
            FC u = FC::monomial(0.0, 2.0, n);
            FC vp = FC::exponential(0.0, 2.0, k);
            FC v = vp.antiderivative(0.0);
            Cplx lhs = (u * vp).integral(0.0, 2.0);
            Cplx boundary = u.evaluate(2.0) * v.evaluate(2.0) - u.evaluate(0.0) * v.evaluate(0.0);
            Cplx rhs = boundary - (u.derivative() * v).integral(0.0, 2.0);
            CHECK(std::abs(lhs - rhs) < 1e-12);
        }
}

TEST_CASE("breakpoint evaluation conventions") {
    Rational half(1, 2);
    FQ f({Q0, half, Q1}, {{{0, 0, Rational(1)}}, {{0, 0, Rational(-1)}}});
    CHECK(f.evaluate(half, BreakConvention::left) == Rational(1));
    CHECK(f.evaluate(half, BreakConvention::right) == Rational(-1));
    CHECK(f.evaluate(half, BreakConvention::average) == Rational(0));
    CHECK_THROWS_AS(f.evaluate(half), std::domain_error);
    // continuous functions evaluate fine under the default
    FQ g = FQ::monomial(Q0, Q1, 1).refined({half});
    CHECK(g.evaluate(half) == half);
    CHECK(g.evaluate(Q0) == Rational(0));
    CHECK(g.evaluate(Q1) == Rational(1));
}

TEST_CASE("domain preconditions") {
    FQ f = FQ::monomial(Q0, Q1, 2);
    CHECK_THROWS_AS(f.evaluate(Rational(2)), std::invalid_argument);
    CHECK_THROWS_AS(f.integral(Rational(0), Rational(2)), std::invalid_argument);
    CHECK_THROWS_AS(f.antiderivative(Rational(-1)), std::invalid_argument);
}

TEST_CASE("degenerate regions integrate to zero") {
    FQ f = FQ::monomial(Q0, Q1, 3);
    CHECK(f.integral(Rational(1, 2), Rational(1, 2)).is_zero());
}
