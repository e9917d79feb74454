#include "doctest.h"

#include "coact/grassmann.hpp"
#include "test_support.hpp"

using namespace coact;
using coact_test::Rng;

namespace {
using GP = GPoly<Rational>;

// table: 2 ghosts, fields for degrees (0, 0, 1)
VarTable demo_table() { return VarTable::make(2, {0, 0, 1}); }

GP random_gpoly(Rng& rng, const VarTable& vt, int max_terms = 6) {
    GP p;
    for (int t = 0; t < max_terms; ++t) {
        std::vector<uint32_t> seq;
        int len = int(rng.range(0, 4));
        for (int u = 0; u < len; ++u)
            seq.push_back(uint32_t(rng.range(0, vt.size() - 1)));
        p.add_sequence(seq, coact_test::random_rational(rng, 5, 3), vt);
    }
    return p;
}

// Homogeneous-parity sample (needed by the graded Leibniz law).
GP random_homogeneous(Rng& rng, const VarTable& vt, int parity) {
    GP p;
    for (int t = 0; t < 5; ++t) {
        std::vector<uint32_t> seq;
        int odd_used = 0;
        int len = int(rng.range(0, 3)) * 2 + parity;
        int guard = 0;
        while (odd_used < len && guard++ < 40) {
            uint32_t id = uint32_t(rng.range(0, vt.size() - 1));
            bool dup_odd = vt.is_odd(id) &&
                           std::count(seq.begin(), seq.end(), id) > 0;
            if (dup_odd) continue;
            seq.push_back(id);
            if (vt.is_odd(id)) ++odd_used;
        }
        if (odd_used != len) continue;
        p.add_sequence(seq, coact_test::random_rational(rng, 5, 3), vt);
    }
    return p;
}
}  // namespace

TEST_CASE("multiplication signs") {
    VarTable vt = demo_table();
    GP c0 = GP::variable(vt.ghost(0));
    GP c1 = GP::variable(vt.ghost(1));
    // odd-odd swap anticommutes
    CHECK(GP::mul(c0, c1, vt) == -GP::mul(c1, c0, vt));
    // odd square is zero
    CHECK(GP::mul(c0, c0, vt).is_zero());
    // even-even swap commutes
    GP s0 = GP::variable(vt.antighost(0));
    GP s1 = GP::variable(vt.antighost(1));
    CHECK(GP::mul(s0, s1, vt) == GP::mul(s1, s0, vt));
    // even variables may repeat
    CHECK_FALSE(GP::mul(s0, s0, vt).is_zero());
    // odd field (degree-1 cochain) anticommutes with ghosts
    GP psi = GP::variable(vt.field(2));
    CHECK(GP::mul(c0, psi, vt) == -GP::mul(psi, c0, vt));
}

TEST_CASE("multiplication is associative and renormalization is involutive") {
    VarTable vt = demo_table();
    Rng rng(61);
    for (int iter = 0; iter < 40; ++iter) {
        GP a = random_gpoly(rng, vt), b = random_gpoly(rng, vt), c = random_gpoly(rng, vt);
        CHECK(GP::mul(GP::mul(a, b, vt), c, vt) == GP::mul(a, GP::mul(b, c, vt), vt));
        CHECK(a.renormalized(vt) == a);
    }
}

TEST_CASE("left derivative is an odd graded derivation") {
    VarTable vt = demo_table();
    Rng rng(67);
    for (uint32_t v : {vt.ghost(0), vt.ghost(1), uint32_t(vt.field(2))}) {
        for (int iter = 0; iter < 30; ++iter) {
            int pa = int(rng.range(0, 1));
            GP a = random_homogeneous(rng, vt, pa);
            GP b = random_gpoly(rng, vt);
            // d(ab) = (da) b + (-1)^{|a|} a (db) for odd d
            GP lhs = GP::mul(a, b, vt).left_derivative(v, vt);
            GP rhs = GP::mul(a.left_derivative(v, vt), b, vt);
            GP second = GP::mul(a, b.left_derivative(v, vt), vt);
            rhs = pa == 0 ? rhs + second : rhs - second;
            CHECK(lhs == rhs);
        }
    }
}

TEST_CASE("left derivative on even variables counts multiplicity") {
    VarTable vt = demo_table();
    GP s0 = GP::variable(vt.antighost(0));
    GP sq = GP::mul(s0, s0, vt);
    CHECK(sq.left_derivative(vt.antighost(0), vt) == s0.scaled(Rational(2)));
}

TEST_CASE("antibracket: differential term squares to zero when Q^2 = 0") {
    // complex 0 -> 1: Q maps field 0 to field 1 (degrees 0 and 1)
    VarTable vt = VarTable::make(1, {0, 1});
    GP s;
    s.add_sequence({vt.antifield(1), vt.field(0)}, Rational(1), vt);  // psi* Q phi
    GP ss = antibracket(s, s, vt);
    CHECK(ss.is_zero());
}

TEST_CASE("antibracket: Jacobi makes the ghost action close") {
    // interval window K=2: f_{kl}^m = (l-k) delta_{k+l-1}^m restricted to 0..2
    VarTable vt = VarTable::make(3, {});
    GP s;
    Rational half(1, 2);
    for (int k = 0; k <= 2; ++k)
        for (int l = 0; l <= 2; ++l) {
            int m = k + l - 1;
            if (m < 0 || m > 2 || k == l) continue;
            s.add_sequence({vt.ghost(k), vt.ghost(l), vt.antighost(m)},
                           Rational(l - k) * half, vt);
        }
    CHECK(antibracket(s, s, vt).is_zero());
}

TEST_CASE("antibracket: single even module, abelian algebra") {
    VarTable vt = VarTable::make(1, {0});
    GP s;
    s.add_sequence({vt.ghost(0), vt.antifield(0), vt.field(0)}, Rational(1), vt);
    CHECK(antibracket(s, s, vt).is_zero());
}

TEST_CASE("antibracket rejects unknown variables") {
    VarTable vt = demo_table();
    GP bogus = GP::variable(uint32_t(vt.size() + 3));
    CHECK_THROWS_AS(antibracket(bogus, bogus, vt), std::out_of_range);
}

TEST_CASE("parity guard catches odd terms") {
    VarTable vt = demo_table();
    GP odd = GP::variable(vt.ghost(0));
    CHECK_THROWS_AS(odd.require_even(vt, "test"), std::logic_error);
    GP even = GP::mul(GP::variable(vt.ghost(0)), GP::variable(vt.ghost(1)), vt);
    CHECK_NOTHROW(even.require_even(vt, "test"));
}
