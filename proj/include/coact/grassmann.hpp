#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "coact/scalar.hpp"

namespace coact {

enum class VarRole : uint8_t { ghost, antighost, field, antifield };

struct GVar {
    VarRole role;
    int index;  // generator position (ghosts) or cochain index (fields)
    bool odd;
    std::string name;
};

/// Variable table for one backend + window: ghosts c^a (odd) and antighosts
/// c*_a (even) per generator, a field/antifield pair per basis cochain with
/// parity p and p+1 mod 2 for a p-cochain. Ids are laid out as
/// [ghosts][antighosts][fields][antifields].
class VarTable {
public:
    static VarTable make(int ghost_count, const std::vector<int>& cochain_degrees,
                         const std::vector<std::string>& ghost_names = {},
                         const std::vector<std::string>& field_names = {}) {
        VarTable t;
        t.ghosts_ = ghost_count;
        t.fields_ = int(cochain_degrees.size());
        auto gname = [&](int a) {
            return ghost_names.empty() ? "c^" + std::to_string(a) : ghost_names[a];
        };
        auto fname = [&](int i) {
            return field_names.empty() ? "w^" + std::to_string(i) : field_names[i];
        };
        for (int a = 0; a < ghost_count; ++a)
            t.vars_.push_back({VarRole::ghost, a, true, gname(a)});
        for (int a = 0; a < ghost_count; ++a)
            t.vars_.push_back({VarRole::antighost, a, false, gname(a) + "*"});
        for (int i = 0; i < t.fields_; ++i)
            t.vars_.push_back(
                {VarRole::field, i, cochain_degrees[i] % 2 != 0, fname(i)});
        for (int i = 0; i < t.fields_; ++i)
            t.vars_.push_back(
                {VarRole::antifield, i, (cochain_degrees[i] + 1) % 2 != 0,
                 fname(i) + "*"});
        return t;
    }

    int size() const { return int(vars_.size()); }
    int ghost_count() const { return ghosts_; }
    int field_count() const { return fields_; }

    uint32_t ghost(int a) const { return uint32_t(a); }
    uint32_t antighost(int a) const { return uint32_t(ghosts_ + a); }
    uint32_t field(int i) const { return uint32_t(2 * ghosts_ + i); }
    uint32_t antifield(int i) const { return uint32_t(2 * ghosts_ + fields_ + i); }

    const GVar& var(uint32_t id) const {
        if (id >= vars_.size()) throw std::out_of_range("VarTable: unknown variable");
        return vars_[id];
    }
    bool is_odd(uint32_t id) const { return var(id).odd; }

    /// The dual of a variable under the odd symplectic pairing.
    uint32_t partner(uint32_t id) const {
        const GVar& v = var(id);
        switch (v.role) {
            case VarRole::ghost: return antighost(v.index);
            case VarRole::antighost: return ghost(v.index);
            case VarRole::field: return antifield(v.index);
            case VarRole::antifield: return field(v.index);
        }
        throw std::logic_error("VarTable: bad role");
    }

    bool is_field_side(uint32_t id) const {
        VarRole r = var(id).role;
        return r == VarRole::ghost || r == VarRole::field;
    }

private:
    int ghosts_ = 0, fields_ = 0;
    std::vector<GVar> vars_;
};

using Mono = std::vector<uint32_t>;  // sorted ids; odd ids never repeat

/// Grassmann polynomial: sparse map from normalized monomials to coefficients.
/// Normalization sorts variables by id, picking up a Koszul sign from each
/// odd-odd transposition; a repeated odd variable kills the monomial.
template <class S>
class GPoly {
public:
    using SF = ScalarField<S>;
    using TermMap = std::map<Mono, S>;

    GPoly() = default;

    static GPoly zero() { return GPoly(); }
    static GPoly constant(S c) {
        GPoly p;
        p.add_term(Mono{}, std::move(c));
        return p;
    }
    static GPoly variable(uint32_t id, S c = SF::one()) {
        GPoly p;
        p.add_term(Mono{id}, std::move(c));
        return p;
    }

    /// Normalizes the given sequence (not necessarily sorted) and adds it.
    void add_sequence(const std::vector<uint32_t>& seq, const S& coeff,
                      const VarTable& vt) {
        if (SF::is_zero(coeff)) return;
        Mono m = seq;
        int sign = normalize_monomial(m, vt);
        if (sign == 0) return;
        add_term(std::move(m), sign > 0 ? coeff : -coeff);
    }

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    size_t size() const { return terms_.size(); }

    double max_abs_coeff() const {
        double m = 0.0;
        for (const auto& [mono, c] : terms_) m = std::max(m, SF::abs_approx(c));
        return m;
    }

    GPoly operator-() const {
        GPoly r = *this;
        for (auto& [mono, c] : r.terms_) c = -c;
        return r;
    }

    GPoly scaled(const S& k) const {
        GPoly r;
        if (SF::is_zero(k)) return r;
        for (const auto& [mono, c] : terms_) r.terms_[mono] = c * k;
        return r;
    }

    friend GPoly operator+(const GPoly& a, const GPoly& b) {
        GPoly r = a;
        for (const auto& [mono, c] : b.terms_) r.add_term(mono, c);
        return r;
    }
    friend GPoly operator-(const GPoly& a, const GPoly& b) { return a + (-b); }

    /// Sign-correct product: x y = (-1)^{|x||y|} y x on variables.
    static GPoly mul(const GPoly& a, const GPoly& b, const VarTable& vt) {
        GPoly r;
        for (const auto& [ma, ca] : a.terms_)
            for (const auto& [mb, cb] : b.terms_) {
                int sign = concat_sign(ma, mb, vt);
                if (sign == 0) continue;
                Mono m;
                m.reserve(ma.size() + mb.size());
                std::merge(ma.begin(), ma.end(), mb.begin(), mb.end(),
                           std::back_inserter(m));
                S c = ca * cb;
                r.add_term(std::move(m), sign > 0 ? c : -c);
            }
        return r;
    }

    /// Graded left derivative d/d(var): the variable is commuted to the front
    /// (odd-odd swaps count) and stripped.
    GPoly left_derivative(uint32_t v, const VarTable& vt) const {
        const bool v_odd = vt.is_odd(v);
        GPoly r;
        for (const auto& [mono, c] : terms_) {
            auto it = std::find(mono.begin(), mono.end(), v);
            if (it == mono.end()) continue;
            if (v_odd) {
                int odd_before = 0;
                for (auto jt = mono.begin(); jt != it; ++jt)
                    if (vt.is_odd(*jt)) ++odd_before;
                Mono m(mono.begin(), it);
                m.insert(m.end(), it + 1, mono.end());
                r.add_term(std::move(m), odd_before % 2 == 0 ? c : -c);
            } else {
                auto mult = std::count(mono.begin(), mono.end(), v);
                Mono m(mono.begin(), it);
                m.insert(m.end(), it + 1, mono.end());
                r.add_term(std::move(m), c * SF::from_int(mult));
            }
        }
        return r;
    }

    /// Parity of every monomial must be even; throws otherwise.
    void require_even(const VarTable& vt, const std::string& what) const {
        for (const auto& [mono, c] : terms_) {
            (void)c;
            int p = 0;
            for (uint32_t id : mono) p ^= vt.is_odd(id) ? 1 : 0;
            if (p != 0)
                throw std::logic_error(what + ": Grassmann-odd term assembled; "
                                                "sign-convention bug");
        }
    }

    /// Re-normalizes every stored monomial; the result must equal the input
    /// (normalization is involutive). Exposed for the property tests.
    GPoly renormalized(const VarTable& vt) const {
        GPoly r;
        for (const auto& [mono, c] : terms_) r.add_sequence(mono, c, vt);
        return r;
    }

    friend bool operator==(const GPoly& a, const GPoly& b) {
        return (a - b).is_zero();
    }

    /// Sorts ids, returns the Koszul sign (+1/-1), or 0 for a repeated odd
    /// variable.
    static int normalize_monomial(Mono& m, const VarTable& vt) {
        // parity of the number of inversions within the odd subsequence
        int sign = 1;
        for (size_t i = 0; i < m.size(); ++i)
            for (size_t j = i + 1; j < m.size(); ++j) {
                if (m[i] == m[j] && vt.is_odd(m[i])) return 0;
                if (m[i] > m[j] && vt.is_odd(m[i]) && vt.is_odd(m[j])) sign = -sign;
            }
        std::sort(m.begin(), m.end());
        return sign;
    }

private:
    TermMap terms_;

    void add_term(Mono m, S c) {
        if (SF::is_zero(c)) return;
        auto it = terms_.find(m);
        if (it == terms_.end()) {
            terms_.emplace(std::move(m), std::move(c));
            return;
        }
        it->second = it->second + c;
        if (SF::is_zero(it->second)) terms_.erase(it);
    }

    static int concat_sign(const Mono& a, const Mono& b, const VarTable& vt) {
        int sign = 1;
        for (uint32_t x : a) {
            if (!vt.is_odd(x)) continue;
            for (uint32_t y : b) {
                if (!vt.is_odd(y)) continue;
                if (x == y) return 0;
                if (x > y) sign = -sign;
            }
        }
        return sign;
    }
};

/// The odd Poisson bracket
///   (S,T) = sum_eta (-1)^{|eta|} [ dS/deta dT/deta* + dS/deta* dT/deta ]
/// summed over field-side variables eta (ghosts and fields), with graded
/// left derivatives.
template <class S>
GPoly<S> antibracket(const GPoly<S>& a, const GPoly<S>& b, const VarTable& vt) {
    for (const auto* p : {&a, &b})
        for (const auto& [mono, c] : p->terms()) {
            (void)c;
            for (uint32_t id : mono) vt.var(id);  // throws on unpaired/unknown
        }
    GPoly<S> r;
    for (uint32_t id = 0; id < uint32_t(vt.size()); ++id) {
        if (!vt.is_field_side(id)) continue;
        uint32_t dual = vt.partner(id);
        GPoly<S> da = a.left_derivative(id, vt);
        GPoly<S> da_star = a.left_derivative(dual, vt);
        if (da.is_zero() && da_star.is_zero()) continue;
        GPoly<S> db = b.left_derivative(id, vt);
        GPoly<S> db_star = b.left_derivative(dual, vt);
        GPoly<S> term = GPoly<S>::mul(da, db_star, vt) + GPoly<S>::mul(da_star, db, vt);
        if (vt.is_odd(id)) term = -term;
        r = r + term;
    }
    return r;
}

}  // namespace coact
