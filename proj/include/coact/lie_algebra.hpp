#pragma once

#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

#include "coact/forms.hpp"

namespace coact {

template <class S>
VectorField1D<S> bracket(const VectorField1D<S>& v, const VectorField1D<S>& w) {
    return {v.nu * w.nu.derivative() - w.nu * v.nu.derivative()};
}

template <class S>
VectorField2D<S> bracket(const VectorField2D<S>& v, const VectorField2D<S>& w) {
    auto apply = [](const VectorField2D<S>& a, const Func2D<S>& f) {
        return a.nux * f.dx() + a.nuy * f.dy();
    };
    return {apply(v, w.nux) - apply(w, v.nux), apply(v, w.nuy) - apply(w, v.nuy)};
}

/// Bracket expansion in a generator basis, kept on semantic indices so that
/// components falling outside the truncation window are recorded, not lost.
template <class Key, class S>
using LinComb = std::map<Key, S>;

namespace detail {

template <class Key, class S>
void add_to(LinComb<Key, S>& acc, const Key& k, const S& c) {
    auto it = acc.find(k);
    if (it == acc.end()) {
        if (!ScalarField<S>::is_zero(c)) acc.emplace(k, c);
        return;
    }
    it->second = it->second + c;
    if (ScalarField<S>::is_zero(it->second)) acc.erase(it);
}

}  // namespace detail

/// Generators v_k = t^k d/dt, k_lo <= k <= K, on [0, 1].
/// [v_k, v_l] = (l - k) v_{k+l-1}.
template <class S = Rational>
struct IntervalGenerators {
    using Field = VectorField1D<S>;
    using Key = int;  // the exponent k
    using SF = ScalarField<S>;

    int K = 1;
    int k_lo = 0;
    typename SF::Real domain_lo = SF::real_zero();
    typename SF::Real domain_hi = SF::real_one();

    int count() const { return K - k_lo + 1; }
    Key key(int pos) const { return k_lo + pos; }
    bool in_window(const Key& k) const { return k_lo <= k && k <= K; }
    int position(const Key& k) const { return k - k_lo; }
    std::string name(int pos) const { return "v_" + std::to_string(key(pos)); }

    Field field(int pos) const {
        return {Func1D<S>::monomial(domain_lo, domain_hi, key(pos))};
    }

    static LinComb<Key, S> bracket_keys(const Key& k, const Key& l) {
        LinComb<Key, S> r;
        if (k != l && k + l >= 1) r[k + l - 1] = SF::from_int(l - k);
        return r;
    }
};

/// Generators v_k = e^{ikt} d/dt, |k| <= K, on [0, 2pi].
/// [v_k, v_l] = i (l - k) v_{k+l}. Realized over complex doubles for the
/// transfer engine; the expansion coefficients themselves are exact Q(i)
/// numbers, kept as GaussRational.
struct CircleGenerators {
    using Field = VectorField1D<Cplx>;
    using Key = int;  // the frequency k
    using S = GaussRational;

    int K = 1;

    int count() const { return 2 * K + 1; }
    Key key(int pos) const { return pos - K; }
    bool in_window(const Key& k) const { return -K <= k && k <= K; }
    int position(const Key& k) const { return k + K; }
    std::string name(int pos) const { return "v_" + std::to_string(key(pos)); }

    Field field(int pos) const {
        return {Func1D<Cplx>::exponential(0.0, 2.0 * M_PI, key(pos))};
    }

    static LinComb<Key, GaussRational> bracket_keys(const Key& k, const Key& l) {
        LinComb<Key, GaussRational> r;
        if (k != l)
            r[k + l] = GaussRational::i() * GaussRational(Rational(l - k));
        return r;
    }
};

/// Generators x^n y^m d/dx and x^n y^m d/dy with n + m <= D on the unit
/// square. No closed-form table here: the bracket is expanded symbolically
/// and decomposed on monomials.
template <class S = Rational>
struct SquareGenerators {
    using Field = VectorField2D<S>;
    using Key = std::tuple<int, int, int>;  // (axis, n, m), axis 0 = x, 1 = y
    using SF = ScalarField<S>;

    int D = 1;

    SquareGenerators() { rebuild(); }
    explicit SquareGenerators(int degree_cap) : D(degree_cap) { rebuild(); }

    /// Window given by an explicit key list (a hand-picked subfamily, e.g. a
    /// closed subalgebra like {d/dx, x d/dx, x^2 d/dx}).
    static SquareGenerators from_keys(std::vector<Key> keys) {
        SquareGenerators g;
        g.D = 0;
        g.keys_ = std::move(keys);
        g.index_.clear();
        for (size_t i = 0; i < g.keys_.size(); ++i) g.index_[g.keys_[i]] = int(i);
        for (const auto& k : g.keys_) g.D = std::max(g.D, std::get<1>(k) + std::get<2>(k));
        g.explicit_window_ = true;
        return g;
    }

    int count() const { return int(keys_.size()); }
    Key key(int pos) const { return keys_[pos]; }
    bool in_window(const Key& k) const {
        if (explicit_window_) return index_.count(k) != 0;
        return std::get<1>(k) + std::get<2>(k) <= D;
    }
    int position(const Key& k) const {
        auto it = index_.find(k);
        if (it == index_.end()) throw std::out_of_range("square generator outside window");
        return it->second;
    }
    std::string name(int pos) const {
        auto [axis, n, m] = keys_[pos];
        return "x^" + std::to_string(n) + "y^" + std::to_string(m) +
               (axis == 0 ? " d/dx" : " d/dy");
    }

    Field field(int pos) const {
        auto [axis, n, m] = keys_[pos];
        Func2D<S> mono = Func2D<S>::monomial(n, m);
        if (axis == 0) return {mono, Func2D<S>()};
        return {Func2D<S>(), mono};
    }

    static LinComb<Key, S> bracket_keys(const Key& a, const Key& b) {
        // [p d/du, q d/dv] = p (dq/du) d/dv - q (dp/dv) d/du on monomials
        auto [axa, na, ma] = a;
        auto [axb, nb, mb] = b;
        LinComb<Key, S> r;
        // term p * d_axa(q) on axis axb
        int c1 = axa == 0 ? nb : mb;
        if (c1 != 0) {
            Key k1{axb, na + nb - (axa == 0 ? 1 : 0), ma + mb - (axa == 0 ? 0 : 1)};
            detail::add_to(r, k1, SF::from_int(c1));
        }
        // minus q * d_axb(p) on axis axa
        int c2 = axb == 0 ? na : ma;
        if (c2 != 0) {
            Key k2{axa, na + nb - (axb == 0 ? 1 : 0), ma + mb - (axb == 0 ? 0 : 1)};
            detail::add_to(r, k2, SF::from_int(-c2));
        }
        return r;
    }

private:
    std::vector<Key> keys_;
    std::map<Key, int> index_;
    bool explicit_window_ = false;

    void rebuild() {
        keys_.clear();
        index_.clear();
        for (int axis = 0; axis <= 1; ++axis)
            for (int n = 0; n <= D; ++n)
                for (int m = 0; n + m <= D; ++m) {
                    index_[Key{axis, n, m}] = int(keys_.size());
                    keys_.push_back(Key{axis, n, m});
                }
    }
};

/// Structure constants f_ab^d on window positions, with out-of-window
/// components recorded per pair rather than silently dropped.
template <class GEN>
struct StructureConstants {
    using S = std::decay_t<decltype(GEN::bracket_keys(
        std::declval<typename GEN::Key>(), std::declval<typename GEN::Key>())
                                        .begin()
                                        ->second)>;
    struct Entry {
        std::vector<std::pair<int, S>> comps;  // (position d, f_ab^d)
        bool leaves_window = false;
    };
    int count = 0;
    std::vector<Entry> table;  // row-major (a, b)

    const Entry& at(int a, int b) const { return table[a * count + b]; }
};

template <class GEN>
StructureConstants<GEN> structure_constants(const GEN& gens) {
    StructureConstants<GEN> sc;
    sc.count = gens.count();
    sc.table.resize(size_t(sc.count) * sc.count);
    for (int a = 0; a < sc.count; ++a)
        for (int b = 0; b < sc.count; ++b) {
            auto expansion = GEN::bracket_keys(gens.key(a), gens.key(b));
            auto& entry = sc.table[a * sc.count + b];
            for (const auto& [key, coeff] : expansion) {
                if (gens.in_window(key))
                    entry.comps.emplace_back(gens.position(key), coeff);
                else
                    entry.leaves_window = true;
            }
        }
    return sc;
}

namespace detail {

template <class GEN>
using KeyComb = LinComb<typename GEN::Key,
                        typename StructureConstants<GEN>::S>;

template <class GEN>
KeyComb<GEN> bracket_combs(const KeyComb<GEN>& x, const KeyComb<GEN>& y) {
    KeyComb<GEN> r;
    for (const auto& [ka, ca] : x)
        for (const auto& [kb, cb] : y)
            for (const auto& [kd, cd] : GEN::bracket_keys(ka, kb))
                add_to(r, kd, ca * cb * cd);
    return r;
}

// Every full bracketing of the multiset of keys, as linear combinations.
template <class GEN>
std::vector<KeyComb<GEN>> all_bracketings(const std::vector<typename GEN::Key>& keys) {
    std::vector<KeyComb<GEN>> out;
    if (keys.size() == 1) {
        KeyComb<GEN> leaf;
        using SC = typename StructureConstants<GEN>::S;
        leaf[keys[0]] = ScalarField<SC>::one();
        out.push_back(std::move(leaf));
        return out;
    }
    size_t n = keys.size();
    // split by bitmask; keep the lowest element on the left to halve the work
    for (uint32_t mask = 1; mask + 1 < (1u << n); ++mask) {
        if (!(mask & 1u)) continue;
        std::vector<typename GEN::Key> left, right;
        for (size_t i = 0; i < n; ++i)
            ((mask >> i) & 1u ? left : right).push_back(keys[i]);
        for (const auto& x : all_bracketings<GEN>(left))
            for (const auto& y : all_bracketings<GEN>(right))
                out.push_back(bracket_combs<GEN>(x, y));
    }
    return out;
}

}  // namespace detail

/// A ghost word is window-closed when every iterated bracket of every
/// sub-multiset of the word has all nonzero components inside the window.
template <class GEN>
bool window_closed(const std::vector<int>& word_positions, const GEN& gens) {
    if (word_positions.empty())
        throw std::invalid_argument("window_closed: empty word");
    size_t n = word_positions.size();
    std::set<std::vector<typename GEN::Key>> seen;
    for (uint32_t mask = 1; mask < (1u << n); ++mask) {
        std::vector<typename GEN::Key> sub;
        for (size_t i = 0; i < n; ++i)
            if ((mask >> i) & 1u) sub.push_back(gens.key(word_positions[i]));
        if (sub.size() < 2) continue;
        std::sort(sub.begin(), sub.end());
        if (!seen.insert(sub).second) continue;
        for (const auto& comb : detail::all_bracketings<GEN>(sub))
            for (const auto& [key, coeff] : comb) {
                (void)coeff;
                if (!gens.in_window(key)) return false;
            }
    }
    return true;
}

}  // namespace coact
