#pragma once

#include <map>
#include <stdexcept>
#include <vector>

#include "coact/circle_complex.hpp"
#include "coact/eigen_support.hpp"
#include "coact/interval_complex.hpp"
#include "coact/lie_algebra.hpp"
#include "coact/square_complex.hpp"

namespace coact {

/// Q(i,j) = <chain_i, d cochain_j>. Degree bookkeeping leaves only the
/// p -> p+1 blocks nonzero; Q^2 = 0.
template <class CX>
Mat<typename CX::Scalar> differential_matrix(const CX& cx) {
    using S = typename CX::Scalar;
    const int n = cx.num_basis();
    Mat<S> q = zero_matrix<S>(n, n);
    for (int j = 0; j < n; ++j) {
        auto dj = cx.d(cx.cochain(j));
        if (dj.degree() > CX::dimension) continue;  // zero-of-top
        for (int i = 0; i < n; ++i)
            if (cx.cochain_degree(i) == cx.cochain_degree(j) + 1)
                q(i, j) = cx.pair_chain(i, dj);
    }
    return q;
}

/// Ordered-word tensors of the induced action: for the word (a_1 ... a_p),
/// entry (i,j) = <chain_i, L_{a_1} h L_{a_2} ... h L_{a_p} cochain_j>.
/// Entries can be nonzero only when degree(cochain_j) - degree(chain_i)
/// = p - 1, and every word longer than dimension+1 vanishes identically.
template <class S>
struct TransferTensors {
    int basis_count = 0;
    int max_len = 0;
    std::map<std::vector<int>, Mat<S>> words;

    bool has(const std::vector<int>& w) const { return words.count(w) != 0; }
    const Mat<S>& at(const std::vector<int>& w) const { return words.at(w); }

    /// Coefficient of the ghost monomial c^{a_1} ... c^{a_p} in the action:
    /// the signed sum over permutations of the ordered-word tensors. The
    /// word must be strictly increasing.
    Mat<S> antisymmetrized(const std::vector<int>& word) const {
        Mat<S> acc = zero_matrix<S>(basis_count, basis_count);
        std::vector<int> perm = word;
        std::sort(perm.begin(), perm.end());
        do {
            const auto it = words.find(perm);
            if (it == words.end()) continue;
            int sign = permutation_sign(word, perm);
            if (sign > 0)
                acc = acc + it->second;
            else
                acc = acc - it->second;
        } while (std::next_permutation(perm.begin(), perm.end()));
        return acc;
    }

    static int permutation_sign(const std::vector<int>& from, const std::vector<int>& to) {
        // both are permutations of the same distinct entries
        std::vector<int> idx;
        for (int v : to) {
            auto it = std::find(from.begin(), from.end(), v);
            idx.push_back(int(it - from.begin()));
        }
        int sign = 1;
        for (size_t i = 0; i < idx.size(); ++i)
            for (size_t j = i + 1; j < idx.size(); ++j)
                if (idx[i] > idx[j]) sign = -sign;
        return sign;
    }
};

namespace detail {

template <class CX>
void record_word_column(const CX& cx, const typename CX::FormT& g, int col,
                        int col_degree, const std::vector<int>& word,
                        int basis_count,
                        std::map<std::vector<int>, Mat<typename CX::Scalar>>& mats) {
    using S = typename CX::Scalar;
    auto [it, fresh] = mats.try_emplace(word);
    if (fresh) it->second = zero_matrix<S>(basis_count, basis_count);
    int target_deg = col_degree - int(word.size() - 1);
    if (target_deg < 0) return;
    for (int i = 0; i < basis_count; ++i)
        if (cx.cochain_degree(i) == target_deg) it->second(i, col) = cx.pair_chain(i, g);
}

}  // namespace detail

/// All non-pruned word tensors up to max_len letters. Intermediate forms are
/// shared across words with a common tail, so each L-h chain is computed once.
template <class CX, class GEN>
TransferTensors<typename CX::Scalar> transfer_tensors(const CX& cx, const GEN& gens,
                                                      int max_len) {
    using S = typename CX::Scalar;
    if (max_len < 1 || max_len > CX::dimension + 1)
        throw std::invalid_argument("transfer_tensors: word length cap must be in "
                                    "[1, dimension+1]");
    TransferTensors<S> tensors;
    tensors.basis_count = cx.num_basis();
    tensors.max_len = max_len;

    std::vector<typename CX::Field> fields;
    for (int a = 0; a < gens.count(); ++a) fields.push_back(gens.field(a));

    for (int j = 0; j < cx.num_basis(); ++j) {
        const int deg_j = cx.cochain_degree(j);
        // rec(g, word): g realizes the word applied to cochain j
        auto rec = [&](auto&& self, const typename CX::FormT& g,
                       std::vector<int>& word) -> void {
            detail::record_word_column(cx, g, j, deg_j, word, tensors.basis_count,
                                       tensors.words);
            if (int(word.size()) == max_len) return;
            auto hg = cx.homotopy(g);
            if (hg.is_zero()) {
                // all extensions vanish; still materialize their matrices
                std::vector<int> w = word;
                auto zero_fill = [&](auto&& zf, std::vector<int>& ww) -> void {
                    if (int(ww.size()) == max_len) return;
                    for (int a = 0; a < gens.count(); ++a) {
                        ww.insert(ww.begin(), a);
                        auto [it, fresh] = tensors.words.try_emplace(ww);
                        if (fresh)
                            it->second = zero_matrix<S>(tensors.basis_count,
                                                        tensors.basis_count);
                        zf(zf, ww);
                        ww.erase(ww.begin());
                    }
                };
                zero_fill(zero_fill, w);
                return;
            }
            for (int a = 0; a < gens.count(); ++a) {
                auto next = cx.lie(fields[a], hg);
                word.insert(word.begin(), a);
                self(self, next, word);
                word.erase(word.begin());
            }
        };
        for (int a = 0; a < gens.count(); ++a) {
            std::vector<int> word{a};
            rec(rec, cx.lie(fields[a], cx.cochain(j)), word);
        }
    }
    return tensors;
}

/// Direct nested evaluation of one word, with no caching and (optionally) no
/// degree shortcuts; the reference route for pruning-soundness checks.
template <class CX, class GEN>
Mat<typename CX::Scalar> word_operator(const CX& cx, const GEN& gens,
                                       const std::vector<int>& word) {
    using S = typename CX::Scalar;
    if (word.empty()) throw std::invalid_argument("word_operator: empty word");
    const int n = cx.num_basis();
    Mat<S> m = zero_matrix<S>(n, n);
    std::vector<typename CX::Field> fields;
    for (int a = 0; a < gens.count(); ++a) fields.push_back(gens.field(a));
    for (int j = 0; j < n; ++j) {
        typename CX::FormT g = cx.lie(fields[word.back()], cx.cochain(j));
        for (int m_i = int(word.size()) - 2; m_i >= 0; --m_i)
            g = cx.lie(fields[word[m_i]], cx.homotopy(g));
        int target_deg = cx.cochain_degree(j) - int(word.size() - 1);
        if (target_deg < 0) continue;
        for (int i = 0; i < n; ++i)
            if (cx.cochain_degree(i) == target_deg) m(i, j) = cx.pair_chain(i, g);
    }
    return m;
}

/// Composes the word fully and reports whether every intermediate ends in the
/// identically-zero form; used to confirm that degree pruning is sound.
template <class CX, class GEN>
bool word_composition_vanishes(const CX& cx, const GEN& gens,
                               const std::vector<int>& word) {
    std::vector<typename CX::Field> fields;
    for (int a = 0; a < gens.count(); ++a) fields.push_back(gens.field(a));
    for (int j = 0; j < cx.num_basis(); ++j) {
        typename CX::FormT g = cx.lie(fields[word.back()], cx.cochain(j));
        for (int m_i = int(word.size()) - 2; m_i >= 0; --m_i)
            g = cx.lie(fields[word[m_i]], cx.homotopy(g));
        if (!g.is_zero()) return false;
    }
    return true;
}

// ---------------------------------------------------------------------------
// Closed-form tables (interval and circle only): the printed evaluation-table
// formulas for the differential and the word-1/word-2 tensors, assembled from
// nu_a(t_i), nu_a'(t_i) and beta_j^i = theta_j(t_i).
// ---------------------------------------------------------------------------

template <class S>
struct ClosedFormTables {
    std::vector<std::vector<S>> nu;        // [generator][node]
    std::vector<std::vector<S>> nu_prime;  // [generator][node]
    std::vector<std::vector<S>> beta_tab;  // [beta index][node]
    Mat<S> q;
    std::map<std::vector<int>, Mat<S>> words;  // lengths 1 and 2
};

template <class S>
ClosedFormTables<S> closed_form_tables(const IntervalComplex<S>& cx,
                                       const IntervalGenerators<S>& gens) {
    using SF = ScalarField<S>;
    ClosedFormTables<S> t;
    const int n = cx.num_nodes() - 1;  // nodes 0..n
    const int na = n + 1;
    const int N = cx.num_basis();
    auto conv = cx.convention();

    for (int a = 0; a < gens.count(); ++a) {
        auto f = gens.field(a);
        auto fp = Func1D<S>(f.nu).derivative();
        std::vector<S> nu_row, nup_row;
        for (int i = 0; i <= n; ++i) {
            nu_row.push_back(f.nu.evaluate(cx.nodes()[i], conv));
            nup_row.push_back(fp.evaluate(cx.nodes()[i], conv));
        }
        t.nu.push_back(std::move(nu_row));
        t.nu_prime.push_back(std::move(nup_row));
    }
    for (int j = 0; j < n; ++j) {
        std::vector<S> row;
        for (int i = 0; i <= n; ++i)
            row.push_back(cx.cochain(na + j).comp().evaluate(cx.nodes()[i], conv));
        t.beta_tab.push_back(std::move(row));
    }
    // beta^i_{-1} = beta^i_n = 0 at the ends
    auto beta_at = [&](int j, int i) -> S {
        if (j < 0 || j >= n) return SF::zero();
        return t.beta_tab[j][i];
    };

    // <beta^j, d alpha_i> = delta_i^{j+1} - delta_i^j
    t.q = zero_matrix<S>(N, N);
    for (int j = 0; j < n; ++j)
        for (int i = 0; i <= n; ++i) {
            S v = SF::zero();
            if (i == j + 1) v = v + SF::one();
            if (i == j) v = v - SF::one();
            t.q(na + j, i) = v;
        }

    for (int a = 0; a < gens.count(); ++a) {
        Mat<S> m = zero_matrix<S>(N, N);
        // <alpha^i, L_a alpha_j> = nu_a^i (beta^i_{j-1} - beta^i_j)
        for (int i = 0; i <= n; ++i)
            for (int j = 0; j <= n; ++j)
                m(i, j) = t.nu[a][i] * (beta_at(j - 1, i) - beta_at(j, i));
        // <beta^i, L_a beta_j> = nu_a^{i+1} beta_j^{i+1} - nu_a^i beta_j^i
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                m(na + i, na + j) =
                    t.nu[a][i + 1] * beta_at(j, i + 1) - t.nu[a][i] * beta_at(j, i);
        t.words[{a}] = std::move(m);
    }
    for (int a = 0; a < gens.count(); ++a)
        for (int b = 0; b < gens.count(); ++b) {
            Mat<S> m = zero_matrix<S>(N, N);
            // <alpha^i, L_a h L_b beta_j>
            //   = nu_a^i nu_b'^i beta_j^i
            //   - nu_a^i sum_m nu_b^m beta_j^m (beta^i_{m-1} - beta^i_m)
            for (int i = 0; i <= n; ++i)
                for (int j = 0; j < n; ++j) {
                    S acc = t.nu[a][i] * t.nu_prime[b][i] * beta_at(j, i);
                    for (int mm = 0; mm <= n; ++mm)
                        acc = acc - t.nu[a][i] * t.nu[b][mm] * beta_at(j, mm) *
                                        (beta_at(mm - 1, i) - beta_at(mm, i));
                    m(i, na + j) = acc;
                }
            t.words[{a, b}] = std::move(m);
        }
    return t;
}

inline ClosedFormTables<Cplx> closed_form_tables(const CircleComplex& cx,
                                                 const CircleGenerators& gens) {
    using SF = ScalarField<Cplx>;
    ClosedFormTables<Cplx> t;
    const int n = cx.num_nodes();
    const int N = cx.num_basis();
    auto conv = cx.convention();

    for (int a = 0; a < gens.count(); ++a) {
        auto f = gens.field(a);
        auto fp = f.nu.derivative();
        std::vector<Cplx> nu_row, nup_row;
        for (int i = 0; i < n; ++i) {
            nu_row.push_back(f.nu.evaluate(cx.nodes()[i], conv));
            nup_row.push_back(fp.evaluate(cx.nodes()[i], conv));
        }
        t.nu.push_back(std::move(nu_row));
        t.nu_prime.push_back(std::move(nup_row));
    }
    for (int j = 0; j < n; ++j) {
        std::vector<Cplx> row;
        for (int i = 0; i < n; ++i)
            row.push_back(cx.cochain(n + j).comp().evaluate(cx.nodes()[i], conv));
        t.beta_tab.push_back(std::move(row));
    }
    auto beta_at = [&](int j, int i) -> Cplx {
        return t.beta_tab[((j % n) + n) % n][((i % n) + n) % n];
    };
    auto nu_at = [&](int a, int i) -> Cplx { return t.nu[a][((i % n) + n) % n]; };

    // <beta^i, d alpha_j> = delta_{j-1}^i - delta_j^i (cyclic)
    t.q = zero_matrix<Cplx>(N, N);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Cplx v = SF::zero();
            if (((j - 1) % n + n) % n == i) v += SF::one();
            if (j == i) v -= SF::one();
            t.q(n + i, j) = v;
        }

    for (int a = 0; a < gens.count(); ++a) {
        Mat<Cplx> m = zero_matrix<Cplx>(N, N);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                m(i, j) = nu_at(a, i) * (beta_at(j - 1, i) - beta_at(j, i));
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                m(n + i, n + j) =
                    nu_at(a, i + 1) * beta_at(j, i + 1) - nu_at(a, i) * beta_at(j, i);
        t.words[{a}] = std::move(m);
    }
    for (int a = 0; a < gens.count(); ++a)
        for (int b = 0; b < gens.count(); ++b) {
            Mat<Cplx> m = zero_matrix<Cplx>(N, N);
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) {
                    Cplx acc = nu_at(a, i) * t.nu_prime[b][i] * beta_at(j, i);
                    for (int mm = 0; mm < n; ++mm)
                        acc -= nu_at(a, i) * nu_at(b, mm) * beta_at(j, mm) *
                               (beta_at(mm - 1, i) - beta_at(mm, i));
                    m(i, n + j) = acc;
                }
            t.words[{a, b}] = std::move(m);
        }
    return t;
}

}  // namespace coact
