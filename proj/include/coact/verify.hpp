#pragma once

#include <string>
#include <vector>

#include "coact/bv_action.hpp"
#include "coact/run.hpp"
#include "coact/transfer.hpp"

namespace coact {

namespace verify_detail {

template <class CX>
constexpr bool is_exact_backend = ScalarField<typename CX::Scalar>::is_exact;

inline void add_check(std::vector<CheckResult>& out, const std::string& suite,
                      const std::string& name, bool pass, double magnitude,
                      const std::string& witness) {
    out.push_back({suite, name, pass, magnitude, pass ? "" : witness});
}

template <class CX>
bool form_small(const CX&, const typename CX::FormT& w, double tol) {
    if constexpr (is_exact_backend<CX>)
        return w.is_zero();
    else
        return w.max_coeff_abs() <= tol;
}

template <class CX>
double form_mag(const typename CX::FormT& w) {
    return w.max_coeff_abs();
}

/// The per-backend verification family: named forms in each degree. Interval
/// and square use all monomials up to total degree 8; the circle uses the
/// exponentials within the window widened by two.
template <class S>
std::vector<std::pair<std::string, Form1D<S>>> test_family(const IntervalComplex<S>& cx) {
    std::vector<std::pair<std::string, Form1D<S>>> fam;
    for (int deg = 0; deg <= 1; ++deg)
        for (int m = 0; m <= 8; ++m)
            fam.push_back({"t^" + std::to_string(m) + (deg ? " dt" : ""),
                           Form1D<S>(deg, Func1D<S>::monomial(cx.lo(), cx.hi(), m))});
    return fam;
}

inline std::vector<std::pair<std::string, Form1D<Cplx>>> test_family(const CircleComplex& cx) {
    std::vector<std::pair<std::string, Form1D<Cplx>>> fam;
    int kmax = cx.num_nodes() / 2 + 2;
    for (int deg = 0; deg <= 1; ++deg)
        for (int k = -kmax; k <= kmax; ++k)
            fam.push_back({"e^{" + std::to_string(k) + "it}" + (deg ? " dt" : ""),
                           Form1D<Cplx>(deg, Func1D<Cplx>::exponential(cx.lo(), cx.hi(), k))});
    return fam;
}

template <class S>
std::vector<std::pair<std::string, Form2D<S>>> test_family(const SquareComplex<S>& cx) {
    (void)cx;
    std::vector<std::pair<std::string, Form2D<S>>> fam;
    for (int deg = 0; deg <= 2; ++deg)
        for (int n = 0; n <= 8; ++n)
            for (int m = 0; n + m <= 8; ++m) {
                std::string mono = "x^" + std::to_string(n) + "y^" + std::to_string(m);
                Func2D<S> f = Func2D<S>::monomial(n, m);
                if (deg == 0)
                    fam.push_back({mono, Form2D<S>::f0(f)});
                else if (deg == 1)
                    fam.push_back({mono + " (dx+dy)", Form2D<S>::f1(f, Func2D<S>::monomial(m, n))});
                else
                    fam.push_back({mono + " dx^dy", Form2D<S>::f2(f)});
            }
    return fam;
}

template <class CX>
typename CX::FormT retract_lhs(const CX& cx, const typename CX::FormT& w) {
    // d h + h d, with d h absent on 0-forms where h already vanishes
    if (w.degree() == 0) return cx.homotopy(cx.d(w));
    return cx.d(cx.homotopy(w)) + cx.homotopy(cx.d(w));
}

}  // namespace verify_detail

// ---------------------------------------------------------------------------
// build: duality, partition of unity, d-closure
// ---------------------------------------------------------------------------

template <class CX>
void suite_build(const CX& cx, const Tolerances& tol, std::vector<CheckResult>& out) {
    using namespace verify_detail;
    using S = typename CX::Scalar;
    using SF = ScalarField<S>;
    double worst = 0.0;
    std::string witness;
    for (int i = 0; i < cx.num_basis(); ++i)
        for (int j = 0; j < cx.num_basis(); ++j) {
            if (chain_degree(cx.chain(i)) != cx.cochain(j).degree()) continue;
            S v = cx.pair_chain(i, cx.cochain(j));
            S want = i == j ? SF::one() : SF::zero();
            double dev = SF::abs_approx(v - want);
            if (dev > worst) {
                worst = dev;
                witness = "<" + cx.basis_name(i) + "^, " + cx.basis_name(j) + ">";
            }
        }
    bool dual_ok = is_exact_backend<CX> ? worst == 0.0 : worst <= tol.duality;
    add_check(out, "build", "duality matrix is the identity", dual_ok, worst, witness);

    // partition of unity: sum of the 0-form basis is 1
    typename CX::FormT sum = cx.cochain(0);
    int zero_degree_count = 0;
    for (int j = 0; j < cx.num_basis(); ++j)
        if (cx.cochain_degree(j) == 0) ++zero_degree_count;
    for (int j = 1; j < zero_degree_count; ++j) sum = sum + cx.cochain(j);
    typename CX::FormT one = [&] {
        if constexpr (CX::dimension == 1)
            return typename CX::FormT(0, Func1D<S>::constant(cx.lo(), cx.hi(), SF::one()));
        else
            return CX::FormT::f0(Func2D<S>::constant(SF::one()));
    }();
    bool pu = form_small(cx, sum - one, tol.duality);
    add_check(out, "build", "partition of unity", pu, form_mag<CX>(sum - one),
              "sum of alphas");

    // d-closure: d of every cochain expands exactly in the cochain basis
    double dworst = 0.0;
    std::string dwitness;
    for (int j = 0; j < cx.num_basis(); ++j) {
        auto dj = cx.d(cx.cochain(j));
        if (dj.degree() > CX::dimension) continue;
        auto resid = dj;
        for (int i = 0; i < cx.num_basis(); ++i) {
            if (cx.cochain_degree(i) != dj.degree()) continue;
            resid = resid - cx.cochain(i).scaled(cx.pair_chain(i, dj));
        }
        double dev = form_mag<CX>(resid);
        if (dev > dworst) {
            dworst = dev;
            dwitness = "d(" + cx.basis_name(j) + ")";
        }
    }
    bool dok = is_exact_backend<CX> ? dworst == 0.0 : dworst <= tol.duality * 10;
    add_check(out, "build", "d-closure of the cochain span", dok, dworst, dwitness);
}

// ---------------------------------------------------------------------------
// retract: dh + hd = id - P on the family, h side conditions, projector laws
// ---------------------------------------------------------------------------

template <class CX>
void suite_retract(const CX& cx, const Tolerances& tol, std::vector<CheckResult>& out) {
    using namespace verify_detail;
    auto fam = test_family(cx);
    double worst = 0.0;
    std::string witness;
    for (const auto& [name, w] : fam) {
        auto lhs = retract_lhs(cx, w);
        auto rhs = w - cx.project(w);
        double dev = form_mag<CX>(lhs - rhs);
        if (dev > worst) {
            worst = dev;
            witness = name;
        }
    }
    bool ok = is_exact_backend<CX> ? worst == 0.0 : worst <= tol.retract;
    add_check(out, "retract", "dh + hd = id - P on the monomial family", ok, worst,
              witness);

    double hworst = 0.0;
    std::string hwitness;
    for (int j = 0; j < cx.num_basis(); ++j) {
        double dev = form_mag<CX>(cx.homotopy(cx.cochain(j)));
        if (dev > hworst) {
            hworst = dev;
            hwitness = "h(" + cx.basis_name(j) + ")";
        }
    }
    bool hok = is_exact_backend<CX> ? hworst == 0.0 : hworst <= tol.duality;
    add_check(out, "retract", "h kills every basis cochain", hok, hworst, hwitness);

    // h^2, measured, never assumed
    double h2worst = 0.0;
    std::string h2witness;
    for (const auto& [name, w] : fam) {
        if (w.degree() == 0) continue;
        double dev = form_mag<CX>(cx.homotopy(cx.homotopy(w)));
        if (dev > h2worst) {
            h2worst = dev;
            h2witness = name;
        }
    }
    bool h2ok = is_exact_backend<CX> ? h2worst == 0.0 : h2worst <= tol.retract;
    add_check(out, "retract", "h h = 0 measured on the family", h2ok, h2worst, h2witness);

    double sideworst = 0.0;
    std::string sidewitness;
    for (const auto& [name, w] : fam) {
        double hp = w.degree() > 0 ? form_mag<CX>(cx.homotopy(cx.project(w))) : 0.0;
        double ph = w.degree() > 0 ? form_mag<CX>(cx.project(cx.homotopy(w))) : 0.0;
        auto pw = cx.project(w);
        double pp = form_mag<CX>(cx.project(pw) - pw);
        double pd = form_mag<CX>(cx.project(cx.d(w)) - cx.d(pw));
        double dev = std::max(std::max(hp, ph), std::max(pp, pd));
        if (dev > sideworst) {
            sideworst = dev;
            sidewitness = name;
        }
    }
    bool sideok = is_exact_backend<CX> ? sideworst == 0.0 : sideworst <= tol.retract;
    add_check(out, "retract", "hP = Ph = 0, P idempotent, Pd = dP", sideok, sideworst,
              sidewitness);
}

// ---------------------------------------------------------------------------
// forms: d d = 0, Cartan consistency, Stokes on the backend cells, naturality
// ---------------------------------------------------------------------------

template <class CX, class GEN>
void suite_forms(const CX& cx, const GEN& gens, const Tolerances& tol,
                 std::vector<CheckResult>& out) {
    using namespace verify_detail;
    using S = typename CX::Scalar;
    using SF = ScalarField<S>;
    auto fam = test_family(cx);

    double ddworst = 0.0;
    std::string ddwitness;
    std::vector<typename CX::Field> fields;
    for (int a = 0; a < gens.count(); ++a) fields.push_back(gens.field(a));

    for (const auto& [name, w] : fam) {
        auto ddw = cx.d(cx.d(w));
        if (ddw.degree() > CX::dimension) continue;
        double dev = form_mag<CX>(ddw);
        if (dev > ddworst) {
            ddworst = dev;
            ddwitness = name;
        }
    }
    add_check(out, "forms", "d after d vanishes",
              is_exact_backend<CX> ? ddworst == 0.0 : ddworst <= tol.duality, ddworst,
              ddwitness);

    double cworst = 0.0;
    std::string cwitness;
    for (const auto& [name, w] : fam) {
        if (w.degree() >= CX::dimension) continue;
        for (size_t a = 0; a < fields.size(); ++a) {
            auto lhs = cx.lie(fields[a], cx.d(w));
            auto rhs = cx.d(cx.lie(fields[a], w));
            double dev = form_mag<CX>(lhs - rhs);
            if (dev > cworst) {
                cworst = dev;
                cwitness = name + " with " + gens.name(int(a));
            }
        }
    }
    add_check(out, "forms", "Lie derivative commutes with d",
              is_exact_backend<CX> ? cworst == 0.0 : cworst <= tol.retract, cworst,
              cwitness);

    // Stokes on every edge (and face) chain
    double sworst = 0.0;
    std::string switness;
    for (const auto& [name, w] : fam) {
        if (w.degree() + 1 > CX::dimension) continue;
        auto dw = cx.d(w);
        for (int i = 0; i < cx.num_basis(); ++i) {
            int cd = chain_degree(cx.chain(i));
            if (cd != w.degree() + 1) continue;
            S total = SF::zero();
            if constexpr (CX::dimension == 1) {
                const auto& e = std::get<Edge1<S>>(cx.chain(i));
                total = w.comp().evaluate(e.b, BreakConvention::left) -
                        w.comp().evaluate(e.a, BreakConvention::right);
            } else {
                if (cd == 1) {
                    const auto& e = std::get<Edge2<S>>(cx.chain(i));
                    total = w.f().evaluate(e.x1, e.y1) - w.f().evaluate(e.x0, e.y0);
                } else {
                    for (int b = 0; b < cx.num_basis(); ++b)
                        if (chain_degree(cx.chain(b)) == 1)
                            total = total + cx.pair_chain(b, w);
                }
            }
            double dev = SF::abs_approx(total - cx.pair_chain(i, dw));
            if (dev > sworst) {
                sworst = dev;
                switness = name + " on " + cx.basis_name(i) + "-chain";
            }
        }
    }
    add_check(out, "forms", "Stokes on the backend cells",
              is_exact_backend<CX> ? sworst == 0.0 : sworst <= tol.retract, sworst,
              switness);

    // naturality sample: L_[v,w] = L_v L_w - L_w L_v on a family sample
    double nworst = 0.0;
    std::string nwitness;
    for (size_t a = 0; a < fields.size(); ++a)
        for (size_t b = a + 1; b < fields.size(); ++b) {
            const auto& [name, w] = fam[(a * 7 + b) % fam.size()];
            auto lhs = cx.lie(bracket(fields[a], fields[b]), w);
            auto rhs = cx.lie(fields[a], cx.lie(fields[b], w)) -
                       cx.lie(fields[b], cx.lie(fields[a], w));
            double dev = form_mag<CX>(lhs - rhs);
            if (dev > nworst) {
                nworst = dev;
                nwitness = "[" + gens.name(int(a)) + "," + gens.name(int(b)) + "] on " + name;
            }
        }
    add_check(out, "forms", "naturality of the Lie derivative",
              is_exact_backend<CX> ? nworst == 0.0 : nworst <= tol.retract, nworst,
              nwitness);
}

// ---------------------------------------------------------------------------
// liealg: antisymmetry, Jacobi on window-closed triples, closed-form match
// ---------------------------------------------------------------------------

template <class CX, class GEN>
void suite_liealg(const CX& cx, const GEN& gens, const Tolerances& tol,
                  std::vector<CheckResult>& out) {
    using namespace verify_detail;
    (void)cx;
    auto sc = structure_constants(gens);
    using FS = typename StructureConstants<GEN>::S;

    bool anti_ok = true;
    std::string anti_witness;
    for (int a = 0; a < sc.count && anti_ok; ++a)
        for (int b = 0; b < sc.count && anti_ok; ++b) {
            const auto& ab = sc.at(a, b).comps;
            const auto& ba = sc.at(b, a).comps;
            if (ab.size() != ba.size()) {
                anti_ok = false;
                anti_witness = "(" + gens.name(a) + "," + gens.name(b) + ")";
                break;
            }
            for (size_t u = 0; u < ab.size(); ++u)
                if (ab[u].first != ba[u].first ||
                    !ScalarField<FS>::is_zero(ab[u].second + ba[u].second)) {
                    anti_ok = false;
                    anti_witness = "(" + gens.name(a) + "," + gens.name(b) + ")";
                }
        }
    add_check(out, "liealg", "structure constants antisymmetric", anti_ok, 0.0,
              anti_witness);

    // Jacobi on window-closed triples via the realized symbolic bracket
    bool jac_ok = true;
    std::string jac_witness;
    for (int a = 0; a < gens.count() && jac_ok; ++a)
        for (int b = a; b < gens.count() && jac_ok; ++b)
            for (int c = b; c < gens.count(); ++c) {
                if (!window_closed({a, b, c}, gens)) continue;
                auto va = gens.field(a), vb = gens.field(b), vc = gens.field(c);
                auto jac = bracket(bracket(va, vb), vc);
                auto j2 = bracket(bracket(vb, vc), va);
                auto j3 = bracket(bracket(vc, va), vb);
                double dev;
                if constexpr (CX::dimension == 1)
                    dev = (jac.nu + j2.nu + j3.nu).max_coeff_abs();
                else
                    dev = std::max((jac.nux + j2.nux + j3.nux).max_coeff_abs(),
                                   (jac.nuy + j2.nuy + j3.nuy).max_coeff_abs());
                bool ok = is_exact_backend<CX> ? dev == 0.0 : dev <= tol.duality;
                if (!ok) {
                    jac_ok = false;
                    jac_witness = "(" + gens.name(a) + "," + gens.name(b) + "," +
                                  gens.name(c) + ")";
                    break;
                }
            }
    add_check(out, "liealg", "Jacobi identity on window-closed triples", jac_ok, 0.0,
              jac_witness);
}

// ---------------------------------------------------------------------------
// transfer: Q^2 = 0, engine equals the printed tables, pruning soundness
// ---------------------------------------------------------------------------

template <class CX, class GEN>
void suite_transfer(const CX& cx, const GEN& gens,
                    const TransferTensors<typename CX::Scalar>& tensors,
                    const ClosedFormTables<typename CX::Scalar>* tables,
                    const Tolerances& tol, std::vector<CheckResult>& out) {
    using namespace verify_detail;
    using S = typename CX::Scalar;

    auto q = differential_matrix(cx);
    double q2 = matrix_max_abs<S>(q * q);
    add_check(out, "transfer", "Q squared is zero",
              is_exact_backend<CX> ? q2 == 0.0 : q2 <= tol.duality, q2, "Q*Q");

    if (tables) {
        double qdev = matrix_max_abs<S>(tables->q - q);
        add_check(out, "transfer", "differential matrix matches the printed formula",
                  is_exact_backend<CX> ? qdev == 0.0 : qdev <= tol.tables, qdev, "Q");
        double w1 = 0.0, w2 = 0.0;
        std::string w1w, w2w;
        for (int a = 0; a < gens.count(); ++a) {
            double dev = matrix_max_abs<S>(tables->words.at({a}) - tensors.at({a}));
            if (dev > w1) {
                w1 = dev;
                w1w = "word (" + gens.name(a) + ")";
            }
        }
        for (int a = 0; a < gens.count(); ++a)
            for (int b = a + 1; b < gens.count(); ++b) {
                Mat<S> eng = tensors.at({a, b}) - tensors.at({b, a});
                Mat<S> tab = tables->words.at({a, b}) - tables->words.at({b, a});
                double dev = matrix_max_abs<S>(eng - tab);
                if (dev > w2) {
                    w2 = dev;
                    w2w = "word (" + gens.name(a) + "," + gens.name(b) + ")";
                }
            }
        add_check(out, "transfer", "engine equals closed-form tables, word length 1",
                  is_exact_backend<CX> ? w1 == 0.0 : w1 <= tol.tables, w1, w1w);
        add_check(out, "transfer",
                  "engine equals closed-form tables, ghost-contracted length 2",
                  is_exact_backend<CX> ? w2 == 0.0 : w2 <= tol.tables, w2, w2w);
    }

    // pruning: words beyond dimension+1 recompute to identically zero
    bool prune_ok = true;
    std::string prune_witness;
    uint64_t seed = 0x5eed;
    for (int iter = 0; iter < 10 && gens.count() > 0; ++iter) {
        std::vector<int> word;
        int len = CX::dimension + 2 + int(seed % 2);
        for (int u = 0; u < len; ++u) {
            seed = seed * 6364136223846793005ull + 1442695040888963407ull;
            word.push_back(int((seed >> 33) % uint64_t(gens.count())));
        }
        if (!word_composition_vanishes(cx, gens, word)) {
            prune_ok = false;
            prune_witness = "random word of length " + std::to_string(len);
            break;
        }
    }
    add_check(out, "transfer", "degree pruning is sound on random long words", prune_ok,
              0.0, prune_witness);

    // caching engine vs direct nesting on one stored word
    if (!tensors.words.empty()) {
        const auto& [word, m] = *tensors.words.begin();
        double dev = matrix_max_abs<S>(m - word_operator(cx, gens, word));
        add_check(out, "transfer", "cached word evaluation equals direct nesting",
                  is_exact_backend<CX> ? dev == 0.0 : dev <= tol.tables, dev,
                  "first stored word");
    }
}

}  // namespace coact
