#pragma once

#include <json.hpp>
#include <string>

#include "coact/bv_action.hpp"
#include "coact/transfer.hpp"

namespace coact {

using Json = nlohmann::ordered_json;

// ---------------------------------------------------------------------------
// Scalars: {"rat":"p/q"}, {"gauss":["p/q","r/s"]} or {"f64re":..,"f64im":..}
// ---------------------------------------------------------------------------

inline Json scalar_to_json(const Scalar& s) {
    if (s.is_rational()) return Json{{"rat", s.as_rational().str()}};
    if (s.is_gauss())
        return Json{{"gauss", {s.as_gauss().real().str(), s.as_gauss().imag().str()}}};
    return Json{{"f64re", s.as_float().real()}, {"f64im", s.as_float().imag()}};
}

inline Scalar scalar_from_json(const Json& j) {
    if (j.contains("rat")) return Scalar(Rational::from_string(j.at("rat")));
    if (j.contains("gauss")) {
        const auto& pair = j.at("gauss");
        return Scalar(GaussRational(Rational::from_string(pair.at(0)),
                                    Rational::from_string(pair.at(1))));
    }
    if (j.contains("f64re"))
        return Scalar(Cplx(j.at("f64re").get<double>(),
                           j.value("f64im", 0.0)));
    throw std::invalid_argument("scalar JSON: unknown variant");
}

template <class S>
Json field_value_to_json(const S& v) {
    return scalar_to_json(Scalar(v));
}

template <class S>
S field_value_from_json(const Json& j);

template <>
inline Rational field_value_from_json<Rational>(const Json& j) {
    Scalar s = scalar_from_json(j);
    if (!s.is_rational()) throw std::invalid_argument("expected a rational scalar");
    return s.as_rational();
}
template <>
inline GaussRational field_value_from_json<GaussRational>(const Json& j) {
    Scalar s = scalar_from_json(j);
    if (s.is_rational()) return GaussRational(s.as_rational());
    if (!s.is_gauss()) throw std::invalid_argument("expected an exact scalar");
    return s.as_gauss();
}
template <>
inline Cplx field_value_from_json<Cplx>(const Json& j) {
    return scalar_from_json(j).to_complex();
}

// breakpoints: exact ones as {"rat":...}, float ones as plain numbers
inline Json breakpoint_to_json(const Rational& t) { return Json{{"rat", t.str()}}; }
inline Json breakpoint_to_json(double t) { return Json(t); }

template <class R>
R breakpoint_from_json(const Json& j);
template <>
inline Rational breakpoint_from_json<Rational>(const Json& j) {
    return Rational::from_string(j.at("rat"));
}
template <>
inline double breakpoint_from_json<double>(const Json& j) {
    return j.get<double>();
}

// ---------------------------------------------------------------------------
// Functions: {"pieces":[{"lo":..,"hi":..,"terms":[{"n":..,"k":..,"coeff":..}]}]}
// ---------------------------------------------------------------------------

template <class S>
Json func1d_to_json(const Func1D<S>& f) {
    Json pieces = Json::array();
    for (size_t i = 0; i < f.pieces().size(); ++i) {
        Json terms = Json::array();
        for (const auto& t : f.pieces()[i])
            terms.push_back(Json{{"n", t.pow}, {"k", t.freq},
                                 {"coeff", field_value_to_json(t.coeff)}});
        pieces.push_back(Json{{"lo", breakpoint_to_json(f.breakpoints()[i])},
                              {"hi", breakpoint_to_json(f.breakpoints()[i + 1])},
                              {"terms", std::move(terms)}});
    }
    return Json{{"pieces", std::move(pieces)}};
}

template <class S>
Func1D<S> func1d_from_json(const Json& j) {
    using R = typename ScalarField<S>::Real;
    std::vector<R> breaks;
    std::vector<std::vector<Term1D<S>>> pieces;
    for (const auto& p : j.at("pieces")) {
        R lo = breakpoint_from_json<R>(p.at("lo"));
        R hi = breakpoint_from_json<R>(p.at("hi"));
        if (breaks.empty())
            breaks.push_back(lo);
        else if (!(breaks.back() == lo))
            throw std::invalid_argument("function JSON: pieces are not contiguous");
        breaks.push_back(hi);
        std::vector<Term1D<S>> terms;
        for (const auto& t : p.at("terms"))
            terms.push_back({t.at("n").get<int>(), t.at("k").get<int>(),
                             field_value_from_json<S>(t.at("coeff"))});
        pieces.push_back(std::move(terms));
    }
    return Func1D<S>(std::move(breaks), std::move(pieces));
}

template <class S>
Json func2d_to_json(const Func2D<S>& f) {
    Json terms = Json::array();
    for (const auto& t : f.terms())
        terms.push_back(Json{{"n", t.xpow}, {"m", t.ypow},
                             {"coeff", field_value_to_json(t.coeff)}});
    return Json{{"terms", std::move(terms)}};
}

template <class S>
Func2D<S> func2d_from_json(const Json& j) {
    std::vector<Term2D<S>> terms;
    for (const auto& t : j.at("terms"))
        terms.push_back({t.at("n").get<int>(), t.at("m").get<int>(),
                         field_value_from_json<S>(t.at("coeff"))});
    return Func2D<S>(std::move(terms));
}

// ---------------------------------------------------------------------------
// Forms: {"degree":d, components...}
// ---------------------------------------------------------------------------

template <class S>
Json form_to_json(const Form1D<S>& w) {
    return Json{{"degree", w.degree()}, {"comp", func1d_to_json(w.comp())}};
}

template <class S>
Form1D<S> form1d_from_json(const Json& j) {
    return Form1D<S>(j.at("degree").get<int>(), func1d_from_json<S>(j.at("comp")));
}

template <class S>
Json form_to_json(const Form2D<S>& w) {
    switch (w.degree()) {
        case 0: return Json{{"degree", 0}, {"f", func2d_to_json(w.f())}};
        case 1:
            return Json{{"degree", 1}, {"fx", func2d_to_json(w.fx())},
                        {"fy", func2d_to_json(w.fy())}};
        case 2: return Json{{"degree", 2}, {"e", func2d_to_json(w.e())}};
        default: return Json{{"degree", w.degree()}};
    }
}

template <class S>
Form2D<S> form2d_from_json(const Json& j) {
    int degree = j.at("degree").get<int>();
    switch (degree) {
        case 0: return Form2D<S>::f0(func2d_from_json<S>(j.at("f")));
        case 1:
            return Form2D<S>::f1(func2d_from_json<S>(j.at("fx")),
                                 func2d_from_json<S>(j.at("fy")));
        case 2: return Form2D<S>::f2(func2d_from_json<S>(j.at("e")));
        default: return Form2D<S>::zero_of_top();
    }
}

// ---------------------------------------------------------------------------
// Structure constants: sparse triples
// ---------------------------------------------------------------------------

template <class GEN>
Json structure_constants_to_json(const StructureConstants<GEN>& sc, const GEN& gens) {
    Json triples = Json::array();
    bool any_out = false;
    for (int a = 0; a < sc.count; ++a)
        for (int b = 0; b < sc.count; ++b) {
            const auto& e = sc.at(a, b);
            any_out |= e.leaves_window;
            for (const auto& [d, coeff] : e.comps)
                triples.push_back(Json{{"a", gens.name(a)}, {"b", gens.name(b)},
                                       {"d", gens.name(d)},
                                       {"value", field_value_to_json(coeff)},
                                       {"leaves_window", e.leaves_window}});
        }
    return Json{{"count", sc.count}, {"any_leaves_window", any_out},
                {"triples", std::move(triples)}};
}

// ---------------------------------------------------------------------------
// Tensors: {"geometry":..,"window":..,"words":[{"word":[..],"rows":[..]}]}
// ---------------------------------------------------------------------------

template <class S, class GEN>
Json tensors_to_json(const std::string& geometry, const Json& window,
                     const TransferTensors<S>& tensors, const GEN& gens) {
    Json words = Json::array();
    for (const auto& [word, m] : tensors.words) {
        Json rows = Json::array();
        for (Eigen::Index j = 0; j < m.cols(); ++j)
            for (Eigen::Index i = 0; i < m.rows(); ++i)
                if (!ScalarField<S>::is_zero(m(i, j)))
                    rows.push_back(Json{{"chain", int(i)}, {"cochain", int(j)},
                                        {"value", field_value_to_json(m(i, j))}});
        Json names = Json::array();
        for (int a : word) names.push_back(gens.name(a));
        words.push_back(Json{{"word", std::move(names)}, {"rows", std::move(rows)}});
    }
    return Json{{"geometry", geometry}, {"window", window}, {"words", std::move(words)}};
}

template <class S, class GEN>
Json tables_to_json(const std::string& geometry, const Json& window,
                    const ClosedFormTables<S>& tables, const GEN& gens) {
    Json j{{"geometry", geometry}, {"window", window}};
    Json beta = Json::array();
    for (const auto& row : tables.beta_tab) {
        Json r = Json::array();
        for (const auto& v : row) r.push_back(field_value_to_json(v));
        beta.push_back(std::move(r));
    }
    j["beta_table"] = std::move(beta);
    Json nus = Json::array(), nups = Json::array();
    for (int a = 0; a < int(tables.nu.size()); ++a) {
        Json nu_row = Json::array(), nup_row = Json::array();
        for (const auto& v : tables.nu[a]) nu_row.push_back(field_value_to_json(v));
        for (const auto& v : tables.nu_prime[a]) nup_row.push_back(field_value_to_json(v));
        nus.push_back(Json{{"generator", gens.name(a)}, {"values", std::move(nu_row)}});
        nups.push_back(Json{{"generator", gens.name(a)}, {"values", std::move(nup_row)}});
    }
    j["nu"] = std::move(nus);
    j["nu_prime"] = std::move(nups);
    Json qrows = Json::array();
    for (Eigen::Index jj = 0; jj < tables.q.cols(); ++jj)
        for (Eigen::Index ii = 0; ii < tables.q.rows(); ++ii)
            if (!ScalarField<S>::is_zero(tables.q(ii, jj)))
                qrows.push_back(Json{{"chain", int(ii)}, {"cochain", int(jj)},
                                     {"value", field_value_to_json(tables.q(ii, jj))}});
    j["q"] = std::move(qrows);
    Json words = Json::array();
    for (const auto& [word, m] : tables.words) {
        Json rows = Json::array();
        for (Eigen::Index jj = 0; jj < m.cols(); ++jj)
            for (Eigen::Index ii = 0; ii < m.rows(); ++ii)
                if (!ScalarField<S>::is_zero(m(ii, jj)))
                    rows.push_back(Json{{"chain", int(ii)}, {"cochain", int(jj)},
                                        {"value", field_value_to_json(m(ii, jj))}});
        Json names = Json::array();
        for (int a : word) names.push_back(gens.name(a));
        words.push_back(Json{{"word", std::move(names)}, {"rows", std::move(rows)}});
    }
    j["words"] = std::move(words);
    return j;
}

// ---------------------------------------------------------------------------
// CME residual report:
// {"closed_monomials":N,"dropped":M,"max_abs_residual":..,"nonzero_terms":[..]}
// ---------------------------------------------------------------------------

template <class S>
Json cme_report_to_json(const CmeReport<S>& rep, const VarTable& vt) {
    Json nonzero = Json::array();
    for (const auto& [mono, coeff] : rep.closed_residual.terms()) {
        std::string name;
        for (uint32_t id : mono) name += vt.var(id).name + " ";
        nonzero.push_back(Json{{"monomial", name},
                               {"value", field_value_to_json(coeff)}});
    }
    return Json{{"closed_monomials", rep.closed_monomials},
                {"dropped", rep.dropped_monomials},
                {"max_abs_residual", rep.max_abs_residual},
                {"exact_zero", rep.exact_zero},
                {"nonzero_terms", std::move(nonzero)}};
}

}  // namespace coact
