#include <fstream>

#include "coact/run.hpp"

namespace coact {

namespace {

BasisKind parse_basis(const std::string& s) {
    if (s == "lagrange") return BasisKind::lagrange;
    if (s == "pwlinear") return BasisKind::pwlinear;
    if (s == "trig-dual") return BasisKind::trig_dual;
    if (s == "midpoint-hat") return BasisKind::midpoint_hat;
    throw ConfigError("unknown basis '" + s + "'");
}

BreakConvention parse_convention(const std::string& s) {
    if (s == "left") return BreakConvention::left;
    if (s == "right") return BreakConvention::right;
    if (s == "average") return BreakConvention::average;
    if (s == "require-continuous") return BreakConvention::require_continuous;
    throw ConfigError("unknown convention '" + s + "'");
}

}  // namespace

RunConfig parse_config_json(const Json& j) {
    RunConfig c;
    if (!j.contains("geometry")) throw ConfigError("config: missing 'geometry'");
    c.geometry = j.at("geometry").get<std::string>();
    if (c.geometry != "interval" && c.geometry != "circle" && c.geometry != "square")
        throw ConfigError("config: geometry must be interval, circle or square");

    if (j.contains("nodes")) {
        if (c.geometry != "interval")
            throw ConfigError("config: 'nodes' only applies to the interval");
        for (const auto& v : j.at("nodes")) {
            if (v.is_string())
                c.nodes.push_back(Rational::from_string(v.get<std::string>()));
            else if (v.is_number_integer())
                c.nodes.push_back(Rational(v.get<long long>()));
            else
                throw ConfigError("config: nodes must be integers or 'p/q' strings");
        }
    }
    if (j.contains("n")) {
        if (c.geometry != "circle")
            throw ConfigError("config: 'n' only applies to the circle");
        c.n = j.at("n").get<int>();
    }

    if (j.contains("basis")) c.basis = parse_basis(j.at("basis").get<std::string>());
    else if (c.geometry == "circle") c.basis = BasisKind::trig_dual;

    if (j.contains("convention"))
        c.convention = parse_convention(j.at("convention").get<std::string>());

    // window: {"window":{"K":..}} or {"window":{"D":..}}, with "K_or_D" as a
    // top-level shorthand
    if (j.contains("window")) {
        const auto& w = j.at("window");
        if (w.contains("K")) c.window = w.at("K").get<int>();
        else if (w.contains("D")) c.window = w.at("D").get<int>();
        else throw ConfigError("config: window needs 'K' or 'D'");
    }
    if (j.contains("K_or_D")) c.window = j.at("K_or_D").get<int>();
    if (j.contains("K")) c.window = j.at("K").get<int>();
    if (j.contains("D")) c.window = j.at("D").get<int>();

    if (j.contains("suites")) {
        c.suites.clear();
        if (j.at("suites").is_string())
            c.suites.push_back(j.at("suites").get<std::string>());
        else
            for (const auto& s : j.at("suites")) c.suites.push_back(s.get<std::string>());
    }
    if (j.contains("out")) c.out_dir = j.at("out").get<std::string>();

    if (j.contains("tolerances")) {
        const auto& t = j.at("tolerances");
        if (t.contains("duality")) c.tol.duality = t.at("duality").get<double>();
        if (t.contains("retract")) c.tol.retract = t.at("retract").get<double>();
        if (t.contains("tables")) c.tol.tables = t.at("tables").get<double>();
        if (t.contains("cme")) c.tol.cme = t.at("cme").get<double>();
    }
    for (double t : {c.tol.duality, c.tol.retract, c.tol.tables, c.tol.cme})
        if (!(t > 0)) throw ConfigError("config: tolerances must be positive");

    // defaults and consistency
    if (c.geometry == "interval") {
        if (c.nodes.empty())
            c.nodes = {Rational(0), Rational(1)};
        if (c.basis != BasisKind::lagrange && c.basis != BasisKind::pwlinear)
            throw ConfigError("config: interval basis must be lagrange or pwlinear");
        if (c.basis == BasisKind::pwlinear &&
            c.convention == BreakConvention::require_continuous)
            throw ConfigError("config: pwlinear needs convention left, right or average");
        if (c.window < 0) c.window = 1;
    } else if (c.geometry == "circle") {
        if (c.n == 0) c.n = 4;
        if (c.n < 2) throw ConfigError("config: circle needs n >= 2");
        if (c.basis != BasisKind::trig_dual && c.basis != BasisKind::midpoint_hat)
            throw ConfigError("config: circle basis must be trig-dual or midpoint-hat");
        if (c.basis == BasisKind::midpoint_hat &&
            c.convention == BreakConvention::require_continuous)
            throw ConfigError(
                "config: midpoint-hat needs convention left, right or average");
        if (c.window < 0) c.window = 1;
    } else {
        if (!c.nodes.empty() || c.n != 0)
            throw ConfigError("config: square takes neither nodes nor n");
        if (c.window < 0) c.window = 1;
    }
    return c;
}

RunConfig load_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file '" + path + "'");
    Json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        throw ConfigError("config parse error in '" + path + "': " + e.what());
    }
    return parse_config_json(j);
}

Json config_to_json(const RunConfig& c) {
    Json j{{"geometry", c.geometry}};
    if (c.geometry == "interval") {
        Json nodes = Json::array();
        for (const auto& t : c.nodes) nodes.push_back(t.str());
        j["nodes"] = std::move(nodes);
    }
    if (c.geometry == "circle") j["n"] = c.n;
    if (c.geometry != "square") j["basis"] = to_string(c.basis);
    j["convention"] = to_string(c.convention);
    j["window"] = Json{{c.geometry == "square" ? "D" : "K", c.window}};
    return j;
}

}  // namespace coact
