#include <iomanip>
#include <sstream>

#include "coact/run.hpp"

namespace coact {

Json RunReport::to_json() const {
    Json checks_json = Json::array();
    for (const auto& c : checks) {
        Json item{{"suite", c.suite}, {"name", c.name}, {"pass", c.pass},
                  {"magnitude", c.magnitude}};
        if (!c.witness.empty()) item["witness"] = c.witness;
        checks_json.push_back(std::move(item));
    }
    Json artifacts_json = Json::object();
    for (const auto& [label, path] : artifacts) artifacts_json[label] = path;
    return Json{{"geometry", geometry},
                {"config", config},
                {"all_pass", all_pass()},
                {"checks", std::move(checks_json)},
                {"sign_convention", sign_convention},
                {"cme", Json{{"closed_monomials", cme_closed},
                             {"dropped", cme_dropped},
                             {"max_abs_residual", cme_max_residual},
                             {"exact_zero", cme_exact_zero}}},
                {"degenerate_regions", degenerate_regions},
                {"artifacts", std::move(artifacts_json)},
                {"notes", notes},
                {"elapsed_seconds", elapsed_seconds}};
}

std::string RunReport::to_text() const {
    std::ostringstream os;
    os << "coact report: geometry=" << geometry << "\n";
    os << "config: " << config.dump() << "\n\n";
    for (const auto& c : checks) {
        os << (c.pass ? "[PASS] " : "[FAIL] ") << c.suite << ": " << c.name;
        os << "  (max deviation " << std::scientific << std::setprecision(3)
           << c.magnitude << ")";
        if (!c.witness.empty()) os << "  witness: " << c.witness;
        os << "\n";
    }
    if (!sign_convention.empty()) {
        os << "\nresolved sign convention: " << sign_convention << "\n";
        os << "cme residual: closed monomials " << cme_closed << ", dropped "
           << cme_dropped << ", max |residual| " << std::scientific
           << std::setprecision(3) << cme_max_residual
           << (cme_exact_zero ? " (exactly zero)" : "") << "\n";
    }
    if (degenerate_regions > 0)
        os << "degenerate integration regions: " << degenerate_regions << "\n";
    for (const auto& n : notes) os << "note: " << n << "\n";
    if (!artifacts.empty()) {
        os << "\nartifacts:\n";
        for (const auto& [label, path] : artifacts)
            os << "  " << label << ": " << path << "\n";
    }
    os << "\nelapsed: " << std::fixed << std::setprecision(3) << elapsed_seconds
       << " s\n";
    os << (all_pass() ? "ALL CHECKS PASSED\n" : "SOME CHECKS FAILED\n");
    return os.str();
}

}  // namespace coact
