#include "unirep/report.hpp"

#include <fmt/format.h>

namespace unirep {

nlohmann::json to_json(const SocleReport& report) {
    nlohmann::json out{{"m", report.m},
                       {"mode", to_string(report.mode)},
                       {"left", report.left},
                       {"right", report.right}};
    auto& socle = out["socle"] = nlohmann::json::array();
    for (const auto& degree : report.degrees) {
        nlohmann::json entry{{"t", degree.t}};
        auto& components = entry["components"] = nlohmann::json::array();
        for (const auto& part : degree.parts)
            components.push_back({{"mu", part.mu}, {"mult", part.mult}});
        socle.push_back(std::move(entry));
    }
    return out;
}

nlohmann::json to_json(const HomReport& report, bool include_matrices) {
    nlohmann::json out{{"dim", report.dimension}, {"degrees", report.degree}};
    if (include_matrices) {
        auto& basis = out["basis"] = nlohmann::json::array();
        for (const auto& matrix : report.basis) {
            nlohmann::json rows = nlohmann::json::array();
            for (int i = 0; i < matrix.rows(); ++i) {
                nlohmann::json row = nlohmann::json::array();
                for (int j = 0; j < matrix.cols(); ++j)
                    row.push_back(matrix.at(i, j).str());
                rows.push_back(std::move(row));
            }
            basis.push_back(std::move(rows));
        }
    }
    return out;
}

nlohmann::json to_json(const VerifyReport& report) {
    nlohmann::json out;
    auto& points = out["points"] = nlohmann::json::array();
    for (const auto& p : report.points) {
        nlohmann::json entry{{"theorem", p.theorem}, {"subject", p.subject}, {"pass", p.pass}};
        if (!p.pass)
            entry["detail"] = p.detail;
        points.push_back(std::move(entry));
    }
    auto& summary = out["summary"] = nlohmann::json::array();
    for (const auto& s : report.summaries())
        summary.push_back({{"theorem", s.theorem}, {"points", s.points}, {"failures", s.failures}});
    out["failures"] = report.failures();
    return out;
}

nlohmann::json to_json(const SweepReport& report) {
    nlohmann::json out;
    auto& points = out["points"] = nlohmann::json::array();
    for (const auto& p : report.points) {
        nlohmann::json entry{{"m", p.m},
                             {"left", fmt::format("E({},{})", p.a, p.b)},
                             {"right", fmt::format("E({},{})", p.c, p.d)},
                             {"cases", p.cases},
                             {"s1_status", p.s1_status},
                             {"s2_status", p.s2_status},
                             {"predicted_s1", to_string(p.predicted_s1)},
                             {"s1", to_string(p.s1)},
                             {"s2", to_string(p.s2)},
                             {"s1_ok", p.s1_ok},
                             {"s2_ok", p.s2_ok},
                             {"symmetric", p.symmetric}};
        if (!p.witness.empty())
            entry["witness"] = p.witness;
        points.push_back(std::move(entry));
    }
    out["discrepancies"] = report.discrepancies();
    out["asymmetric_points"] = report.asymmetric_points();
    return out;
}

nlohmann::json to_json(const AxiomReport& report) {
    nlohmann::json out{{"pairs_checked", report.pairs_checked}, {"ok", report.ok()}};
    auto& violations = out["violations"] = nlohmann::json::array();
    for (const auto& v : report.violations)
        violations.push_back(v.describe());
    return out;
}

std::string to_text(const SocleReport& report) {
    std::string out = fmt::format("socle of {} (x) {}   [m={}, {}]\n", report.left, report.right, report.m,
                                  to_string(report.mode));
    for (const auto& degree : report.degrees)
        out += fmt::format("  S_{:<2} = {}\n", degree.t, to_string(degree.multiset()));
    out += fmt::format("  socle dimension {}\n", report.socle_dimension());
    return out;
}

std::string to_text(const HomReport& report, bool include_matrices) {
    std::string out = fmt::format("hom dimension {}", report.dimension);
    if (!report.degree.empty()) {
        out += "  (degrees:";
        for (int t : report.degree)
            out += fmt::format(" {}", t);
        out += ")";
    }
    out += "\n";
    if (include_matrices) {
        for (std::size_t k = 0; k < report.basis.size(); ++k) {
            out += fmt::format("basis[{}] (degree {}):\n", k, report.degree[k]);
            const auto& matrix = report.basis[k];
            for (int i = 0; i < matrix.rows(); ++i) {
                out += "  [";
                for (int j = 0; j < matrix.cols(); ++j)
                    out += fmt::format("{}{}", j ? ", " : "", matrix.at(i, j).str());
                out += "]\n";
            }
        }
    }
    return out;
}

std::string to_text(const VerifyReport& report) {
    std::string out;
    for (const auto& p : report.points) {
        out += fmt::format("{}  {}  {}\n", p.pass ? "PASS" : "FAIL", p.theorem, p.subject);
        if (!p.pass)
            out += fmt::format("      {}\n", p.detail);
    }
    out += "\nsummary:\n";
    for (const auto& s : report.summaries())
        out += fmt::format("  {:<10} {:>6} points, {} failures\n", s.theorem, s.points, s.failures);
    out += fmt::format("total failures: {}\n", report.failures());
    return out;
}

std::string to_text(const SweepReport& report) {
    std::string out;
    std::map<std::string, int> case_counts;
    for (const auto& p : report.points) {
        ++case_counts[p.cases];
        if (!p.s1_ok || !p.s2_ok) {
            out += fmt::format("DISCREPANCY m={} E({},{}) (x) E({},{})  case {}  predicted S1 {}  got S1 {}  S2 {}\n",
                               p.m, p.a, p.b, p.c, p.d, p.cases, to_string(p.predicted_s1), to_string(p.s1),
                               to_string(p.s2));
            out += p.witness;
        }
    }
    out += fmt::format("sweep: {} points, {} discrepancies, {} asymmetric\n", report.points.size(),
                       report.discrepancies(), report.asymmetric_points());
    for (const auto& [label, count] : case_counts)
        out += fmt::format("  case {:<8} {:>6} points\n", label, count);
    int theorem_backed = 0;
    for (const auto& p : report.points)
        if (p.s1_status == "theorem")
            ++theorem_backed;
    out += fmt::format("  S1 theorem-backed at {} points, empirical at {}\n", theorem_backed,
                       report.points.size() - static_cast<std::size_t>(theorem_backed));
    return out;
}

} // namespace unirep
