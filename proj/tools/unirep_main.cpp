// Command line frontend: single socle/hom computations, constructor
// verification, theorem regression suites and the length-2 pair sweep.
// Exit codes: 0 all-pass, 1 any discrepancy, 2 usage error.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <fmt/format.h>

#include "unirep/intertwine.hpp"
#include "unirep/report.hpp"
#include "unirep/sweep.hpp"
#include "unirep/tables.hpp"
#include "unirep/uniserial.hpp"
#include "unirep/verify.hpp"

namespace {

using namespace unirep;

struct AmbientFlags {
    std::optional<int> m; // abelian
    std::optional<int> n; // heisenberg, m = 2n-1

    void attach(CLI::App* cmd) {
        cmd->add_option("--m", m, "abelian ambient: sl(2) acting on a_m as V(m)");
        cmd->add_option("--n", n, "heisenberg ambient: h_n with m = 2n-1");
    }
    std::pair<int, Mode> resolve() const {
        if (m.has_value() == n.has_value())
            throw CLI::ValidationError("ambient", "exactly one of --m or --n is required");
        if (m)
            return {*m, Mode::abelian};
        return {2 * *n - 1, Mode::heisenberg};
    }
};

struct OutputFlags {
    std::string format = "text";
    std::string out_path;

    void attach(CLI::App* cmd) {
        cmd->add_option("--format", format, "report format")->check(CLI::IsMember({"json", "text"}));
        cmd->add_option("--out", out_path, "write the report to a file instead of stdout");
    }
    void emit(const std::string& text, const nlohmann::json& json) const {
        const std::string payload = format == "json" ? json.dump(2) + "\n" : text;
        if (out_path.empty()) {
            std::cout << payload;
        } else {
            std::ofstream file(out_path, std::ios::binary);
            if (!file)
                throw std::runtime_error("cannot open output file " + out_path);
            file << payload;
        }
    }
};

// Which result, if any, pins down the socle of this pair. Pairs touching the
// exceptional constructors, and length >= 2 non-Z pairs, are computed
// territory only.
std::optional<std::string> covering_theorem(const ModuleSpec& a, const ModuleSpec& b) {
    auto is_z_type = [](const ModuleSpec& s) {
        return std::holds_alternative<SpecV>(s.kind()) || std::holds_alternative<SpecZ>(s.kind()) ||
               std::holds_alternative<SpecZdual>(s.kind()) ||
               (std::holds_alternative<SpecE>(s.kind()) &&
                std::abs(std::get<SpecE>(s.kind()).a - std::get<SpecE>(s.kind()).b) == s.m());
    };
    if (is_z_type(a) && is_z_type(b))
        return "thm-4.1";
    if (a.is_standard_faithful() && b.is_standard_faithful())
        return "thm-4.6";
    if ((a.is_standard_faithful() && is_z_type(b)) || (b.is_standard_faithful() && is_z_type(a)))
        return "thm-4.5";
    auto balanced = [](const ModuleSpec& s) {
        if (const auto* e = std::get_if<SpecE>(&s.kind()))
            return e->a + e->b == s.m() && e->a > 0 && e->b > 0;
        return false;
    };
    auto two_layers = [](const ModuleSpec& s) { return s.layer_weights().size() == 2; };
    if ((balanced(a) && two_layers(b)) || (balanced(b) && two_layers(a)))
        return "thm-4.3 (S_1 only)";
    return std::nullopt;
}

std::pair<int, int> parse_range(const std::string& text) {
    const auto dots = text.find("..");
    if (dots == std::string::npos) {
        const int v = std::stoi(text);
        return {v, v};
    }
    return {std::stoi(text.substr(0, dots)), std::stoi(text.substr(dots + 2))};
}

TableSet load_tables(const std::string& dir) {
    return dir.empty() ? TableSet::embedded() : TableSet::from_directory(dir);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact socle and intertwiner computations for uniserial modules over sl(2) x| h_n"};
    app.require_subcommand(1);

    // socle
    auto* socle_cmd = app.add_subcommand("socle", "socle strata of a tensor of two constructors");
    AmbientFlags socle_ambient;
    OutputFlags socle_output;
    std::vector<std::string> socle_exprs;
    int socle_jobs = 1;
    socle_ambient.attach(socle_cmd);
    socle_output.attach(socle_cmd);
    socle_cmd->add_option("modules", socle_exprs, "two module expressions")->expected(2);
    socle_cmd->add_option("--jobs", socle_jobs, "worker threads for block elimination");

    // hom
    auto* hom_cmd = app.add_subcommand("hom", "intertwining operators Hom(V, W)");
    AmbientFlags hom_ambient;
    OutputFlags hom_output;
    std::vector<std::string> hom_exprs;
    bool hom_matrices = false;
    int hom_jobs = 1;
    hom_ambient.attach(hom_cmd);
    hom_output.attach(hom_cmd);
    hom_cmd->add_option("modules", hom_exprs, "two module expressions")->expected(2);
    hom_cmd->add_flag("--matrices", hom_matrices, "include the operator matrices in the report");
    hom_cmd->add_option("--jobs", hom_jobs, "worker threads");

    // verify-module
    auto* vm_cmd = app.add_subcommand("verify-module", "axioms, uniseriality and socle series of one constructor");
    AmbientFlags vm_ambient;
    OutputFlags vm_output;
    std::string vm_expr;
    vm_ambient.attach(vm_cmd);
    vm_output.attach(vm_cmd);
    vm_cmd->add_option("module", vm_expr, "module expression")->required();

    // verify-theorems
    auto* vt_cmd = app.add_subcommand("verify-theorems", "regression suites against the expected-value tables");
    OutputFlags vt_output;
    std::string vt_scope = "thm-4.1,thm-4.3,thm-4.5,thm-4.6,sec-5";
    std::string vt_range = "1..3";
    std::string vt_tables_dir;
    VerifyOptions vt_opt;
    bool vt_self_test = false;
    vt_output.attach(vt_cmd);
    vt_cmd->add_option("--scope", vt_scope, "comma-separated list of suites");
    vt_cmd->add_option("--n", vt_range, "heisenberg range, e.g. 2 or 1..3");
    vt_cmd->add_option("--max-weight", vt_opt.max_weight, "bound on constructor weight parameters");
    vt_cmd->add_option("--max-length", vt_opt.max_length, "bound on type-Z length");
    vt_cmd->add_option("--jobs", vt_opt.jobs, "worker threads over parameter points");
    vt_cmd->add_option("--tables", vt_tables_dir, "load expected-value tables from a directory");
    vt_cmd->add_flag("--self-test", vt_self_test, "perturb a table and confirm the harness reports it");

    // sweep-conjecture
    auto* sw_cmd = app.add_subcommand("sweep-conjecture", "S1/S2 sweep over pairs of length-2 modules");
    OutputFlags sw_output;
    std::string sw_mlist = "1,3,5";
    SweepOptions sw_opt;
    sw_output.attach(sw_cmd);
    sw_cmd->add_option("--m-list", sw_mlist, "comma-separated ambient weights");
    sw_cmd->add_option("--max-weight", sw_opt.max_weight, "bound on each layer weight");
    sw_cmd->add_option("--max-sum", sw_opt.max_pair_sum, "bound on a+b per module (-1 = none)");
    sw_cmd->add_option("--jobs", sw_opt.jobs, "worker threads over sweep points");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) // --help
            return app.exit(e);
        app.exit(e);
        return 2;
    }

    try {
        if (socle_cmd->parsed()) {
            const auto [m, mode] = socle_ambient.resolve();
            const ModuleSpec left_spec = ModuleSpec::parse(socle_exprs[0], m, mode);
            const ModuleSpec right_spec = ModuleSpec::parse(socle_exprs[1], m, mode);
            const SocleReport report =
                socle(tensor_product(build(left_spec), build(right_spec)), socle_jobs);
            const auto theorem = covering_theorem(left_spec, right_spec);
            std::string text = to_text(report);
            nlohmann::json json = to_json(report);
            if (theorem) {
                text += fmt::format("  covered by {}\n", *theorem);
                json["coverage"] = *theorem;
            } else {
                text += "  computed (no theorem)\n";
                json["coverage"] = "computed (no theorem)";
            }
            socle_output.emit(text, json);
            return 0;
        }
        if (hom_cmd->parsed()) {
            const auto [m, mode] = hom_ambient.resolve();
            const Representation left = build(ModuleSpec::parse(hom_exprs[0], m, mode));
            const Representation right = build(ModuleSpec::parse(hom_exprs[1], m, mode));
            const HomReport report = hom_space(left, right, hom_jobs);
            hom_output.emit(to_text(report, hom_matrices), to_json(report, hom_matrices));
            return 0;
        }
        if (vm_cmd->parsed()) {
            const auto [m, mode] = vm_ambient.resolve();
            const ModuleSpec spec = ModuleSpec::parse(vm_expr, m, mode);
            const Representation rep = build(spec);
            const AxiomReport axioms = check_module_axioms(rep);
            const auto series = socle_series(rep);
            const auto layers = spec.layer_weights();
            bool layers_ok = series.size() == layers.size();
            if (layers_ok)
                for (std::size_t i = 0; i < layers.size(); ++i)
                    layers_ok = layers_ok && series[i] == std::map<int, int>{{layers[i], 1}};
            const bool uniserial_ok = verify_uniserial(rep);
            const bool all_ok = axioms.ok() && uniserial_ok && layers_ok;

            nlohmann::json j{{"module", spec.render()},
                             {"m", m},
                             {"mode", to_string(mode)},
                             {"dim", rep.dim},
                             {"axioms", to_json(axioms)},
                             {"uniserial", uniserial_ok},
                             {"socle_series_matches_layers", layers_ok},
                             {"ok", all_ok}};
            std::string text = fmt::format("module {} [m={}, {}], dim {}\n", spec.render(), m,
                                           to_string(mode), rep.dim);
            text += fmt::format("  axioms: {} ({} generator pairs)\n", axioms.ok() ? "ok" : "VIOLATED",
                                axioms.pairs_checked);
            for (const auto& v : axioms.violations)
                text += "    " + v.describe() + "\n";
            text += fmt::format("  uniserial: {}\n  socle series matches layers: {}\n",
                                uniserial_ok ? "yes" : "NO", layers_ok ? "yes" : "NO");
            vm_output.emit(text, j);
            return all_ok ? 0 : 1;
        }
        if (vt_cmd->parsed()) {
            const TableSet tables = load_tables(vt_tables_dir);
            if (vt_self_test) {
                const bool caught = verify_self_test(tables);
                std::cout << (caught ? "self-test: planted table discrepancy was reported\n"
                                     : "self-test FAILED: mutation went unnoticed\n");
                return caught ? 0 : 1;
            }
            const auto [n_min, n_max] = parse_range(vt_range);
            vt_opt.n_min = n_min;
            vt_opt.n_max = n_max;
            std::vector<std::string> scope;
            for (std::size_t start = 0; start < vt_scope.size();) {
                auto comma = vt_scope.find(',', start);
                if (comma == std::string::npos)
                    comma = vt_scope.size();
                scope.push_back(vt_scope.substr(start, comma - start));
                start = comma + 1;
            }
            const VerifyReport report = verify_theorems(scope, vt_opt, tables);
            vt_output.emit(to_text(report), to_json(report));
            return report.failures() == 0 ? 0 : 1;
        }
        if (sw_cmd->parsed()) {
            sw_opt.m_list.clear();
            for (std::size_t start = 0; start < sw_mlist.size();) {
                auto comma = sw_mlist.find(',', start);
                if (comma == std::string::npos)
                    comma = sw_mlist.size();
                sw_opt.m_list.push_back(std::stoi(sw_mlist.substr(start, comma - start)));
                start = comma + 1;
            }
            const SweepReport report = sweep_conjecture(sw_opt);
            sw_output.emit(to_text(report), to_json(report));
            return report.discrepancies() == 0 ? 0 : 1;
        }
    } catch (const CLI::Error& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
