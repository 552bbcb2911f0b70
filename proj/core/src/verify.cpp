#include "unirep/verify.hpp"

#include <functional>
#include <map>
#include <sstream>

#include "unirep/intertwine.hpp"
#include "unirep/parallel.hpp"

namespace unirep {

std::vector<TheoremSummary> VerifyReport::summaries() const {
    std::map<std::string, TheoremSummary> acc;
    for (const auto& p : points) {
        auto& s = acc[p.theorem];
        s.theorem = p.theorem;
        ++s.points;
        if (!p.pass)
            ++s.failures;
    }
    std::vector<TheoremSummary> out;
    for (auto& [id, s] : acc)
        out.push_back(s);
    return out;
}

int VerifyReport::failures() const {
    int n = 0;
    for (const auto& p : points)
        if (!p.pass)
            ++n;
    return n;
}

namespace {

struct FaithfulDesc {
    ModuleSpec spec;
    int ftype; // 1 for the a1 = a0+m families, 2 otherwise
    int a0, a1;
};

std::vector<FaithfulDesc> faithful_family(int n, int max_weight) {
    const int m = 2 * n - 1;
    std::vector<FaithfulDesc> out;
    auto push = [&](ModuleSpecKind kind) {
        ModuleSpec spec(std::move(kind), m, Mode::heisenberg);
        const auto layers = spec.layer_weights();
        out.push_back({std::move(spec), layers[1] == layers[0] + m ? 1 : 2, layers[0], layers[1]});
    };
    if (n == 1) {
        for (int a = 0; a <= max_weight; ++a)
            push(SpecFUplus{a});
        for (int a = 1; a <= max_weight; ++a)
            push(SpecFUminus{a});
    } else {
        push(SpecFU{0, m, 0});
        push(SpecFU{1, m + 1, 1});
        push(SpecFU{1, m - 1, 1});
    }
    return out;
}

struct ZDesc {
    ModuleSpec spec;
    int wdual;
    int len;
    std::vector<int> layers; // socle first
};

std::vector<ZDesc> z_family(int m, Mode mode, int max_weight, int max_length) {
    std::vector<ZDesc> out;
    for (int wdual = 0; wdual <= 1; ++wdual) {
        for (int alpha = 0; alpha <= max_weight; ++alpha) {
            for (int len = 0; len <= max_length; ++len) {
                if (wdual == 1 && len == 0)
                    continue; // Zd(a,0) = Z(a,0) = V(a), avoid the duplicate point
                ModuleSpec spec(wdual ? ModuleSpecKind(SpecZdual{alpha, len}) : ModuleSpecKind(SpecZ{alpha, len}),
                                m, mode);
                auto layers = spec.layer_weights();
                out.push_back({std::move(spec), wdual, len, std::move(layers)});
            }
        }
    }
    return out;
}

struct ComparePlan {
    std::string theorem;
    std::string subject;
    std::function<VerifyPoint()> run;
};

VerifyPoint compare_socle(const std::string& theorem, const std::string& subject, const ModuleSpec& left,
                          const ModuleSpec& right, const TheoremTable& table, ExprEnv env,
                          int t_min, int t_max) {
    VerifyPoint point{theorem, subject, true, ""};
    const GradedModule g = tensor_product(build(left), build(right));
    const SocleReport computed = socle(g);
    std::ostringstream detail;
    for (int t = t_min; t <= std::min(t_max, g.max_degree); ++t) {
        env["t"] = t;
        const IrrepMultiset expected = table.expected_socle(env);
        const IrrepMultiset got = computed.at(t).multiset();
        if (expected != got) {
            point.pass = false;
            detail << "S_" << t << ": expected " << to_string(expected) << ", computed " << to_string(got)
                   << "; ";
        }
    }
    point.detail = detail.str();
    return point;
}

void plan_thm41(std::vector<ComparePlan>& plans, const VerifyOptions& opt, const TableSet& tables) {
    const TheoremTable& table = tables.at("thm-4.1");
    for (int n = opt.n_min; n <= opt.n_max; ++n) {
        const int m = 2 * n - 1;
        const auto family = z_family(m, Mode::heisenberg, opt.max_weight, opt.max_length);
        for (const auto& v1 : family) {
            for (const auto& v2 : family) {
                ExprEnv env{{"m", m},           {"l1", v1.len},        {"l2", v2.len},
                            {"d1", v1.wdual},   {"d2", v2.wdual},      {"a0", v1.layers[0]},
                            {"b0", v2.layers[0]}};
                const std::string subject =
                    "m=" + std::to_string(m) + "  " + v1.spec.render() + " (x) " + v2.spec.render();
                const ModuleSpec left = v1.spec, right = v2.spec;
                const int t_max = v1.len + v2.len;
                plans.push_back({"thm-4.1", subject, [=, &table] {
                                     return compare_socle("thm-4.1", subject, left, right, table, env, 0,
                                                          t_max);
                                 }});
            }
        }
    }
}

void plan_thm43(std::vector<ComparePlan>& plans, const VerifyOptions& opt, const TableSet& tables) {
    const TheoremTable& table = tables.at("thm-4.3");
    for (int n = opt.n_min; n <= opt.n_max; ++n) {
        const int m = 2 * n - 1;
        if (m < 2)
            continue; // a+b = m with a,b >= 1 needs m >= 2
        for (int a = 1; a < m; ++a) {
            const int b = m - a;
            const ModuleSpec left(SpecE{a, b}, m, Mode::heisenberg);
            struct Partner {
                ModuleSpec spec;
                int fam, c, d;
            };
            std::vector<Partner> partners;
            for (int c = a; c < m; ++c)
                partners.push_back({ModuleSpec(SpecE{c, m - c}, m, Mode::heisenberg), 1, c, m - c});
            for (int c = 0; c <= opt.max_weight; ++c)
                partners.push_back({ModuleSpec(SpecZ{c, 1}, m, Mode::heisenberg), 2, c, c + m});
            for (int d = 0; d <= opt.max_weight; ++d)
                partners.push_back({ModuleSpec(SpecZdual{d, 1}, m, Mode::heisenberg), 3, d + m, d});
            for (const auto& partner : partners) {
                ExprEnv env{{"m", m}, {"a", a}, {"b", b}, {"c", partner.c}, {"d", partner.d},
                            {"fam", partner.fam}};
                const std::string subject =
                    "m=" + std::to_string(m) + "  " + left.render() + " (x) " + partner.spec.render();
                const ModuleSpec right = partner.spec;
                plans.push_back({"thm-4.3", subject, [=, &table] {
                                     return compare_socle("thm-4.3", subject, left, right, table, env, 1, 1);
                                 }});
            }
        }
    }
}

void plan_thm45(std::vector<ComparePlan>& plans, const VerifyOptions& opt, const TableSet& tables) {
    const TheoremTable& table = tables.at("thm-4.5");
    for (int n = opt.n_min; n <= opt.n_max; ++n) {
        const int m = 2 * n - 1;
        for (const auto& v1 : faithful_family(n, opt.max_weight)) {
            for (const auto& v2 : z_family(m, Mode::heisenberg, opt.max_weight, opt.max_length)) {
                ExprEnv env{{"m", m},
                            {"ftype", v1.ftype},
                            {"a0", v1.a0},
                            {"a1", v1.a1},
                            {"wdual", v2.wdual},
                            {"b0", v2.layers[0]},
                            {"b1", v2.len >= 1 ? v2.layers[1] : v2.layers[0]},
                            {"l", v2.len}};
                const std::string subject =
                    "m=" + std::to_string(m) + "  " + v1.spec.render() + " (x) " + v2.spec.render();
                const ModuleSpec left = v1.spec, right = v2.spec;
                const int t_max = 2 + v2.len;
                plans.push_back({"thm-4.5", subject, [=, &table] {
                                     return compare_socle("thm-4.5", subject, left, right, table, env, 0,
                                                          t_max);
                                 }});
            }
        }
    }
}

void plan_thm46(std::vector<ComparePlan>& plans, const VerifyOptions& opt, const TableSet& tables) {
    const TheoremTable& table = tables.at("thm-4.6");
    for (int n = opt.n_min; n <= opt.n_max; ++n) {
        const int m = 2 * n - 1;
        const auto family = faithful_family(n, opt.max_weight);
        for (const auto& v1 : family) {
            for (const auto& v2 : family) {
                ExprEnv env{{"m", m},      {"ftype1", v1.ftype}, {"a0", v1.a0}, {"a1", v1.a1},
                            {"ftype2", v2.ftype}, {"b0", v2.a0}, {"b1", v2.a1}};
                const std::string subject =
                    "m=" + std::to_string(m) + "  " + v1.spec.render() + " (x) " + v2.spec.render();
                const ModuleSpec left = v1.spec, right = v2.spec;
                plans.push_back({"thm-4.6", subject, [=, &table] {
                                     return compare_socle("thm-4.6", subject, left, right, table, env, 0, 4);
                                 }});
            }
        }
    }
}

void plan_sec5(std::vector<ComparePlan>& plans, const VerifyOptions& opt, const TableSet& tables) {
    const TheoremTable& table = tables.at("sec-5");
    for (int n = opt.n_min; n <= opt.n_max; ++n) {
        const int m = 2 * n - 1;
        const auto faithful = faithful_family(n, opt.max_weight);
        const auto zmods = z_family(m, Mode::heisenberg, opt.max_weight, opt.max_length);

        struct Side {
            ModuleSpec spec;
            ExprEnv vars; // prefixed bindings
        };
        auto faithful_side = [&](const FaithfulDesc& d, const std::string& prefix) {
            ExprEnv vars{{prefix + "faith", 1},     {prefix + "ftype", d.ftype}, {prefix + "a0", d.a0},
                         {prefix + "a1", d.a1},     {prefix + "wdual", 0},       {prefix + "b0", 0},
                         {prefix + "b1", 0},        {prefix + "btop", 0},        {prefix + "blm1", 0},
                         {prefix + "l", 0}};
            return Side{d.spec, std::move(vars)};
        };
        auto z_side = [&](const ZDesc& d, const std::string& prefix) {
            const auto& layers = d.layers;
            ExprEnv vars{{prefix + "faith", 0},
                         {prefix + "ftype", 0},
                         {prefix + "a0", 0},
                         {prefix + "a1", 0},
                         {prefix + "wdual", d.wdual},
                         {prefix + "b0", layers[0]},
                         {prefix + "b1", d.len >= 1 ? layers[1] : layers[0]},
                         {prefix + "btop", layers[static_cast<std::size_t>(d.len)]},
                         {prefix + "blm1", d.len >= 1 ? layers[static_cast<std::size_t>(d.len) - 1]
                                                      : layers[static_cast<std::size_t>(d.len)]},
                         {prefix + "l", d.len}};
            return Side{d.spec, std::move(vars)};
        };

        std::vector<std::pair<Side, Side>> pairs;
        for (const auto& x : faithful)
            for (const auto& y : faithful)
                pairs.emplace_back(faithful_side(x, "x"), faithful_side(y, "y"));
        for (const auto& x : faithful)
            for (const auto& y : zmods)
                pairs.emplace_back(faithful_side(x, "x"), z_side(y, "y"));
        for (const auto& x : zmods)
            for (const auto& y : faithful)
                pairs.emplace_back(z_side(x, "x"), faithful_side(y, "y"));

        for (const auto& [xs, ys] : pairs) {
            ExprEnv env{{"m", m}};
            env.insert(xs.vars.begin(), xs.vars.end());
            env.insert(ys.vars.begin(), ys.vars.end());
            env["same"] = (xs.spec.render() == ys.spec.render()) ? 1 : 0;
            const std::string subject =
                "m=" + std::to_string(m) + "  Hom(" + xs.spec.render() + ", " + ys.spec.render() + ")";
            const ModuleSpec left = xs.spec, right = ys.spec;
            plans.push_back({"sec-5", subject, [=, &table] {
                                 VerifyPoint point{"sec-5", subject, true, ""};
                                 const HomReport hom = hom_space(build(left), build(right));
                                 const long long expected = table.expected_dim(env);
                                 if (hom.dimension != expected) {
                                     point.pass = false;
                                     std::ostringstream detail;
                                     detail << "expected dim " << expected << ", computed " << hom.dimension;
                                     point.detail = detail.str();
                                 }
                                 return point;
                             }});
        }
    }
}

} // namespace

VerifyReport verify_theorems(const std::vector<std::string>& scope, const VerifyOptions& options,
                             const TableSet& tables) {
    std::vector<ComparePlan> plans;
    for (const auto& id : scope) {
        if (id == "thm-4.1")
            plan_thm41(plans, options, tables);
        else if (id == "thm-4.3")
            plan_thm43(plans, options, tables);
        else if (id == "thm-4.5")
            plan_thm45(plans, options, tables);
        else if (id == "thm-4.6")
            plan_thm46(plans, options, tables);
        else if (id == "sec-5")
            plan_sec5(plans, options, tables);
        else
            throw std::invalid_argument("unknown verification scope: " + id);
    }

    VerifyReport report;
    report.points.resize(plans.size());
    run_indexed(plans.size(), options.jobs,
                [&](std::size_t i) { report.points[i] = plans[i].run(); });
    return report;
}

bool verify_self_test(const TableSet& tables) {
    TableSet mutated = tables;
    mutated.at("thm-4.1").perturb();
    VerifyOptions opt;
    opt.n_min = opt.n_max = 1;
    opt.max_weight = 1;
    opt.max_length = 1;
    const VerifyReport report = verify_theorems({"thm-4.1"}, opt, mutated);
    return report.failures() > 0;
}

} // namespace unirep
