#include "unirep/sweep.hpp"

#include <sstream>

#include "unirep/parallel.hpp"
#include "unirep/uniserial.hpp"

namespace unirep {

int SweepReport::discrepancies() const {
    int n = 0;
    for (const auto& p : points)
        if (!p.s1_ok || !p.s2_ok)
            ++n;
    return n;
}

int SweepReport::asymmetric_points() const {
    int n = 0;
    for (const auto& p : points)
        if (!p.symmetric)
            ++n;
    return n;
}

namespace {

bool valid_e(int m, int a, int b) {
    return a >= 0 && b >= 0 && (a + b - m) % 2 == 0 && std::abs(a - b) <= m && m <= a + b;
}

// Predicted S_1 from the case list; labels every case the point satisfies.
// Overlapping cases agree on the prediction (checked).
void classify(SweepPoint& p) {
    const int m = p.m, a = p.a, b = p.b, c = p.c, d = p.d;
    std::vector<std::pair<std::string, int>> hits; // label -> predicted weight
    if (a == 0 && b == m)
        hits.push_back({"1", d});
    if (a > 0 && a + b == m && c + d == m && d - a == b - c && d - a >= 0)
        hits.push_back({"2.1", d - a});
    if (a > 0 && b - a == m && d - c == m)
        hits.push_back({"2.2", d + a});
    if (a > 0 && b - a == m && c - d == m && d - a == c - b && d - a >= 0)
        hits.push_back({"2.3", d - a});
    if (c == b && d == a)
        hits.push_back({"3", 0});

    if (hits.empty()) {
        p.cases = "none";
        return;
    }
    std::ostringstream labels;
    for (std::size_t i = 0; i < hits.size(); ++i) {
        if (i)
            labels << ",";
        labels << hits[i].first;
        if (hits[i].second != hits[0].second)
            throw std::logic_error("conflicting case predictions at a sweep point");
    }
    p.cases = labels.str();
    p.predicted_s1[hits[0].second] = 1;
}

// Hypothesis match for the proven statements, checked in both orientations.
bool covered_by_length2_theorem(int m, int a, int b, int c, int d) {
    if (a + b != m || a < 1 || b < 1)
        return false;
    if (c + d == m && a <= c && c < m)
        return true; // partner of the same shape
    if (d == c + m || c == d + m)
        return true; // partner of type Z(c,1) or its dual
    return false;
}

void backing(SweepPoint& p) {
    const bool left_z = (p.b - p.a == p.m) || (p.a - p.b == p.m);
    const bool right_z = (p.d - p.c == p.m) || (p.c - p.d == p.m);
    if (left_z && right_z) {
        p.s1_status = "theorem"; // type-Z pairs are settled, S_2 = 0 included
        p.s2_status = "theorem";
        return;
    }
    if (covered_by_length2_theorem(p.m, p.a, p.b, p.c, p.d) ||
        covered_by_length2_theorem(p.m, p.c, p.d, p.a, p.b)) {
        p.s1_status = "theorem";
        p.s2_status = "empirical"; // only S_1 is stated there
        return;
    }
    p.s1_status = "empirical";
    p.s2_status = "empirical";
}

std::string render_witness(const GradedModule& g, const DegreeInvariants& inv) {
    std::ostringstream out;
    for (const auto& part : inv.parts) {
        for (const auto& hw : part.highest_weight_basis) {
            out << "  weight " << part.mu << " kernel vector: ";
            bool first = true;
            for (const auto& [idx, coeff] : hw) {
                const int pp = idx / g.right.dim;
                const int q = idx % g.right.dim;
                const int il = g.left.layer_of(pp);
                const int ir = g.right.layer_of(q);
                if (!first)
                    out << " + ";
                first = false;
                out << "(" << coeff.str() << ")*v_" << (pp - g.left.layer_offset(il)) << "^"
                    << g.left.layers[static_cast<std::size_t>(il)] << "(x)v_" << (q - g.right.layer_offset(ir))
                    << "^" << g.right.layers[static_cast<std::size_t>(ir)];
            }
            out << "\n";
        }
    }
    return out.str();
}

} // namespace

SweepReport sweep_conjecture(const SweepOptions& options) {
    std::vector<SweepPoint> grid;
    for (int m : options.m_list) {
        std::vector<std::pair<int, int>> specs;
        for (int a = 0; a <= options.max_weight; ++a)
            for (int b = 0; b <= options.max_weight; ++b)
                if (valid_e(m, a, b) && (options.max_pair_sum < 0 || a + b <= options.max_pair_sum))
                    specs.emplace_back(a, b);
        for (const auto& [a, b] : specs)
            for (const auto& [c, d] : specs)
                if (a < c || (a == c && b <= d)) {
                    SweepPoint p;
                    p.m = m;
                    p.a = a;
                    p.b = b;
                    p.c = c;
                    p.d = d;
                    grid.push_back(p);
                }
    }

    SweepReport report;
    report.points = std::move(grid);
    run_indexed(report.points.size(), options.jobs, [&](std::size_t i) {
        SweepPoint& p = report.points[i];
        classify(p);
        backing(p);
        const ModuleSpec left(SpecE{p.a, p.b}, p.m, Mode::abelian);
        const ModuleSpec right(SpecE{p.c, p.d}, p.m, Mode::abelian);
        const Representation lrep = build(left), rrep = build(right);
        const GradedModule g = tensor_product(lrep, rrep);
        const DegreeInvariants s1 = graded_invariants(g, 1);
        const DegreeInvariants s2 = graded_invariants(g, 2);
        p.s1 = s1.multiset();
        p.s2 = s2.multiset();
        p.s1_ok = (p.s1 == p.predicted_s1);
        p.s2_ok = p.s2.empty();
        if (!p.s1_ok)
            p.witness += "S_1 kernel:\n" + render_witness(g, s1);
        if (!p.s2_ok)
            p.witness += "S_2 kernel:\n" + render_witness(g, s2);

        const GradedModule swapped = tensor_product(rrep, lrep);
        p.symmetric = (graded_invariants(swapped, 1).multiset() == p.s1) &&
                      (graded_invariants(swapped, 2).multiset() == p.s2);
    });
    return report;
}

} // namespace unirep
