#include <doctest.h>

#include "unirep/clebsch.hpp"
#include "unirep/tensorsocle.hpp"
#include "unirep/uniserial.hpp"

using namespace unirep;

namespace {

Representation rep_of(const char* text, int m, Mode mode) {
    return build(ModuleSpec::parse(text, m, mode));
}

IrrepMultiset ms(std::initializer_list<std::pair<int, int>> items) {
    IrrepMultiset out;
    for (const auto& [mu, mult] : items)
        out[mu] = mult;
    return out;
}

} // namespace

TEST_CASE("tensor products carry the Leibniz action") {
    const GradedModule g =
        tensor_product(rep_of("E(1,2)", 3, Mode::abelian), rep_of("E(0,3)", 3, Mode::abelian));
    CHECK(g.total.dim == (2 + 3) * (1 + 4)); // dimension product of the factors
    CHECK(check_module_axioms(g.total).ok());

    const Representation fu = rep_of("FU+(0)", 1, Mode::heisenberg);
    const GradedModule g2 = tensor_product(fu, fu);
    CHECK(check_module_axioms(g2.total).ok());
    for (const auto& [i, j] : g2.grade) {
        CHECK((0 <= i && i <= 2));
        CHECK((0 <= j && j <= 2));
    }
    CHECK(g2.max_degree == 4);

    CHECK_THROWS_AS(tensor_product(rep_of("V(1)", 1, Mode::abelian), rep_of("V(1)", 3, Mode::abelian)),
                    std::invalid_argument);
}

TEST_CASE("graded invariant examples") {
    const GradedModule z11 =
        tensor_product(rep_of("Z(0,1)", 1, Mode::abelian), rep_of("Z(0,1)", 1, Mode::abelian));
    CHECK(graded_invariants(z11, 1).multiset() == ms({{1, 1}}));

    const GradedModule e_vs_z =
        tensor_product(rep_of("E(1,2)", 3, Mode::abelian), rep_of("E(0,3)", 3, Mode::abelian));
    CHECK(graded_invariants(e_vs_z, 1).multiset() == ms({{2, 1}}));

    const Representation fu = rep_of("FU+(0)", 1, Mode::heisenberg);
    const GradedModule fufu = tensor_product(fu, fu);
    CHECK(graded_invariants(fufu, 2).multiset() == ms({{0, 1}}));

    const GradedModule e_dual =
        tensor_product(rep_of("E(1,2)", 3, Mode::abelian), rep_of("E(2,1)", 3, Mode::abelian));
    CHECK(graded_invariants(e_dual, 1).multiset() == ms({{0, 1}}));

    CHECK_THROWS_AS(graded_invariants(e_dual, 3), std::invalid_argument);
    CHECK_THROWS_AS(graded_invariants(e_dual, -1), std::invalid_argument);
}

TEST_CASE("socle reports") {
    const GradedModule z11 =
        tensor_product(rep_of("Z(1,1)", 1, Mode::abelian), rep_of("Z(1,1)", 1, Mode::abelian));
    const SocleReport r = socle(z11);
    CHECK(r.at(0).multiset() == ms({{2, 1}, {0, 1}}));
    CHECK(r.at(1).multiset() == ms({{3, 1}}));
    CHECK(r.at(2).multiset().empty());

    const Representation fu = rep_of("FU+(0)", 1, Mode::heisenberg);
    const SocleReport rf = socle(tensor_product(fu, fu));
    CHECK(rf.at(0).multiset() == ms({{0, 1}}));
    CHECK(rf.at(1).multiset() == ms({{1, 1}}));
    CHECK(rf.at(2).multiset() == ms({{0, 1}}));
    CHECK(rf.at(3).multiset().empty());
    CHECK(rf.at(4).multiset().empty());

    const SocleReport rv =
        socle(tensor_product(rep_of("V(2)", 5, Mode::abelian), rep_of("V(3)", 5, Mode::abelian)));
    CHECK(rv.at(0).multiset() == ms({{5, 1}, {3, 1}, {1, 1}}));
}

TEST_CASE("socle equals the full joint radical kernel") {
    const auto check_against_global_kernel = [](const GradedModule& g) {
        const SocleReport report = socle(g);
        std::vector<SparseVec> rows;
        for (GeneratorId gen : g.total.structure.generators()) {
            if (!gen.is_radical())
                continue;
            const SparseMatrix& action = g.total.action(gen);
            for (int i = 0; i < action.rows(); ++i)
                if (!action.row(i).empty())
                    rows.push_back(action.row(i));
        }
        const Subspace global = kernel_of_rows(rows, g.total.dim);
        CHECK(report.socle_dimension() == global.dim());
        for (const auto& degree : report.degrees)
            for (const auto& v : degree.basis) {
                for (GeneratorId gen : g.total.structure.generators())
                    if (gen.is_radical())
                        CHECK(vec_is_zero(g.total.action(gen).apply(v)));
            }
    };
    check_against_global_kernel(
        tensor_product(rep_of("Z(1,1)", 1, Mode::abelian), rep_of("Zd(0,2)", 1, Mode::abelian)));
    check_against_global_kernel(
        tensor_product(rep_of("FU+(1)", 1, Mode::heisenberg), rep_of("FU-(1)", 1, Mode::heisenberg)));
    check_against_global_kernel(
        tensor_product(rep_of("E3(2)", 3, Mode::abelian), rep_of("E(1,2)", 3, Mode::abelian)));
}

TEST_CASE("isotypic dimensions add up to the socle dimension") {
    const std::vector<std::pair<const char*, const char*>> pairs = {
        {"Z(0,2)", "Zd(1,1)"}, {"FU+(2)", "Z(0,1)"}, {"E(1,2)", "E3(2)"}};
    for (const auto& [lt, rt] : pairs) {
        const Mode mode = lt[0] == 'F' ? Mode::heisenberg : Mode::abelian;
        const int m = (std::string(lt).find("FU") == 0 && mode == Mode::heisenberg) ? 1 : 3;
        const GradedModule g = tensor_product(rep_of(lt, m, mode), rep_of(rt, m, mode));
        const SocleReport report = socle(g);
        int from_parts = 0;
        for (const auto& degree : report.degrees)
            for (const auto& part : degree.parts)
                from_parts += part.mult * (part.mu + 1);
        CHECK(from_parts == report.socle_dimension());
    }
}

TEST_CASE("weight multiplicities are conserved inside each stratum") {
    const GradedModule g =
        tensor_product(rep_of("FU(0,3,0)", 3, Mode::heisenberg), rep_of("Z(0,1)", 3, Mode::heisenberg));
    const SocleReport report = socle(g);
    for (const auto& degree : report.degrees) {
        std::map<int, int> by_weight;
        for (const auto& v : degree.basis)
            ++by_weight[g.total.weights[static_cast<std::size_t>(v.begin()->first)]];
        for (const auto& [w, dim] : by_weight) {
            int expected = 0;
            for (const auto& part : degree.parts)
                if (part.mu >= std::abs(w) && (part.mu - w) % 2 == 0)
                    expected += part.mult;
            CHECK(dim == expected);
        }
    }
}

TEST_CASE("sl(2) decomposition of handed-in spaces") {
    const GradedModule g =
        tensor_product(rep_of("V(1)", 1, Mode::abelian), rep_of("V(1)", 1, Mode::abelian));
    std::vector<SparseVec> full;
    for (int idx = 0; idx < 4; ++idx)
        full.push_back(SparseVec{{idx, Scalar(1)}});
    CHECK(sl2_decompose(g.total, full) == ms({{2, 1}, {0, 1}}));
    CHECK(sl2_decompose(g.total, {}).empty());
    CHECK(sl2_decompose(g.total, {SparseVec{{0, Scalar(1)}}}) == ms({{2, 1}}));
    // mixing weights is rejected
    CHECK_THROWS_AS(sl2_decompose(g.total, {SparseVec{{0, Scalar(1)}, {1, Scalar(1)}}}),
                    std::invalid_argument);
}

TEST_CASE("highest-weight vectors of strata have full grading support") {
    // faithful (x) faithful at n = 1, small socle weights
    for (int a0 = 0; a0 <= 2; ++a0) {
        const Representation v1 = rep_of(("FU+(" + std::to_string(a0) + ")").c_str(), 1, Mode::heisenberg);
        const Representation v2 = rep_of("FU+(1)", 1, Mode::heisenberg);
        const GradedModule g = tensor_product(v1, v2);
        const SocleReport report = socle(g);
        for (int t = 1; t <= std::min(2, g.max_degree); ++t) {
            for (const auto& part : report.at(t).parts) {
                for (const auto& hw : part.highest_weight_basis) {
                    std::set<std::pair<int, int>> support;
                    for (const auto& [idx, c] : hw)
                        support.insert(g.grade[static_cast<std::size_t>(idx)]);
                    // every block (i, t-i) that exists must appear
                    for (int i = 0; i <= t; ++i) {
                        const int j = t - i;
                        if (i < v1.layer_count() && j < v2.layer_count())
                            CHECK(support.count({i, j}) == 1);
                    }
                }
            }
        }
    }
}

TEST_CASE("center image of embedded highest-weight vectors tracks the layer index") {
    const Representation v1 = rep_of("FU+(1)", 1, Mode::heisenberg);
    const Representation v2 = rep_of("FU-(1)", 1, Mode::heisenberg);
    const GradedModule g = tensor_product(v1, v2);
    const SparseMatrix& z = g.total.action(GeneratorId::z());
    for (int i0 = 0; i0 < v1.layer_count(); ++i0) {
        for (int j0 = 0; j0 < v2.layer_count(); ++j0) {
            const int a = v1.layers[static_cast<std::size_t>(i0)];
            const int b = v2.layers[static_cast<std::size_t>(j0)];
            for (int mu = a + b; mu >= std::abs(a - b); mu -= 2) {
                // embed v_0^{a,b,mu} into the (i0,j0) block
                SparseVec u;
                for (const auto& [local, c] : coupled_vector(a, b, mu, 0)) {
                    const int kl = local / (b + 1), kr = local % (b + 1);
                    u.emplace(g.index(v1.layer_offset(i0) + kl, v2.layer_offset(j0) + kr), c);
                }
                const SparseVec zu = z.apply(u);
                bool in_block_below = false;
                for (const auto& [idx, c] : zu) {
                    (void)c;
                    if (g.grade[static_cast<std::size_t>(idx)] == std::make_pair(i0 - 2, j0))
                        in_block_below = true;
                }
                CHECK(in_block_below == (i0 == 2));
            }
        }
    }
}

TEST_CASE("parallel block elimination is deterministic") {
    const GradedModule g =
        tensor_product(rep_of("FU(1,4,1)", 3, Mode::heisenberg), rep_of("Z(1,2)", 3, Mode::heisenberg));
    const SocleReport serial = socle(g, 1);
    const SocleReport parallel = socle(g, 4);
    REQUIRE(serial.degrees.size() == parallel.degrees.size());
    for (std::size_t t = 0; t < serial.degrees.size(); ++t) {
        CHECK(serial.degrees[t].multiset() == parallel.degrees[t].multiset());
        CHECK(serial.degrees[t].basis == parallel.degrees[t].basis);
    }
}
