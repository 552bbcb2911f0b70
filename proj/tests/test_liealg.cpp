#include <doctest.h>

#include "unirep/liealg.hpp"
#include "unirep/representation.hpp"
#include "unirep/uniserial.hpp"

using namespace unirep;

TEST_CASE("sl(2) irreducible action matrices") {
    const SparseMatrix e1 = sl2_irrep_action(1, GeneratorId::e());
    CHECK(e1.at(0, 1) == Scalar(1));
    CHECK(e1.at(0, 0).is_zero());
    CHECK(e1.at(1, 0).is_zero());

    const SparseMatrix e2 = sl2_irrep_action(2, GeneratorId::e());
    CHECK(e2.at(0, 1) == sqrt_rational(Rational(2)));
    CHECK(e2.at(1, 2) == sqrt_rational(Rational(2)));
    CHECK(e2.at(0, 2).is_zero());

    for (GeneratorId g : {GeneratorId::e(), GeneratorId::h(), GeneratorId::f()})
        CHECK(sl2_irrep_action(0, g).is_zero());

    CHECK_THROWS_AS(sl2_irrep_action(-1, GeneratorId::e()), std::invalid_argument);
    CHECK_THROWS_AS(sl2_irrep_action(2, GeneratorId::nil(0)), std::invalid_argument);
}

TEST_CASE("sl(2) commutation relations as matrices") {
    for (int a = 0; a <= 20; ++a) {
        const SparseMatrix e = sl2_irrep_action(a, GeneratorId::e());
        const SparseMatrix h = sl2_irrep_action(a, GeneratorId::h());
        const SparseMatrix f = sl2_irrep_action(a, GeneratorId::f());
        CHECK(e * f - f * e == h);
        CHECK(h * e - e * h == e.scaled(Scalar(2)));
        CHECK(h * f - f * h == f.scaled(Scalar(-2)));
    }
}

TEST_CASE("structure constants") {
    const LieStructure h1(1, Mode::heisenberg);
    const auto bracket01 = h1.bracket(GeneratorId::nil(0), GeneratorId::nil(1));
    REQUIRE(bracket01.size() == 1);
    CHECK(bracket01[0].gen == GeneratorId::z());
    CHECK(bracket01[0].coeff == sqrt_rational(Rational(1, 2)));

    const LieStructure h2(3, Mode::heisenberg);
    const auto hn1 = h2.bracket(GeneratorId::h(), GeneratorId::nil(1));
    REQUIRE(hn1.size() == 1);
    CHECK(hn1[0].gen == GeneratorId::nil(1));
    CHECK(hn1[0].coeff == Scalar(1)); // H eigenvalue m-2s = 1

    for (GeneratorId g : h2.generators())
        CHECK(h2.bracket(GeneratorId::z(), g).empty());

    CHECK_THROWS_AS(LieStructure(2, Mode::heisenberg), std::invalid_argument);
    CHECK_THROWS_AS(LieStructure(0, Mode::abelian), std::invalid_argument);
    CHECK(LieStructure(2, Mode::abelian).generators().size() == 6);
}

namespace {

// brackets realized on a faithful carrier must satisfy antisymmetry/Jacobi;
// checked abstractly by expanding the table twice
SparseVec as_coordinates(const LieStructure& s, const std::vector<BracketTerm>& terms) {
    const auto& gens = s.generators();
    SparseVec out;
    for (const auto& t : terms) {
        for (std::size_t i = 0; i < gens.size(); ++i)
            if (gens[i] == t.gen) {
                auto it = out.find(static_cast<int>(i));
                if (it == out.end())
                    out.emplace(static_cast<int>(i), t.coeff);
                else {
                    it->second += t.coeff;
                    if (it->second.is_zero())
                        out.erase(it);
                }
            }
    }
    return out;
}

SparseVec bracket_coords(const LieStructure& s, GeneratorId x, GeneratorId y) {
    return as_coordinates(s, s.bracket(x, y));
}

SparseVec bracket_with_combination(const LieStructure& s, const SparseVec& x_coords, GeneratorId y) {
    const auto& gens = s.generators();
    SparseVec out;
    for (const auto& [i, c] : x_coords) {
        const SparseVec inner = bracket_coords(s, gens[static_cast<std::size_t>(i)], y);
        vec_add_scaled(out, c, inner);
    }
    return out;
}

} // namespace

TEST_CASE("antisymmetry and jacobi for all structures up to m = 9") {
    for (int m = 1; m <= 9; ++m) {
        for (Mode mode : {Mode::abelian, Mode::heisenberg}) {
            if (mode == Mode::heisenberg && m % 2 == 0)
                continue;
            const LieStructure s(m, mode);
            const auto& gens = s.generators();
            for (GeneratorId x : gens)
                for (GeneratorId y : gens) {
                    SparseVec anti = bracket_coords(s, x, y);
                    vec_add_scaled(anti, Scalar(1), bracket_coords(s, y, x));
                    CHECK(vec_is_zero(anti));
                }
            for (GeneratorId x : gens)
                for (GeneratorId y : gens)
                    for (GeneratorId z : gens) {
                        // [[x,y],z] + [[y,z],x] + [[z,x],y] = 0
                        SparseVec total = bracket_with_combination(s, bracket_coords(s, x, y), z);
                        vec_add_scaled(total, Scalar(1), bracket_with_combination(s, bracket_coords(s, y, z), x));
                        vec_add_scaled(total, Scalar(1), bracket_with_combination(s, bracket_coords(s, z, x), y));
                        CHECK(vec_is_zero(total));
                    }
        }
    }
}

TEST_CASE("nil generators transform as the standard basis of V(m)") {
    for (int m : {1, 3, 5}) {
        const LieStructure s(m, Mode::heisenberg);
        for (GeneratorId x : {GeneratorId::e(), GeneratorId::h(), GeneratorId::f()}) {
            const SparseMatrix action = sl2_irrep_action(m, x);
            for (int col = 0; col <= m; ++col) {
                const auto terms = s.bracket(x, GeneratorId::nil(col));
                for (const auto& t : terms)
                    CHECK(t.coeff == action.at(t.gen.index, col));
                std::size_t expected_nonzero = 0;
                for (int row = 0; row <= m; ++row)
                    if (!action.at(row, col).is_zero())
                        ++expected_nonzero;
                CHECK(terms.size() == expected_nonzero);
            }
        }
    }
}

TEST_CASE("module axiom checker accepts constructors and flags corruption") {
    const ModuleSpec e12(SpecE{1, 2}, 3, Mode::abelian);
    Representation rep = build(e12);
    CHECK(check_module_axioms(rep).ok());

    const ModuleSpec fu0(SpecFUplus{0}, 1, Mode::heisenberg);
    Representation fu = build(fu0);
    CHECK(check_module_axioms(fu).ok());

    // perturb one nilradical entry by +1
    Representation bad = rep;
    bad.actions.at(GeneratorId::nil(0)).add(0, 2, Scalar(1));
    const AxiomReport report = check_module_axioms(bad);
    CHECK(!report.ok());
    CHECK(report.violations.size() >= 1);
}
