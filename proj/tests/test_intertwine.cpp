#include <doctest.h>

#include "unirep/intertwine.hpp"
#include "unirep/uniserial.hpp"

using namespace unirep;

namespace {

Representation rep_of(const char* text, int m, Mode mode) {
    return build(ModuleSpec::parse(text, m, mode));
}

} // namespace

TEST_CASE("schur: irreducibles") {
    for (int a = 0; a <= 3; ++a)
        for (int b = 0; b <= 3; ++b) {
            const HomReport hom = hom_space(rep_of(("V(" + std::to_string(a) + ")").c_str(), 1, Mode::abelian),
                                            rep_of(("V(" + std::to_string(b) + ")").c_str(), 1, Mode::abelian));
            CHECK(hom.dimension == (a == b ? 1 : 0));
        }
}

TEST_CASE("standard faithful endomorphisms are two-dimensional with the expected ranks") {
    for (const char* text : {"FU+(0)", "FU+(2)", "FU-(1)"}) {
        const Representation v = rep_of(text, 1, Mode::heisenberg);
        const HomReport hom = hom_space(v, v);
        REQUIRE(hom.dimension == 2);
        const int a0 = v.layers[0];
        // degree-0 element: composition through the socle, rank a0+1; degree-2: invertible
        for (std::size_t k = 0; k < hom.basis.size(); ++k) {
            if (hom.degree[k] == 0)
                CHECK(rank(hom.basis[k]) == a0 + 1);
            else {
                CHECK(hom.degree[k] == 2);
                CHECK(rank(hom.basis[k]) == v.dim);
            }
        }
        // identity lies in the span
        SparseVec id_flat;
        for (int i = 0; i < v.dim; ++i)
            id_flat.emplace(i * v.dim + i, Scalar(1));
        std::vector<SparseVec> flats;
        for (const auto& t : hom.basis) {
            SparseVec flat;
            for (int i = 0; i < t.rows(); ++i)
                for (const auto& [j, val] : t.row(i))
                    flat.emplace(i * v.dim + j, val);
            flats.push_back(std::move(flat));
        }
        CHECK(Subspace::from_vectors(v.dim * v.dim, flats).contains(id_flat));
    }
}

TEST_CASE("n=3 faithful pair with no intertwiners") {
    const HomReport hom = hom_space(rep_of("FU(1,4,1)", 5, Mode::heisenberg),
                                    rep_of("FU(0,5,0)", 5, Mode::heisenberg));
    CHECK(hom.dimension == 0);
}

TEST_CASE("faithful into type Z through the degree-1 stratum") {
    // n=1, a0 = b1: FU-(a0) -> Z(b0, l)
    const HomReport hom =
        hom_space(rep_of("FU-(2)", 1, Mode::heisenberg), rep_of("Z(1,2)", 1, Mode::heisenberg));
    CHECK(hom.dimension == 1);
    CHECK(hom.degree == std::vector<int>{1});

    const HomReport zero =
        hom_space(rep_of("FU-(3)", 1, Mode::heisenberg), rep_of("Z(1,2)", 1, Mode::heisenberg));
    CHECK(zero.dimension == 0);
}

TEST_CASE("hom dimension equals the V(0) multiplicity of the dual tensor socle") {
    const std::vector<std::pair<const char*, const char*>> pairs = {
        {"FU+(0)", "FU+(0)"}, {"FU+(1)", "FU-(1)"}, {"FU-(1)", "Z(0,2)"}, {"Z(1,1)", "Z(1,1)"}};
    for (const auto& [lt, rt] : pairs) {
        const Representation v = rep_of(lt, 1, Mode::heisenberg);
        const Representation w = rep_of(rt, 1, Mode::heisenberg);
        const HomReport hom = hom_space(v, w);
        const SocleReport soc_report = socle(tensor_product(dual_rep(v), w));
        int v0_mult = 0;
        for (const auto& degree : soc_report.degrees) {
            const auto multiset = degree.multiset();
            auto it = multiset.find(0);
            if (it != multiset.end())
                v0_mult += it->second;
        }
        CHECK(hom.dimension == v0_mult);
    }
}

TEST_CASE("every basis element intertwines (re-verified on independent pairs)") {
    const Representation v = rep_of("Z(0,2)", 1, Mode::abelian);
    const Representation w = rep_of("Z(0,1)", 1, Mode::abelian);
    const HomReport hom = hom_space(v, w);
    for (const auto& t : hom.basis)
        for (GeneratorId gen : v.structure.generators())
            CHECK(t * v.action(gen) == w.action(gen) * t);
    CHECK_THROWS_AS(hom_space(rep_of("V(1)", 1, Mode::abelian), rep_of("V(1)", 3, Mode::abelian)),
                    std::invalid_argument);
}
