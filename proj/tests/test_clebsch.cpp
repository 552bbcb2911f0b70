#include <doctest.h>

#include "unirep/clebsch.hpp"
#include "unirep/tensorsocle.hpp"
#include "unirep/uniserial.hpp"

using namespace unirep;

namespace {
HalfInt half(int doubled) { return HalfInt::from_doubled(doubled); }
} // namespace

TEST_CASE("triangle condition") {
    CHECK(triangle_ok(half(1), half(1), half(2)));      // (1/2, 1/2, 1)
    CHECK(!triangle_ok(half(2), half(0), half(6)));     // (1, 0, 3)
    CHECK(!triangle_ok(half(1), half(1), half(1)));     // sum not an integer
    CHECK_THROWS_AS(triangle_ok(half(-1), half(1), half(1)), std::invalid_argument);
}

TEST_CASE("triangle coefficient") {
    CHECK(delta_coefficient(half(0), half(0), half(0)) == Scalar(1));
    CHECK(delta_coefficient(half(2), half(2), half(6)).is_zero());
    CHECK(delta_coefficient(half(1), half(1), half(2)) == sqrt_rational(Rational(1, 6)));
}

TEST_CASE("clebsch-gordan values") {
    // the coefficient behind the Heisenberg bracket normalization at m=1
    CHECK(cg(half(1), half(1), half(1), half(-1), half(0), half(0)) == sqrt_rational(Rational(1, 2)));
    CHECK(cg(half(2), half(2), half(2), half(2), half(2), half(2)).is_zero()); // m1+m2 != m3
    CHECK(cg(half(2), half(2), half(2), half(2), half(4), half(4)) == Scalar(1));
    // parity mismatch gives zero, not an error
    CHECK(cg(half(2), half(1), half(2), half(1), half(4), half(2)).is_zero());
    // negative j is out of range, silently zero
    CHECK(cg(half(-2), half(0), half(2), half(0), half(2), half(0)).is_zero());
}

TEST_CASE("reflection symmetry under factor swap") {
    for (int dj1 = 0; dj1 <= 8; ++dj1)
        for (int dj2 = 0; dj2 <= 8; ++dj2)
            for (int dj3 = 0; dj3 <= 8; ++dj3) {
                if ((dj1 + dj2 + dj3) % 2 != 0)
                    continue;
                for (int dm1 = -dj1; dm1 <= dj1; dm1 += 2)
                    for (int dm2 = -dj2; dm2 <= dj2; dm2 += 2) {
                        const int dm3 = dm1 + dm2;
                        const Scalar lhs = cg_doubled(dj1, dm1, dj2, dm2, dj3, dm3);
                        Scalar rhs = cg_doubled(dj2, dm2, dj1, dm1, dj3, dm3);
                        if (((dj1 + dj2 - dj3) / 2) % 2 != 0)
                            rhs = -rhs;
                        CHECK(lhs == rhs);
                    }
            }
}

TEST_CASE("second symmetry (exchange with the target slot)") {
    for (int dj1 = 0; dj1 <= 6; ++dj1)
        for (int dj2 = 0; dj2 <= 6; ++dj2)
            for (int dj3 = 0; dj3 <= 6; ++dj3) {
                if ((dj1 + dj2 + dj3) % 2 != 0)
                    continue;
                for (int dm1 = -dj1; dm1 <= dj1; dm1 += 2)
                    for (int dm2 = -dj2; dm2 <= dj2; dm2 += 2) {
                        const int dm3 = dm1 + dm2;
                        if (std::abs(dm3) > dj3)
                            continue;
                        const Scalar lhs = cg_doubled(dj1, dm1, dj2, dm2, dj3, dm3);
                        Scalar rhs = sqrt_rational(Rational(dj3 + 1, dj2 + 1)) *
                                     cg_doubled(dj1, dm1, dj3, -dm3, dj2, -dm2);
                        if (((dj1 - dm1) / 2) % 2 != 0)
                            rhs = -rhs;
                        CHECK(lhs == rhs);
                    }
            }
}

TEST_CASE("closed forms match the general sum") {
    for (int a = 0; a <= 5; ++a)
        for (int b = 0; b <= 5; ++b)
            for (int i = 0; i <= a; ++i)
                for (int j = 0; j <= b; ++j) {
                    CHECK(cg_extreme_sum(a, b, i, j) ==
                          cg_doubled(a, a - 2 * i, b, b - 2 * j, a + b, a + b - 2 * i - 2 * j));
                    if (a >= b)
                        CHECK(cg_extreme_diff_left(a, b, i, j) ==
                              cg_doubled(a, a - 2 * i, b, 2 * j - b, a - b, a - b - 2 * i + 2 * j));
                    if (b >= a)
                        CHECK(cg_extreme_diff_right(a, b, i, j) ==
                              cg_doubled(a, 2 * i - a, b, b - 2 * j, b - a, b - a + 2 * i - 2 * j));
                    const int c = a + b - 2 * (i + j);
                    if (c >= 0)
                        CHECK(cg_extreme_edge(a, b, i, j) == cg_doubled(a, a - 2 * i, b, b - 2 * j, c, c));
                }
}

TEST_CASE("coupled vectors intertwine the sl(2) action") {
    for (int a = 0; a <= 4; ++a)
        for (int b = 0; b <= 4; ++b) {
            if (a + b > 7)
                continue;
            const LieStructure structure(1, Mode::abelian);
            const GradedModule g = tensor_product(build(ModuleSpec(SpecV{a}, 1, Mode::abelian)),
                                                  build(ModuleSpec(SpecV{b}, 1, Mode::abelian)));
            for (int c = a + b; c >= std::abs(a - b); c -= 2) {
                for (int k = 0; k <= c; ++k) {
                    const SparseVec vk = coupled_vector(a, b, c, k);
                    // e v_k = sqrt(k(c-k+1)) v_{k-1}
                    SparseVec expect_e;
                    if (k > 0)
                        vec_add_scaled(expect_e, sqrt_rational(Rational(k) * Rational(c - k + 1)),
                                       coupled_vector(a, b, c, k - 1));
                    CHECK(g.total.action(GeneratorId::e()).apply(vk) == expect_e);
                    // f v_k = sqrt((k+1)(c-k)) v_{k+1}
                    SparseVec expect_f;
                    if (k < c)
                        vec_add_scaled(expect_f, sqrt_rational(Rational(k + 1) * Rational(c - k)),
                                       coupled_vector(a, b, c, k + 1));
                    CHECK(g.total.action(GeneratorId::f()).apply(vk) == expect_f);
                    // h v_k = (c-2k) v_k
                    CHECK(g.total.action(GeneratorId::h()).apply(vk) == vec_scaled(vk, Scalar(c - 2 * k)));
                }
            }
        }
}

TEST_CASE("highest-weight vectors of distinct couplings are independent and e-killed") {
    const int a = 3, b = 4;
    const GradedModule g = tensor_product(build(ModuleSpec(SpecV{a}, 1, Mode::abelian)),
                                          build(ModuleSpec(SpecV{b}, 1, Mode::abelian)));
    std::vector<SparseVec> tops;
    for (int c = a + b; c >= b - a; c -= 2) {
        const SparseVec v0 = coupled_vector(a, b, c, 0);
        CHECK(!v0.empty());
        CHECK(vec_is_zero(g.total.action(GeneratorId::e()).apply(v0)));
        tops.push_back(v0);
    }
    CHECK(Subspace::from_vectors(g.total.dim, tops).dim() == static_cast<int>(tops.size()));
}

TEST_CASE("memo cache is bounded and clearable") {
    cg_cache_clear();
    cg_cache_set_limit(8);
    for (int dj = 0; dj <= 6; ++dj)
        (void)cg_doubled(dj, dj, dj, -dj, 0, 0);
    CHECK(cg_cache_size() <= 8);
    cg_cache_set_limit(1u << 22);
    cg_cache_clear();
}
