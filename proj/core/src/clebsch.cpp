#include "unirep/clebsch.hpp"

#include <array>
#include <atomic>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <unordered_map>

namespace unirep {

std::string HalfInt::str() const {
    if (doubled % 2 == 0)
        return std::to_string(doubled / 2);
    return std::to_string(doubled) + "/2";
}

namespace {

bool triangle_doubled(int dj1, int dj2, int dj3) {
    if ((dj1 + dj2 + dj3) % 2 != 0)
        return false;
    return std::abs(dj1 - dj2) <= dj3 && dj3 <= dj1 + dj2;
}

int sign_pow(int k) {
    return (k % 2 == 0) ? 1 : -1;
}

// Product of factorials of the `num` args over those of the `den` args;
// nullopt when any argument is negative (the silent-zero convention).
std::optional<Rational> factorial_ratio(std::initializer_list<int> num, std::initializer_list<int> den) {
    Int n = 1, d = 1;
    for (int a : num) {
        if (a < 0)
            return std::nullopt;
        n *= factorial(a);
    }
    for (int a : den) {
        if (a < 0)
            return std::nullopt;
        d *= factorial(a);
    }
    return Rational(n, d);
}

struct CgKey {
    std::array<int, 6> v;
    bool operator==(const CgKey&) const = default;
};

struct CgKeyHash {
    std::size_t operator()(const CgKey& k) const {
        std::size_t h = 1469598103934665603ull;
        for (int x : k.v) {
            h ^= static_cast<std::size_t>(static_cast<unsigned>(x) + 0x9e3779b9u);
            h *= 1099511628211ull;
        }
        return h;
    }
};

std::shared_mutex cg_mutex;
std::unordered_map<CgKey, Scalar, CgKeyHash> cg_cache_map;
std::atomic<std::size_t> cg_cache_limit{1u << 22};

Scalar cg_impl(int dj1, int dm1, int dj2, int dm2, int dj3, int dm3);

Scalar cg_cached(int dj1, int dm1, int dj2, int dm2, int dj3, int dm3) {
    const CgKey key{{dj1, dm1, dj2, dm2, dj3, dm3}};
    {
        std::shared_lock lock(cg_mutex);
        auto it = cg_cache_map.find(key);
        if (it != cg_cache_map.end())
            return it->second;
    }
    Scalar value = cg_impl(dj1, dm1, dj2, dm2, dj3, dm3);
    std::unique_lock lock(cg_mutex);
    if (cg_cache_map.size() < cg_cache_limit.load())
        cg_cache_map.emplace(key, value);
    return value;
}

Scalar cg_impl(int dj1, int dm1, int dj2, int dm2, int dj3, int dm3) {
    if (dj1 < 0 || dj2 < 0 || dj3 < 0)
        return Scalar::zero();
    // j-m must be an integer for each pair
    if ((dj1 + dm1) % 2 != 0 || (dj2 + dm2) % 2 != 0 || (dj3 + dm3) % 2 != 0)
        return Scalar::zero();
    if (dm1 + dm2 != dm3)
        return Scalar::zero();
    if (std::abs(dm1) > dj1 || std::abs(dm2) > dj2 || std::abs(dm3) > dj3)
        return Scalar::zero();
    if (!triangle_doubled(dj1, dj2, dj3))
        return Scalar::zero();

    // reflections reduce to m3 >= 0 and j1 >= j2
    const int phase = sign_pow((dj1 + dj2 - dj3) / 2);
    if (dm3 < 0) {
        Scalar c = cg_cached(dj1, -dm1, dj2, -dm2, dj3, -dm3);
        return phase < 0 ? -c : c;
    }
    if (dj1 < dj2) {
        Scalar c = cg_cached(dj2, dm2, dj1, dm1, dj3, dm3);
        return phase < 0 ? -c : c;
    }

    const int A = (dj1 + dj2 - dj3) / 2;
    const int alpha1 = (dj1 + dm1) / 2, alpha2 = (dj1 - dm1) / 2;
    const int beta1 = (dj2 + dm2) / 2, beta2 = (dj2 - dm2) / 2;
    const int gamma1 = (dj3 + dm3) / 2, gamma2 = (dj3 - dm3) / 2;
    const int e1 = (dj3 - dj2 + dm1) / 2;
    const int e2 = (dj3 - dj1 - dm2) / 2;

    Rational sum(0);
    const int r_min = std::max({0, -e1, -e2});
    const int r_max = std::min({A, alpha2, beta1});
    for (int r = r_min; r <= r_max; ++r) {
        const Rational denom =
            Rational(factorial(r) * factorial(A - r) * factorial(alpha2 - r) * factorial(beta1 - r) *
                     factorial(e1 + r) * factorial(e2 + r));
        sum += Rational(sign_pow(r)) / denom;
    }
    if (sum == 0)
        return Scalar::zero();

    const int B = (dj1 - dj2 + dj3) / 2;
    const int C = (-dj1 + dj2 + dj3) / 2;
    const int D = (dj1 + dj2 + dj3) / 2 + 1;
    const Rational under =
        Rational(dj3 + 1) * Rational(factorial(A) * factorial(B) * factorial(C), factorial(D)) *
        Rational(factorial(alpha1) * factorial(alpha2) * factorial(beta1) * factorial(beta2) *
                 factorial(gamma1) * factorial(gamma2));
    return sqrt_rational(under) * Scalar(sum);
}

} // namespace

bool triangle_ok(HalfInt j1, HalfInt j2, HalfInt j3) {
    if (j1.is_negative() || j2.is_negative() || j3.is_negative())
        throw std::invalid_argument("triangle_ok: negative argument");
    return triangle_doubled(j1.doubled, j2.doubled, j3.doubled);
}

Scalar delta_coefficient(HalfInt j1, HalfInt j2, HalfInt j3) {
    const int dj1 = j1.doubled, dj2 = j2.doubled, dj3 = j3.doubled;
    if (dj1 < 0 || dj2 < 0 || dj3 < 0)
        return Scalar::zero();
    if (!triangle_doubled(dj1, dj2, dj3))
        return Scalar::zero();
    const auto ratio = factorial_ratio({(dj1 + dj2 - dj3) / 2, (dj1 - dj2 + dj3) / 2, (-dj1 + dj2 + dj3) / 2},
                                       {(dj1 + dj2 + dj3) / 2 + 1});
    return sqrt_rational(*ratio);
}

Scalar cg(HalfInt j1, HalfInt m1, HalfInt j2, HalfInt m2, HalfInt j3, HalfInt m3) {
    return cg_cached(j1.doubled, m1.doubled, j2.doubled, m2.doubled, j3.doubled, m3.doubled);
}

Scalar cg_doubled(int dj1, int dm1, int dj2, int dm2, int dj3, int dm3) {
    return cg_cached(dj1, dm1, dj2, dm2, dj3, dm3);
}

std::size_t cg_cache_size() {
    std::shared_lock lock(cg_mutex);
    return cg_cache_map.size();
}

void cg_cache_set_limit(std::size_t max_entries) {
    cg_cache_limit.store(max_entries);
}

void cg_cache_clear() {
    std::unique_lock lock(cg_mutex);
    cg_cache_map.clear();
}

Scalar cg_extreme_sum(int a, int b, int i, int j) {
    const auto ratio = factorial_ratio({a, b, a + b - i - j, i + j}, {i, j, a + b, a - i, b - j});
    if (!ratio)
        return Scalar::zero();
    return sqrt_rational(*ratio);
}

Scalar cg_extreme_diff_left(int a, int b, int i, int j) {
    const auto ratio = factorial_ratio({a - i, i, b, a - b + 1}, {a + 1, j, b - j, a - b - i + j, i - j});
    if (!ratio)
        return Scalar::zero();
    Scalar s = sqrt_rational(*ratio);
    return sign_pow(j) < 0 ? -s : s;
}

Scalar cg_extreme_diff_right(int a, int b, int i, int j) {
    const auto ratio = factorial_ratio({b - j, j, a, b - a + 1}, {b + 1, i, a - i, b - a - j + i, j - i});
    if (!ratio)
        return Scalar::zero();
    Scalar s = sqrt_rational(*ratio);
    // sign (-1)^(a+i): factor-swap phase (-1)^a on top of the left-form sign
    return sign_pow(a + i) < 0 ? -s : s;
}

Scalar cg_extreme_edge(int a, int b, int i, int j) {
    const auto ratio = factorial_ratio({a + b - 2 * i - 2 * j + 1, i + j, a - i, b - j},
                                       {a + b - i - j + 1, a - i - j, b - i - j, i, j});
    if (!ratio)
        return Scalar::zero();
    Scalar s = sqrt_rational(*ratio);
    return sign_pow(i) < 0 ? -s : s;
}

SparseVec coupled_vector(int a, int b, int c, int k) {
    SparseVec out;
    if (a < 0 || b < 0 || c < 0 || k < 0 || k > c)
        throw std::invalid_argument("coupled_vector: arguments out of range");
    for (int i = 0; i <= a; ++i) {
        // the m-condition fixes j: (a-2i) + (b-2j) = c-2k
        const int twice_j = a + b - c + 2 * k - 2 * i;
        if (twice_j % 2 != 0)
            break;
        const int j = twice_j / 2;
        if (j < 0 || j > b)
            continue;
        Scalar coeff = cg_doubled(a, a - 2 * i, b, b - 2 * j, c, c - 2 * k);
        if (!coeff.is_zero())
            out.emplace(i * (b + 1) + j, std::move(coeff));
    }
    return out;
}

} // namespace unirep
