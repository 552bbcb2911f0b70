#include "unirep/numeric.hpp"

#include <deque>
#include <mutex>
#include <shared_mutex>

namespace unirep {

namespace {
std::shared_mutex factorial_mutex;
std::deque<Int> factorial_cache{Int(1), Int(1)}; // 0!, 1!
} // namespace

Int factorial(int n) {
    if (n < 0)
        throw std::domain_error("factorial of negative integer");
    {
        std::shared_lock lock(factorial_mutex);
        if (static_cast<std::size_t>(n) < factorial_cache.size())
            return factorial_cache[static_cast<std::size_t>(n)];
    }
    std::unique_lock lock(factorial_mutex);
    while (factorial_cache.size() <= static_cast<std::size_t>(n)) {
        const auto k = factorial_cache.size();
        factorial_cache.push_back(factorial_cache.back() * Int(k));
    }
    return factorial_cache[static_cast<std::size_t>(n)];
}

SquareDecomposition extract_square_part(Int n, std::int64_t bound) {
    if (n <= 0)
        throw std::domain_error("extract_square_part expects n >= 1");
    SquareDecomposition out{Int(1), Int(1)};
    Int d = 2;
    while (d * d <= n && d <= bound) {
        if (n % d == 0) {
            int mult = 0;
            while (n % d == 0) {
                n /= d;
                ++mult;
            }
            for (int i = 0; i < mult / 2; ++i)
                out.root *= d;
            if (mult % 2 != 0)
                out.radicand *= d;
        }
        d += (d == 2) ? 1 : 2;
    }
    if (n > 1) {
        const Int s = boost::multiprecision::sqrt(n);
        if (s * s == n)
            out.root *= s;
        else
            out.radicand *= n; // prime, or squarefree beyond the factoring bound
    }
    return out;
}

Int smallest_prime_factor(const Int& n) {
    if (n < 2)
        throw std::domain_error("smallest_prime_factor expects n >= 2");
    if (n % 2 == 0)
        return 2;
    Int d = 3;
    while (d * d <= n) {
        if (n % d == 0)
            return d;
        d += 2;
    }
    return n;
}

bool is_squarefree(const Int& n, std::int64_t bound) {
    if (n < 1)
        return false;
    const auto dec = extract_square_part(n, bound);
    return dec.root == 1;
}

std::string to_string(const Rational& q) {
    return q.str();
}

Rational parse_rational(std::string_view text) {
    if (text.empty())
        throw std::invalid_argument("empty rational literal");
    const auto slash = text.find('/');
    auto parse_int = [](std::string_view s) -> Int {
        if (s.empty())
            throw std::invalid_argument("empty integer literal");
        std::size_t i = (s[0] == '+' || s[0] == '-') ? 1 : 0;
        if (i == s.size())
            throw std::invalid_argument("sign without digits");
        for (; i < s.size(); ++i)
            if (s[i] < '0' || s[i] > '9')
                throw std::invalid_argument("invalid integer literal: " + std::string(s));
        return Int(std::string(s));
    };
    if (slash == std::string_view::npos)
        return Rational(parse_int(text));
    const Int num = parse_int(text.substr(0, slash));
    const Int den = parse_int(text.substr(slash + 1));
    if (den == 0)
        throw std::invalid_argument("zero denominator");
    return Rational(num, den);
}

} // namespace unirep
