#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace unirep {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// n! as an exact integer. Values are cached; safe to call concurrently.
Int factorial(int n);

/// Decomposition n = root^2 * radicand with radicand squarefree.
struct SquareDecomposition {
    Int root;
    Int radicand;
};

/// Extracts the square part of n >= 1 by trial division up to `bound`.
/// Radicands in this engine come from factorial ratios, so every prime
/// factor is small and the remainder after the loop is prime or 1; a
/// residual perfect square beyond the bound is still detected.
SquareDecomposition extract_square_part(Int n, std::int64_t bound = 1'000'000);

/// Smallest prime factor of n >= 2 (trial division; inputs here are small).
Int smallest_prime_factor(const Int& n);

bool is_squarefree(const Int& n, std::int64_t bound = 1'000'000);

std::string to_string(const Rational& q);

/// Parses "p" or "p/q" with optional sign. Throws std::invalid_argument.
Rational parse_rational(std::string_view text);

} // namespace unirep
