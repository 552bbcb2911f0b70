#pragma once

#include <map>
#include <string>
#include <string_view>

#include "unirep/numeric.hpp"

namespace unirep {

/// Element of the real field Q({sqrt(r) : r squarefree}), stored as a
/// canonical finite sum  sum_r q_r * sqrt(r)  with q_r rational and every
/// key r a squarefree positive integer (r = 1 is the rational part).
/// Distinct squarefree radicands are linearly independent over Q, so
/// structural equality of the term maps is field equality.
class Scalar {
public:
    Scalar() = default;
    Scalar(const Rational& q) { insert(q, 1); }
    Scalar(long long n) : Scalar(Rational(n)) {}

    /// q * sqrt(r); r must already be squarefree.
    static Scalar term(const Rational& q, const Int& radicand);

    static Scalar zero() { return Scalar(); }
    static Scalar one() { return Scalar(1); }

    bool is_zero() const { return terms_.empty(); }
    bool is_rational() const;
    /// Rational value; throws unless the element lies in Q.
    Rational rational_value() const;
    std::size_t term_count() const { return terms_.size(); }
    const std::map<Int, Rational>& terms() const { return terms_; }

    Scalar operator-() const;
    Scalar& operator+=(const Scalar& o);
    Scalar& operator-=(const Scalar& o);
    Scalar& operator*=(const Scalar& o);
    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(const Scalar& a, const Scalar& b);

    /// Multiplicative inverse by radical conjugation: pick a prime p in the
    /// radicand support, write a = u + v*sqrt(p), recurse on the norm
    /// u^2 - p v^2 whose support no longer contains p.
    Scalar inverse() const;

    bool operator==(const Scalar& o) const { return terms_ == o.terms_; }
    bool operator!=(const Scalar& o) const { return !(*this == o); }
    /// Lexicographic order on the term map; used only for deterministic sorting.
    bool operator<(const Scalar& o) const { return terms_ < o.terms_; }

    /// Rendering "q0 + q1*sqrt(r1) + ...", radicands ascending; "0" when zero.
    std::string str() const;
    /// Parses the same grammar str() emits. Throws std::invalid_argument.
    static Scalar parse(std::string_view text);

private:
    void insert(const Rational& q, const Int& radicand);
    std::map<Int, Rational> terms_;
};

/// sqrt of a non-negative rational as a single canonical term:
/// sqrt(p/q) = (1/q) * sqrt(p*q), square part extracted.
Scalar sqrt_rational(const Rational& x);

inline std::string to_string(const Scalar& s) { return s.str(); }

} // namespace unirep
