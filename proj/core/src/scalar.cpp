#include "unirep/scalar.hpp"

#include <cassert>
#include <sstream>

namespace unirep {

Scalar Scalar::term(const Rational& q, const Int& radicand) {
    Scalar s;
    s.insert(q, radicand);
    return s;
}

void Scalar::insert(const Rational& q, const Int& radicand) {
    if (q == 0)
        return;
    auto [it, fresh] = terms_.emplace(radicand, q);
    if (!fresh) {
        it->second += q;
        if (it->second == 0)
            terms_.erase(it);
    }
}

bool Scalar::is_rational() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 1);
}

Rational Scalar::rational_value() const {
    if (terms_.empty())
        return Rational(0);
    if (!is_rational())
        throw std::domain_error("scalar is irrational: " + str());
    return terms_.begin()->second;
}

Scalar Scalar::operator-() const {
    Scalar out;
    for (const auto& [r, q] : terms_)
        out.terms_.emplace(r, -q);
    return out;
}

Scalar& Scalar::operator+=(const Scalar& o) {
    for (const auto& [r, q] : o.terms_)
        insert(q, r);
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
    for (const auto& [r, q] : o.terms_)
        insert(-q, r);
    return *this;
}

Scalar operator*(const Scalar& a, const Scalar& b) {
    Scalar out;
    for (const auto& [r, p] : a.terms_) {
        for (const auto& [s, q] : b.terms_) {
            // sqrt(r)*sqrt(s) = g*sqrt((r/g)*(s/g)) with g = gcd(r,s);
            // the cofactors are coprime and squarefree, so their product is squarefree.
            const Int g = boost::multiprecision::gcd(r, s);
            out.insert(p * q * Rational(g), (r / g) * (s / g));
        }
    }
    return out;
}

Scalar& Scalar::operator*=(const Scalar& o) {
    *this = *this * o;
    return *this;
}

Scalar Scalar::inverse() const {
    if (terms_.empty())
        throw std::domain_error("division by zero scalar");
    if (terms_.size() == 1) {
        const auto& [r, q] = *terms_.begin();
        // (q*sqrt(r))^-1 = (1/(q*r))*sqrt(r)
        return term(Rational(1) / (q * Rational(r)), r);
    }
    const Int p = smallest_prime_factor(terms_.rbegin()->first);
    Scalar conj;
    for (const auto& [r, q] : terms_)
        conj.terms_.emplace(r, (r % p == 0) ? -q : q);
    const Scalar norm = (*this) * conj;
    assert([&] {
        for (const auto& [r, q] : norm.terms_)
            if (r % p == 0)
                return false;
        return true;
    }());
    return conj * norm.inverse();
}

std::string Scalar::str() const {
    if (terms_.empty())
        return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [r, q] : terms_) {
        const bool negative = q < 0;
        const Rational mag = negative ? Rational(-q) : q;
        if (first) {
            if (negative)
                out << '-';
            first = false;
        } else {
            out << (negative ? " - " : " + ");
        }
        if (r == 1) {
            out << to_string(mag);
        } else if (mag == 1) {
            out << "sqrt(" << r.str() << ")";
        } else {
            out << to_string(mag) << "*sqrt(" << r.str() << ")";
        }
    }
    return out.str();
}

namespace {

struct Cursor {
    std::string_view text;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < text.size() && text[pos] == ' ')
            ++pos;
    }
    bool done() {
        skip_ws();
        return pos >= text.size();
    }
    char peek() {
        skip_ws();
        return pos < text.size() ? text[pos] : '\0';
    }
    bool consume(char c) {
        skip_ws();
        if (pos < text.size() && text[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
    bool consume_word(std::string_view w) {
        skip_ws();
        if (text.substr(pos, w.size()) == w) {
            pos += w.size();
            return true;
        }
        return false;
    }
    std::string_view number() {
        skip_ws();
        const std::size_t start = pos;
        while (pos < text.size() && (std::isdigit(static_cast<unsigned char>(text[pos])) || text[pos] == '/'))
            ++pos;
        if (pos == start)
            throw std::invalid_argument("expected number in scalar literal: " + std::string(text));
        return text.substr(start, pos - start);
    }
};

// term := rational | rational '*' 'sqrt(' int ')' | 'sqrt(' int ')'
Scalar parse_term(Cursor& cur, bool negative) {
    Rational coeff(1);
    bool have_coeff = false;
    if (std::isdigit(static_cast<unsigned char>(cur.peek()))) {
        coeff = parse_rational(cur.number());
        have_coeff = true;
    }
    Int radicand = 1;
    bool have_sqrt = false;
    if (have_coeff ? cur.consume('*') : true) {
        if (cur.consume_word("sqrt(")) {
            radicand = Int(std::string(cur.number()));
            if (!cur.consume(')'))
                throw std::invalid_argument("missing ')' in scalar literal");
            have_sqrt = true;
        } else if (have_coeff) {
            throw std::invalid_argument("dangling '*' in scalar literal");
        }
    }
    if (!have_coeff && !have_sqrt)
        throw std::invalid_argument("expected term in scalar literal");
    if (have_sqrt) {
        if (radicand < 1 || !is_squarefree(radicand))
            throw std::invalid_argument("radicand must be a squarefree positive integer");
    }
    if (negative)
        coeff = -coeff;
    return Scalar::term(coeff, radicand);
}

} // namespace

Scalar Scalar::parse(std::string_view text) {
    Cursor cur{text};
    Scalar out;
    bool negative = cur.consume('-');
    out += parse_term(cur, negative);
    while (!cur.done()) {
        if (cur.consume('+'))
            negative = false;
        else if (cur.consume('-'))
            negative = true;
        else
            throw std::invalid_argument("unexpected character in scalar literal: " + std::string(text));
        out += parse_term(cur, negative);
    }
    return out;
}

Scalar sqrt_rational(const Rational& x) {
    if (x < 0)
        throw std::domain_error("sqrt of negative rational");
    if (x == 0)
        return Scalar::zero();
    const Int num = boost::multiprecision::numerator(x);
    const Int den = boost::multiprecision::denominator(x);
    const auto dec = extract_square_part(num * den);
    return Scalar::term(Rational(dec.root, den), dec.radicand);
}

} // namespace unirep
