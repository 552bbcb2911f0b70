#include "unirep/liealg.hpp"

#include <stdexcept>

namespace unirep {

std::string to_string(Mode mode) {
    return mode == Mode::heisenberg ? "heisenberg" : "abelian";
}

Mode parse_mode(std::string_view text) {
    if (text == "heisenberg")
        return Mode::heisenberg;
    if (text == "abelian")
        return Mode::abelian;
    throw std::invalid_argument("unknown mode: " + std::string(text));
}

std::string GeneratorId::name() const {
    switch (kind) {
    case Kind::E: return "E";
    case Kind::H: return "H";
    case Kind::F: return "F";
    case Kind::Z: return "Z";
    case Kind::Nil: return "N" + std::to_string(index);
    }
    return "?";
}

SparseMatrix sl2_irrep_action(int a, GeneratorId g) {
    if (a < 0)
        throw std::invalid_argument("sl2_irrep_action: negative highest weight");
    SparseMatrix out(a + 1, a + 1);
    switch (g.kind) {
    case GeneratorId::Kind::E:
        for (int k = 1; k <= a; ++k)
            out.set(k - 1, k, sqrt_rational(Rational(k) * Rational(a - k + 1)));
        break;
    case GeneratorId::Kind::H:
        for (int k = 0; k <= a; ++k)
            out.set(k, k, Scalar(a - 2 * k));
        break;
    case GeneratorId::Kind::F:
        for (int k = 0; k < a; ++k)
            out.set(k + 1, k, sqrt_rational(Rational(k + 1) * Rational(a - k)));
        break;
    default:
        throw std::invalid_argument("sl2_irrep_action: generator must be E, H or F");
    }
    return out;
}

LieStructure::LieStructure(int m, Mode mode) : m_(m), mode_(mode) {
    if (m < 1)
        throw std::invalid_argument("LieStructure: m must be >= 1");
    if (mode == Mode::heisenberg && m % 2 == 0)
        throw std::invalid_argument("LieStructure: heisenberg mode requires odd m (m = 2n-1)");

    generators_ = {GeneratorId::e(), GeneratorId::h(), GeneratorId::f()};
    for (int s = 0; s <= m; ++s)
        generators_.push_back(GeneratorId::nil(s));
    if (mode == Mode::heisenberg)
        generators_.push_back(GeneratorId::z());

    auto put = [this](GeneratorId x, GeneratorId y, std::vector<BracketTerm> terms) {
        std::vector<BracketTerm> negated;
        negated.reserve(terms.size());
        for (const auto& t : terms)
            negated.push_back({-t.coeff, t.gen});
        table_[{x, y}] = std::move(terms);
        table_[{y, x}] = std::move(negated);
    };

    const auto E = GeneratorId::e(), H = GeneratorId::h(), F = GeneratorId::f();
    put(E, F, {{Scalar::one(), H}});
    put(H, E, {{Scalar(2), E}});
    put(H, F, {{Scalar(-2), F}});

    // nil generators transform as the standard basis of V(m)
    for (GeneratorId x : {E, H, F}) {
        const SparseMatrix action = sl2_irrep_action(m, x);
        for (int s = 0; s <= m; ++s) {
            std::vector<BracketTerm> terms;
            for (int i = 0; i <= m; ++i) {
                Scalar c = action.at(i, s);
                if (!c.is_zero())
                    terms.push_back({std::move(c), GeneratorId::nil(i)});
            }
            put(x, GeneratorId::nil(s), std::move(terms));
        }
    }

    if (mode == Mode::heisenberg) {
        for (int i = 0; i <= m; ++i) {
            const int j = m - i;
            if (i > j)
                continue; // the i > j entries are filled by antisymmetry
            Scalar c = sqrt_rational(Rational(1, m + 1));
            if (i % 2 != 0)
                c = -c;
            put(GeneratorId::nil(i), GeneratorId::nil(j), {{std::move(c), GeneratorId::z()}});
        }
    }
}

int LieStructure::n() const {
    if (mode_ != Mode::heisenberg)
        throw std::logic_error("n() is defined only in heisenberg mode");
    return (m_ + 1) / 2;
}

std::vector<BracketTerm> LieStructure::bracket(GeneratorId x, GeneratorId y) const {
    auto it = table_.find({x, y});
    if (it != table_.end())
        return it->second;
    return {};
}

} // namespace unirep
