#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "unirep/linalg.hpp"

namespace unirep {

enum class Mode { heisenberg, abelian };

std::string to_string(Mode mode);
Mode parse_mode(std::string_view text);

/// Generator of sl(2) x| h_n (heisenberg mode) or sl(2) x| a_m (abelian).
/// Nil(s), s = 0..m, is the nilradical basis transforming as V(m); Z spans
/// the center and exists only in heisenberg mode.
struct GeneratorId {
    enum class Kind : std::uint8_t { E, H, F, Nil, Z };
    Kind kind = Kind::E;
    int index = 0; // Nil position s

    static constexpr GeneratorId e() { return {Kind::E, 0}; }
    static constexpr GeneratorId h() { return {Kind::H, 0}; }
    static constexpr GeneratorId f() { return {Kind::F, 0}; }
    static constexpr GeneratorId z() { return {Kind::Z, 0}; }
    static constexpr GeneratorId nil(int s) { return {Kind::Nil, s}; }

    bool is_radical() const { return kind == Kind::Nil || kind == Kind::Z; }
    auto operator<=>(const GeneratorId&) const = default;
    std::string name() const;
};

struct BracketTerm {
    Scalar coeff;
    GeneratorId gen;
};

/// Structure constants of sl(2) x| h_n (m = 2n-1 odd) or sl(2) x| a_m.
/// sl(2) acts on the nil generators as on the standard basis of V(m);
/// in heisenberg mode [Nil(i), Nil(m-i)] = (-1)^i sqrt(1/(m+1)) Z and Z
/// is central.
class LieStructure {
public:
    LieStructure(int m, Mode mode);

    int m() const { return m_; }
    Mode mode() const { return mode_; }
    /// n with m = 2n-1; heisenberg mode only.
    int n() const;

    const std::vector<GeneratorId>& generators() const { return generators_; }
    std::vector<BracketTerm> bracket(GeneratorId x, GeneratorId y) const;

    bool operator==(const LieStructure& o) const { return m_ == o.m_ && mode_ == o.mode_; }
    bool operator!=(const LieStructure& o) const { return !(*this == o); }

private:
    int m_;
    Mode mode_;
    std::vector<GeneratorId> generators_;
    std::map<std::pair<GeneratorId, GeneratorId>, std::vector<BracketTerm>> table_;
};

/// Action matrices of e, h, f on the irreducible V(a) in the basis
/// v_0..v_a: e v_k = sqrt(k(a-k+1)) v_{k-1}, h v_k = (a-2k) v_k,
/// f v_k = sqrt((k+1)(a-k)) v_{k+1}.
SparseMatrix sl2_irrep_action(int a, GeneratorId g);

} // namespace unirep
