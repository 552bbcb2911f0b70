#pragma once

#include <map>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "unirep/representation.hpp"

namespace unirep {

// Symbolic descriptors of the classified uniserial modules.
struct SpecV { int a; };                       // irreducible V(a)
struct SpecE { int a, b; };                    // length 2, V(a) below V(b)
struct SpecZ { int alpha, len; };              // increasing chain, socle V(alpha)
struct SpecZdual { int alpha, len; };          // decreasing chain, top V(alpha)
struct SpecE3 { int c; };                      // V(0) + V(m) + V(c)
struct SpecE4 { Rational t; };                 // V(0) + V(m) + V(m) + V(0), bent arrow scaled by t
struct SpecFUplus { int a; };                  // n=1 faithful (a, a+1, a)
struct SpecFUminus { int a; };                 // n=1 faithful (a, a-1, a)
struct SpecFU { int a0, a1, a2; };             // faithful triple, n >= 2

using ModuleSpecKind =
    std::variant<SpecV, SpecE, SpecZ, SpecZdual, SpecE3, SpecE4, SpecFUplus, SpecFUminus, SpecFU>;

/// Validated descriptor plus its ambient algebra. Construction enforces the
/// classification constraints and reports the violated rule by name.
class ModuleSpec {
public:
    ModuleSpec(ModuleSpecKind kind, int m, Mode mode);

    /// Parses the textual grammar: V(a), E(a,b), Z(a,l), Zd(a,l), E3(c),
    /// E4(p/q), FU+(a), FU-(a), FU(a0,a1,a2).
    static ModuleSpec parse(std::string_view text, int m, Mode mode);

    const ModuleSpecKind& kind() const { return kind_; }
    int m() const { return m_; }
    Mode mode() const { return mode_; }

    std::string render() const;
    /// Socle decomposition weights, socle first.
    std::vector<int> layer_weights() const;
    bool is_faithful() const;
    /// Faithful families other than FU(4,3,4).
    bool is_standard_faithful() const;

private:
    void validate() const;
    ModuleSpecKind kind_;
    int m_;
    Mode mode_;
};

/// Builds the module of a validated spec: blockwise sl(2) action, nilradical
/// links between consecutive layers via the one-summand Clebsch-Gordan
/// formula, and for the faithful families the center acting as a scalar from
/// layer 2 to layer 0.
Representation build(const ModuleSpec& spec);

/// Dual module, re-based so the basis is again of weight-vector form and the
/// layer list is the reverse of the input's. The result records how its
/// basis pairs against the input basis (used by the intertwiner extraction).
Representation dual_rep(const Representation& rep);

/// Socle series as a list of sl(2)-isotypic multisets (weight -> mult),
/// one per socle factor; computed from the radical joint kernels.
std::vector<std::map<int, int>> socle_series(const Representation& rep);

/// True iff every socle factor is a single irreducible.
bool verify_uniserial(const Representation& rep);

/// Equality as modules, decided exactly: equal dimensions plus an invertible
/// intertwiner found inside hom; used by the dual-isomorphism tests.
bool is_isomorphic(const Representation& a, const Representation& b);

} // namespace unirep
