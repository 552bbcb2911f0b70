#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "unirep/representation.hpp"

namespace unirep {

/// Multiset of sl(2) highest weights with multiplicities, rendered with
/// weights descending.
using IrrepMultiset = std::map<int, int, std::greater<int>>;

std::string to_string(const IrrepMultiset& ms);

/// Tensor product of two layered modules, graded by layer-index pairs.
/// Generators act by the Leibniz rule; the nilradical lowers the total
/// degree i+j, so the grading filtration is respected.
struct GradedModule {
    GradedModule(Representation l, Representation r)
        : left(std::move(l)), right(std::move(r)), total(left.structure) {}

    Representation left, right, total;
    std::vector<std::pair<int, int>> grade; // basis index -> (i, j)
    int max_degree = 0;

    int index(int p, int q) const { return p * right.dim + q; }
    int degree(int idx) const { return grade[static_cast<std::size_t>(idx)].first + grade[static_cast<std::size_t>(idx)].second; }
};

/// Throws when the factors live over different structures.
GradedModule tensor_product(const Representation& a, const Representation& b);

struct IsotypicPart {
    int mu = 0;
    int mult = 0;
    std::vector<SparseVec> highest_weight_basis; // mult vectors, ambient coordinates
};

/// One graded invariant space S_t: the radical-invariant part of the
/// degree-t stratum, with its sl(2)-isotypic decomposition.
struct DegreeInvariants {
    int t = 0;
    std::vector<IsotypicPart> parts; // mu descending
    std::vector<SparseVec> basis;    // full radical kernel within the stratum
    IrrepMultiset multiset() const;
    int dimension() const { return static_cast<int>(basis.size()); }
};

/// S_t of the graded module: restrict to the degree-t stratum, intersect the
/// kernels of every Nil(s) (and Z when present) weight space by weight
/// space, then split into highest-weight multiplicities.
/// Throws std::invalid_argument when t is outside 0..max_degree.
DegreeInvariants graded_invariants(const GradedModule& g, int t);

struct SocleReport {
    int m = 0;
    Mode mode = Mode::abelian;
    std::string left, right;
    std::vector<DegreeInvariants> degrees; // index = t
    const DegreeInvariants& at(int t) const { return degrees[static_cast<std::size_t>(t)]; }
    int socle_dimension() const;
};

/// Assembles S_t for every degree. Distinct (t, weight) blocks are
/// eliminated independently (in parallel when jobs > 1) and merged in a
/// fixed order, so reports are deterministic.
SocleReport socle(const GradedModule& g, int jobs = 1);

/// Isotypic multiset {mu -> dim(ker E within the weight-mu slice)} of an
/// H-stable subspace handed over as a list of weight-homogeneous vectors.
/// Throws std::invalid_argument when some vector mixes weights.
IrrepMultiset sl2_decompose(const Representation& carrier, const std::vector<SparseVec>& space);

} // namespace unirep
