#pragma once

#include <vector>

#include "unirep/tensorsocle.hpp"

namespace unirep {

/// Basis of Hom_g(V, W) with the degree each basis element came from
/// (which S_t of soc(V* (x) W) produced it).
struct HomReport {
    int dimension = 0;
    std::vector<SparseMatrix> basis; // dim(W) x dim(V) matrices
    std::vector<int> degree;
};

/// Intertwining operators as the sl(2)-invariants of soc(V* (x) W): builds
/// the dual-tensor module, collects the weight-0 highest-weight vectors of
/// every S_t, converts each to a matrix through the dual-basis pairing, and
/// re-verifies T rho_V(x) = rho_W(x) T against every generator.
/// Throws std::invalid_argument when the structures differ.
HomReport hom_space(const Representation& v, const Representation& w, int jobs = 1);

} // namespace unirep
