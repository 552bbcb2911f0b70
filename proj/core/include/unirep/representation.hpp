#pragma once

#include <optional>
#include <string>
#include <vector>

#include "unirep/liealg.hpp"

namespace unirep {

/// Finite-dimensional module over sl(2) x| h_n (or sl(2) x| a_m), carried on
/// a basis of sl(2)-weight vectors. For layered carriers (the uniserial
/// constructors and their duals) `layers` records the socle decomposition
/// weights in order; tensor products leave it empty.
struct Representation {
    explicit Representation(LieStructure s) : structure(std::move(s)) {}

    LieStructure structure;
    std::vector<int> layers;
    std::vector<int> layer_offsets; // size layers()+1, prefix sums of layer dims
    int dim = 0;
    std::vector<int> weights; // H eigenvalue per basis index
    std::map<GeneratorId, SparseMatrix> actions;
    std::string label;

    /// For duals: basis vector j equals sign[j] * (original basis index[j])^*.
    struct DualPairing {
        std::vector<int> index;
        std::vector<int> sign;
    };
    std::optional<DualPairing> dual_pairing;

    const SparseMatrix& action(GeneratorId g) const;
    int layer_count() const { return static_cast<int>(layers.size()); }
    int layer_dim(int i) const { return layers[static_cast<std::size_t>(i)] + 1; }
    int layer_offset(int i) const { return layer_offsets[static_cast<std::size_t>(i)]; }
    /// Layer containing basis index idx; layered carriers only.
    int layer_of(int idx) const;
    /// Basis index of v_k within layer i.
    int basis_index(int layer, int k) const { return layer_offset(layer) + k; }
};

/// Layered carrier with the blockwise sl(2) action filled in and every
/// radical generator acting as zero. Building blocks for the constructors.
Representation make_layered(const LieStructure& structure, std::vector<int> layer_weights);

struct AxiomViolation {
    GeneratorId x, y;
    int row = 0, col = 0;
    Scalar expected, got;
    std::string describe() const;
};

struct AxiomReport {
    std::vector<AxiomViolation> violations;
    std::size_t pairs_checked = 0;
    bool ok() const { return violations.empty(); }
};

/// Verifies rho([x,y]) = rho(x)rho(y) - rho(y)rho(x) for every generator
/// pair of the structure. Violations are data, not errors.
AxiomReport check_module_axioms(const Representation& rep);

} // namespace unirep
