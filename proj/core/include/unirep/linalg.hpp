#pragma once

#include <map>
#include <optional>
#include <vector>

#include "unirep/scalar.hpp"

namespace unirep {

/// Sparse coordinate vector: index -> nonzero Scalar.
using SparseVec = std::map<int, Scalar>;

void vec_add_scaled(SparseVec& dst, const Scalar& coeff, const SparseVec& src);
SparseVec vec_scaled(const SparseVec& v, const Scalar& coeff);
bool vec_is_zero(const SparseVec& v);

class SparseMatrix {
public:
    SparseMatrix() = default;
    SparseMatrix(int rows, int cols);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    void set(int i, int j, Scalar v);
    void add(int i, int j, const Scalar& v);
    Scalar at(int i, int j) const;
    const SparseVec& row(int i) const { return data_[static_cast<std::size_t>(i)]; }

    std::size_t nonzero_count() const;
    bool is_zero() const { return nonzero_count() == 0; }

    SparseVec apply(const SparseVec& v) const;
    SparseMatrix transpose() const;
    SparseMatrix scaled(const Scalar& c) const;

    friend SparseMatrix operator*(const SparseMatrix& a, const SparseMatrix& b);
    friend SparseMatrix operator+(const SparseMatrix& a, const SparseMatrix& b);
    friend SparseMatrix operator-(const SparseMatrix& a, const SparseMatrix& b);
    bool operator==(const SparseMatrix& o) const;

private:
    void check(int i, int j) const;
    int rows_ = 0, cols_ = 0;
    std::vector<SparseVec> data_;
};

/// Row echelon data from Gauss-Jordan elimination over the Scalar field.
/// Rows carry leading entry 1 with zeros above and below each pivot.
/// Pivot rule: within a column, the candidate whose entry has the fewest
/// radical terms wins (limits radicand blow-up during elimination).
struct Echelon {
    std::vector<SparseVec> rows;
    std::vector<int> pivots; // pivot column per row, strictly increasing
};

Echelon rref(std::vector<SparseVec> rows, int ncols);

/// Subspace of a coordinate space, basis in reduced echelon form.
class Subspace {
public:
    Subspace() = default;
    explicit Subspace(int ambient_dim) : ambient_(ambient_dim) {}
    static Subspace from_vectors(int ambient_dim, std::vector<SparseVec> vectors);

    int ambient_dim() const { return ambient_; }
    int dim() const { return static_cast<int>(basis_.size()); }
    const std::vector<SparseVec>& basis() const { return basis_; }
    const std::vector<int>& pivots() const { return pivots_; }

    /// Residual of v after reduction by the basis (zero iff v in the span).
    SparseVec reduce(SparseVec v) const;
    bool contains(const SparseVec& v) const;
    /// Coordinates of v in the basis, or nullopt if v is outside the span.
    /// Throws std::invalid_argument when v has entries beyond ambient_dim.
    std::optional<std::vector<Scalar>> coordinates(const SparseVec& v) const;

private:
    int ambient_ = 0;
    std::vector<SparseVec> basis_;
    std::vector<int> pivots_;
};

int rank(const SparseMatrix& m);
Subspace kernel_basis(const SparseMatrix& m);
/// Kernel of the linear map given by explicit constraint rows.
Subspace kernel_of_rows(const std::vector<SparseVec>& rows, int ncols);

/// Fraction-free Bareiss rank over Z[sqrt(p)], applicable when all entries
/// lie in a single radical extension Q(sqrt(p)) (or in Q). Returns nullopt
/// when the matrix mixes distinct radicands; agrees with rank() otherwise.
std::optional<int> rank_bareiss(const SparseMatrix& m);

} // namespace unirep
