#include "unirep/linalg.hpp"

#include <algorithm>
#include <cassert>
#include <set>
#include <stdexcept>

namespace unirep {

void vec_add_scaled(SparseVec& dst, const Scalar& coeff, const SparseVec& src) {
    if (coeff.is_zero())
        return;
    for (const auto& [idx, val] : src) {
        auto it = dst.find(idx);
        if (it == dst.end()) {
            Scalar prod = coeff * val;
            if (!prod.is_zero())
                dst.emplace(idx, std::move(prod));
        } else {
            it->second += coeff * val;
            if (it->second.is_zero())
                dst.erase(it);
        }
    }
}

SparseVec vec_scaled(const SparseVec& v, const Scalar& coeff) {
    SparseVec out;
    vec_add_scaled(out, coeff, v);
    return out;
}

bool vec_is_zero(const SparseVec& v) {
    return v.empty();
}

SparseMatrix::SparseMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows)) {
    if (rows < 0 || cols < 0)
        throw std::invalid_argument("negative matrix dimension");
}

void SparseMatrix::check(int i, int j) const {
    if (i < 0 || i >= rows_ || j < 0 || j >= cols_)
        throw std::out_of_range("matrix index out of bounds");
}

void SparseMatrix::set(int i, int j, Scalar v) {
    check(i, j);
    auto& row = data_[static_cast<std::size_t>(i)];
    if (v.is_zero())
        row.erase(j);
    else
        row[j] = std::move(v);
}

void SparseMatrix::add(int i, int j, const Scalar& v) {
    check(i, j);
    auto& row = data_[static_cast<std::size_t>(i)];
    auto it = row.find(j);
    if (it == row.end()) {
        if (!v.is_zero())
            row.emplace(j, v);
    } else {
        it->second += v;
        if (it->second.is_zero())
            row.erase(it);
    }
}

Scalar SparseMatrix::at(int i, int j) const {
    check(i, j);
    const auto& row = data_[static_cast<std::size_t>(i)];
    auto it = row.find(j);
    return it == row.end() ? Scalar::zero() : it->second;
}

std::size_t SparseMatrix::nonzero_count() const {
    std::size_t n = 0;
    for (const auto& row : data_)
        n += row.size();
    return n;
}

SparseVec SparseMatrix::apply(const SparseVec& v) const {
    SparseVec out;
    for (int i = 0; i < rows_; ++i) {
        Scalar acc;
        for (const auto& [j, mij] : data_[static_cast<std::size_t>(i)]) {
            auto it = v.find(j);
            if (it != v.end())
                acc += mij * it->second;
        }
        if (!acc.is_zero())
            out.emplace(i, std::move(acc));
    }
    return out;
}

SparseMatrix SparseMatrix::transpose() const {
    SparseMatrix out(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (const auto& [j, v] : data_[static_cast<std::size_t>(i)])
            out.data_[static_cast<std::size_t>(j)].emplace(i, v);
    return out;
}

SparseMatrix SparseMatrix::scaled(const Scalar& c) const {
    SparseMatrix out(rows_, cols_);
    if (c.is_zero())
        return out;
    for (int i = 0; i < rows_; ++i)
        for (const auto& [j, v] : data_[static_cast<std::size_t>(i)])
            out.data_[static_cast<std::size_t>(i)].emplace(j, c * v);
    return out;
}

SparseMatrix operator*(const SparseMatrix& a, const SparseMatrix& b) {
    if (a.cols_ != b.rows_)
        throw std::invalid_argument("matrix product shape mismatch");
    SparseMatrix out(a.rows_, b.cols_);
    for (int i = 0; i < a.rows_; ++i) {
        auto& out_row = out.data_[static_cast<std::size_t>(i)];
        for (const auto& [k, aik] : a.data_[static_cast<std::size_t>(i)]) {
            for (const auto& [j, bkj] : b.data_[static_cast<std::size_t>(k)]) {
                auto it = out_row.find(j);
                if (it == out_row.end()) {
                    Scalar prod = aik * bkj;
                    if (!prod.is_zero())
                        out_row.emplace(j, std::move(prod));
                } else {
                    it->second += aik * bkj;
                    if (it->second.is_zero())
                        out_row.erase(it);
                }
            }
        }
    }
    return out;
}

SparseMatrix operator+(const SparseMatrix& a, const SparseMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
        throw std::invalid_argument("matrix sum shape mismatch");
    SparseMatrix out = a;
    for (int i = 0; i < b.rows_; ++i)
        for (const auto& [j, v] : b.data_[static_cast<std::size_t>(i)])
            out.add(i, j, v);
    return out;
}

SparseMatrix operator-(const SparseMatrix& a, const SparseMatrix& b) {
    return a + b.scaled(Scalar(-1));
}

bool SparseMatrix::operator==(const SparseMatrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
}

Echelon rref(std::vector<SparseVec> rows, int ncols) {
    Echelon out;
    std::vector<std::size_t> pending(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i)
        pending[i] = i;

    for (int col = 0; col < ncols; ++col) {
        std::size_t best = pending.size();
        std::size_t best_terms = 0, best_len = 0;
        for (std::size_t k = 0; k < pending.size(); ++k) {
            const auto& row = rows[pending[k]];
            auto it = row.find(col);
            if (it == row.end())
                continue;
            const std::size_t terms = it->second.term_count();
            const std::size_t len = row.size();
            if (best == pending.size() || terms < best_terms ||
                (terms == best_terms && len < best_len)) {
                best = k;
                best_terms = terms;
                best_len = len;
            }
        }
        if (best == pending.size())
            continue;

        SparseVec pivot_row = std::move(rows[pending[best]]);
        pending.erase(pending.begin() + static_cast<std::ptrdiff_t>(best));
        const Scalar inv = pivot_row.at(col).inverse();
        pivot_row = vec_scaled(pivot_row, inv);

        for (auto k : pending) {
            auto it = rows[k].find(col);
            if (it != rows[k].end()) {
                const Scalar factor = -it->second;
                vec_add_scaled(rows[k], factor, pivot_row);
            }
        }
        for (std::size_t r = 0; r < out.rows.size(); ++r) {
            auto it = out.rows[r].find(col);
            if (it != out.rows[r].end()) {
                const Scalar factor = -it->second;
                vec_add_scaled(out.rows[r], factor, pivot_row);
            }
        }
        out.rows.push_back(std::move(pivot_row));
        out.pivots.push_back(col);
        if (out.pivots.size() == static_cast<std::size_t>(ncols))
            break;
    }
    return out;
}

Subspace Subspace::from_vectors(int ambient_dim, std::vector<SparseVec> vectors) {
    for (const auto& v : vectors)
        if (!v.empty() && v.rbegin()->first >= ambient_dim)
            throw std::invalid_argument("vector exceeds ambient dimension");
    auto ech = rref(std::move(vectors), ambient_dim);
    Subspace out(ambient_dim);
    out.basis_ = std::move(ech.rows);
    out.pivots_ = std::move(ech.pivots);
    return out;
}

SparseVec Subspace::reduce(SparseVec v) const {
    for (std::size_t r = 0; r < basis_.size(); ++r) {
        auto it = v.find(pivots_[r]);
        if (it != v.end()) {
            const Scalar factor = -it->second;
            vec_add_scaled(v, factor, basis_[r]);
        }
    }
    return v;
}

bool Subspace::contains(const SparseVec& v) const {
    return reduce(v).empty();
}

std::optional<std::vector<Scalar>> Subspace::coordinates(const SparseVec& v) const {
    if (!v.empty() && v.rbegin()->first >= ambient_)
        throw std::invalid_argument("vector exceeds ambient dimension");
    std::vector<Scalar> coords(basis_.size());
    SparseVec work = v;
    for (std::size_t r = 0; r < basis_.size(); ++r) {
        auto it = work.find(pivots_[r]);
        if (it != work.end()) {
            coords[r] = it->second;
            const Scalar factor = -it->second;
            vec_add_scaled(work, factor, basis_[r]);
        }
    }
    if (!work.empty())
        return std::nullopt;
    return coords;
}

int rank(const SparseMatrix& m) {
    std::vector<SparseVec> rows;
    rows.reserve(static_cast<std::size_t>(m.rows()));
    for (int i = 0; i < m.rows(); ++i)
        rows.push_back(m.row(i));
    return static_cast<int>(rref(std::move(rows), m.cols()).pivots.size());
}

Subspace kernel_of_rows(const std::vector<SparseVec>& rows, int ncols) {
    auto ech = rref(rows, ncols);
    std::vector<bool> is_pivot(static_cast<std::size_t>(ncols), false);
    for (int p : ech.pivots)
        is_pivot[static_cast<std::size_t>(p)] = true;

    std::vector<SparseVec> kernel;
    for (int f = 0; f < ncols; ++f) {
        if (is_pivot[static_cast<std::size_t>(f)])
            continue;
        SparseVec v;
        v.emplace(f, Scalar::one());
        for (std::size_t r = 0; r < ech.rows.size(); ++r) {
            auto it = ech.rows[r].find(f);
            if (it != ech.rows[r].end())
                v.emplace(ech.pivots[r], -it->second);
        }
        kernel.push_back(std::move(v));
    }
    return Subspace::from_vectors(ncols, std::move(kernel));
}

Subspace kernel_basis(const SparseMatrix& m) {
    std::vector<SparseVec> rows;
    rows.reserve(static_cast<std::size_t>(m.rows()));
    for (int i = 0; i < m.rows(); ++i)
        rows.push_back(m.row(i));
    return kernel_of_rows(rows, m.cols());
}

namespace {

// Element of Z[sqrt(p)] as x + y*sqrt(p).
struct RingElem {
    Int x{0}, y{0};
    bool zero() const { return x == 0 && y == 0; }
};

RingElem ring_mul(const RingElem& a, const RingElem& b, const Int& p) {
    return {a.x * b.x + p * (a.y * b.y), a.x * b.y + a.y * b.x};
}

RingElem ring_sub(const RingElem& a, const RingElem& b) {
    return {a.x - b.x, a.y - b.y};
}

// Exact division a / b in Z[sqrt(p)]; Bareiss guarantees divisibility.
RingElem ring_div(const RingElem& a, const RingElem& b, const Int& p) {
    const RingElem conj{b.x, -b.y};
    const Int norm = b.x * b.x - p * (b.y * b.y);
    if (norm == 0)
        throw std::logic_error("zero divisor in Bareiss elimination");
    const RingElem num = ring_mul(a, conj, p);
    if (num.x % norm != 0 || num.y % norm != 0)
        throw std::logic_error("inexact division in Bareiss elimination");
    return {num.x / norm, num.y / norm};
}

} // namespace

std::optional<int> rank_bareiss(const SparseMatrix& m) {
    Int p = 0;
    for (int i = 0; i < m.rows(); ++i) {
        for (const auto& [j, v] : m.row(i)) {
            for (const auto& [r, q] : v.terms()) {
                if (r == 1)
                    continue;
                if (p == 0)
                    p = r;
                else if (p != r)
                    return std::nullopt; // mixed radicand families
            }
        }
    }
    if (p == 0)
        p = 2; // pure rational matrix; any p works

    const int nr = m.rows(), nc = m.cols();
    std::vector<std::vector<RingElem>> a(static_cast<std::size_t>(nr),
                                         std::vector<RingElem>(static_cast<std::size_t>(nc)));
    for (int i = 0; i < nr; ++i) {
        Int denom = 1;
        for (const auto& [j, v] : m.row(i))
            for (const auto& [r, q] : v.terms())
                denom = boost::multiprecision::lcm(denom, boost::multiprecision::denominator(q));
        for (const auto& [j, v] : m.row(i)) {
            RingElem e;
            for (const auto& [r, q] : v.terms()) {
                const Int scaled = boost::multiprecision::numerator(q) * (denom / boost::multiprecision::denominator(q));
                (r == 1 ? e.x : e.y) = scaled;
            }
            a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = e;
        }
    }

    int row = 0;
    RingElem prev{1, 0};
    for (int col = 0; col < nc && row < nr; ++col) {
        int pivot = -1;
        for (int i = row; i < nr; ++i) {
            if (!a[static_cast<std::size_t>(i)][static_cast<std::size_t>(col)].zero()) {
                pivot = i;
                break;
            }
        }
        if (pivot < 0)
            continue;
        std::swap(a[static_cast<std::size_t>(row)], a[static_cast<std::size_t>(pivot)]);
        const RingElem piv = a[static_cast<std::size_t>(row)][static_cast<std::size_t>(col)];
        for (int i = row + 1; i < nr; ++i) {
            const RingElem lead = a[static_cast<std::size_t>(i)][static_cast<std::size_t>(col)];
            for (int j = col; j < nc; ++j) {
                auto& aij = a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
                const RingElem t =
                    ring_sub(ring_mul(piv, aij, p), ring_mul(lead, a[static_cast<std::size_t>(row)][static_cast<std::size_t>(j)], p));
                aij = ring_div(t, prev, p);
            }
        }
        prev = piv;
        ++row;
    }
    return row;
}

} // namespace unirep
