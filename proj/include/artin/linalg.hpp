#ifndef ARTIN_LINALG_HPP
#define ARTIN_LINALG_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "artin/field.hpp"

namespace artin {

using Vec = std::vector<uint32_t>;

/// Dense row-major matrix over F_p.
struct DenseMat {
    int rows = 0;
    int cols = 0;
    std::vector<uint32_t> a;

    DenseMat() = default;
    DenseMat(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c, 0) {}

    uint32_t& at(int r, int c) { return a[static_cast<size_t>(r) * cols + c]; }
    uint32_t at(int r, int c) const { return a[static_cast<size_t>(r) * cols + c]; }
    uint32_t* row(int r) { return a.data() + static_cast<size_t>(r) * cols; }
    const uint32_t* row(int r) const { return a.data() + static_cast<size_t>(r) * cols; }
};

/// In-place reduced row echelon form; pivots are the leftmost usable columns.
/// Returns the pivot column of each surviving row, in row order. Zero rows
/// are dropped (rows is shrunk).
std::vector<int> rref(DenseMat& m, const PrimeField& F);

/// Basis of the right kernel {v : M v = 0}. M is consumed by the reduction.
/// Kernel vectors are the canonical ones: one per free column f, with
/// coordinate 1 at f, listed in ascending free-column order.
std::vector<Vec> kernel(DenseMat m, const PrimeField& F);

int rank(DenseMat m, const PrimeField& F);

/// A linear subspace of F_p^n in canonical form: the rows of an RREF basis.
/// Two subspaces are equal iff their matrices are equal.
class Subspace {
public:
    Subspace() = default;
    explicit Subspace(int ambient) : ambient_(ambient) {}
    Subspace(int ambient, const std::vector<Vec>& vectors, const PrimeField& F);

    int ambient() const { return ambient_; }
    int dim() const { return static_cast<int>(rows_.size()); }
    const std::vector<Vec>& basis() const { return rows_; }
    const std::vector<int>& pivots() const { return pivots_; }

    /// Remainder of v after reduction by the basis (the normal form of v
    /// modulo this subspace, supported on non-pivot coordinates).
    Vec reduce(Vec v, const PrimeField& F) const;
    bool contains(const Vec& v, const PrimeField& F) const;
    bool contains(const Subspace& other, const PrimeField& F) const;

    /// Adds a vector; returns true if the dimension grew.
    bool add(Vec v, const PrimeField& F);

    bool operator==(const Subspace& o) const {
        return ambient_ == o.ambient_ && rows_ == o.rows_;
    }

private:
    int ambient_ = 0;
    std::vector<Vec> rows_;   // RREF rows ordered by pivot
    std::vector<int> pivots_; // ascending
};

/// Expresses vectors in terms of a fixed independent spanning list. Built
/// once from the list, then solve() returns the coefficient vector of any
/// member of the span (nullopt outside the span).
class SpanSolver {
public:
    SpanSolver(const std::vector<Vec>& spanning, int ambient, const PrimeField& F);
    std::optional<Vec> solve(const Vec& v, const PrimeField& F) const;

private:
    int ambient_ = 0;
    int n_ = 0;                    // size of the spanning list
    std::vector<Vec> reduced_;     // echelonized spanning vectors
    std::vector<Vec> coeffs_;      // reduced_[i] = sum coeffs_[i][j] * spanning[j]
    std::vector<int> lead_;        // leading column of reduced_[i]
};

/// Sparse row: strictly ascending column indices with nonzero values.
using SparseRow = std::vector<std::pair<uint32_t, uint32_t>>;

/// Sparse matrix over F_p for the big syzygy eliminations; rows only.
struct SparseMat {
    uint32_t cols = 0;
    std::vector<SparseRow> rows;

    size_t nnz() const {
        size_t t = 0;
        for (auto& r : rows) t += r.size();
        return t;
    }
};

/// Sparse Gaussian elimination to reduced echelon form. Pivot search is
/// column-major: each row is reduced against the pivots claimed so far and
/// claims its leading column. Returns pivot columns in ascending order.
/// After the call the matrix holds one fully reduced row per pivot.
std::vector<uint32_t> sparse_rref(SparseMat& m, const PrimeField& F);

/// Right-kernel basis of a sparse matrix, one canonical vector per free
/// column: vectors[i] has coordinate 1 at free_cols[i], its remaining
/// support lies in pivot columns, and free_cols is ascending. Consequently
/// any kernel member w decomposes as sum_i w[free_cols[i]] * vectors[i].
struct SparseKernel {
    std::vector<SparseRow> vectors;
    std::vector<uint32_t> free_cols;
};
SparseKernel sparse_kernel(SparseMat m, const PrimeField& F);

} // namespace artin

#endif
