#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "isodual/field.hpp"

namespace isodual {

/// Dense row-major matrix over a runtime finite field.  Entries are element
/// codes (32-bit storage; field orders are capped well below that).
class MatGF {
public:
    MatGF() = default;
    MatGF(FieldPtr f, int rows, int cols)
        : f_(std::move(f)), rows_(rows), cols_(cols),
          e_(static_cast<size_t>(rows) * cols, 0) {}

    int rows() const noexcept { return rows_; }
    int cols() const noexcept { return cols_; }
    const FieldPtr& field() const noexcept { return f_; }

    int64_t at(int r, int c) const { return e_[static_cast<size_t>(r) * cols_ + c]; }
    void set(int r, int c, int64_t v) {
        e_[static_cast<size_t>(r) * cols_ + c] = static_cast<int32_t>(v);
    }
    const int32_t* row(int r) const { return e_.data() + static_cast<size_t>(r) * cols_; }
    int32_t* row(int r) { return e_.data() + static_cast<size_t>(r) * cols_; }

    bool operator==(const MatGF& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && e_ == o.e_ && f_->same(*o.f_);
    }

private:
    FieldPtr f_;
    int rows_ = 0, cols_ = 0;
    std::vector<int32_t> e_;
};

struct RrefResult {
    MatGF reduced;           // canonical reduced row echelon form, zero rows kept
    int rank = 0;
    std::vector<int> pivots; // pivot column per pivot row, ascending
};

/// Gauss-Jordan elimination with deterministic pivoting: columns scanned left
/// to right, the first row with a nonzero entry below the current pivot row
/// is chosen.  The output is the canonical RREF of the row space.
RrefResult rref(const MatGF& m);

int rank(const MatGF& m);

/// Canonical nullspace basis, one row per free column (ascending), such that
/// m * transpose(nullspace(m)) = 0.  A full-rank-by-columns matrix yields a
/// 0 x cols matrix.
MatGF nullspace(const MatGF& m);

/// Row spaces compared via canonical RREFs.
bool rowspace_equal(const MatGF& a, const MatGF& b);

struct SolveResult {
    bool has_solution = false;      // false <=> the system is inconsistent
    std::vector<int64_t> x;         // one particular solution when consistent
    MatGF kernel;                   // nullspace basis of the coefficient matrix
};

/// Solve a * x = b (b of length a.rows()).  Never throws on inconsistent
/// systems; has_solution reports it.
SolveResult solve_linear(const MatGF& a, const std::vector<int64_t>& b);

MatGF transpose(const MatGF& m);
MatGF matmul(const MatGF& a, const MatGF& b);
bool is_zero(const MatGF& m);
MatGF identity(const FieldPtr& f, int n);

/// Incremental row-space builder: rows are folded into a maintained RREF one
/// at a time.  Used where generating every row of a huge system up front
/// would be wasteful; the final state is the same canonical RREF that rref()
/// would produce on the stacked rows.
class OnlineRref {
public:
    OnlineRref(FieldPtr f, int cols);
    /// Reduce the row against the current state and absorb it; returns true
    /// if the rank grew.
    bool insert(const std::vector<int64_t>& row);
    int rank() const noexcept { return static_cast<int>(pivots_.size()); }
    int cols() const noexcept { return cols_; }
    /// Current state as a matrix (rank rows, pivot order), plus pivots.
    MatGF matrix() const;
    const std::vector<int>& pivots() const noexcept { return pivots_; }
    /// Nullspace of the accumulated row space (same convention as
    /// nullspace()).
    MatGF kernel() const;

private:
    FieldPtr f_;
    int cols_;
    std::vector<std::vector<int32_t>> rows_; // kept sorted by pivot column
    std::vector<int> pivots_;
};

} // namespace isodual
