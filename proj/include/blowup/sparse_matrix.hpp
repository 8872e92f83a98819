#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "blowup/rational.hpp"

namespace blowup {

/// Sparse vector: index -> nonzero rational entry.
using SparseVec = std::map<int, Rat>;

/// Exact sparse matrix over the rationals. Stored entries are never zero and
/// always lie inside (rows, cols).
class SparseRatMatrix {
public:
  SparseRatMatrix() = default;
  SparseRatMatrix(int rows, int cols) : rows_(rows), cols_(cols) {}

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  /// Adds v to the (r, c) entry, erasing it if the sum is zero.
  void add(int r, int c, const Rat& v);
  void set(int r, int c, const Rat& v);
  Rat at(int r, int c) const;

  const std::map<std::pair<int, int>, Rat>& entries() const { return entries_; }

  /// m * x for a sparse column vector x of length cols().
  SparseVec apply(const SparseVec& x) const;

private:
  int rows_ = 0;
  int cols_ = 0;
  std::map<std::pair<int, int>, Rat> entries_;
};

/// One Gaussian elimination of [A | B], pivoting only inside A. Pivots are
/// chosen Markowitz-style on sparsity; the choice only affects fill-in,
/// every derived quantity is exact. The decomposition is reused for rank,
/// kernel and any number of right-hand sides.
class Gauss {
public:
  explicit Gauss(const SparseRatMatrix& a);
  Gauss(const SparseRatMatrix& a, const std::vector<SparseVec>& rhs_columns);

  int rank() const { return static_cast<int>(pivots_.size()); }

  /// Pivot column indices, ascending. These columns of A form a basis of
  /// its column space.
  std::vector<int> pivot_cols() const;

  /// Basis of the right null space of A; size() == cols - rank.
  std::vector<SparseVec> kernel_basis() const;

  /// Solution of A x = rhs_columns[t] with free variables set to zero, or
  /// nullopt when the system is inconsistent.
  std::optional<SparseVec> solve(int t) const;

private:
  void eliminate();

  int acols_ = 0;  // pivoting restricted to columns [0, acols_)
  std::vector<std::map<int, Rat>> rows_;
  std::vector<std::pair<int, int>> pivots_;  // (row, col), in elimination order
  std::vector<char> is_pivot_col_;
};

int rank(const SparseRatMatrix& m);
std::vector<SparseVec> kernel_basis(const SparseRatMatrix& m);

/// One exact solution of m x = b, or nullopt if b is outside the column
/// space. Throws DimensionMismatch if b has an index >= rows.
std::optional<SparseVec> solve(const SparseRatMatrix& m, const SparseVec& b);

}  // namespace blowup
