#include "blowup/sparse_matrix.hpp"

#include <algorithm>
#include <limits>

#include "blowup/errors.hpp"

namespace blowup {

Rat rat_from_string(const std::string& text) {
  Rat q;
  if (q.set_str(text, 10) != 0)
    throw Error(ErrorCode::parse_error, "bad rational literal: " + text);
  q.canonicalize();
  return q;
}

void SparseRatMatrix::add(int r, int c, const Rat& v) {
  if (r < 0 || r >= rows_ || c < 0 || c >= cols_)
    throw Error(ErrorCode::dimension_mismatch, "matrix index out of range");
  if (v == 0) return;
  auto key = std::make_pair(r, c);
  auto it = entries_.find(key);
  if (it == entries_.end()) {
    entries_.emplace(key, v);
  } else {
    it->second += v;
    if (it->second == 0) entries_.erase(it);
  }
}

void SparseRatMatrix::set(int r, int c, const Rat& v) {
  if (r < 0 || r >= rows_ || c < 0 || c >= cols_)
    throw Error(ErrorCode::dimension_mismatch, "matrix index out of range");
  auto key = std::make_pair(r, c);
  if (v == 0)
    entries_.erase(key);
  else
    entries_[key] = v;
}

Rat SparseRatMatrix::at(int r, int c) const {
  auto it = entries_.find({r, c});
  return it == entries_.end() ? Rat(0) : it->second;
}

SparseVec SparseRatMatrix::apply(const SparseVec& x) const {
  SparseVec out;
  for (const auto& [key, v] : entries_) {
    auto it = x.find(key.second);
    if (it == x.end()) continue;
    Rat& slot = out[key.first];
    slot += v * it->second;
  }
  for (auto it = out.begin(); it != out.end();)
    it = (it->second == 0) ? out.erase(it) : std::next(it);
  return out;
}

Gauss::Gauss(const SparseRatMatrix& a) : Gauss(a, {}) {}

Gauss::Gauss(const SparseRatMatrix& a, const std::vector<SparseVec>& rhs_columns)
    : acols_(a.cols()), rows_(a.rows()), is_pivot_col_(a.cols(), 0) {
  for (const auto& [key, v] : a.entries()) rows_[key.first][key.second] = v;
  for (size_t t = 0; t < rhs_columns.size(); ++t) {
    for (const auto& [r, v] : rhs_columns[t]) {
      if (r < 0 || r >= a.rows())
        throw Error(ErrorCode::dimension_mismatch, "rhs index out of range");
      if (v != 0) rows_[r][acols_ + static_cast<int>(t)] = v;
    }
  }
  eliminate();
}

void Gauss::eliminate() {
  const int m = static_cast<int>(rows_.size());
  std::vector<char> done(m, 0);  // row already used as pivot
  std::vector<int> colcount(acols_, 0);
  auto a_nnz = [&](int r) {
    int n = 0;
    for (const auto& [c, v] : rows_[r])
      if (c < acols_) ++n;
    return n;
  };
  for (int r = 0; r < m; ++r)
    for (const auto& [c, v] : rows_[r])
      if (c < acols_) ++colcount[c];

  for (;;) {
    // Pick the sparsest unused row with a pivotable entry, then its rarest
    // column. Deterministic tie-breaks on indices.
    int best_r = -1, best_n = std::numeric_limits<int>::max();
    for (int r = 0; r < m; ++r) {
      if (done[r]) continue;
      int n = a_nnz(r);
      if (n > 0 && n < best_n) {
        best_n = n;
        best_r = r;
      }
    }
    if (best_r < 0) break;
    int best_c = -1, best_cc = std::numeric_limits<int>::max();
    for (const auto& [c, v] : rows_[best_r]) {
      if (c >= acols_) continue;
      if (colcount[c] < best_cc) {
        best_cc = colcount[c];
        best_c = c;
      }
    }

    const Rat piv = rows_[best_r].at(best_c);
    for (int r = 0; r < m; ++r) {
      if (r == best_r) continue;
      auto hit = rows_[r].find(best_c);
      if (hit == rows_[r].end()) continue;
      Rat factor = hit->second / piv;
      // row_r -= factor * row_pivot
      for (const auto& [c, v] : rows_[best_r]) {
        auto it = rows_[r].find(c);
        if (it == rows_[r].end()) {
          Rat nv = -factor * v;
          if (nv != 0) {
            rows_[r].emplace(c, std::move(nv));
            if (c < acols_) ++colcount[c];
          }
        } else {
          it->second -= factor * v;
          if (it->second == 0) {
            if (c < acols_) --colcount[c];
            rows_[r].erase(it);
          }
        }
      }
    }
    done[best_r] = 1;
    pivots_.emplace_back(best_r, best_c);
    is_pivot_col_[best_c] = 1;
  }
}

std::vector<int> Gauss::pivot_cols() const {
  std::vector<int> cols;
  for (const auto& [r, c] : pivots_) cols.push_back(c);
  std::sort(cols.begin(), cols.end());
  return cols;
}

std::vector<SparseVec> Gauss::kernel_basis() const {
  std::vector<SparseVec> basis;
  for (int f = 0; f < acols_; ++f) {
    if (is_pivot_col_[f]) continue;
    SparseVec v;
    v[f] = 1;
    // After full elimination each pivot row contains its pivot column and
    // free columns only (within A), so back-substitution is one division.
    for (const auto& [r, c] : pivots_) {
      auto it = rows_[r].find(f);
      if (it == rows_[r].end()) continue;
      Rat val = -it->second / rows_[r].at(c);
      if (val != 0) v[c] = std::move(val);
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<SparseVec> Gauss::solve(int t) const {
  const int bc = acols_ + t;
  // Consistency: a row with no pivot must have an empty A-part; if it still
  // carries a rhs entry the system has no solution.
  std::vector<char> row_has_pivot(rows_.size(), 0);
  for (const auto& [r, c] : pivots_) row_has_pivot[r] = 1;
  for (size_t r = 0; r < rows_.size(); ++r) {
    if (row_has_pivot[r]) continue;
    if (rows_[r].count(bc)) return std::nullopt;
  }
  SparseVec x;
  for (const auto& [r, c] : pivots_) {
    auto it = rows_[r].find(bc);
    if (it == rows_[r].end()) continue;
    Rat val = it->second / rows_[r].at(c);
    if (val != 0) x[c] = std::move(val);
  }
  return x;
}

int rank(const SparseRatMatrix& m) { return Gauss(m).rank(); }

std::vector<SparseVec> kernel_basis(const SparseRatMatrix& m) {
  return Gauss(m).kernel_basis();
}

std::optional<SparseVec> solve(const SparseRatMatrix& m, const SparseVec& b) {
  if (!b.empty() && b.rbegin()->first >= m.rows())
    throw Error(ErrorCode::dimension_mismatch, "rhs longer than matrix rows");
  return Gauss(m, {b}).solve(0);
}

}  // namespace blowup
