#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <tuple>
#include <vector>

#include "blowup/laurent.hpp"
#include "blowup/sparse_matrix.hpp"

namespace blowup {

/// Assigns dense row indices to the (component, monomial) support of a
/// family of section pairs, so lists of sections become sparse columns.
class SectionIndexer {
public:
  void absorb(const Section& s) {
    for (int c = 0; c < 2; ++c)
      for (const auto& [m, v] : s[c].terms()) index_of(c, m);
  }

  int index_of(int comp, const ZUMonomial& m) {
    auto key = std::make_tuple(comp, m.i, m.k);
    auto it = idx_.find(key);
    if (it != idx_.end()) return it->second;
    int id = static_cast<int>(idx_.size());
    idx_.emplace(key, id);
    return id;
  }

  int size() const { return static_cast<int>(idx_.size()); }

  SparseVec column(const Section& s) const {
    SparseVec col;
    for (int c = 0; c < 2; ++c)
      for (const auto& [m, v] : s[c].terms())
        col[idx_.at(std::make_tuple(c, m.i, m.k))] = v;
    return col;
  }

private:
  std::map<std::tuple<int, int, int>, int> idx_;
};

/// All sections become columns; the indexer is extended as needed.
inline SparseRatMatrix sections_as_matrix(const std::vector<Section>& ss,
                                          SectionIndexer& indexer) {
  for (const auto& s : ss) indexer.absorb(s);
  SparseRatMatrix m(indexer.size(), static_cast<int>(ss.size()));
  for (size_t c = 0; c < ss.size(); ++c)
    for (const auto& [r, v] : indexer.column(ss[c])) m.set(r, static_cast<int>(c), v);
  return m;
}

inline int span_rank(const std::vector<Section>& ss) {
  if (ss.empty()) return 0;
  SectionIndexer ix;
  return rank(sections_as_matrix(ss, ix));
}

/// Indices of a deterministic maximal independent subfamily (the pivot
/// columns of one elimination).
inline std::vector<int> span_basis_indices(const std::vector<Section>& ss) {
  if (ss.empty()) return {};
  SectionIndexer ix;
  return Gauss(sections_as_matrix(ss, ix)).pivot_cols();
}

/// Coefficients expressing target as a rational combination of gens, if any.
inline std::optional<SparseVec> in_span(const Section& target,
                                        const std::vector<Section>& gens) {
  SectionIndexer ix;
  ix.absorb(target);
  SparseRatMatrix m = sections_as_matrix(gens, ix);
  return solve(m, ix.column(target));
}

}  // namespace blowup
