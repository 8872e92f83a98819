#pragma once

#include <map>
#include <vector>

#include "blowup/laurent.hpp"
#include "blowup/sparse_matrix.hpp"

namespace blowup {

/// Index layout of the two-chart Čech complex of the bundle restricted to
/// the n-th infinitesimal neighborhood, cut to a finite z-window.
///
/// Rows (1-cochains on U∩V, in the U frame) carry per-component z-ranges:
/// the first component is widened so that every transition image of an
/// enumerated 0-cochain basis vector fits entirely inside the row set —
/// entries are never silently dropped. Columns enumerate Γ(U) basis vectors
/// (k >= 0) and Γ(V) basis vectors (k <= i, shifted ranges) whose images
/// tile the windowed rows; uncovered rows are exactly the cohomology.
struct CechLayout {
  int n = 0;
  int row_lo[2] = {0, 0};
  int row_hi[2] = {0, 0};
  int vcol_lo[2] = {0, 0};
  int vcol_hi[2] = {0, 0};

  int row_index(int comp, int k, int i) const;  // -1 when outside
  int row_count() const;
  int level_row_count(int i) const;  // rows with u-degree exactly i
};

struct WindowCertificate {
  int window_lo = 0, window_hi = 0;            // base component-1 window
  int enlarged_lo = 0, enlarged_hi = 0;
  bool equal = false;
};

struct LimitResult {
  int value = 0;
  int stabilized_at = 0;
  WindowCertificate window_certificate;
};

/// Entry for one neighborhood order in a cohomology profile.
struct ProfileRow {
  int n = 0;
  int h0 = 0;
  int h1 = 0;
  int ker_restriction = 0;  // dim Ker(H1(l_n) -> H1(l_{n-1})), 0 at n = 0
};

/// Čech cohomology of the bundle on the neighborhoods l_n over the two-chart
/// cover. Every reported dimension is certified by recomputation with the
/// z-window enlarged by two on both sides; disagreement aborts.
class CechEngine {
public:
  explicit CechEngine(const BundleData& bundle, int base_pad = 2);

  const BundleData& bundle() const { return bundle_; }

  int h0(int n);
  int h1(int n);

  /// dim Ker(H1(l_n) -> H1(l_{n-1})) under truncation of representatives.
  int restriction_kernel_dim(int n);

  /// Basis of H0(l_n): U-frame expressions of the section pairs.
  std::vector<Section> h0_sections(int n);

  /// dim of the image of H0(l_m) -> H0(l_n) under truncation, m >= n.
  int h0_image_dim(int n, int m);

  /// Stable image dim of H0(l_m) -> H0(l_n) for m large (Mittag-Leffler);
  /// this is the n-th truncation dimension of the limit module.
  int h0_stable_dim(int n);

  /// Basis of the stable image inside level-n truncations.
  std::vector<Section> h0_stable_basis(int n);

  /// Length of the first derived pushforward: the stabilized value of h1,
  /// which equals dim of the inverse limit because the restriction maps of
  /// the system are surjective.
  LimitResult r1_length();

  std::vector<ProfileRow> profile(int n_max);

  /// Window data of the last base-pad computation, for report certificates.
  WindowCertificate last_certificate() const { return last_cert_; }

  CechLayout layout(int n, int pad) const;

  /// Coboundary matrix d: C0 -> C1 for the given layout. Columns enumerate
  /// the Γ(U) basis then the Γ(V) basis; the V images are computed with the
  /// exact inverse transition and re-truncated in u only.
  SparseRatMatrix coboundary_matrix(const CechLayout& lay) const;

private:
  struct Level {
    CechLayout lay;
    int rank = 0;
    int c1 = 0, c0 = 0;
  };

  const Level& level(int n, int pad);
  std::vector<Section> kernel_sections(int n, int pad);
  int certified(int n, int (CechEngine::*dim)(const Level&), const char* what);
  int h1_of(const Level& l) { return l.c1 - l.rank; }
  int h0_of(const Level& l) { return l.c0 - l.rank; }
  int b1_rank_with_layout(const CechLayout& lay, int n_override);

  BundleData bundle_;
  int base_pad_;
  std::map<std::pair<int, int>, Level> levels_;
  std::map<std::pair<int, int>, std::vector<Section>> kernels_;
  std::map<int, std::vector<Section>> stable_bases_;
  WindowCertificate last_cert_;
};

}  // namespace blowup
