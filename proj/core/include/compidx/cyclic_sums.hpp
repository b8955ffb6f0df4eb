#pragma once

#include <utility>
#include <vector>

#include "compidx/check.hpp"
#include "compidx/comparative_index.hpp"
#include "compidx/frames.hpp"

namespace compidx {

// An ordered list of m >= 2 Lagrangian frames with a common dimension n.
class FrameChain {
 public:
  explicit FrameChain(std::vector<LagrangianFrame> frames);

  int n() const { return frames_.front().n(); }
  int m() const { return static_cast<int>(frames_.size()); }
  const LagrangianFrame& frame(int j) const { return frames_.at(j - 1); }  // 1-based
  const std::vector<LagrangianFrame>& frames() const { return frames_; }

  FrameChain reversed() const;
  FrameChain rotated(int steps) const;  // cyclic shift: Y_{1+steps}, ...
  FrameChain subchain(const std::vector<int>& indices) const;  // 1-based picks
  FrameChain transformed(const SymplecticMatrix& W) const;     // W Y_j for all j

 private:
  std::vector<LagrangianFrame> frames_;
};

// Cyclic comparative-index sums of a chain:
//   mu_minus = sum_j mu(Y_j, Y_{j+1}) + mu(Y_m, Y_1)      (closed cycle)
//   mu_plus  = the same with mu*,
//   nu_minus = sum_j mu(Y_j, Y_{j+1}) - mu(Y_1, Y_m)      (open variant)
//   nu_plus  = the same with mu*.
struct CyclicSums {
  int mu_minus = 0;
  int mu_plus = 0;
  int nu_minus = 0;
  int nu_plus = 0;

  friend bool operator==(const CyclicSums&, const CyclicSums&) = default;
};

std::pair<int, int> cyclic_sum_closed(const FrameChain& chain,
                                      const ToleranceProfile& tol = {});
std::pair<int, int> cyclic_sum_open(const FrameChain& chain,
                                    const ToleranceProfile& tol = {});
CyclicSums cyclic_sums(const FrameChain& chain, const ToleranceProfile& tol = {});

// The mn x mn symmetric block matrix S of pairwise Wronskians: zero diagonal
// blocks, block (i, j) = w(Y_i, Y_j) for i < j, mirrored by symmetry.
class WronskianBlockMatrix {
 public:
  explicit WronskianBlockMatrix(const FrameChain& chain);

  int n() const { return n_; }
  int m() const { return m_; }
  const Matrix& full() const { return S_; }
  Matrix block(int i, int j) const;                      // 1-based
  Matrix principal_submatrix(int lo, int hi) const;      // S_{lo..hi}

  // Magnitude anchor for rank/inertia decisions on the blocks: quadratic in
  // the largest frame norm, since every entry is a Wronskian product.
  double scale() const { return scale_; }

  // Row of Wronskians of the last frame against the others,
  //   W = (w_{m,1} ... w_{m,m-1}),  n x (m-1)n,
  // its tail N = (w_{m,2} ... w_{m,m-1}) and the matching first-row tail
  // K = (w_{1,2} ... w_{1,m-1}); N and K are n x (m-2)n (empty for m = 2).
  Matrix closing_row() const;
  Matrix closing_row_tail() const;
  Matrix leading_row_tail() const;

 private:
  int n_, m_;
  Matrix S_;
  double scale_ = 1.0;
};

// Elimination of the first and last chain entries from S (defined for m >= 3):
//   M_tilde = (I - w_{m,1} w_{m,1}^+) N,    M = (I - w_{m,1}^+ w_{m,1}) K,
//   D       = K^T w_{m,1}^+ N,
//   S_bar   = [0 M_tilde; M_tilde^T  S_{2..m-1} - D - D^T].
// M and M_tilde have equal rank and are interchangeable in the rank counts.
struct ReducedBlocks {
  Matrix M_tilde;
  Matrix M;
  Matrix D;
  Matrix S_bar;

  // Magnitude anchor for spectral decisions on S_bar (includes the
  // pseudoinverse amplification in D).
  double scale = 0.0;
};
ReducedBlocks reduced_blocks(const WronskianBlockMatrix& S,
                             const ToleranceProfile& tol = {});

// (mu_minus, mu_plus) as ind(-S), ind(+S) of the full block matrix.
std::pair<int, int> cyclic_sum_via_inertia(const FrameChain& chain,
                                           const ToleranceProfile& tol = {});

// Which elimination of S to use for the reduced inertia formulas.
enum class ReducedRoute {
  projector,  // sandwich S_{1..m-1} between F_W = I - W^+ W;  m >= 2
  schur,      // the S_bar matrix above;                        m >= 3
};

// (mu_minus, mu_plus) via the reduced formulas
//   projector: rank W        + ind(-/+ F_W S_{1..m-1} F_W)
//   schur:     rank w_{m,1}  + ind(-/+ S_bar).
// Requesting schur on a 2-chain throws std::invalid_argument.
std::pair<int, int> cyclic_sum_via_reduction(const FrameChain& chain,
                                             ReducedRoute route,
                                             const ToleranceProfile& tol = {});

// (nu_minus, nu_plus) via the matching reduced formulas
//   projector: rank M_tilde + ind(-/+ F_W S_{1..m-1} F_W)
//   schur:     ind(-/+ S_bar).
std::pair<int, int> open_sum_via_reduction(const FrameChain& chain,
                                           ReducedRoute route,
                                           const ToleranceProfile& tol = {});

// Verifies the scaling/permutation/reversal/recurrence laws on this chain:
// right-scaling and symplectic invariance (using W and the C_j), cyclic
// permutation invariance of the closed sums, reversal duality, the
// closed/open rank identities, nonnegativity, splice recurrences of the open
// sums, their triple decompositions, and the 3-chain transposition law.
std::vector<IdentityCheck> chain_identity_checks(
    const FrameChain& chain, const SymplecticMatrix& W,
    const std::vector<Matrix>& right_factors, const ToleranceProfile& tol = {});

// Integer bounds r <= mu_c <= P from pairwise Wronskian ranks, using a
// transversal rotation R for the P estimate; nu bounds are shifted by
// rank w(Y_1, Y_m).  `ok` asserts the computed sums lie inside.
struct CyclicSumBounds {
  int r_lower = 0;
  int p_upper = 0;
  int nu_lower = 0;
  int nu_upper = 0;
  CyclicSums sums;
  bool ok = false;
};
CyclicSumBounds cyclic_sum_bounds(const FrameChain& chain,
                                  const ToleranceProfile& tol = {});

// All four sums through a single transversal chart: with R from
// find_transversal_rotation and Q_k = U_k X_k^{-1} of the rotated frames,
//   mu_minus/plus = sum_k ind(-/+ (Q_k - Q_{k+1})) + ind(-/+ (Q_m - Q_1)),
//   nu_minus/plus = sum_k ind(-/+ (Q_k - Q_{k+1})) - ind(-/+ (Q_1 - Q_m)).
CyclicSums transversal_chart_sums(const FrameChain& chain,
                                  const ToleranceProfile& tol = {});

// Subspace-geometry helpers (independent of the index machinery): dimensions
// of the span and of pairwise/global intersections of the frames' subspaces.
int subspace_sum_dimension(const std::vector<LagrangianFrame>& frames,
                           const ToleranceProfile& tol = {});
int subspace_intersection_dimension(const std::vector<LagrangianFrame>& frames,
                                    const ToleranceProfile& tol = {});

}  // namespace compidx
