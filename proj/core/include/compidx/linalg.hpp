#pragma once

#include <Eigen/Dense>
#include <utility>

namespace compidx {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;

// Thresholds used by every rank / spectral decision in the library.
//
// A singular value sigma counts toward the rank iff
//   sigma > rank_rel_tol * max(sigma_max, scale) * max(rows, cols),
// and an eigenvalue lambda of a symmetric matrix is classified as zero iff
//   |lambda| <= eig_zero_factor * eps * dim * max(max|lambda|, scale).
//
// `scale` is the caller-supplied magnitude of the computation that produced
// the matrix.  It matters for derived matrices such as projected residuals
// (I - A A^+) B: when the true value is zero the float result is pure noise
// of size eps * |inputs|, and a threshold relative to the matrix's own
// largest entry would classify that noise as full rank.  Anchoring the
// threshold to the input magnitude instead classifies it as zero.  The
// default scale = 0 keeps the decision relative to the matrix itself, which
// is the right reading for primary inputs.
//
// The defaults keep integer-valued fixtures stable under sign/scale noise of
// order 1e3 * eps while still resolving genuinely tiny spectral gaps.
struct ToleranceProfile {
  double rank_rel_tol = 1e-12;
  double eig_zero_factor = 100.0;
};

// Eigenvalue signs of a symmetric matrix: #positive / #zero / #negative.
struct InertiaTriple {
  int positive = 0;
  int zero = 0;
  int negative = 0;

  int index() const { return negative; }             // ind S
  int signature() const { return positive - negative; }
  int rank() const { return positive + negative; }

  friend bool operator==(const InertiaTriple&, const InertiaTriple&) = default;
};

// Moore-Penrose pseudoinverse via SVD with the profile's rank cutoff.
Matrix pseudoinverse(const Matrix& A, const ToleranceProfile& tol = {},
                     double scale = 0.0);

// Orthogonal projectors onto coker(A) and ker(A):
//   left  = I - A A^+   (annihilates the range of A from the left),
//   right = I - A^+ A   (annihilates the range of A^T from the right).
struct KernelProjectors {
  Matrix left;
  Matrix right;
};
KernelProjectors kernel_projectors(const Matrix& A,
                                   const ToleranceProfile& tol = {},
                                   double scale = 0.0);

int rank_of(const Matrix& A, const ToleranceProfile& tol = {},
            double scale = 0.0);

// Inertia of a symmetric matrix. Input is symmetrized as (S + S^T)/2 first;
// throws std::invalid_argument when the asymmetry exceeds
// 1e-8 * max(|S|_inf, scale).
InertiaTriple inertia(const Matrix& S, const ToleranceProfile& tol = {},
                      double scale = 0.0);

// Inertia of the symmetric block matrix H = [A B; B^T D] computed two ways:
// directly from the assembled matrix, and through the rank/Schur reduction
//   i_pm(H) = i_pm(A) + rank(M) + i_pm(F_M (D - B^T A^+ B) F_M),
// where M = (I - A A^+) B and F_M = I - M^+ M.  Returns {direct, reduced};
// the two must agree for symmetric inputs, which the tests rely on.
// Internal rank/inertia decisions are anchored to the block norms (and to
// `scale` when the blocks themselves are derived quantities).
std::pair<InertiaTriple, InertiaTriple> block_inertia_reduction(
    const Matrix& A, const Matrix& B, const Matrix& D,
    const ToleranceProfile& tol = {}, double scale = 0.0);

}  // namespace compidx
