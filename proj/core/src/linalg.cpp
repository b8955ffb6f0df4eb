#include "compidx/linalg.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>
#include <algorithm>
#include <limits>
#include <stdexcept>
#include <string>

namespace compidx {
namespace {

constexpr double kSymmetryRelTol = 1e-8;

double max_abs(const Matrix& A) {
  return A.size() == 0 ? 0.0 : A.cwiseAbs().maxCoeff();
}

// Singular-value cutoff shared by pseudoinverse and rank decisions.
double rank_cutoff(const Eigen::JacobiSVD<Matrix>& svd, const Matrix& A,
                   const ToleranceProfile& tol, double scale) {
  const double sigma_max = svd.singularValues().size() > 0
                               ? svd.singularValues()(0)
                               : 0.0;
  return tol.rank_rel_tol * std::max(sigma_max, scale) *
         static_cast<double>(std::max(A.rows(), A.cols()));
}

}  // namespace

Matrix pseudoinverse(const Matrix& A, const ToleranceProfile& tol,
                     double scale) {
  if (A.rows() == 0 || A.cols() == 0) return Matrix::Zero(A.cols(), A.rows());
  Eigen::JacobiSVD<Matrix> svd(A, Eigen::ComputeThinU | Eigen::ComputeThinV);
  const double cutoff = rank_cutoff(svd, A, tol, scale);
  Vector inv = svd.singularValues();
  for (Eigen::Index i = 0; i < inv.size(); ++i)
    inv(i) = inv(i) > cutoff ? 1.0 / inv(i) : 0.0;
  return svd.matrixV() * inv.asDiagonal() * svd.matrixU().transpose();
}

KernelProjectors kernel_projectors(const Matrix& A, const ToleranceProfile& tol,
                                   double scale) {
  const Matrix pinv = pseudoinverse(A, tol, scale);
  return {Matrix::Identity(A.rows(), A.rows()) - A * pinv,
          Matrix::Identity(A.cols(), A.cols()) - pinv * A};
}

int rank_of(const Matrix& A, const ToleranceProfile& tol, double scale) {
  if (A.rows() == 0 || A.cols() == 0) return 0;
  Eigen::JacobiSVD<Matrix> svd(A);
  const double cutoff = rank_cutoff(svd, A, tol, scale);
  int r = 0;
  for (Eigen::Index i = 0; i < svd.singularValues().size(); ++i)
    if (svd.singularValues()(i) > cutoff) ++r;
  return r;
}

InertiaTriple inertia(const Matrix& S, const ToleranceProfile& tol,
                      double scale) {
  if (S.rows() != S.cols())
    throw std::invalid_argument("inertia: matrix is not square");
  if (S.rows() == 0) return {};
  const double magnitude = std::max(max_abs(S), scale);
  const double drift = max_abs(S - S.transpose());
  if (drift > kSymmetryRelTol * magnitude)
    throw std::invalid_argument("inertia: matrix asymmetry " +
                                std::to_string(drift) + " exceeds tolerance");
  const Matrix sym = 0.5 * (S + S.transpose());
  Eigen::SelfAdjointEigenSolver<Matrix> eig(sym, Eigen::EigenvaluesOnly);
  const Vector& lambda = eig.eigenvalues();
  const double lambda_max = std::max(lambda.cwiseAbs().maxCoeff(), scale);
  const double cutoff = tol.eig_zero_factor *
                        std::numeric_limits<double>::epsilon() *
                        static_cast<double>(S.rows()) * lambda_max;
  InertiaTriple result;
  for (Eigen::Index i = 0; i < lambda.size(); ++i) {
    if (std::abs(lambda(i)) <= cutoff)
      ++result.zero;
    else if (lambda(i) > 0.0)
      ++result.positive;
    else
      ++result.negative;
  }
  return result;
}

std::pair<InertiaTriple, InertiaTriple> block_inertia_reduction(
    const Matrix& A, const Matrix& B, const Matrix& D,
    const ToleranceProfile& tol, double scale) {
  if (A.rows() != A.cols() || D.rows() != D.cols() || B.rows() != A.rows() ||
      B.cols() != D.rows())
    throw std::invalid_argument("block_inertia_reduction: block shapes disagree");
  const Eigen::Index r = A.rows(), s = D.rows();
  const double anchor =
      std::max({scale, A.norm(), B.norm(), D.norm()});

  Matrix H(r + s, r + s);
  H.topLeftCorner(r, r) = A;
  H.topRightCorner(r, s) = B;
  H.bottomLeftCorner(s, r) = B.transpose();
  H.bottomRightCorner(s, s) = D;
  const InertiaTriple direct = inertia(H, tol, anchor);

  // i_pm(H) = i_pm(A) + rank(M) + i_pm(F_M (D - B^T A^+ B) F_M).
  const InertiaTriple iA = inertia(A, tol, anchor);
  const Matrix Apinv = pseudoinverse(A, tol, anchor);
  const Matrix M = (Matrix::Identity(r, r) - A * Apinv) * B;
  const int rank_M = rank_of(M, tol, anchor);
  const Matrix F = Matrix::Identity(s, s) - pseudoinverse(M, tol, anchor) * M;
  const Matrix schur = D - B.transpose() * Apinv * B;
  const Matrix G = F * schur * F;
  // The Schur product amplifies noise by |B|^2 |A^+|, so its spectral
  // classification is anchored to that magnitude as well.
  const double schur_anchor =
      std::max(anchor, B.norm() * B.norm() * Apinv.norm());
  const InertiaTriple iG = inertia(0.5 * (G + G.transpose()), tol, schur_anchor);

  InertiaTriple reduced;
  reduced.positive = iA.positive + rank_M + iG.positive;
  reduced.negative = iA.negative + rank_M + iG.negative;
  reduced.zero = static_cast<int>(r + s) - reduced.positive - reduced.negative;
  return {direct, reduced};
}

}  // namespace compidx
