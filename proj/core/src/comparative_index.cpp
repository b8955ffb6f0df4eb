#include "compidx/comparative_index.hpp"

#include <algorithm>
#include <stdexcept>

namespace compidx {
namespace {

Matrix symmetrized(const Matrix& A) { return 0.5 * (A + A.transpose()); }

// Symmetric solution of X^T Q X = X^T U for a Lagrangian frame (X; U):
// Q = sym(U X^+) works because X X^+ X = X and X^T U is symmetric.
Matrix q_solution(const LagrangianFrame& Y, const ToleranceProfile& tol,
                  double scale) {
  return symmetrized(Y.lower() * pseudoinverse(Y.upper(), tol, scale));
}

void require_same_n(const LagrangianFrame& Y, const LagrangianFrame& Yhat) {
  if (Y.n() != Yhat.n())
    throw std::invalid_argument("comparative index: frame dimensions disagree");
}

// Magnitude of one frame, floored at 1 so unit-size constructions stay
// comparable across the integer fixtures.
double frame_scale(const LagrangianFrame& Y) {
  return std::max(1.0, Y.matrix().norm());
}

}  // namespace

ComparativeIndex comparative_index(const LagrangianFrame& Y,
                                   const LagrangianFrame& Yhat,
                                   const ToleranceProfile& tol) {
  require_same_n(Y, Yhat);
  const int n = Y.n();
  const double sf = std::max(frame_scale(Y), frame_scale(Yhat));
  const double sw = sf * sf;  // Wronskian entries are quadratic in the frames
  const Matrix w = wronskian(Y, Yhat);
  const Matrix Xpinv = pseudoinverse(Y.upper(), tol, sf);

  ComparativeIndex result;
  result.M = (Matrix::Identity(n, n) - Xpinv * Y.upper()) * w;
  result.T =
      Matrix::Identity(n, n) - pseudoinverse(result.M, tol, sw) * result.M;
  result.P =
      symmetrized(result.T * (w.transpose() * Xpinv * Yhat.upper()) * result.T);
  result.scale = sw * std::max(1.0, Xpinv.norm() * Yhat.upper().norm());
  result.mu1 = rank_of(result.M, tol, sw);
  const InertiaTriple iP = inertia(result.P, tol, result.scale);
  result.mu2 = iP.negative;
  result.mu2_dual = iP.positive;
  return result;
}

ComparativeIndex comparative_index_via_q(const LagrangianFrame& Y,
                                         const LagrangianFrame& Yhat,
                                         const ToleranceProfile& tol) {
  require_same_n(Y, Yhat);
  const int n = Y.n();
  const Matrix& X = Y.upper();
  const Matrix& Xhat = Yhat.upper();
  const double sf = std::max(frame_scale(Y), frame_scale(Yhat));
  const double sw = sf * sf;

  ComparativeIndex result;
  result.M =
      (Matrix::Identity(n, n) - X * pseudoinverse(X, tol, sf)) * Xhat;
  result.T =
      Matrix::Identity(n, n) - pseudoinverse(result.M, tol, sf) * result.M;
  const Matrix Qy = q_solution(Y, tol, sf);
  const Matrix Qyh = q_solution(Yhat, tol, sf);
  const Matrix dQ = Qyh - Qy;
  result.P = symmetrized(result.T * Xhat.transpose() * dQ * Xhat * result.T);
  result.scale = sw * std::max(1.0, Qy.norm() + Qyh.norm());
  result.mu1 = rank_of(result.M, tol, sf);
  const InertiaTriple iP = inertia(result.P, tol, result.scale);
  result.mu2 = iP.negative;
  result.mu2_dual = iP.positive;
  return result;
}

std::pair<int, int> comparative_index_via_block_inertia(
    const LagrangianFrame& Y, const LagrangianFrame& Yhat,
    const ToleranceProfile& tol) {
  require_same_n(Y, Yhat);
  const int n = Y.n();
  const Matrix& X = Y.upper();
  const Matrix& Xhat = Yhat.upper();
  const double sf = std::max(frame_scale(Y), frame_scale(Yhat));
  const double sw = sf * sf;
  const Matrix Mq =
      (Matrix::Identity(n, n) - X * pseudoinverse(X, tol, sf)) * Xhat;
  const Matrix Qy = q_solution(Y, tol, sf);
  const Matrix Qyh = q_solution(Yhat, tol, sf);
  const Matrix dQ = Qyh - Qy;

  Matrix H(2 * n, 2 * n);
  H.topLeftCorner(n, n).setZero();
  H.topRightCorner(n, n) = Mq;
  H.bottomLeftCorner(n, n) = Mq.transpose();
  H.bottomRightCorner(n, n) = symmetrized(Xhat.transpose() * dQ * Xhat);
  const double anchor = sw * std::max(1.0, Qy.norm() + Qyh.norm());
  const InertiaTriple iH = inertia(H, tol, anchor);
  return {iH.negative, iH.positive};  // (mu, mu*)
}

int mu1_rank_formula(const LagrangianFrame& Y, const LagrangianFrame& Yhat,
                     const ToleranceProfile& tol) {
  require_same_n(Y, Yhat);
  const int n = Y.n();
  const double sf = std::max(frame_scale(Y), frame_scale(Yhat));
  Matrix XX(n, 2 * n);
  XX.leftCols(n) = Y.upper();
  XX.rightCols(n) = Yhat.upper();
  return rank_of(XX, tol, sf) - rank_of(Y.upper(), tol, sf);
}

IndexAdditivityReport verify_index_additivity(const SymplecticMatrix& W,
                                              const LagrangianFrame& Y,
                                              const LagrangianFrame& Yhat,
                                              const ToleranceProfile& tol) {
  const LagrangianFrame anchor = W.inverse().vertical_image();  // W^{-1}(0; I)
  const ComparativeIndex lhs = comparative_index(W.act(Y), W.act(Yhat), tol);
  const ComparativeIndex base = comparative_index(Y, Yhat, tol);
  const ComparativeIndex to_anchor_hat = comparative_index(Yhat, anchor, tol);
  const ComparativeIndex to_anchor = comparative_index(Y, anchor, tol);

  IndexAdditivityReport report;
  report.mu_lhs = lhs.mu();
  report.mu_rhs = base.mu() + to_anchor_hat.mu() - to_anchor.mu();
  report.mu_star_lhs = lhs.mu_star();
  report.mu_star_rhs =
      base.mu_star() + to_anchor_hat.mu_star() - to_anchor.mu_star();
  return report;
}

}  // namespace compidx
