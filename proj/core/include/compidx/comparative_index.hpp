#pragma once

#include "compidx/frames.hpp"
#include "compidx/linalg.hpp"

namespace compidx {

// Comparative index of an ordered pair of Lagrangian frames (Y, Yhat),
//   mu  = mu1 + mu2,        mu1 = rank M,  mu2 = ind P,
//   mu* = mu1 + ind(-P),
// with  M = (I - X^+ X) w(Y, Yhat),  T = I - M^+ M,
//       P = T (w(Y, Yhat)^T X^+ Xhat) T   (symmetrized).
// Both indices are integers in [0, n].
struct ComparativeIndex {
  int mu1 = 0;
  int mu2 = 0;        // ind P
  int mu2_dual = 0;   // ind(-P)

  int mu() const { return mu1 + mu2; }
  int mu_star() const { return mu1 + mu2_dual; }

  Matrix M;  // kernel-projected Wronskian
  Matrix T;  // projector I - M^+ M
  Matrix P;  // symmetrized quadratic-form matrix

  // Magnitude anchor used to classify the spectrum of P; reuse it for any
  // further spectral decision on these matrices.
  double scale = 0.0;
};

ComparativeIndex comparative_index(const LagrangianFrame& Y,
                                   const LagrangianFrame& Yhat,
                                   const ToleranceProfile& tol = {});

// Same indices through symmetric solutions Q of X^T Q X = X^T U:
//   Mq = (I - X X^+) Xhat,  T = I - Mq^+ Mq,
//   P  = T Xhat^T (Qhat - Q) Xhat T,
// with Q = (U X^+ + (U X^+)^T)/2 and Qhat built the same way.  Integer
// results agree with comparative_index; the intermediate matrices need not.
ComparativeIndex comparative_index_via_q(const LagrangianFrame& Y,
                                         const LagrangianFrame& Yhat,
                                         const ToleranceProfile& tol = {});

// (mu, mu*) as the negative/positive inertia of [0 Mq; Mq^T Xhat^T (Qhat-Q) Xhat].
std::pair<int, int> comparative_index_via_block_inertia(
    const LagrangianFrame& Y, const LagrangianFrame& Yhat,
    const ToleranceProfile& tol = {});

// mu1 without forming M:  rank (X | Xhat) - rank X.
int mu1_rank_formula(const LagrangianFrame& Y, const LagrangianFrame& Yhat,
                     const ToleranceProfile& tol = {});

// Both sides of the index additivity under a symplectic factor W:
//   mu(W Y, W Yhat) = mu(Y, Yhat) + mu(Yhat, W^{-1}(0;I)) - mu(Y, W^{-1}(0;I))
// and the same line with mu* throughout.
struct IndexAdditivityReport {
  int mu_lhs = 0, mu_rhs = 0;
  int mu_star_lhs = 0, mu_star_rhs = 0;
  bool holds() const { return mu_lhs == mu_rhs && mu_star_lhs == mu_star_rhs; }
};
IndexAdditivityReport verify_index_additivity(const SymplecticMatrix& W,
                                              const LagrangianFrame& Y,
                                              const LagrangianFrame& Yhat,
                                              const ToleranceProfile& tol = {});

}  // namespace compidx
