#pragma once

#include <optional>
#include <vector>

#include "compidx/cyclic_sums.hpp"
#include "compidx/frames.hpp"

namespace compidx {

// Coefficients S_0, ..., S_N of a discrete symplectic system
//   y_{k+1} = S_k y_k,   k = 0, ..., N,
// acting on R^{2n}.  All blocks are indexed as S_k = [A_k B_k; C_k D_k].
class SymplecticSystem {
 public:
  explicit SymplecticSystem(std::vector<SymplecticMatrix> coefficients);

  int n() const { return coefficients_.front().n(); }
  int N() const { return static_cast<int>(coefficients_.size()) - 1; }
  const SymplecticMatrix& coefficient(int k) const { return coefficients_.at(k); }

 private:
  std::vector<SymplecticMatrix> coefficients_;
};

// A conjoined basis of the system: frames Y_0, ..., Y_{N+1} with
// Y_{k+1} = S_k Y_k, together with symplectic fundamental matrices
// Z_k satisfying Z_{k+1} = S_k Z_k and Z_k (0; I) = Y_k.
struct ConjoinedBasis {
  std::vector<LagrangianFrame> frames;
  std::vector<SymplecticMatrix> fundamentals;

  const LagrangianFrame& frame(int k) const { return frames.at(k); }
  const SymplecticMatrix& fundamental(int k) const { return fundamentals.at(k); }
};

// Propagates an initial frame through the system (Z_0 completes Y_0).
ConjoinedBasis propagate(const SymplecticSystem& system,
                         const LagrangianFrame& Y0,
                         const ToleranceProfile& tol = {});

// Principal solution at index M in 0..N+1: Y_M = (0; I), Z_M = I, propagated
// forward by S_k and backward by S_k^{-1}.
ConjoinedBasis principal_solution(const SymplecticSystem& system, int M,
                                  const ToleranceProfile& tol = {});

// Forward focal-point multiplicities of a conjoined basis in (k, k+1]:
//   m1(k) = rank M_k,            M_k = (I - X_{k+1} X_{k+1}^+) B_k,
//   m2(k) = ind(T_k^T X_k X_{k+1}^+ B_k T_k),   T_k = I - M_k^+ M_k,
//   m(k)  = m1(k) + m2(k),
// and backward multiplicities m*(k) in [k, k+1), counted via the dual index
// of the time-reversed step.  Totals l = sum m(k), l* = sum m*(k).
struct FocalPointTally {
  std::vector<int> m1;      // forward: rank part per step
  std::vector<int> m2;      // forward: index part per step
  std::vector<int> m;       // forward multiplicity per step
  std::vector<int> m_star;  // backward multiplicity per step
  int l_total = 0;
  int l_star_total = 0;
};

FocalPointTally forward_focal_multiplicities(const SymplecticSystem& system,
                                             const ConjoinedBasis& basis,
                                             const ToleranceProfile& tol = {});
FocalPointTally backward_focal_multiplicities(const SymplecticSystem& system,
                                              const ConjoinedBasis& basis,
                                              const ToleranceProfile& tol = {});

// Alternate routes for the per-step multiplicities, kept separate so tests
// can compare independently computed values:
//   forward:  m(k)  = mu (Y_{k+1}, S_k (0; I))
//                   = mu*(Z_{k+1}^{-1}(0; I), Z_k^{-1}(0; I)),
//   backward: m*(k) = mu*(Y_k, S_k^{-1}(0; I))
//                   = mu (Z_k^{-1}(0; I), Z_{k+1}^{-1}(0; I)).
int forward_multiplicity_via_index(const SymplecticSystem& system,
                                   const ConjoinedBasis& basis, int k,
                                   const ToleranceProfile& tol = {});
int forward_multiplicity_via_dual(const ConjoinedBasis& basis, int k,
                                  const ToleranceProfile& tol = {});
int backward_multiplicity_via_index(const SymplecticSystem& system,
                                    const ConjoinedBasis& basis, int k,
                                    const ToleranceProfile& tol = {});
int backward_multiplicity_via_dual(const ConjoinedBasis& basis, int k,
                                   const ToleranceProfile& tol = {});

// Focal totals as cyclic sums of the chain Y_k^inv = Z_{k-1}^{-1} (0; I),
// k = 1..N+2: the closed minus-sum of the chain equals l* of the principal
// solution at 0, the closed plus-sum of the reversed chain equals l of the
// principal solution at N+1, and the open sums give the complementary pair.
struct ChainFocalSums {
  int mu_minus_chain = 0;  // = l* of principal solution at 0
  int mu_plus_reversed = 0;  // = l  of principal solution at N+1
  int nu_minus_chain = 0;  // = l* of principal solution at N+1
  int nu_plus_reversed = 0;  // = l  of principal solution at 0
};
ChainFocalSums focal_sums_via_cyclic(const ConjoinedBasis& basis,
                                     const ToleranceProfile& tol = {});

// Block matrices aggregating the principal solutions: S0 is the symmetric
// (N+2)n-square matrix with blocks S0(i,j) = X_{j-1}^{[i-1] T} for j >= i
// (X^{[M]} the principal solution at M), and S0_bar its Schur-type reduction
//   [0 Mt; Mt^T  S0_{2..N+1} - D - D^T]
// with K = (X_1^{[0]T} ... X_N^{[0]T}), Nd = (X_1^{[N+1]T} ... X_N^{[N+1]T}),
// Mt = (I - X_0^{[N+1]+} X_0^{[N+1]}) Nd, D = -K^T X_{N+1}^{[0]+} Nd.
// S0_bar (and the alternates) are only defined for N >= 1.
struct PrincipalBlockMatrices {
  Matrix S0;
  std::optional<Matrix> S0_bar;
  std::optional<Matrix> M_tilde;  // Mt above
  std::optional<Matrix> M;        // (I - X_{N+1}^{[0]+} X_{N+1}^{[0]}) K

  // Magnitude anchors for spectral decisions: `scale` for S0 and the
  // projected tails, `scale_bar` for S0_bar (includes the pseudoinverse
  // amplification in the eliminated corner).
  double scale = 0.0;
  double scale_bar = 0.0;
};
PrincipalBlockMatrices principal_block_matrix(const SymplecticSystem& system,
                                              const ToleranceProfile& tol = {});

// Focal totals of the boundary principal solutions by inertia alone:
//   l*(at 0) = l(at N+1) = ind(-S0)            (N >= 0),
//   l (at 0) = l*(at N+1) = ind(-S0_bar)       (N >= 1, nullopt at N = 0).
struct FocalInertiaCounts {
  int l_star_at_0 = 0;
  std::optional<int> l_at_0;
};
FocalInertiaCounts focal_counts_via_inertia(const SymplecticSystem& system,
                                            const ToleranceProfile& tol = {});

// Disconjugacy on [0, N+1]: no forward focal points of the principal solution
// at 0, decided via ind(-S0_bar) = 0 and certified by the equivalent split
// condition (M_tilde = 0 and the reduced diagonal block nonpositive).
struct DisconjugacyCertificate {
  bool disconjugate = false;
  bool m_tilde_vanishes = false;
  bool reduced_block_nonpositive = false;
  double max_eigenvalue = 0.0;  // largest eigenvalue of S0_bar
};
DisconjugacyCertificate disconjugacy_check(const SymplecticSystem& system,
                                           const ToleranceProfile& tol = {});

// Seeded random system with N+1 coefficient matrices.
SymplecticSystem random_system(int n, int N, std::uint64_t seed);

}  // namespace compidx
