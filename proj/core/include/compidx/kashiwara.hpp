#pragma once

#include <vector>

#include "compidx/check.hpp"
#include "compidx/cyclic_sums.hpp"

namespace compidx {

// Kashiwara form matrix of a frame triple: the symmetric 3n x 3n matrix of
// the quadratic form q(c) = c_1^T w_12 c_2 + c_2^T w_23 c_3 + c_3^T w_31 c_1
// on L_1 x L_2 x L_3.  Equals -K S_123 K / 2 with K = diag(I, -I, I) and
// S_123 the Wronskian block matrix of the triple.
Matrix kashiwara_form_matrix(const LagrangianFrame& Y1,
                             const LagrangianFrame& Y2,
                             const LagrangianFrame& Y3);

// Kashiwara index tau of a chain (m >= 3): the signature of the form above
// for a triple, extended additively via tau = sum_j tau(Y_1, Y_j, Y_{j+1})
// for longer chains.  Antisymmetric under transpositions of the arguments.
int kashiwara_index(const FrameChain& chain, const ToleranceProfile& tol = {});

// tau as the difference of cyclic sums, mu_plus - mu_minus (= nu_plus - nu_minus).
int kashiwara_via_cyclic(const FrameChain& chain,
                         const ToleranceProfile& tol = {});

// The four cyclic sums recovered from tau and Wronskian ranks alone:
//   mu_pm = (sum_j rank w_{j,j+1} + rank w_{m,1} +/- tau) / 2,
//   nu_pm = (sum_j rank w_{j,j+1} - rank w_{m,1} +/- tau) / 2.
// Throws std::runtime_error if a numerator comes out odd (a misclassified
// rank or eigenvalue sign upstream).
CyclicSums cyclic_sums_from_kashiwara(const FrameChain& chain,
                                      const ToleranceProfile& tol = {});

// Every representation of tau the library knows how to compute, for
// cross-checking: the quadratic-form signature, the cyclic-sum difference,
// per-edge P-matrix signatures in a transversal chart, the symplectic
// reduction by the last frame's completion, and negated signatures of the
// full / projector-reduced / Schur-reduced Wronskian block matrices.
std::vector<IdentityCheck> kashiwara_representation_checks(
    const FrameChain& chain, const ToleranceProfile& tol = {});

}  // namespace compidx
