#include "compidx/discrete_systems.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <stdexcept>

namespace compidx {
namespace {

Matrix symmetrized(const Matrix& A) { return 0.5 * (A + A.transpose()); }

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

}  // namespace

SymplecticSystem::SymplecticSystem(std::vector<SymplecticMatrix> coefficients)
    : coefficients_(std::move(coefficients)) {
  if (coefficients_.empty())
    throw std::invalid_argument("SymplecticSystem: need at least one coefficient");
  for (const auto& S : coefficients_)
    if (S.n() != coefficients_.front().n())
      throw std::invalid_argument("SymplecticSystem: coefficient dimensions disagree");
}

ConjoinedBasis propagate(const SymplecticSystem& system,
                         const LagrangianFrame& Y0,
                         const ToleranceProfile& tol) {
  if (Y0.n() != system.n())
    throw std::invalid_argument("propagate: frame dimension disagrees with system");
  ConjoinedBasis basis;
  basis.fundamentals.push_back(frame_to_symplectic(Y0, tol));
  basis.frames.push_back(Y0);
  for (int k = 0; k <= system.N(); ++k) {
    basis.fundamentals.push_back(system.coefficient(k) * basis.fundamentals.back());
    basis.frames.push_back(basis.fundamentals.back().vertical_image());
  }
  return basis;
}

ConjoinedBasis principal_solution(const SymplecticSystem& system, int M,
                                  const ToleranceProfile& tol) {
  (void)tol;
  const int N = system.N();
  if (M < 0 || M > N + 1)
    throw std::invalid_argument("principal_solution: index out of range");
  std::vector<SymplecticMatrix> Z(N + 2, SymplecticMatrix::identity(system.n()));
  for (int k = M; k <= N; ++k) Z[k + 1] = system.coefficient(k) * Z[k];
  for (int k = M - 1; k >= 0; --k) Z[k] = system.coefficient(k).inverse() * Z[k + 1];
  ConjoinedBasis basis;
  basis.fundamentals = std::move(Z);
  for (const auto& fundamental : basis.fundamentals)
    basis.frames.push_back(fundamental.vertical_image());
  return basis;
}

FocalPointTally forward_focal_multiplicities(const SymplecticSystem& system,
                                             const ConjoinedBasis& basis,
                                             const ToleranceProfile& tol) {
  const int n = system.n();
  FocalPointTally tally;
  for (int k = 0; k <= system.N(); ++k) {
    const Matrix X_next = basis.frame(k + 1).upper();
    const double sx = std::max(1.0, basis.frame(k + 1).matrix().norm());
    const Matrix X_next_pinv = pseudoinverse(X_next, tol, sx);
    const Matrix B = system.coefficient(k).blockB();
    const double sb = std::max(1.0, B.norm());
    const Matrix M = (Matrix::Identity(n, n) - X_next * X_next_pinv) * B;
    const Matrix T = Matrix::Identity(n, n) - pseudoinverse(M, tol, sb) * M;
    const Matrix G =
        symmetrized(T * basis.frame(k).upper() * X_next_pinv * B * T);
    const double sg = std::max(
        1.0, basis.frame(k).upper().norm() * X_next_pinv.norm() * B.norm());
    const int m1 = rank_of(M, tol, sb);
    const int m2 = inertia(G, tol, sg).index();
    tally.m1.push_back(m1);
    tally.m2.push_back(m2);
    tally.m.push_back(m1 + m2);
    tally.l_total += m1 + m2;
  }
  return tally;
}

FocalPointTally backward_focal_multiplicities(const SymplecticSystem& system,
                                              const ConjoinedBasis& basis,
                                              const ToleranceProfile& tol) {
  FocalPointTally tally;
  for (int k = 0; k <= system.N(); ++k) {
    const int m_star = backward_multiplicity_via_index(system, basis, k, tol);
    tally.m_star.push_back(m_star);
    tally.l_star_total += m_star;
  }
  return tally;
}

int forward_multiplicity_via_index(const SymplecticSystem& system,
                                   const ConjoinedBasis& basis, int k,
                                   const ToleranceProfile& tol) {
  return comparative_index(basis.frame(k + 1),
                           system.coefficient(k).vertical_image(), tol)
      .mu();
}

int forward_multiplicity_via_dual(const ConjoinedBasis& basis, int k,
                                  const ToleranceProfile& tol) {
  return comparative_index(basis.fundamental(k + 1).inverse().vertical_image(),
                           basis.fundamental(k).inverse().vertical_image(), tol)
      .mu_star();
}

int backward_multiplicity_via_index(const SymplecticSystem& system,
                                    const ConjoinedBasis& basis, int k,
                                    const ToleranceProfile& tol) {
  return comparative_index(basis.frame(k),
                           system.coefficient(k).inverse().vertical_image(), tol)
      .mu_star();
}

int backward_multiplicity_via_dual(const ConjoinedBasis& basis, int k,
                                   const ToleranceProfile& tol) {
  return comparative_index(basis.fundamental(k).inverse().vertical_image(),
                           basis.fundamental(k + 1).inverse().vertical_image(),
                           tol)
      .mu();
}

ChainFocalSums focal_sums_via_cyclic(const ConjoinedBasis& basis,
                                     const ToleranceProfile& tol) {
  std::vector<LagrangianFrame> frames;
  frames.reserve(basis.fundamentals.size());
  for (const auto& Z : basis.fundamentals)
    frames.push_back(Z.inverse().vertical_image());
  const FrameChain chain(std::move(frames));
  const CyclicSums forward = cyclic_sums(chain, tol);
  const CyclicSums backward = cyclic_sums(chain.reversed(), tol);
  ChainFocalSums sums;
  sums.mu_minus_chain = forward.mu_minus;
  sums.nu_minus_chain = forward.nu_minus;
  sums.mu_plus_reversed = backward.mu_plus;
  sums.nu_plus_reversed = backward.nu_plus;
  return sums;
}

PrincipalBlockMatrices principal_block_matrix(const SymplecticSystem& system,
                                              const ToleranceProfile& tol) {
  const int n = system.n(), N = system.N();
  const int blocks = N + 2;
  // X components of the principal solutions at every anchor 0..N+1.
  std::vector<std::vector<Matrix>> X(blocks);
  for (int M = 0; M < blocks; ++M) {
    const ConjoinedBasis basis = principal_solution(system, M, tol);
    for (int k = 0; k < blocks; ++k) X[M].push_back(basis.frame(k).upper());
  }

  PrincipalBlockMatrices result;
  result.S0 = Matrix::Zero(blocks * n, blocks * n);
  double sx = 1.0;
  for (int M = 0; M < blocks; ++M)
    for (int k = 0; k < blocks; ++k) sx = std::max(sx, X[M][k].norm());
  result.scale = sx;  // S0 entries are the X blocks themselves
  for (int i = 1; i <= blocks; ++i)
    for (int j = i; j <= blocks; ++j) {
      const Matrix block = X[i - 1][j - 1].transpose();
      result.S0.block((i - 1) * n, (j - 1) * n, n, n) = block;
      if (i != j)
        result.S0.block((j - 1) * n, (i - 1) * n, n, n) = block.transpose();
    }

  if (N >= 1) {
    Matrix K(n, N * n), Nd(n, N * n);
    for (int k = 1; k <= N; ++k) {
      K.middleCols((k - 1) * n, n) = X[0][k].transpose();
      Nd.middleCols((k - 1) * n, n) = X[N + 1][k].transpose();
    }
    const Matrix M_tilde = kernel_projectors(X[N + 1][0], tol, sx).right * Nd;
    const Matrix M = kernel_projectors(X[0][N + 1], tol, sx).right * K;
    const Matrix w_pinv = pseudoinverse(X[0][N + 1], tol, sx);
    const Matrix D = -K.transpose() * w_pinv * Nd;
    result.scale_bar = std::max(sx, K.norm() * w_pinv.norm() * Nd.norm());
    Matrix S_bar = Matrix::Zero((N + 1) * n, (N + 1) * n);
    S_bar.topRightCorner(n, N * n) = M_tilde;
    S_bar.bottomLeftCorner(N * n, n) = M_tilde.transpose();
    S_bar.bottomRightCorner(N * n, N * n) =
        result.S0.block(n, n, N * n, N * n) - D - D.transpose();
    result.S0_bar = std::move(S_bar);
    result.M_tilde = M_tilde;
    result.M = M;
  }
  return result;
}

FocalInertiaCounts focal_counts_via_inertia(const SymplecticSystem& system,
                                            const ToleranceProfile& tol) {
  const PrincipalBlockMatrices pm = principal_block_matrix(system, tol);
  FocalInertiaCounts counts;
  counts.l_star_at_0 = inertia(pm.S0, tol, pm.scale).positive;  // ind(-S0)
  if (pm.S0_bar)
    counts.l_at_0 = inertia(*pm.S0_bar, tol, pm.scale_bar).positive;
  return counts;
}

DisconjugacyCertificate disconjugacy_check(const SymplecticSystem& system,
                                           const ToleranceProfile& tol) {
  if (system.N() < 1)
    throw std::invalid_argument(
        "disconjugacy_check: reduced matrix undefined for a single step");
  const PrincipalBlockMatrices pm = principal_block_matrix(system, tol);
  const Matrix& S_bar = *pm.S0_bar;
  const int inner = system.N() * system.n();

  DisconjugacyCertificate cert;
  cert.disconjugate = inertia(S_bar, tol, pm.scale_bar).positive == 0;
  cert.m_tilde_vanishes = rank_of(*pm.M_tilde, tol, pm.scale) == 0;
  cert.reduced_block_nonpositive =
      inertia(S_bar.bottomRightCorner(inner, inner), tol, pm.scale_bar)
          .positive == 0;
  Eigen::SelfAdjointEigenSolver<Matrix> eig(symmetrized(S_bar),
                                            Eigen::EigenvaluesOnly);
  cert.max_eigenvalue = eig.eigenvalues().maxCoeff();
  return cert;
}

SymplecticSystem random_system(int n, int N, std::uint64_t seed) {
  if (N < 0) throw std::invalid_argument("random_system: N must be nonnegative");
  std::vector<SymplecticMatrix> coefficients;
  coefficients.reserve(N + 1);
  for (int k = 0; k <= N; ++k)
    coefficients.push_back(random_symplectic(n, splitmix64(seed + 0x9e37 * k)));
  return SymplecticSystem(std::move(coefficients));
}

}  // namespace compidx
