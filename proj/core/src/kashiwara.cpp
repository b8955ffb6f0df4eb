#include "compidx/kashiwara.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

namespace compidx {
namespace {

Matrix symmetrized(const Matrix& A) { return 0.5 * (A + A.transpose()); }

// Wronskian-level magnitude anchor shared by all spectral decisions here.
double wronskian_scale(const std::vector<LagrangianFrame>& frames) {
  double sf = 1.0;
  for (const auto& f : frames) sf = std::max(sf, f.matrix().norm());
  return sf * sf;
}

int triple_signature(const LagrangianFrame& Y1, const LagrangianFrame& Y2,
                     const LagrangianFrame& Y3, const ToleranceProfile& tol) {
  const double sw = wronskian_scale({Y1, Y2, Y3});
  return inertia(kashiwara_form_matrix(Y1, Y2, Y3), tol, sw).signature();
}

}  // namespace

Matrix kashiwara_form_matrix(const LagrangianFrame& Y1,
                             const LagrangianFrame& Y2,
                             const LagrangianFrame& Y3) {
  const int n = Y1.n();
  if (Y2.n() != n || Y3.n() != n)
    throw std::invalid_argument("kashiwara_form_matrix: frame dimensions disagree");
  const Matrix w12 = wronskian(Y1, Y2);
  const Matrix w13 = wronskian(Y1, Y3);
  const Matrix w23 = wronskian(Y2, Y3);
  Matrix S = Matrix::Zero(3 * n, 3 * n);
  S.block(0, n, n, n) = 0.5 * w12;
  S.block(n, 0, n, n) = 0.5 * w12.transpose();
  S.block(0, 2 * n, n, n) = -0.5 * w13;
  S.block(2 * n, 0, n, n) = -0.5 * w13.transpose();
  S.block(n, 2 * n, n, n) = 0.5 * w23;
  S.block(2 * n, n, n, n) = 0.5 * w23.transpose();
  return S;
}

int kashiwara_index(const FrameChain& chain, const ToleranceProfile& tol) {
  if (chain.m() < 3)
    throw std::invalid_argument("kashiwara_index: need at least three frames");
  int tau = 0;
  for (int j = 2; j < chain.m(); ++j)
    tau += triple_signature(chain.frame(1), chain.frame(j), chain.frame(j + 1), tol);
  return tau;
}

int kashiwara_via_cyclic(const FrameChain& chain, const ToleranceProfile& tol) {
  const auto [mu_minus, mu_plus] = cyclic_sum_closed(chain, tol);
  return mu_plus - mu_minus;
}

CyclicSums cyclic_sums_from_kashiwara(const FrameChain& chain,
                                      const ToleranceProfile& tol) {
  const int m = chain.m();
  const int tau = kashiwara_index(chain, tol);
  const double sw = wronskian_scale(chain.frames());
  int consecutive = 0;
  for (int j = 1; j < m; ++j)
    consecutive +=
        rank_of(wronskian(chain.frame(j), chain.frame(j + 1)), tol, sw);
  const int closing =
      rank_of(wronskian(chain.frame(m), chain.frame(1)), tol, sw);
  if ((consecutive + closing + tau) % 2 != 0)
    throw std::runtime_error(
        "cyclic_sums_from_kashiwara: parity violated (rank sum " +
        std::to_string(consecutive + closing) + ", tau " + std::to_string(tau) +
        ")");
  CyclicSums s;
  s.mu_minus = (consecutive + closing - tau) / 2;
  s.mu_plus = (consecutive + closing + tau) / 2;
  s.nu_minus = (consecutive - closing - tau) / 2;
  s.nu_plus = (consecutive - closing + tau) / 2;
  return s;
}

std::vector<IdentityCheck> kashiwara_representation_checks(
    const FrameChain& chain, const ToleranceProfile& tol) {
  const int m = chain.m();
  const int tau = kashiwara_index(chain, tol);
  std::vector<IdentityCheck> checks;

  const CyclicSums sums = cyclic_sums(chain, tol);
  checks.push_back({"closed sum difference", sums.mu_plus - sums.mu_minus, tau});
  checks.push_back({"open sum difference", sums.nu_plus - sums.nu_minus, tau});

  // Sum of P-matrix signatures around the cycle in one transversal chart.
  {
    const SymplecticMatrix R_inv =
        find_transversal_rotation(chain.frames(), tol).inverse();
    std::vector<LagrangianFrame> rotated;
    rotated.reserve(m);
    for (int j = 1; j <= m; ++j) rotated.push_back(R_inv.act(chain.frame(j)));
    int sig = 0;
    for (int j = 0; j < m; ++j) {
      const ComparativeIndex c =
          comparative_index(rotated[j], rotated[(j + 1) % m], tol);
      sig += inertia(c.P, tol, c.scale).signature();
    }
    checks.push_back({"chart form signatures", sig, tau});
  }

  // Reduction by the completion of the last frame drops the closing edge.
  {
    const SymplecticMatrix Zm_inv =
        frame_to_symplectic(chain.frame(m), tol).inverse();
    int sig = 0;
    for (int j = 1; j + 1 < m; ++j) {
      const ComparativeIndex c = comparative_index(
          Zm_inv.act(chain.frame(j)), Zm_inv.act(chain.frame(j + 1)), tol);
      sig += inertia(c.P, tol, c.scale).signature();
    }
    checks.push_back({"last-frame reduction signatures", sig, tau});
    if (m == 3) {
      const ComparativeIndex c = comparative_index(
          Zm_inv.act(chain.frame(1)), Zm_inv.act(chain.frame(2)), tol);
      checks.push_back(
          {"single chart value", inertia(c.P, tol, c.scale).signature(), tau});
    }
  }

  // Negated signatures of the Wronskian block matrix and its reductions.
  {
    const WronskianBlockMatrix S(chain);
    checks.push_back({"block matrix signature",
                      -inertia(S.full(), tol, S.scale()).signature(), tau});
    const Matrix W = S.closing_row();
    const Matrix F = kernel_projectors(W, tol, S.scale()).right;
    const Matrix G = F * S.principal_submatrix(1, m - 1) * F;
    checks.push_back({"projector reduction signature",
                      -inertia(symmetrized(G), tol, S.scale()).signature(),
                      tau});
    const ReducedBlocks rb = reduced_blocks(S, tol);
    const Matrix Fm = kernel_projectors(rb.M_tilde, tol, S.scale()).right;
    const Matrix core = rb.S_bar.bottomRightCorner((m - 2) * chain.n(),
                                                   (m - 2) * chain.n());
    const Matrix H = Fm * core * Fm;
    checks.push_back({"schur reduction signature",
                      -inertia(symmetrized(H), tol, rb.scale).signature(),
                      tau});
  }

  return checks;
}

}  // namespace compidx
