#include "compidx/verification.hpp"

#include <algorithm>
#include <random>

#include "compidx/kashiwara.hpp"

namespace compidx {
namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t mix(std::uint64_t seed, std::uint64_t salt) {
  return splitmix64(seed ^ splitmix64(salt));
}

// Lower block-triangular symplectic factor [K 0; K^{-T} H  K^{-T}], the
// transformation class that leaves both index components invariant.
SymplecticMatrix lower_triangular_symplectic(int n, std::uint64_t seed) {
  const Matrix K = random_nonsingular_matrix(n, mix(seed, 1));
  const Matrix H = random_symmetric_matrix(n, mix(seed, 2));
  const Matrix KinvT = K.inverse().transpose();
  Matrix L = Matrix::Zero(2 * n, 2 * n);
  L.topLeftCorner(n, n) = K;
  L.bottomLeftCorner(n, n) = KinvT * H;
  L.bottomRightCorner(n, n) = KinvT;
  return SymplecticMatrix(std::move(L));
}

void append(std::vector<IdentityCheck>& out, std::vector<IdentityCheck> more) {
  out.insert(out.end(), std::make_move_iterator(more.begin()),
             std::make_move_iterator(more.end()));
}

double frame_scale(const LagrangianFrame& Y) {
  return std::max(1.0, Y.matrix().norm());
}

}  // namespace

FrameChain random_chain(int n, int m, std::uint64_t seed, bool force_degenerate) {
  std::mt19937_64 gen(seed);
  std::vector<LagrangianFrame> frames;
  frames.reserve(m);
  for (int j = 0; j < m; ++j) {
    if (force_degenerate) {
      switch (gen() % 6) {
        case 0:
          frames.push_back(LagrangianFrame::vertical(n));
          continue;
        case 1:
          frames.push_back(LagrangianFrame::horizontal(n));
          continue;
        case 2:
          if (!frames.empty()) {
            frames.push_back(frames.back());  // repeated frame, zero Wronskian
            continue;
          }
          break;
        case 3:
          if (!frames.empty()) {  // same subspace, different frame
            frames.push_back(
                frames.back().scaled(random_nonsingular_matrix(n, gen())));
            continue;
          }
          break;
        default:
          break;
      }
    }
    frames.push_back(random_frame(n, gen()));
  }
  return FrameChain(std::move(frames));
}

std::vector<IdentityCheck> pair_identity_checks(const LagrangianFrame& Y,
                                                const LagrangianFrame& Yhat,
                                                const SymplecticMatrix& W,
                                                std::uint64_t seed,
                                                const ToleranceProfile& tol) {
  const int n = Y.n();
  std::vector<IdentityCheck> checks;
  const ComparativeIndex c = comparative_index(Y, Yhat, tol);
  const ComparativeIndex cq = comparative_index_via_q(Y, Yhat, tol);
  const auto [mu_bi, mu_star_bi] = comparative_index_via_block_inertia(Y, Yhat, tol);

  checks.push_back({"Q-route: mu1", c.mu1, cq.mu1});
  checks.push_back({"Q-route: mu", c.mu(), cq.mu()});
  checks.push_back({"Q-route: mu*", c.mu_star(), cq.mu_star()});
  checks.push_back({"block-inertia route: mu", c.mu(), mu_bi});
  checks.push_back({"block-inertia route: mu*", c.mu_star(), mu_star_bi});
  checks.push_back({"rank formula: mu1", c.mu1, mu1_rank_formula(Y, Yhat, tol)});
  const double sf = std::max(frame_scale(Y), frame_scale(Yhat));
  const double sw = sf * sf;
  {
    Matrix Xw(n, 2 * n);
    Xw.leftCols(n) = Y.upper().transpose();
    Xw.rightCols(n) = wronskian(Y, Yhat);
    checks.push_back({"wronskian rank formula: mu1", c.mu1,
                      rank_of(Xw, tol, sw) - rank_of(Y.upper(), tol, sf)});
  }

  const ComparativeIndex rev = comparative_index(Yhat, Y, tol);
  const int rank_w = rank_of(wronskian(Y, Yhat), tol, sw);
  const int rank_X = rank_of(Y.upper(), tol, sf);
  const int rank_Xhat = rank_of(Yhat.upper(), tol, sf);
  checks.push_back({"pair duality: mu", c.mu() + rev.mu(), rank_w});
  checks.push_back({"pair duality: mu*", c.mu_star() + rev.mu_star(), rank_w});
  checks.push_back({"index exchange", c.mu(), rank_Xhat - rank_X + rev.mu_star()});
  checks.push_back({"index pair total", c.mu() + c.mu_star(),
                    rank_w + rank_Xhat - rank_X});
  checks.push_back({"range bounds",
                    0 <= c.mu() && c.mu() <= std::min(rank_w, rank_Xhat) &&
                            0 <= c.mu_star() &&
                            c.mu_star() <= std::min(rank_w, rank_Xhat) &&
                            std::min(rank_w, rank_Xhat) <= n
                        ? 1
                        : 0,
                    1});

  {  // exchange through the symplectic completion of the first frame
    const SymplecticMatrix Z_inv = frame_to_symplectic(Y, tol).inverse();
    const ComparativeIndex swapped = comparative_index(
        Z_inv.vertical_image(), Z_inv.act(Yhat), tol);
    checks.push_back({"completion exchange: mu1", c.mu1, swapped.mu1});
    checks.push_back({"completion exchange: mu2", c.mu2, swapped.mu2_dual});
    checks.push_back({"completion exchange: mu", c.mu(), swapped.mu_star()});
  }

  {  // invariance under lower-triangular symplectic and right scalings
    const SymplecticMatrix L = lower_triangular_symplectic(n, mix(seed, 3));
    const LagrangianFrame YL =
        L.act(Y.scaled(random_nonsingular_matrix(n, mix(seed, 4)), tol));
    const LagrangianFrame YhatL =
        L.act(Yhat.scaled(random_nonsingular_matrix(n, mix(seed, 5)), tol));
    const ComparativeIndex cL = comparative_index(YL, YhatL, tol);
    checks.push_back({"triangular invariance: mu1", cL.mu1, c.mu1});
    checks.push_back({"triangular invariance: mu2", cL.mu2, c.mu2});
    checks.push_back({"triangular invariance: mu*", cL.mu_star(), c.mu_star()});
  }

  {  // anchor frames with known index values
    const LagrangianFrame vert = LagrangianFrame::vertical(n);
    const LagrangianFrame horiz = LagrangianFrame::horizontal(n);
    const ComparativeIndex to_vert = comparative_index(Y, vert, tol);
    checks.push_back({"vertical target: mu", to_vert.mu(), 0});
    checks.push_back({"vertical target: mu*", to_vert.mu_star(), 0});
    const ComparativeIndex from_vert = comparative_index(vert, Yhat, tol);
    checks.push_back({"vertical source: mu", from_vert.mu(), rank_Xhat});
    checks.push_back({"vertical source: mu*", from_vert.mu_star(), rank_Xhat});
    const ComparativeIndex from_horiz = comparative_index(horiz, Yhat, tol);
    const Matrix XU = Yhat.upper().transpose() * Yhat.lower();
    const InertiaTriple iXU = inertia(0.5 * (XU + XU.transpose()), tol, sw);
    checks.push_back({"horizontal source: mu", from_horiz.mu(), iXU.negative});
    checks.push_back({"horizontal source: mu*", from_horiz.mu_star(), iXU.positive});
  }

  if (rank_X == n && rank_Xhat == n) {  // transversal pair: plain Q difference
    const Matrix Q = Y.lower() * Y.upper().inverse();
    const Matrix Qhat = Yhat.lower() * Yhat.upper().inverse();
    const Matrix d = 0.5 * (Qhat - Q + (Qhat - Q).transpose());
    const InertiaTriple iD = inertia(d, tol, std::max(1.0, Q.norm() + Qhat.norm()));
    checks.push_back({"nonsingular pair: mu1", c.mu1, 0});
    checks.push_back({"nonsingular pair: mu", c.mu(), iD.negative});
    checks.push_back({"nonsingular pair: mu*", c.mu_star(), iD.positive});
  }

  const IndexAdditivityReport add = verify_index_additivity(W, Y, Yhat, tol);
  checks.push_back({"symplectic additivity: mu", add.mu_lhs, add.mu_rhs});
  checks.push_back({"symplectic additivity: mu*", add.mu_star_lhs, add.mu_star_rhs});
  return checks;
}

std::vector<IdentityCheck> chain_inertia_checks(const FrameChain& chain,
                                                const ToleranceProfile& tol) {
  std::vector<IdentityCheck> checks;
  const CyclicSums base = cyclic_sums(chain, tol);

  const auto [inertia_minus, inertia_plus] = cyclic_sum_via_inertia(chain, tol);
  checks.push_back({"full inertia: mu-", inertia_minus, base.mu_minus});
  checks.push_back({"full inertia: mu+", inertia_plus, base.mu_plus});

  const auto [proj_minus, proj_plus] =
      cyclic_sum_via_reduction(chain, ReducedRoute::projector, tol);
  checks.push_back({"projector reduction: mu-", proj_minus, base.mu_minus});
  checks.push_back({"projector reduction: mu+", proj_plus, base.mu_plus});

  const auto [open_minus, open_plus] =
      open_sum_via_reduction(chain, ReducedRoute::projector, tol);
  checks.push_back({"projector reduction: nu-", open_minus, base.nu_minus});
  checks.push_back({"projector reduction: nu+", open_plus, base.nu_plus});

  if (chain.m() >= 3) {
    const auto [schur_minus, schur_plus] =
        cyclic_sum_via_reduction(chain, ReducedRoute::schur, tol);
    checks.push_back({"schur reduction: mu-", schur_minus, base.mu_minus});
    checks.push_back({"schur reduction: mu+", schur_plus, base.mu_plus});
    const auto [schur_open_minus, schur_open_plus] =
        open_sum_via_reduction(chain, ReducedRoute::schur, tol);
    checks.push_back({"schur reduction: nu-", schur_open_minus, base.nu_minus});
    checks.push_back({"schur reduction: nu+", schur_open_plus, base.nu_plus});

    const WronskianBlockMatrix S(chain);
    const ReducedBlocks rb = reduced_blocks(S, tol);
    const int rank_closing = rank_of(-S.block(chain.m(), 1), tol, S.scale());
    checks.push_back({"closing row rank split",
                      rank_of(S.closing_row(), tol, S.scale()),
                      rank_closing + rank_of(rb.M_tilde, tol, S.scale())});
    checks.push_back({"projected tails equal rank",
                      rank_of(rb.M, tol, S.scale()),
                      rank_of(rb.M_tilde, tol, S.scale())});
  }

  const CyclicSums chart = transversal_chart_sums(chain, tol);
  checks.push_back({"transversal chart: mu-", chart.mu_minus, base.mu_minus});
  checks.push_back({"transversal chart: mu+", chart.mu_plus, base.mu_plus});
  checks.push_back({"transversal chart: nu-", chart.nu_minus, base.nu_minus});
  checks.push_back({"transversal chart: nu+", chart.nu_plus, base.nu_plus});
  return checks;
}

std::vector<IdentityCheck> chain_law_checks(const FrameChain& chain,
                                            std::uint64_t seed,
                                            const ToleranceProfile& tol) {
  const SymplecticMatrix W = random_symplectic(chain.n(), mix(seed, 11));
  std::vector<Matrix> right_factors;
  right_factors.reserve(chain.m());
  for (int j = 0; j < chain.m(); ++j)
    right_factors.push_back(random_nonsingular_matrix(chain.n(), mix(seed, 20 + j)));
  return chain_identity_checks(chain, W, right_factors, tol);
}

std::vector<IdentityCheck> chain_bound_checks(const FrameChain& chain,
                                              const ToleranceProfile& tol) {
  const CyclicSumBounds b = cyclic_sum_bounds(chain, tol);
  std::vector<IdentityCheck> checks;
  const auto boolean = [&checks](const std::string& name, bool value) {
    checks.push_back({name, value ? 1 : 0, 1});
  };
  boolean("lower bound: mu-", b.r_lower <= b.sums.mu_minus);
  boolean("lower bound: mu+", b.r_lower <= b.sums.mu_plus);
  boolean("upper bound: mu-", b.sums.mu_minus <= b.p_upper);
  boolean("upper bound: mu+", b.sums.mu_plus <= b.p_upper);
  boolean("lower bound: nu-", b.nu_lower <= b.sums.nu_minus);
  boolean("lower bound: nu+", b.nu_lower <= b.sums.nu_plus);
  boolean("upper bound: nu-", b.sums.nu_minus <= b.nu_upper);
  boolean("upper bound: nu+", b.sums.nu_plus <= b.nu_upper);
  boolean("bounds report agrees", b.ok);
  return checks;
}

std::vector<IdentityCheck> chain_geometry_checks(const FrameChain& chain,
                                                 const ToleranceProfile& tol) {
  const int n = chain.n(), m = chain.m();
  std::vector<IdentityCheck> checks;
  const WronskianBlockMatrix S(chain);

  for (int i = 1; i <= m; ++i)
    for (int j = i + 1; j <= m; ++j) {
      const int overlap =
          subspace_intersection_dimension({chain.frame(i), chain.frame(j)}, tol);
      checks.push_back(
          {"pair overlap " + std::to_string(i) + "," + std::to_string(j),
           overlap,
           n - rank_of(wronskian(chain.frame(i), chain.frame(j)), tol,
                       S.scale())});
    }

  const int span = subspace_sum_dimension(chain.frames(), tol);
  const int core = subspace_intersection_dimension(chain.frames(), tol);
  const int rank_closing_row = rank_of(S.closing_row(), tol, S.scale());
  checks.push_back({"span vs closing row", span, n + rank_closing_row});
  checks.push_back({"span vs intersection", span, 2 * n - core});

  // Rank of the projector-reduced core from subspace dimensions alone.
  const Matrix F = kernel_projectors(S.closing_row(), tol, S.scale()).right;
  const Matrix G = F * S.principal_submatrix(1, m - 1) * F;
  int consecutive_overlaps = 0;
  for (int j = 1; j < m; ++j)
    consecutive_overlaps += subspace_intersection_dimension(
        {chain.frame(j), chain.frame(j + 1)}, tol);
  const int closing_overlap =
      subspace_intersection_dimension({chain.frame(m), chain.frame(1)}, tol);
  const int predicted = 2 * core + (m - 2) * n - consecutive_overlaps - closing_overlap;
  checks.push_back({"reduced core rank",
                    rank_of(0.5 * (G + G.transpose()), tol, S.scale()),
                    predicted});
  checks.push_back({"reduced core rank nonnegative", predicted >= 0 ? 1 : 0, 1});
  return checks;
}

std::vector<IdentityCheck> system_identity_checks(const SymplecticSystem& system,
                                                  std::uint64_t seed,
                                                  const ToleranceProfile& tol) {
  const int n = system.n(), N = system.N();
  std::vector<IdentityCheck> checks;

  const ConjoinedBasis at0 = principal_solution(system, 0, tol);
  const ConjoinedBasis atEnd = principal_solution(system, N + 1, tol);
  const FocalPointTally fwd0 = forward_focal_multiplicities(system, at0, tol);
  const FocalPointTally bwd0 = backward_focal_multiplicities(system, at0, tol);
  const FocalPointTally fwdEnd = forward_focal_multiplicities(system, atEnd, tol);
  const FocalPointTally bwdEnd = backward_focal_multiplicities(system, atEnd, tol);

  checks.push_back({"focal duality: backward at 0", bwd0.l_star_total,
                    fwdEnd.l_total});
  checks.push_back({"focal duality: forward at 0", fwd0.l_total,
                    bwdEnd.l_star_total});

  const auto route_agreement = [&](const ConjoinedBasis& basis,
                                   const std::string& label) {
    const FocalPointTally fwd = forward_focal_multiplicities(system, basis, tol);
    const FocalPointTally bwd = backward_focal_multiplicities(system, basis, tol);
    int fwd_matches = 0, bwd_matches = 0;
    for (int k = 0; k <= N; ++k) {
      if (fwd.m[k] == forward_multiplicity_via_index(system, basis, k, tol) &&
          fwd.m[k] == forward_multiplicity_via_dual(basis, k, tol))
        ++fwd_matches;
      if (bwd.m_star[k] == backward_multiplicity_via_dual(basis, k, tol))
        ++bwd_matches;
    }
    checks.push_back({"forward routes (" + label + ")", fwd_matches, N + 1});
    checks.push_back({"backward routes (" + label + ")", bwd_matches, N + 1});
  };
  route_agreement(at0, "principal");
  const ConjoinedBasis random_basis =
      propagate(system, random_frame(n, mix(seed, 7)), tol);
  route_agreement(random_basis, "random");

  {  // propagation is reversible step by step
    int consistent = 0;
    for (int k = 0; k <= N; ++k) {
      const Matrix back = system.coefficient(k).inverse().matrix() *
                          random_basis.frame(k + 1).matrix();
      const double scale = std::max(1.0, back.cwiseAbs().maxCoeff());
      if ((back - random_basis.frame(k).matrix()).cwiseAbs().maxCoeff() <=
          1e-8 * scale)
        ++consistent;
    }
    checks.push_back({"backward propagation consistency", consistent, N + 1});
  }

  const ChainFocalSums cs = focal_sums_via_cyclic(random_basis, tol);
  checks.push_back({"cyclic route: closed minus", cs.mu_minus_chain,
                    bwd0.l_star_total});
  checks.push_back({"cyclic route: closed plus reversed", cs.mu_plus_reversed,
                    fwdEnd.l_total});
  checks.push_back({"cyclic route: open minus", cs.nu_minus_chain,
                    bwdEnd.l_star_total});
  checks.push_back({"cyclic route: open plus reversed", cs.nu_plus_reversed,
                    fwd0.l_total});
  {
    const ConjoinedBasis other_basis =
        propagate(system, random_frame(n, mix(seed, 8)), tol);
    const ChainFocalSums cs2 = focal_sums_via_cyclic(other_basis, tol);
    checks.push_back({"basis invariance: closed minus", cs2.mu_minus_chain,
                      cs.mu_minus_chain});
    checks.push_back({"basis invariance: closed plus", cs2.mu_plus_reversed,
                      cs.mu_plus_reversed});
    checks.push_back({"basis invariance: open minus", cs2.nu_minus_chain,
                      cs.nu_minus_chain});
    checks.push_back({"basis invariance: open plus", cs2.nu_plus_reversed,
                      cs.nu_plus_reversed});
  }

  const FocalInertiaCounts counts = focal_counts_via_inertia(system, tol);
  checks.push_back({"inertia route: unreduced", counts.l_star_at_0,
                    bwd0.l_star_total});
  if (counts.l_at_0)
    checks.push_back({"inertia route: reduced", *counts.l_at_0, fwd0.l_total});

  {  // superdiagonal of the principal block matrix carries the B blocks
    const PrincipalBlockMatrices pm = principal_block_matrix(system, tol);
    int structural = 0;
    for (int i = 1; i <= N + 1; ++i) {
      const Matrix expected = system.coefficient(i - 1).blockB().transpose();
      const Matrix actual = pm.S0.block((i - 1) * n, i * n, n, n);
      const double scale = std::max(1.0, expected.cwiseAbs().maxCoeff());
      if ((actual - expected).cwiseAbs().maxCoeff() <= 1e-8 * scale) ++structural;
    }
    checks.push_back({"superdiagonal structure", structural, N + 1});
  }

  {  // principal solution minimizes the focal count over conjoined bases
    const FocalPointTally fwd_random =
        forward_focal_multiplicities(system, random_basis, tol);
    checks.push_back({"principal lower bound",
                      fwd0.l_total <= fwd_random.l_total ? 1 : 0, 1});
  }

  if (N >= 1) {
    const DisconjugacyCertificate cert = disconjugacy_check(system, tol);
    checks.push_back({"disconjugacy verdict", cert.disconjugate ? 1 : 0,
                      fwd0.l_total == 0 ? 1 : 0});
    checks.push_back({"disconjugacy split condition", cert.disconjugate ? 1 : 0,
                      cert.m_tilde_vanishes && cert.reduced_block_nonpositive
                          ? 1
                          : 0});
  }
  return checks;
}

BatteryReport run_identity_battery(const BatteryOptions& options) {
  BatteryReport report;
  const auto record = [&report](const std::string& category, std::uint64_t seed,
                                const std::vector<IdentityCheck>& checks) {
    report.identities_checked += static_cast<long long>(checks.size());
    for (const auto& check : checks)
      if (!check.pass()) report.failures.push_back({category, seed, check});
  };

  for (int t = 0; t < options.trials; ++t) {
    const std::uint64_t s = mix(options.seed, t);
    const int n = 1 + static_cast<int>(mix(s, 1) % options.n_max);
    const int m = 2 + static_cast<int>(mix(s, 2) % (options.m_max - 1));
    const FrameChain chain = random_chain(n, m, mix(s, 3), t % 4 == 0);

    record("chain-inertia", s, chain_inertia_checks(chain, options.tol));
    record("chain-laws", s, chain_law_checks(chain, mix(s, 4), options.tol));
    record("chain-bounds", s, chain_bound_checks(chain, options.tol));
    record("chain-geometry", s, chain_geometry_checks(chain, options.tol));
    record("pair", s,
           pair_identity_checks(chain.frame(1), chain.frame(2),
                                random_symplectic(n, mix(s, 5)), mix(s, 6),
                                options.tol));
    if (m >= 3) {
      std::vector<IdentityCheck> kash =
          kashiwara_representation_checks(chain, options.tol);
      const CyclicSums direct = cyclic_sums(chain, options.tol);
      const CyclicSums rebuilt = cyclic_sums_from_kashiwara(chain, options.tol);
      kash.push_back({"rebuilt sums: mu-", rebuilt.mu_minus, direct.mu_minus});
      kash.push_back({"rebuilt sums: mu+", rebuilt.mu_plus, direct.mu_plus});
      kash.push_back({"rebuilt sums: nu-", rebuilt.nu_minus, direct.nu_minus});
      kash.push_back({"rebuilt sums: nu+", rebuilt.nu_plus, direct.nu_plus});
      record("kashiwara", s, kash);
    }
  }

  for (int t = 0; t < options.system_trials; ++t) {
    const std::uint64_t s = mix(options.seed, 0xABCD00 + t);
    const int n = 1 + static_cast<int>(mix(s, 1) % std::min(2, options.n_max));
    const int N = static_cast<int>(mix(s, 2) % 6);
    const SymplecticSystem system = random_system(n, N, mix(s, 3));
    record("system", s, system_identity_checks(system, mix(s, 4), options.tol));
  }
  return report;
}

}  // namespace compidx
