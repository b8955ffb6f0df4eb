#include "compidx/cyclic_sums.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace compidx {
namespace {

Matrix symmetrized(const Matrix& A) { return 0.5 * (A + A.transpose()); }

int ind_minus(const Matrix& S, const ToleranceProfile& tol, double scale) {
  return inertia(symmetrized(S), tol, scale).positive;  // ind(-S)
}

int ind_plus(const Matrix& S, const ToleranceProfile& tol, double scale) {
  return inertia(symmetrized(S), tol, scale).negative;  // ind(+S)
}

// Wronskian-level magnitude of a chain: quadratic in the largest frame norm.
double chain_scale(const FrameChain& chain) {
  double sf = 1.0;
  for (const auto& f : chain.frames()) sf = std::max(sf, f.matrix().norm());
  return sf * sf;
}

}  // namespace

FrameChain::FrameChain(std::vector<LagrangianFrame> frames)
    : frames_(std::move(frames)) {
  if (frames_.size() < 2)
    throw std::invalid_argument("FrameChain: need at least two frames");
  for (const auto& f : frames_)
    if (f.n() != frames_.front().n())
      throw std::invalid_argument("FrameChain: frame dimensions disagree");
}

FrameChain FrameChain::reversed() const {
  std::vector<LagrangianFrame> rev(frames_.rbegin(), frames_.rend());
  return FrameChain(std::move(rev));
}

FrameChain FrameChain::rotated(int steps) const {
  const int count = m();
  std::vector<LagrangianFrame> rot;
  rot.reserve(count);
  for (int j = 0; j < count; ++j)
    rot.push_back(frames_[(j + steps) % count]);
  return FrameChain(std::move(rot));
}

FrameChain FrameChain::subchain(const std::vector<int>& indices) const {
  std::vector<LagrangianFrame> picked;
  picked.reserve(indices.size());
  for (int idx : indices) picked.push_back(frame(idx));
  return FrameChain(std::move(picked));
}

FrameChain FrameChain::transformed(const SymplecticMatrix& W) const {
  std::vector<LagrangianFrame> mapped;
  mapped.reserve(frames_.size());
  for (const auto& f : frames_) mapped.push_back(W.act(f));
  return FrameChain(std::move(mapped));
}

std::pair<int, int> cyclic_sum_closed(const FrameChain& chain,
                                      const ToleranceProfile& tol) {
  int minus = 0, plus = 0;
  for (int j = 1; j <= chain.m(); ++j) {
    const int next = j == chain.m() ? 1 : j + 1;
    const ComparativeIndex c = comparative_index(chain.frame(j), chain.frame(next), tol);
    minus += c.mu();
    plus += c.mu_star();
  }
  return {minus, plus};
}

std::pair<int, int> cyclic_sum_open(const FrameChain& chain,
                                    const ToleranceProfile& tol) {
  int minus = 0, plus = 0;
  for (int j = 1; j < chain.m(); ++j) {
    const ComparativeIndex c = comparative_index(chain.frame(j), chain.frame(j + 1), tol);
    minus += c.mu();
    plus += c.mu_star();
  }
  const ComparativeIndex skew = comparative_index(chain.frame(1), chain.frame(chain.m()), tol);
  return {minus - skew.mu(), plus - skew.mu_star()};
}

CyclicSums cyclic_sums(const FrameChain& chain, const ToleranceProfile& tol) {
  CyclicSums s;
  std::tie(s.mu_minus, s.mu_plus) = cyclic_sum_closed(chain, tol);
  std::tie(s.nu_minus, s.nu_plus) = cyclic_sum_open(chain, tol);
  return s;
}

WronskianBlockMatrix::WronskianBlockMatrix(const FrameChain& chain)
    : n_(chain.n()), m_(chain.m()), S_(Matrix::Zero(chain.m() * chain.n(),
                                                    chain.m() * chain.n())),
      scale_(chain_scale(chain)) {
  for (int i = 1; i <= m_; ++i)
    for (int j = i + 1; j <= m_; ++j) {
      const Matrix w = wronskian(chain.frame(i), chain.frame(j));
      S_.block((i - 1) * n_, (j - 1) * n_, n_, n_) = w;
      S_.block((j - 1) * n_, (i - 1) * n_, n_, n_) = w.transpose();
    }
}

Matrix WronskianBlockMatrix::block(int i, int j) const {
  return S_.block((i - 1) * n_, (j - 1) * n_, n_, n_);
}

Matrix WronskianBlockMatrix::principal_submatrix(int lo, int hi) const {
  if (lo < 1 || hi > m_ || lo > hi)
    throw std::invalid_argument("WronskianBlockMatrix: bad block range");
  const int size = (hi - lo + 1) * n_;
  return S_.block((lo - 1) * n_, (lo - 1) * n_, size, size);
}

Matrix WronskianBlockMatrix::closing_row() const {
  // Row of true Wronskians of the last frame: w(Y_m, Y_j) = -S(m, j).
  Matrix W(n_, (m_ - 1) * n_);
  for (int j = 1; j < m_; ++j) W.middleCols((j - 1) * n_, n_) = -block(m_, j);
  return W;
}

Matrix WronskianBlockMatrix::closing_row_tail() const {
  return closing_row().rightCols((m_ - 2) * n_);
}

Matrix WronskianBlockMatrix::leading_row_tail() const {
  Matrix K(n_, (m_ - 2) * n_);
  for (int j = 2; j < m_; ++j) K.middleCols((j - 2) * n_, n_) = block(1, j);
  return K;
}

ReducedBlocks reduced_blocks(const WronskianBlockMatrix& S,
                             const ToleranceProfile& tol) {
  if (S.m() < 3)
    throw std::invalid_argument("reduced_blocks: need at least three frames");
  const int n = S.n(), m = S.m();
  const Matrix w_m1 = -S.block(m, 1);  // w(Y_m, Y_1)
  const Matrix N = S.closing_row_tail();
  const Matrix K = S.leading_row_tail();
  const KernelProjectors proj = kernel_projectors(w_m1, tol, S.scale());
  const Matrix w_pinv = pseudoinverse(w_m1, tol, S.scale());

  ReducedBlocks rb;
  rb.M_tilde = proj.left * N;
  rb.M = proj.right * K;
  rb.D = K.transpose() * w_pinv * N;
  rb.scale = std::max(S.scale(), K.norm() * w_pinv.norm() * N.norm());
  const int inner = (m - 2) * n;
  rb.S_bar = Matrix::Zero(n + inner, n + inner);
  rb.S_bar.topRightCorner(n, inner) = rb.M_tilde;
  rb.S_bar.bottomLeftCorner(inner, n) = rb.M_tilde.transpose();
  rb.S_bar.bottomRightCorner(inner, inner) =
      S.principal_submatrix(2, m - 1) - rb.D - rb.D.transpose();
  return rb;
}

std::pair<int, int> cyclic_sum_via_inertia(const FrameChain& chain,
                                           const ToleranceProfile& tol) {
  const WronskianBlockMatrix S(chain);
  const InertiaTriple i = inertia(S.full(), tol, S.scale());
  return {i.positive, i.negative};  // (ind(-S), ind(+S))
}

namespace {

// F_W (S_{1..m-1}) F_W, the projector-reduced core shared by both routes.
Matrix projector_reduced_core(const WronskianBlockMatrix& S,
                              const ToleranceProfile& tol) {
  const Matrix W = S.closing_row();
  const Matrix F = kernel_projectors(W, tol, S.scale()).right;
  return symmetrized(F * S.principal_submatrix(1, S.m() - 1) * F);
}

}  // namespace

std::pair<int, int> cyclic_sum_via_reduction(const FrameChain& chain,
                                             ReducedRoute route,
                                             const ToleranceProfile& tol) {
  const WronskianBlockMatrix S(chain);
  if (route == ReducedRoute::projector) {
    const Matrix G = projector_reduced_core(S, tol);
    const int base = rank_of(S.closing_row(), tol, S.scale());
    return {base + ind_minus(G, tol, S.scale()),
            base + ind_plus(G, tol, S.scale())};
  }
  if (chain.m() < 3)
    throw std::invalid_argument(
        "cyclic_sum_via_reduction: schur route needs at least three frames");
  const ReducedBlocks rb = reduced_blocks(S, tol);
  const int base =
      rank_of(-S.block(chain.m(), 1), tol, S.scale());  // rank w(Y_m, Y_1)
  return {base + ind_minus(rb.S_bar, tol, rb.scale),
          base + ind_plus(rb.S_bar, tol, rb.scale)};
}

std::pair<int, int> open_sum_via_reduction(const FrameChain& chain,
                                           ReducedRoute route,
                                           const ToleranceProfile& tol) {
  const WronskianBlockMatrix S(chain);
  if (route == ReducedRoute::projector) {
    const Matrix G = projector_reduced_core(S, tol);
    // rank of the projected tail M_tilde = (I - w w^+) N; empty tail at m = 2.
    const Matrix w_m1 = -S.block(chain.m(), 1);
    const Matrix M_tilde =
        kernel_projectors(w_m1, tol, S.scale()).left * S.closing_row_tail();
    const int base = rank_of(M_tilde, tol, S.scale());
    return {base + ind_minus(G, tol, S.scale()),
            base + ind_plus(G, tol, S.scale())};
  }
  if (chain.m() < 3)
    throw std::invalid_argument(
        "open_sum_via_reduction: schur route needs at least three frames");
  const ReducedBlocks rb = reduced_blocks(S, tol);
  return {ind_minus(rb.S_bar, tol, rb.scale),
          ind_plus(rb.S_bar, tol, rb.scale)};
}

std::vector<IdentityCheck> chain_identity_checks(
    const FrameChain& chain, const SymplecticMatrix& W,
    const std::vector<Matrix>& right_factors, const ToleranceProfile& tol) {
  const int m = chain.m();
  std::vector<IdentityCheck> checks;
  const CyclicSums base = cyclic_sums(chain, tol);
  const auto push4 = [&checks](const std::string& name, const CyclicSums& lhs,
                               const CyclicSums& rhs) {
    checks.push_back({name + ": mu-", lhs.mu_minus, rhs.mu_minus});
    checks.push_back({name + ": mu+", lhs.mu_plus, rhs.mu_plus});
    checks.push_back({name + ": nu-", lhs.nu_minus, rhs.nu_minus});
    checks.push_back({name + ": nu+", lhs.nu_plus, rhs.nu_plus});
  };

  // Right scaling Y_j -> Y_j C_j leaves every sum unchanged.
  if (static_cast<int>(right_factors.size()) != m)
    throw std::invalid_argument("chain_identity_checks: need one right factor per frame");
  std::vector<LagrangianFrame> scaled;
  scaled.reserve(m);
  for (int j = 1; j <= m; ++j)
    scaled.push_back(chain.frame(j).scaled(right_factors[j - 1], tol));
  push4("right scaling invariance", cyclic_sums(FrameChain(scaled), tol), base);

  // Simultaneous symplectic transformation leaves every sum unchanged.
  push4("symplectic invariance", cyclic_sums(chain.transformed(W), tol), base);

  // Closed sums are invariant under cyclic shifts.
  for (int shift = 1; shift < m; ++shift) {
    const auto [mu_minus, mu_plus] = cyclic_sum_closed(chain.rotated(shift), tol);
    checks.push_back({"cyclic shift " + std::to_string(shift) + ": mu-",
                      mu_minus, base.mu_minus});
    checks.push_back({"cyclic shift " + std::to_string(shift) + ": mu+",
                      mu_plus, base.mu_plus});
  }

  // Reversal swaps the two signs.
  const CyclicSums rev = cyclic_sums(chain.reversed(), tol);
  checks.push_back({"reversal duality: mu", rev.mu_minus, base.mu_plus});
  checks.push_back({"reversal duality: mu (dual)", rev.mu_plus, base.mu_minus});
  checks.push_back({"reversal duality: nu", rev.nu_minus, base.nu_plus});
  checks.push_back({"reversal duality: nu (dual)", rev.nu_plus, base.nu_minus});

  // Rank identities tying the four sums to consecutive Wronskian ranks.
  const double sw = chain_scale(chain);
  int consecutive_ranks = 0;
  for (int j = 1; j < m; ++j)
    consecutive_ranks +=
        rank_of(wronskian(chain.frame(j), chain.frame(j + 1)), tol, sw);
  const int closing_rank =
      rank_of(wronskian(chain.frame(m), chain.frame(1)), tol, sw);
  checks.push_back({"closed sum total", base.mu_minus + base.mu_plus,
                    consecutive_ranks + closing_rank});
  checks.push_back({"open sum total", base.nu_minus + base.nu_plus,
                    consecutive_ranks - closing_rank});
  checks.push_back({"closed/open gap: -", base.mu_minus,
                    base.nu_minus + closing_rank});
  checks.push_back({"closed/open gap: +", base.mu_plus,
                    base.nu_plus + closing_rank});
  checks.push_back({"open sums nonnegative",
                    base.nu_minus >= 0 && base.nu_plus >= 0 ? 1 : 0, 1});

  // Splice recurrence: open sums add over a split through Y_1.
  for (int l = 2; l < m; ++l) {
    std::vector<int> head, tail{1};
    for (int j = 1; j <= l; ++j) head.push_back(j);
    for (int j = l; j <= m; ++j) tail.push_back(j);
    const CyclicSums a = cyclic_sums(chain.subchain(head), tol);
    const CyclicSums b = cyclic_sums(chain.subchain(tail), tol);
    checks.push_back({"splice at " + std::to_string(l) + ": nu-",
                      a.nu_minus + b.nu_minus, base.nu_minus});
    checks.push_back({"splice at " + std::to_string(l) + ": nu+",
                      a.nu_plus + b.nu_plus, base.nu_plus});
  }

  // Decomposition of the open sums into anchored triples.
  if (m >= 3) {
    int triples_minus = 0, triples_plus = 0;
    for (int j = 2; j < m; ++j) {
      const CyclicSums t = cyclic_sums(chain.subchain({1, j, j + 1}), tol);
      triples_minus += t.nu_minus;
      triples_plus += t.nu_plus;
    }
    checks.push_back({"triple decomposition: nu-", triples_minus, base.nu_minus});
    checks.push_back({"triple decomposition: nu+", triples_plus, base.nu_plus});
  }

  // Reduction through the completion of the last frame: with Zm (0; I) = Y_m,
  // the open sums are plain index sums of the transformed chain and the
  // closed sums add the closing Wronskian rank.
  {
    const SymplecticMatrix Zm_inv = frame_to_symplectic(chain.frame(m), tol).inverse();
    int sum_mu = 0, sum_mu_star = 0;
    for (int j = 1; j + 1 < m; ++j) {
      const ComparativeIndex c = comparative_index(
          Zm_inv.act(chain.frame(j)), Zm_inv.act(chain.frame(j + 1)), tol);
      sum_mu += c.mu();
      sum_mu_star += c.mu_star();
    }
    checks.push_back({"last-frame reduction: nu-", sum_mu, base.nu_minus});
    checks.push_back({"last-frame reduction: nu+", sum_mu_star, base.nu_plus});
    checks.push_back({"last-frame reduction: mu-", sum_mu + closing_rank,
                      base.mu_minus});
    checks.push_back({"last-frame reduction: mu+", sum_mu_star + closing_rank,
                      base.mu_plus});
  }

  // Transposing the first two frames of a triple complements the closed sums
  // within the total of all pairwise Wronskian ranks.
  if (m == 3) {
    int all_pairs = 0;
    for (int i = 1; i <= 3; ++i)
      for (int j = i + 1; j <= 3; ++j)
        all_pairs += rank_of(wronskian(chain.frame(i), chain.frame(j)), tol, sw);
    const CyclicSums swapped = cyclic_sums(chain.subchain({2, 1, 3}), tol);
    checks.push_back({"transposition: mu-", base.mu_minus,
                      all_pairs - swapped.mu_minus});
    checks.push_back({"transposition: mu+", base.mu_plus,
                      all_pairs - swapped.mu_plus});
  }

  // Four-frame cocycle of anchored triples.
  if (m == 4) {
    const CyclicSums t123 = cyclic_sums(chain.subchain({1, 2, 3}), tol);
    const CyclicSums t124 = cyclic_sums(chain.subchain({1, 2, 4}), tol);
    const CyclicSums t134 = cyclic_sums(chain.subchain({1, 3, 4}), tol);
    const CyclicSums t234 = cyclic_sums(chain.subchain({2, 3, 4}), tol);
    checks.push_back({"cocycle: nu-", t124.nu_minus - t123.nu_minus,
                      t134.nu_minus - t234.nu_minus});
    checks.push_back({"cocycle: nu+", t124.nu_plus - t123.nu_plus,
                      t134.nu_plus - t234.nu_plus});
  }

  return checks;
}

CyclicSumBounds cyclic_sum_bounds(const FrameChain& chain,
                                  const ToleranceProfile& tol) {
  const int m = chain.m();
  const double sw = chain_scale(chain);
  CyclicSumBounds b;
  b.sums = cyclic_sums(chain, tol);

  int r = 0;
  for (int i = 1; i <= m; ++i)
    for (int j = i + 1; j <= m; ++j)
      r = std::max(r,
                   rank_of(wronskian(chain.frame(i), chain.frame(j)), tol, sw));
  b.r_lower = r;

  const SymplecticMatrix R = find_transversal_rotation(chain.frames(), tol);
  const LagrangianFrame anchor = R.vertical_image();
  const auto edge_bound = [&](int from, int to) {
    const int direct =
        rank_of(wronskian(chain.frame(from), chain.frame(to)), tol, sw);
    const int through = rank_of(wronskian(anchor, chain.frame(to)), tol, sw);
    return std::min(direct, through);
  };
  int p = edge_bound(m, 1);
  for (int j = 1; j < m; ++j) p += edge_bound(j, j + 1);
  b.p_upper = p;

  const int closing_rank =
      rank_of(wronskian(chain.frame(m), chain.frame(1)), tol, sw);
  b.nu_lower = b.r_lower - closing_rank;
  b.nu_upper = b.p_upper - closing_rank;

  b.ok = b.r_lower <= b.sums.mu_minus && b.sums.mu_minus <= b.p_upper &&
         b.r_lower <= b.sums.mu_plus && b.sums.mu_plus <= b.p_upper &&
         b.nu_lower <= b.sums.nu_minus && b.sums.nu_minus <= b.nu_upper &&
         b.nu_lower <= b.sums.nu_plus && b.sums.nu_plus <= b.nu_upper;
  return b;
}

CyclicSums transversal_chart_sums(const FrameChain& chain,
                                  const ToleranceProfile& tol) {
  const SymplecticMatrix R_inv =
      find_transversal_rotation(chain.frames(), tol).inverse();
  const int m = chain.m();
  std::vector<Matrix> Q;
  Q.reserve(m);
  double sq = 1.0;
  for (int j = 1; j <= m; ++j) {
    const LagrangianFrame rotated = R_inv.act(chain.frame(j));
    Q.push_back(symmetrized(rotated.lower() * rotated.upper().inverse()));
    sq = std::max(sq, Q.back().norm());
  }

  CyclicSums s;
  for (int j = 0; j + 1 < m; ++j) {
    const Matrix d = Q[j] - Q[j + 1];
    s.mu_minus += ind_minus(d, tol, sq);
    s.mu_plus += ind_plus(d, tol, sq);
  }
  s.nu_minus = s.mu_minus - ind_minus(Q[0] - Q[m - 1], tol, sq);
  s.nu_plus = s.mu_plus - ind_plus(Q[0] - Q[m - 1], tol, sq);
  s.mu_minus += ind_minus(Q[m - 1] - Q[0], tol, sq);
  s.mu_plus += ind_plus(Q[m - 1] - Q[0], tol, sq);
  return s;
}

int subspace_sum_dimension(const std::vector<LagrangianFrame>& frames,
                           const ToleranceProfile& tol) {
  if (frames.empty())
    throw std::invalid_argument("subspace_sum_dimension: no frames");
  const int n = frames.front().n();
  Matrix stacked(2 * n, static_cast<Eigen::Index>(frames.size()) * n);
  for (std::size_t k = 0; k < frames.size(); ++k)
    stacked.middleCols(static_cast<Eigen::Index>(k) * n, n) = frames[k].matrix();
  return rank_of(stacked, tol);
}

int subspace_intersection_dimension(const std::vector<LagrangianFrame>& frames,
                                    const ToleranceProfile& tol) {
  if (frames.empty())
    throw std::invalid_argument("subspace_intersection_dimension: no frames");
  const int n = frames.front().n();
  // x lies in every subspace iff every complementary projector kills it.
  Matrix stacked(static_cast<Eigen::Index>(frames.size()) * 2 * n, 2 * n);
  for (std::size_t k = 0; k < frames.size(); ++k) {
    const Matrix& Y = frames[k].matrix();
    stacked.middleRows(static_cast<Eigen::Index>(k) * 2 * n, 2 * n) =
        Matrix::Identity(2 * n, 2 * n) - Y * pseudoinverse(Y, tol);
  }
  // Orthogonal projectors have unit scale regardless of the frame norms.
  return 2 * n - rank_of(stacked, tol, 1.0);
}

}  // namespace compidx
