// Acceptance battery.  Each numbered criterion below is verified end to end
// and reported as a single [PASS]/[FAIL] line; the process exits nonzero if
// any line fails.  All instances are seeded, so failures are reproducible.

#include <chrono>
#include <cstdint>
#include <cstdio>
#include <string>
#include <utility>
#include <vector>

#include "compidx/comparative_index.hpp"
#include "compidx/cyclic_sums.hpp"
#include "compidx/discrete_systems.hpp"
#include "compidx/frames.hpp"
#include "compidx/kashiwara.hpp"
#include "compidx/linalg.hpp"
#include "compidx/verification.hpp"
#include "fixtures.hpp"

namespace {

using compidx::CyclicSums;
using compidx::FrameChain;
using compidx::LagrangianFrame;
using compidx::Matrix;
using compidx::ReducedRoute;
using compidx::ToleranceProfile;

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t mix(std::uint64_t seed, std::uint64_t salt) {
  return splitmix64(seed ^ splitmix64(salt));
}

double max_abs(const Matrix& A) {
  return A.size() == 0 ? 0.0 : A.cwiseAbs().maxCoeff();
}

struct Tracker {
  bool all_pass = true;

  void report(int index, bool pass, const std::string& detail) {
    std::printf("[%s] criterion %d: %s\n", pass ? "PASS" : "FAIL", index,
                detail.c_str());
    all_pass = all_pass && pass;
  }
};

std::vector<FrameChain> build_chain_corpus(int count, std::uint64_t base,
                                           int m_lo, int m_hi) {
  std::vector<FrameChain> corpus;
  corpus.reserve(count);
  for (int t = 0; t < count; ++t) {
    const std::uint64_t s = mix(base, t);
    const int n = 1 + static_cast<int>(mix(s, 1) % 3);
    const int m = m_lo + static_cast<int>(mix(s, 2) % (m_hi - m_lo + 1));
    corpus.push_back(compidx::random_chain(n, m, mix(s, 3), t % 4 == 0));
  }
  return corpus;
}

}  // namespace

int main() {
  Tracker tracker;
  const ToleranceProfile tol;

  // Corpus shared by criteria 1, 2, and 8: 500 chains, n in 1..3, m in 2..6,
  // every fourth chain forced to contain degenerate frames.
  const auto corpus = build_chain_corpus(500, 0xC0FFEE, 2, 6);

  // 1. Closed cyclic sums equal the eigenvalue counts of the full Wronskian
  //    block matrix on all 500 chains, within a minute.
  {
    const auto start = std::chrono::steady_clock::now();
    int bad = 0;
    for (const auto& chain : corpus) {
      const auto sums = compidx::cyclic_sums(chain, tol);
      const auto [mu_minus, mu_plus] = compidx::cyclic_sum_via_inertia(chain, tol);
      if (sums.mu_minus != mu_minus || sums.mu_plus != mu_plus) ++bad;
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    char detail[160];
    std::snprintf(detail, sizeof detail,
                  "closed sums match block-matrix inertia on %zu/500 chains "
                  "in %.1fs (budget 60s)",
                  corpus.size() - bad, secs);
    tracker.report(1, bad == 0 && secs < 60.0, detail);
  }

  // 2. Open cyclic sums equal both reduced-matrix routes on the same corpus.
  {
    int bad = 0;
    long long checked = 0;
    for (const auto& chain : corpus) {
      const auto sums = compidx::cyclic_sums(chain, tol);
      const auto projector =
          compidx::open_sum_via_reduction(chain, ReducedRoute::projector, tol);
      ++checked;
      if (projector.first != sums.nu_minus || projector.second != sums.nu_plus)
        ++bad;
      if (chain.m() >= 3) {
        const auto schur =
            compidx::open_sum_via_reduction(chain, ReducedRoute::schur, tol);
        ++checked;
        if (schur.first != sums.nu_minus || schur.second != sums.nu_plus)
          ++bad;
      }
    }
    char detail[160];
    std::snprintf(detail, sizeof detail,
                  "open sums match projector/elimination reductions in "
                  "%lld route comparisons, %d mismatches",
                  checked, bad);
    tracker.report(2, bad == 0, detail);
  }

  // 3. Kashiwara index: quadratic-form signature equals both cyclic-sum
  //    differences and rebuilds all four sums, on 300 chains with m in 3..5,
  //    plus the hand-checked triple.
  {
    int bad = 0;
    const auto chains = build_chain_corpus(300, 0xBADA55, 3, 5);
    for (const auto& chain : chains) {
      const int tau = compidx::kashiwara_index(chain, tol);
      const auto sums = compidx::cyclic_sums(chain, tol);
      if (tau != sums.mu_plus - sums.mu_minus) ++bad;
      if (tau != sums.nu_plus - sums.nu_minus) ++bad;
      if (!(compidx::cyclic_sums_from_kashiwara(chain, tol) == sums)) ++bad;
    }
    const auto triple = fixtures::curated_triple();
    const bool curated =
        compidx::kashiwara_index(triple, tol) == -1 &&
        compidx::cyclic_sums(triple, tol) == CyclicSums{2, 1, 1, 0};
    char detail[160];
    std::snprintf(detail, sizeof detail,
                  "signature route consistent on 300 chains (%d mismatches); "
                  "hand-checked triple gives tau=-1 with sums (2,1): %s",
                  bad, curated ? "yes" : "no");
    tracker.report(3, bad == 0 && curated, detail);
  }

  // 4. Pair identity battery on 500 seeded (W, Y, Yhat) instances, plus the
  //    hand-computed coordinate anchors.
  {
    int bad = 0;
    long long identities = 0;
    for (int t = 0; t < 500; ++t) {
      const std::uint64_t s = mix(0xFACADE, t);
      const int n = 1 + static_cast<int>(mix(s, 1) % 3);
      LagrangianFrame Y = compidx::random_frame(n, mix(s, 2));
      LagrangianFrame Yhat = compidx::random_frame(n, mix(s, 3));
      if (t % 4 == 0) {
        const auto degenerate = compidx::random_chain(n, 2, mix(s, 4), true);
        Y = degenerate.frame(1);
        Yhat = degenerate.frame(2);
      }
      const auto W = compidx::random_symplectic(n, mix(s, 5));
      const auto checks =
          compidx::pair_identity_checks(Y, Yhat, W, mix(s, 6), tol);
      identities += static_cast<long long>(checks.size());
      if (!compidx::all_pass(checks)) ++bad;
    }
    const auto H = fixtures::frame1(1, 0);
    const auto V = fixtures::frame1(0, 1);
    const auto D = fixtures::frame1(1, 1);
    const auto hd = compidx::comparative_index(H, D, tol);
    const auto vd = compidx::comparative_index(V, D, tol);
    const auto dh = compidx::comparative_index(D, H, tol);
    const bool anchors = hd.mu() == 0 && hd.mu_star() == 1 && vd.mu() == 1 &&
                         vd.mu_star() == 1 && dh.mu() == 1 &&
                         dh.mu_star() == 0;
    char detail[160];
    std::snprintf(detail, sizeof detail,
                  "%lld pair identities over 500 instances, %d failing; "
                  "hand anchors hold: %s",
                  identities, bad, anchors ? "yes" : "no");
    tracker.report(4, bad == 0 && anchors, detail);
  }

  // Systems corpus shared by criteria 5 and 6.
  std::vector<compidx::SymplecticSystem> systems;
  for (int t = 0; t < 100; ++t) {
    const std::uint64_t s = mix(0x5157E6, t);
    const int n = 1 + static_cast<int>(mix(s, 1) % 2);
    const int N = static_cast<int>(mix(s, 2) % 6);
    systems.push_back(compidx::random_system(n, N, mix(s, 3)));
  }

  // 5. Discrete-system identities on 100 random systems (n <= 2, N <= 5),
  //    plus the quarter-rotation system with every boundary count frozen.
  {
    int bad = 0;
    long long identities = 0;
    for (int t = 0; t < 100; ++t) {
      const auto checks = compidx::system_identity_checks(
          systems[t], mix(0x5157E6, 1000 + t), tol);
      identities += static_cast<long long>(checks.size());
      if (!compidx::all_pass(checks)) ++bad;
    }

    const compidx::SymplecticMatrix J(compidx::symplectic_form(1));
    const compidx::SymplecticSystem rotation({J, J});
    const auto blocks = compidx::principal_block_matrix(rotation, tol);
    Matrix S0(3, 3), S0_bar(2, 2);
    S0 << 0, 1, 0, 1, 0, 1, 0, 1, 0;
    S0_bar << 0, -1, -1, 0;
    const auto counts = compidx::focal_counts_via_inertia(rotation, tol);
    const auto at0 = compidx::principal_solution(rotation, 0, tol);
    const auto atEnd = compidx::principal_solution(rotation, 2, tol);
    const bool curated =
        max_abs(blocks.S0 - S0) == 0.0 && blocks.S0_bar.has_value() &&
        max_abs(*blocks.S0_bar - S0_bar) == 0.0 && counts.l_star_at_0 == 1 &&
        counts.l_at_0.value_or(-1) == 1 &&
        compidx::forward_focal_multiplicities(rotation, at0, tol).l_total == 1 &&
        compidx::backward_focal_multiplicities(rotation, at0, tol)
                .l_star_total == 1 &&
        compidx::forward_focal_multiplicities(rotation, atEnd, tol).l_total ==
            1 &&
        compidx::backward_focal_multiplicities(rotation, atEnd, tol)
                .l_star_total == 1;
    char detail[160];
    std::snprintf(detail, sizeof detail,
                  "%lld system identities over 100 systems, %d failing; "
                  "quarter-rotation system all counts 1 with frozen block "
                  "matrices: %s",
                  identities, bad, curated ? "yes" : "no");
    tracker.report(5, bad == 0 && curated, detail);
  }

  // 6. Disconjugacy verdicts: the constant shear system is disconjugate, the
  //    quarter-rotation system is not, and on every random system the verdict
  //    agrees with "no forward focal points of the principal solution at 0".
  {
    Matrix shear(2, 2);
    shear << 1, 1, 0, 1;
    const compidx::SymplecticMatrix S(shear);
    const compidx::SymplecticSystem constant({S, S, S, S});
    const bool constant_ok =
        compidx::disconjugacy_check(constant, tol).disconjugate;

    const compidx::SymplecticMatrix J(compidx::symplectic_form(1));
    const compidx::SymplecticSystem rotation({J, J});
    const bool rotation_ok =
        !compidx::disconjugacy_check(rotation, tol).disconjugate;

    int bad = 0;
    for (const auto& system : systems) {
      const auto basis = compidx::principal_solution(system, 0, tol);
      const int l =
          compidx::forward_focal_multiplicities(system, basis, tol).l_total;
      const bool verdict =
          system.N() >= 1
              ? compidx::disconjugacy_check(system, tol).disconjugate
              : l == 0;
      if (verdict != (l == 0)) ++bad;
    }
    char detail[160];
    std::snprintf(detail, sizeof detail,
                  "constant shear disconjugate: %s; quarter rotation not: %s; "
                  "verdict matches zero focal count on 100 systems "
                  "(%d mismatches)",
                  constant_ok ? "yes" : "no", rotation_ok ? "yes" : "no", bad);
    tracker.report(6, constant_ok && rotation_ok && bad == 0, detail);
  }

  // 7. Integer fixtures stay route-consistent when the eigenvalue-zero
  //    cutoff factor moves from 10 to 1000.
  {
    const auto fixtures_list = fixtures::integer_chain_fixtures();
    int bad = 0;
    std::vector<CyclicSums> at_low;
    for (int pass = 0; pass < 2; ++pass) {
      ToleranceProfile kappa_tol;
      kappa_tol.eig_zero_factor = pass == 0 ? 10.0 : 1000.0;
      for (std::size_t c = 0; c < fixtures_list.size(); ++c) {
        const auto& chain = fixtures_list[c];
        const auto sums = compidx::cyclic_sums(chain, kappa_tol);
        const auto [mu_minus, mu_plus] =
            compidx::cyclic_sum_via_inertia(chain, kappa_tol);
        const auto projector = compidx::open_sum_via_reduction(
            chain, ReducedRoute::projector, kappa_tol);
        const auto closed_projector = compidx::cyclic_sum_via_reduction(
            chain, ReducedRoute::projector, kappa_tol);
        bool ok = sums.mu_minus == mu_minus && sums.mu_plus == mu_plus &&
                  closed_projector.first == sums.mu_minus &&
                  closed_projector.second == sums.mu_plus &&
                  projector.first == sums.nu_minus &&
                  projector.second == sums.nu_plus;
        if (chain.m() >= 3) {
          const auto schur_closed = compidx::cyclic_sum_via_reduction(
              chain, ReducedRoute::schur, kappa_tol);
          const auto schur_open = compidx::open_sum_via_reduction(
              chain, ReducedRoute::schur, kappa_tol);
          ok = ok && schur_closed.first == sums.mu_minus &&
               schur_closed.second == sums.mu_plus &&
               schur_open.first == sums.nu_minus &&
               schur_open.second == sums.nu_plus;
        }
        if (pass == 0)
          at_low.push_back(sums);
        else
          ok = ok && at_low[c] == sums;  // values stable across the cutoffs
        if (!ok) ++bad;
      }
    }
    char detail[160];
    std::snprintf(detail, sizeof detail,
                  "%zu integer chains route-consistent and value-stable at "
                  "cutoff factors 10 and 1000 (%d failures)",
                  fixtures_list.size(), bad);
    tracker.report(7, fixtures_list.size() >= 20 && bad == 0, detail);
  }

  // 8. The rank-derived lower and upper bounds contain every computed sum on
  //    the 500-chain corpus.
  {
    int bad = 0;
    for (const auto& chain : corpus) {
      const auto bounds = compidx::cyclic_sum_bounds(chain, tol);
      const bool inside = bounds.ok &&
                          bounds.r_lower <= bounds.sums.mu_minus &&
                          bounds.sums.mu_minus <= bounds.p_upper &&
                          bounds.r_lower <= bounds.sums.mu_plus &&
                          bounds.sums.mu_plus <= bounds.p_upper &&
                          bounds.nu_lower <= bounds.sums.nu_minus &&
                          bounds.sums.nu_minus <= bounds.nu_upper &&
                          bounds.nu_lower <= bounds.sums.nu_plus &&
                          bounds.sums.nu_plus <= bounds.nu_upper;
      if (!inside) ++bad;
    }
    char detail[160];
    std::snprintf(detail, sizeof detail,
                  "sum bounds hold on %zu/500 chains", corpus.size() - bad);
    tracker.report(8, bad == 0, detail);
  }

  return tracker.all_pass ? 0 : 1;
}
