#include "compidx/discrete_systems.hpp"

#include <gtest/gtest.h>

#include <stdexcept>

#include "compidx/verification.hpp"
#include "fixtures.hpp"

namespace {

using compidx::LagrangianFrame;
using compidx::Matrix;
using compidx::SymplecticMatrix;
using compidx::SymplecticSystem;

double max_abs(const Matrix& A) {
  return A.size() == 0 ? 0.0 : A.cwiseAbs().maxCoeff();
}

// y_{k+1} = J y_k twice: a quarter rotation per step, n = 1, N = 1.
SymplecticSystem rotation_system() {
  const SymplecticMatrix J(compidx::symplectic_form(1));
  return SymplecticSystem({J, J});
}

// Constant upper-triangular steps [1 1; 0 1]: disconjugate for every N.
SymplecticSystem constant_system(int N) {
  Matrix S(2, 2);
  S << 1, 1, 0, 1;
  return SymplecticSystem(
      std::vector<SymplecticMatrix>(N + 1, SymplecticMatrix(S)));
}

TEST(SymplecticSystem, ConstructorValidation) {
  EXPECT_THROW(SymplecticSystem({}), std::invalid_argument);
  const SymplecticMatrix J1(compidx::symplectic_form(1));
  const SymplecticMatrix J2(compidx::symplectic_form(2));
  EXPECT_THROW((SymplecticSystem({J1, J2})), std::invalid_argument);
  EXPECT_EQ(rotation_system().N(), 1);
  EXPECT_EQ(rotation_system().n(), 1);
}

TEST(Propagation, FramesFollowTheRecursion) {
  const auto system = compidx::random_system(2, 4, 11);
  const auto Y0 = compidx::random_frame(2, 12);
  const auto basis = compidx::propagate(system, Y0);
  ASSERT_EQ(basis.frames.size(), 6u);
  ASSERT_EQ(basis.fundamentals.size(), 6u);
  EXPECT_EQ(max_abs(basis.frame(0).matrix() - Y0.matrix()), 0.0);
  for (int k = 0; k <= 4; ++k) {
    EXPECT_LT(max_abs(basis.frame(k + 1).matrix() -
                      system.coefficient(k).matrix() * basis.frame(k).matrix()),
              1e-9);
    EXPECT_LT(max_abs(basis.fundamental(k + 1).matrix() -
                      system.coefficient(k).matrix() *
                          basis.fundamental(k).matrix()),
              1e-9);
  }
  for (int k = 0; k <= 5; ++k) {
    EXPECT_TRUE(compidx::validate_symplectic(basis.fundamental(k).matrix()).ok);
    EXPECT_EQ(max_abs(basis.fundamental(k).matrix().rightCols(2) -
                      basis.frame(k).matrix()),
              0.0);
  }
}

TEST(PrincipalSolution, AnchoredAtEveryIndex) {
  const auto system = compidx::random_system(2, 3, 21);
  for (int M = 0; M <= 4; ++M) {
    const auto basis = compidx::principal_solution(system, M);
    EXPECT_EQ(max_abs(basis.fundamental(M).matrix() - Matrix::Identity(4, 4)),
              0.0);
    for (int k = 0; k <= 3; ++k)
      EXPECT_LT(max_abs(basis.fundamental(k + 1).matrix() -
                        system.coefficient(k).matrix() *
                            basis.fundamental(k).matrix()),
                1e-8);
  }
  EXPECT_THROW(compidx::principal_solution(system, 5), std::invalid_argument);
  EXPECT_THROW(compidx::principal_solution(system, -1), std::invalid_argument);
}

TEST(RotationSystem, AllFourFocalCountsAreOne) {
  const auto system = rotation_system();
  const auto at0 = compidx::principal_solution(system, 0);
  const auto atEnd = compidx::principal_solution(system, 2);
  EXPECT_EQ(compidx::forward_focal_multiplicities(system, at0).l_total, 1);
  EXPECT_EQ(compidx::backward_focal_multiplicities(system, at0).l_star_total, 1);
  EXPECT_EQ(compidx::forward_focal_multiplicities(system, atEnd).l_total, 1);
  EXPECT_EQ(compidx::backward_focal_multiplicities(system, atEnd).l_star_total,
            1);
}

TEST(RotationSystem, FrozenPrincipalBlockMatrices) {
  const auto blocks = compidx::principal_block_matrix(rotation_system());
  Matrix S0(3, 3);
  S0 << 0, 1, 0, 1, 0, 1, 0, 1, 0;
  EXPECT_EQ(max_abs(blocks.S0 - S0), 0.0);
  ASSERT_TRUE(blocks.S0_bar.has_value());
  Matrix S0_bar(2, 2);
  S0_bar << 0, -1, -1, 0;
  EXPECT_EQ(max_abs(*blocks.S0_bar - S0_bar), 0.0);
  ASSERT_TRUE(blocks.M_tilde.has_value());
  EXPECT_EQ(max_abs(*blocks.M_tilde - Matrix::Constant(1, 1, -1.0)), 0.0);

  const auto counts = compidx::focal_counts_via_inertia(rotation_system());
  EXPECT_EQ(counts.l_star_at_0, 1);
  ASSERT_TRUE(counts.l_at_0.has_value());
  EXPECT_EQ(*counts.l_at_0, 1);
}

TEST(RotationSystem, NotDisconjugate) {
  const auto cert = compidx::disconjugacy_check(rotation_system());
  EXPECT_FALSE(cert.disconjugate);
  EXPECT_FALSE(cert.m_tilde_vanishes);
  EXPECT_GT(cert.max_eigenvalue, 0.0);
}

TEST(ConstantSystem, DisconjugateWithCertificate) {
  const auto system = constant_system(1);
  const auto blocks = compidx::principal_block_matrix(system);
  Matrix S0(3, 3);
  S0 << 0, 1, 2, 1, 0, 1, 2, 1, 0;
  EXPECT_EQ(max_abs(blocks.S0 - S0), 0.0);
  ASSERT_TRUE(blocks.S0_bar.has_value());
  Matrix S0_bar(2, 2);
  S0_bar << 0, 0, 0, -1;
  EXPECT_LT(max_abs(*blocks.S0_bar - S0_bar), 1e-12);

  const auto cert = compidx::disconjugacy_check(system);
  EXPECT_TRUE(cert.disconjugate);
  EXPECT_TRUE(cert.m_tilde_vanishes);
  EXPECT_TRUE(cert.reduced_block_nonpositive);
  EXPECT_LE(cert.max_eigenvalue, 1e-12);

  // Backward focal points do exist for this system: l* at 0 is 1.
  const auto counts = compidx::focal_counts_via_inertia(system);
  EXPECT_EQ(counts.l_star_at_0, 1);
  ASSERT_TRUE(counts.l_at_0.has_value());
  EXPECT_EQ(*counts.l_at_0, 0);

  for (int N = 2; N <= 4; ++N) {
    const auto longer = constant_system(N);
    EXPECT_TRUE(compidx::disconjugacy_check(longer).disconjugate) << "N " << N;
    const auto basis = compidx::principal_solution(longer, 0);
    EXPECT_EQ(compidx::forward_focal_multiplicities(longer, basis).l_total, 0)
        << "N " << N;
  }
}

TEST(FocalRoutes, PerStepRoutesAgree) {
  for (int seed = 0; seed < 8; ++seed) {
    const int n = 1 + seed % 2;
    const int N = 1 + seed % 4;
    const auto system = compidx::random_system(n, N, 5100 + seed);
    const auto basis = (seed % 2 == 0)
                           ? compidx::principal_solution(system, 0)
                           : compidx::propagate(
                                 system, compidx::random_frame(n, 5200 + seed));
    const auto fwd = compidx::forward_focal_multiplicities(system, basis);
    const auto bwd = compidx::backward_focal_multiplicities(system, basis);
    for (int k = 0; k <= N; ++k) {
      EXPECT_EQ(fwd.m[k],
                compidx::forward_multiplicity_via_index(system, basis, k))
          << "seed " << seed << " k " << k;
      EXPECT_EQ(fwd.m[k], compidx::forward_multiplicity_via_dual(basis, k))
          << "seed " << seed << " k " << k;
      EXPECT_EQ(bwd.m_star[k],
                compidx::backward_multiplicity_via_dual(basis, k))
          << "seed " << seed << " k " << k;
    }
  }
}

TEST(FocalRoutes, ChainSumsMatchTallies) {
  for (int seed = 0; seed < 6; ++seed) {
    const int n = 1 + seed % 2;
    const int N = 1 + seed % 3;
    const auto system = compidx::random_system(n, N, 6100 + seed);
    const auto at0 = compidx::principal_solution(system, 0);
    const auto atEnd = compidx::principal_solution(system, N + 1);
    const auto sums = compidx::focal_sums_via_cyclic(at0);
    EXPECT_EQ(sums.mu_minus_chain,
              compidx::backward_focal_multiplicities(system, at0).l_star_total)
        << "seed " << seed;
    EXPECT_EQ(sums.mu_plus_reversed,
              compidx::forward_focal_multiplicities(system, atEnd).l_total)
        << "seed " << seed;
    EXPECT_EQ(sums.nu_minus_chain,
              compidx::backward_focal_multiplicities(system, atEnd).l_star_total)
        << "seed " << seed;
    EXPECT_EQ(sums.nu_plus_reversed,
              compidx::forward_focal_multiplicities(system, at0).l_total)
        << "seed " << seed;
  }
}

TEST(FocalCounts, InertiaRouteMatchesTalliesOnRandomSystems) {
  for (int seed = 0; seed < 8; ++seed) {
    const int n = 1 + seed % 2;
    const int N = seed % 4;  // includes N = 0
    const auto system = compidx::random_system(n, N, 7100 + seed);
    const auto counts = compidx::focal_counts_via_inertia(system);
    const auto at0 = compidx::principal_solution(system, 0);
    EXPECT_EQ(counts.l_star_at_0,
              compidx::backward_focal_multiplicities(system, at0).l_star_total)
        << "seed " << seed;
    if (N >= 1) {
      ASSERT_TRUE(counts.l_at_0.has_value()) << "seed " << seed;
      EXPECT_EQ(*counts.l_at_0,
                compidx::forward_focal_multiplicities(system, at0).l_total)
          << "seed " << seed;
    } else {
      EXPECT_FALSE(counts.l_at_0.has_value());
    }
  }
}

TEST(Disconjugacy, VerdictEqualsZeroFocalCount) {
  for (int seed = 0; seed < 10; ++seed) {
    const int n = 1 + seed % 2;
    const int N = 1 + seed % 4;
    const auto system = compidx::random_system(n, N, 8100 + seed);
    const auto cert = compidx::disconjugacy_check(system);
    const auto basis = compidx::principal_solution(system, 0);
    const int l =
        compidx::forward_focal_multiplicities(system, basis).l_total;
    EXPECT_EQ(cert.disconjugate, l == 0) << "seed " << seed;
    EXPECT_EQ(cert.disconjugate,
              cert.m_tilde_vanishes && cert.reduced_block_nonpositive)
        << "seed " << seed;
  }
}

TEST(Disconjugacy, SingleStepSystemsAreRejected) {
  const auto system = compidx::random_system(1, 0, 3);
  EXPECT_THROW(compidx::disconjugacy_check(system), std::invalid_argument);
}

TEST(SystemBattery, IdentityChecksPassOnRandomSystems) {
  for (int seed = 0; seed < 5; ++seed) {
    const int n = 1 + seed % 2;
    const int N = seed % 4;
    const auto system = compidx::random_system(n, N, 9100 + seed);
    const auto checks = compidx::system_identity_checks(system, 9200 + seed);
    for (const auto& c : checks)
      EXPECT_TRUE(c.pass()) << c.name << ": " << c.lhs << " != " << c.rhs
                            << " (seed " << seed << ", n " << n << ", N " << N
                            << ")";
  }
}

TEST(RandomSystem, DeterministicAndSymplectic) {
  const auto A = compidx::random_system(2, 3, 55);
  const auto B = compidx::random_system(2, 3, 55);
  for (int k = 0; k <= 3; ++k) {
    EXPECT_EQ(max_abs(A.coefficient(k).matrix() - B.coefficient(k).matrix()),
              0.0);
    EXPECT_TRUE(compidx::validate_symplectic(A.coefficient(k).matrix()).ok);
  }
}

}  // namespace
