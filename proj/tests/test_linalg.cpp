#include "compidx/linalg.hpp"

#include <gtest/gtest.h>

#include <stdexcept>

#include "compidx/frames.hpp"

namespace {

using compidx::InertiaTriple;
using compidx::Matrix;
using compidx::ToleranceProfile;

double max_abs(const Matrix& A) {
  return A.size() == 0 ? 0.0 : A.cwiseAbs().maxCoeff();
}

TEST(Pseudoinverse, MoorePenroseAxiomsOnRankDeficientInput) {
  Matrix A(3, 2);
  A << 1, 2, 2, 4, 3, 6;  // rank 1
  const Matrix P = compidx::pseudoinverse(A);
  EXPECT_LT(max_abs(A * P * A - A), 1e-12);
  EXPECT_LT(max_abs(P * A * P - P), 1e-12);
  EXPECT_LT(max_abs((A * P).transpose() - A * P), 1e-12);
  EXPECT_LT(max_abs((P * A).transpose() - P * A), 1e-12);
}

TEST(Pseudoinverse, RandomRectangular) {
  for (int seed = 0; seed < 10; ++seed) {
    const Matrix A = compidx::random_nonsingular_matrix(4, 1000 + seed)
                         .topRows(3);  // 3 x 4, full row rank
    const Matrix P = compidx::pseudoinverse(A);
    EXPECT_LT(max_abs(A * P * A - A), 1e-10);
    EXPECT_LT(max_abs(P * A * P - P), 1e-10);
  }
}

TEST(Pseudoinverse, ZeroAndEmpty) {
  EXPECT_LT(max_abs(compidx::pseudoinverse(Matrix::Zero(2, 3))), 1e-15);
  const Matrix E(0, 3);
  const Matrix P = compidx::pseudoinverse(E);
  EXPECT_EQ(P.rows(), 3);
  EXPECT_EQ(P.cols(), 0);
}

TEST(KernelProjectors, AnnihilateAndSymmetric) {
  Matrix A(3, 3);
  A << 1, 0, 1, 0, 1, 1, 1, 1, 2;  // rank 2
  const auto proj = compidx::kernel_projectors(A);
  EXPECT_LT(max_abs(proj.left * A), 1e-12);
  EXPECT_LT(max_abs(A * proj.right), 1e-12);
  EXPECT_LT(max_abs(proj.left * proj.left - proj.left), 1e-12);
  EXPECT_LT(max_abs(proj.right * proj.right - proj.right), 1e-12);
  EXPECT_LT(max_abs(proj.left.transpose() - proj.left), 1e-12);
  EXPECT_LT(max_abs(proj.right.transpose() - proj.right), 1e-12);
  // rank(A) = 2 here, so both projectors have rank 1.
  EXPECT_EQ(compidx::rank_of(proj.left), 1);
  EXPECT_EQ(compidx::rank_of(proj.right), 1);
}

TEST(RankOf, KnownRanks) {
  EXPECT_EQ(compidx::rank_of(Matrix::Identity(4, 4)), 4);
  EXPECT_EQ(compidx::rank_of(Matrix::Zero(3, 5)), 0);
  EXPECT_EQ(compidx::rank_of(Matrix(0, 4)), 0);
  Matrix A(2, 3);
  A << 1, 2, 3, 2, 4, 6;
  EXPECT_EQ(compidx::rank_of(A), 1);
}

TEST(Inertia, DiagonalAndCurated) {
  Matrix D = Matrix::Zero(4, 4);
  D(0, 0) = 3;
  D(1, 1) = -2;
  D(2, 2) = 0;
  D(3, 3) = -1;
  const auto i = compidx::inertia(D);
  EXPECT_EQ(i, (InertiaTriple{1, 1, 2}));
  EXPECT_EQ(i.index(), 2);
  EXPECT_EQ(i.signature(), -1);
  EXPECT_EQ(i.rank(), 3);

  Matrix S(3, 3);
  S << 0, 1, 1, 1, 0, -1, 1, -1, 0;  // eigenvalues {1, 1, -2}
  EXPECT_EQ(compidx::inertia(S), (InertiaTriple{2, 0, 1}));
}

TEST(Inertia, EmptyMatrix) {
  EXPECT_EQ(compidx::inertia(Matrix(0, 0)), (InertiaTriple{0, 0, 0}));
}

TEST(Inertia, RejectsAsymmetricInput) {
  Matrix A(2, 2);
  A << 0, 1, -1, 0;
  EXPECT_THROW(compidx::inertia(A), std::invalid_argument);
  EXPECT_THROW(compidx::inertia(Matrix::Zero(2, 3)), std::invalid_argument);
}

TEST(Inertia, ToleratesSymmetrizationNoise) {
  Matrix S(2, 2);
  S << 1, 0.5, 0.5 + 1e-12, -1;  // tiny asymmetry, within the 1e-8 budget
  const auto i = compidx::inertia(S);
  EXPECT_EQ(i.positive, 1);
  EXPECT_EQ(i.negative, 1);
}

TEST(Inertia, ZeroClassificationScalesWithKappa) {
  Matrix S = Matrix::Zero(2, 2);
  S(0, 0) = 1.0;
  S(1, 1) = 1e-13;  // genuine but tiny direction
  // Tiny against eps-scale cutoffs: counted as positive.
  EXPECT_EQ(compidx::inertia(S).positive, 2);
  // A cutoff blown up to order 1 swallows it.
  ToleranceProfile loose;
  loose.eig_zero_factor = 1e12;
  EXPECT_EQ(compidx::inertia(S, loose).positive, 1);
  EXPECT_EQ(compidx::inertia(S, loose).zero, 1);
}

TEST(BlockInertiaReduction, HollowOffDiagonalBlock) {
  // H = [0 I; I 0] has eigenvalues +1 (x2) and -1 (x2).
  const auto [direct, reduced] = compidx::block_inertia_reduction(
      Matrix::Zero(2, 2), Matrix::Identity(2, 2), Matrix::Zero(2, 2));
  EXPECT_EQ(direct, (InertiaTriple{2, 0, 2}));
  EXPECT_EQ(reduced, direct);
}

TEST(BlockInertiaReduction, BlockDiagonal) {
  Matrix A = Matrix::Zero(2, 2);
  A(0, 0) = 1;
  A(1, 1) = -1;
  const auto [direct, reduced] =
      compidx::block_inertia_reduction(A, Matrix::Zero(2, 2), A);
  EXPECT_EQ(direct, (InertiaTriple{2, 0, 2}));
  EXPECT_EQ(reduced, direct);
}

TEST(BlockInertiaReduction, AgreesWithDirectOnRandomBlocks) {
  for (int seed = 0; seed < 25; ++seed) {
    const int n = 1 + seed % 3;
    const Matrix A = compidx::random_symmetric_matrix(n, 10 * seed + 1);
    const Matrix D = compidx::random_symmetric_matrix(n, 10 * seed + 2);
    Matrix B = compidx::random_nonsingular_matrix(n, 10 * seed + 3);
    if (seed % 4 == 0) B.col(0).setZero();  // force rank deficiency
    const auto [direct, reduced] = compidx::block_inertia_reduction(A, B, D);
    EXPECT_EQ(direct, reduced) << "seed " << seed;
  }
}

TEST(BlockInertiaReduction, SingularLeadingBlock) {
  // A singular, so the reduction must route rank through M = (I - AA^+)B.
  Matrix A = Matrix::Zero(2, 2);
  A(0, 0) = 1;
  Matrix B(2, 2);
  B << 0, 0, 1, 0;
  Matrix D = Matrix::Zero(2, 2);
  const auto [direct, reduced] = compidx::block_inertia_reduction(A, B, D);
  EXPECT_EQ(direct, reduced);
  EXPECT_EQ(direct.positive + direct.negative + direct.zero, 4);
}

}  // namespace
