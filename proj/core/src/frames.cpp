#include "compidx/frames.hpp"

#include <Eigen/QR>
#include <Eigen/SVD>
#include <cmath>
#include <random>
#include <stdexcept>
#include <string>

namespace compidx {
namespace {

double max_abs(const Matrix& A) {
  return A.size() == 0 ? 0.0 : A.cwiseAbs().maxCoeff();
}

// Residual allowance for the quadratic symplectic/isotropy identities; scales
// with the squared magnitude of the entries that feed each product.
double residual_tol(int n, double entry_scale) {
  return 1e-9 * static_cast<double>(n) * std::max(1.0, entry_scale * entry_scale);
}

double unit_interval(std::mt19937_64& gen) {
  // Explicit 53-bit mapping: bit-reproducible, unlike uniform_real_distribution.
  return static_cast<double>(gen() >> 11) * 0x1.0p-53;
}

double symmetric_interval(std::mt19937_64& gen) {
  return 2.0 * unit_interval(gen) - 1.0;
}

Matrix random_matrix(int rows, int cols, std::mt19937_64& gen) {
  Matrix A(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) A(i, j) = symmetric_interval(gen);
  return A;
}

// Nonsingular by construction: unit triangular factors around a diagonal
// bounded away from zero.
Matrix random_nonsingular(int n, std::mt19937_64& gen) {
  Matrix L = Matrix::Identity(n, n), U = Matrix::Identity(n, n);
  Matrix D = Matrix::Zero(n, n);
  for (int i = 0; i < n; ++i) {
    const double sign = (gen() & 1) ? 1.0 : -1.0;
    D(i, i) = sign * (0.5 + 1.5 * unit_interval(gen));
    for (int j = 0; j < i; ++j) L(i, j) = symmetric_interval(gen);
    for (int j = i + 1; j < n; ++j) U(i, j) = symmetric_interval(gen);
  }
  return L * D * U;
}

}  // namespace

Matrix symplectic_form(int n) {
  Matrix J = Matrix::Zero(2 * n, 2 * n);
  J.topRightCorner(n, n) = Matrix::Identity(n, n);
  J.bottomLeftCorner(n, n) = -Matrix::Identity(n, n);
  return J;
}

FrameValidation validate_frame(const Matrix& Y, const ToleranceProfile& tol) {
  if (Y.cols() < 1 || Y.rows() != 2 * Y.cols())
    throw std::invalid_argument("validate_frame: expected a 2n x n matrix");
  const int n = static_cast<int>(Y.cols());
  FrameValidation v;
  v.rank = rank_of(Y, tol);
  const Matrix X = Y.topRows(n), U = Y.bottomRows(n);
  const Matrix pairing = X.transpose() * U - U.transpose() * X;  // Y^T J Y
  v.pairing_residual = max_abs(pairing);
  v.ok = v.rank == n && v.pairing_residual <= residual_tol(n, max_abs(Y));
  return v;
}

SymplecticValidation validate_symplectic(const Matrix& Z,
                                         const ToleranceProfile& tol) {
  (void)tol;
  if (Z.rows() != Z.cols() || Z.rows() < 2 || Z.rows() % 2 != 0)
    throw std::invalid_argument("validate_symplectic: expected a 2n x 2n matrix");
  const int n = static_cast<int>(Z.rows()) / 2;
  const Matrix J = symplectic_form(n);
  SymplecticValidation v;
  v.residual = max_abs(Z.transpose() * J * Z - J);
  v.ok = v.residual <= residual_tol(n, max_abs(Z));
  return v;
}

LagrangianFrame::LagrangianFrame(Matrix matrix, const ToleranceProfile& tol)
    : matrix_(std::move(matrix)) {
  const FrameValidation v = validate_frame(matrix_, tol);
  if (!v.ok)
    throw std::invalid_argument(
        "LagrangianFrame: not a Lagrangian frame (rank " + std::to_string(v.rank) +
        " of " + std::to_string(n()) + ", pairing residual " +
        std::to_string(v.pairing_residual) + ")");
}

LagrangianFrame LagrangianFrame::vertical(int n) {
  Matrix Y = Matrix::Zero(2 * n, n);
  Y.bottomRows(n) = Matrix::Identity(n, n);
  return LagrangianFrame(std::move(Y));
}

LagrangianFrame LagrangianFrame::horizontal(int n) {
  Matrix Y = Matrix::Zero(2 * n, n);
  Y.topRows(n) = Matrix::Identity(n, n);
  return LagrangianFrame(std::move(Y));
}

LagrangianFrame LagrangianFrame::scaled(const Matrix& C,
                                        const ToleranceProfile& tol) const {
  if (C.rows() != n() || C.cols() != n() || rank_of(C, tol) != n())
    throw std::invalid_argument("LagrangianFrame::scaled: factor must be nonsingular n x n");
  return LagrangianFrame(matrix_ * C, tol);
}

Matrix wronskian(const LagrangianFrame& a, const LagrangianFrame& b) {
  if (a.n() != b.n())
    throw std::invalid_argument("wronskian: frame dimensions disagree");
  return a.upper().transpose() * b.lower() - a.lower().transpose() * b.upper();
}

SymplecticMatrix::SymplecticMatrix(Matrix matrix, const ToleranceProfile& tol)
    : matrix_(std::move(matrix)) {
  const SymplecticValidation v = validate_symplectic(matrix_, tol);
  if (!v.ok)
    throw std::invalid_argument("SymplecticMatrix: Z^T J Z - J residual " +
                                std::to_string(v.residual));
}

SymplecticMatrix SymplecticMatrix::inverse() const {
  // -J Z^T J, written out blockwise; exact for integer entries.
  const int k = n();
  Matrix inv(2 * k, 2 * k);
  inv.topLeftCorner(k, k) = blockD().transpose();
  inv.topRightCorner(k, k) = -blockB().transpose();
  inv.bottomLeftCorner(k, k) = -blockC().transpose();
  inv.bottomRightCorner(k, k) = blockA().transpose();
  return SymplecticMatrix(std::move(inv));
}

SymplecticMatrix SymplecticMatrix::identity(int n) {
  return SymplecticMatrix(Matrix::Identity(2 * n, 2 * n));
}

LagrangianFrame SymplecticMatrix::act(const LagrangianFrame& f) const {
  if (f.n() != n())
    throw std::invalid_argument("SymplecticMatrix::act: dimensions disagree");
  return LagrangianFrame(matrix_ * f.matrix());
}

SymplecticMatrix SymplecticMatrix::operator*(const SymplecticMatrix& rhs) const {
  if (rhs.n() != n())
    throw std::invalid_argument("SymplecticMatrix: product dimensions disagree");
  return SymplecticMatrix(matrix_ * rhs.matrix());
}

LagrangianFrame SymplecticMatrix::vertical_image() const {
  return LagrangianFrame(matrix_.rightCols(n()));
}

SymplecticMatrix rotation_matrix(int n, double alpha) {
  const double c = std::cos(alpha), s = std::sin(alpha);
  Matrix R = Matrix::Zero(2 * n, 2 * n);
  R.topLeftCorner(n, n) = c * Matrix::Identity(n, n);
  R.topRightCorner(n, n) = s * Matrix::Identity(n, n);
  R.bottomLeftCorner(n, n) = -s * Matrix::Identity(n, n);
  R.bottomRightCorner(n, n) = c * Matrix::Identity(n, n);
  return SymplecticMatrix(std::move(R));
}

SymplecticMatrix frame_to_symplectic(const LagrangianFrame& Y,
                                     const ToleranceProfile& tol) {
  (void)tol;
  const int n = Y.n();
  Eigen::HouseholderQR<Matrix> qr(Y.matrix());
  const Matrix Qfull = qr.householderQ();
  const Matrix Qthin = Qfull.leftCols(n);
  const Matrix R = qr.matrixQR().topRows(n).triangularView<Eigen::Upper>();
  // (J Qthin | Qthin) is symplectic-orthogonal; the column scaling
  // diag(R^{-T}, R) restores the original frame in the last n columns.
  const Matrix RinvT =
      R.triangularView<Eigen::Upper>().solve(Matrix::Identity(n, n)).transpose();
  Matrix Z(2 * n, 2 * n);
  Z.leftCols(n) = symplectic_form(n) * Qthin * RinvT;
  Z.rightCols(n) = Y.matrix();  // instead of Qthin * R: exact by construction
  return SymplecticMatrix(std::move(Z));
}

SymplecticMatrix find_transversal_rotation(
    const std::vector<LagrangianFrame>& frames, const ToleranceProfile& tol) {
  (void)tol;
  if (frames.empty())
    throw std::invalid_argument("find_transversal_rotation: no frames");
  const int n = frames.front().n();
  std::vector<double> floors;  // 1e-6 * sigma_max(Y_k)
  for (const auto& f : frames) {
    if (f.n() != n)
      throw std::invalid_argument("find_transversal_rotation: dimensions disagree");
    Eigen::JacobiSVD<Matrix> svd(f.matrix());
    floors.push_back(1e-6 * svd.singularValues()(0));
  }

  constexpr int kMaxCandidates = 512;
  constexpr double kGolden = 0.6180339887498949;
  for (int t = 0; t < kMaxCandidates; ++t) {
    double alpha = 0.0;  // the identity chart first: valid when no X_k is singular
    if (t > 0) {
      const double frac = std::fmod(static_cast<double>(t) * kGolden, 1.0);
      alpha = std::atan(-10.0 + 20.0 * frac);
    }
    const double c = std::cos(alpha), s = std::sin(alpha);
    bool ok = true;
    for (std::size_t k = 0; k < frames.size() && ok; ++k) {
      const Matrix Xt = c * frames[k].upper() - s * frames[k].lower();
      Eigen::JacobiSVD<Matrix> svd(Xt);
      ok = svd.singularValues()(n - 1) > floors[k];
    }
    if (ok) return rotation_matrix(n, alpha);
  }
  throw std::runtime_error(
      "find_transversal_rotation: no candidate angle made every X block "
      "nonsingular after 512 attempts");
}

SymplecticMatrix random_symplectic(int n, std::uint64_t seed) {
  if (n < 1) throw std::invalid_argument("random_symplectic: n must be positive");
  std::mt19937_64 gen(seed);
  Matrix Z = Matrix::Identity(2 * n, 2 * n);
  const Matrix J = symplectic_form(n);
  for (int factor = 0; factor < 6; ++factor) {
    Matrix G = Matrix::Identity(2 * n, 2 * n);
    switch (gen() % 4) {
      case 0: {  // [I B; 0 I], B symmetric
        const Matrix B = random_matrix(n, n, gen);
        G.topRightCorner(n, n) = 0.5 * (B + B.transpose());
        break;
      }
      case 1: {  // [I 0; C I], C symmetric
        const Matrix C = random_matrix(n, n, gen);
        G.bottomLeftCorner(n, n) = 0.5 * (C + C.transpose());
        break;
      }
      case 2: {  // [K 0; 0 K^{-T}]
        const Matrix K = random_nonsingular(n, gen);
        G.topLeftCorner(n, n) = K;
        G.bottomRightCorner(n, n) = K.inverse().transpose();
        break;
      }
      default:
        G = J;
        break;
    }
    Z = Z * G;
  }
  return SymplecticMatrix(std::move(Z));
}

LagrangianFrame random_frame(int n, std::uint64_t seed) {
  return random_symplectic(n, seed).vertical_image();
}

Matrix random_symmetric_matrix(int n, std::uint64_t seed) {
  std::mt19937_64 gen(seed);
  const Matrix A = random_matrix(n, n, gen);
  return 0.5 * (A + A.transpose());
}

Matrix random_nonsingular_matrix(int n, std::uint64_t seed) {
  std::mt19937_64 gen(seed);
  return random_nonsingular(n, gen);
}

}  // namespace compidx
