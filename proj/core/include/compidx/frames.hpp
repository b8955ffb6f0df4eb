#pragma once

#include <cstdint>
#include <vector>

#include "compidx/linalg.hpp"

namespace compidx {

// 2n x 2n canonical symplectic form J = [0 I; -I 0].
Matrix symplectic_form(int n);

class SymplecticMatrix;

// A Lagrangian frame Y = (X; U): a real 2n x n matrix with rank Y = n and
// Y^T J Y = 0 (equivalently X^T U symmetric).  Columns span a Lagrangian
// subspace of R^{2n}; the frame is kept as given, no normalization.
class LagrangianFrame {
 public:
  // Throws std::invalid_argument unless `matrix` is 2n x n, full column rank,
  // and isotropic within the validation tolerance.
  explicit LagrangianFrame(Matrix matrix, const ToleranceProfile& tol = {});

  int n() const { return static_cast<int>(matrix_.cols()); }
  const Matrix& matrix() const { return matrix_; }
  Matrix upper() const { return matrix_.topRows(n()); }   // X block
  Matrix lower() const { return matrix_.bottomRows(n()); }  // U block

  // Coordinate frames: vertical(n) = (0; I), horizontal(n) = (I; 0).
  static LagrangianFrame vertical(int n);
  static LagrangianFrame horizontal(int n);

  // Right action Y C by a nonsingular n x n matrix (same subspace).
  LagrangianFrame scaled(const Matrix& C, const ToleranceProfile& tol = {}) const;

 private:
  Matrix matrix_;
};

// Wronskian w(Ya, Yb) = Ya^T J Yb = Xa^T Ub - Ua^T Xb.
// Antisymmetric in its arguments: w(Ya, Yb) = -w(Yb, Ya)^T.
Matrix wronskian(const LagrangianFrame& a, const LagrangianFrame& b);

struct FrameValidation {
  bool ok = false;
  int rank = 0;                // column rank of Y
  double pairing_residual = 0.0;  // |Y^T J Y|_inf
};
FrameValidation validate_frame(const Matrix& Y, const ToleranceProfile& tol = {});

struct SymplecticValidation {
  bool ok = false;
  double residual = 0.0;  // |Z^T J Z - J|_inf
};
SymplecticValidation validate_symplectic(const Matrix& Z,
                                         const ToleranceProfile& tol = {});

// A 2n x 2n matrix Z with Z^T J Z = J.  Inverses are formed symplectically
// as Z^{-1} = -J Z^T J, which keeps integer inputs exactly integer.
class SymplecticMatrix {
 public:
  explicit SymplecticMatrix(Matrix matrix, const ToleranceProfile& tol = {});

  int n() const { return static_cast<int>(matrix_.rows()) / 2; }
  const Matrix& matrix() const { return matrix_; }
  Matrix blockA() const { return matrix_.topLeftCorner(n(), n()); }
  Matrix blockB() const { return matrix_.topRightCorner(n(), n()); }
  Matrix blockC() const { return matrix_.bottomLeftCorner(n(), n()); }
  Matrix blockD() const { return matrix_.bottomRightCorner(n(), n()); }

  SymplecticMatrix inverse() const;
  static SymplecticMatrix identity(int n);

  LagrangianFrame act(const LagrangianFrame& f) const;  // Z * Y
  SymplecticMatrix operator*(const SymplecticMatrix& rhs) const;

  // Frame of the Lagrangian subspace Z maps the vertical one to: Z (0; I),
  // i.e. the last n columns of Z.
  LagrangianFrame vertical_image() const;

 private:
  Matrix matrix_;
};

// Symplectic + orthogonal rotation R_alpha = [cos(a) I, sin(a) I;
//                                             -sin(a) I, cos(a) I].
SymplecticMatrix rotation_matrix(int n, double alpha);

// Symplectic completion of a frame: returns Z with Z (0; I) = Y exactly.
// Built from a QR factorization Y = Q R as Z = (J Q | Q) diag(R^{-T}, R).
SymplecticMatrix frame_to_symplectic(const LagrangianFrame& Y,
                                     const ToleranceProfile& tol = {});

// Finds a rotation R_alpha such that every rotated frame R_alpha^{-1} Y_k has
// a nonsingular X block: alpha = 0 is used when it already passes, otherwise
// alpha = arctan(gamma) with gamma scanned over a fixed low-discrepancy
// sequence in (-10, 10).  A candidate is accepted when for every frame
//   sigma_min(X_tilde_k) > 1e-6 * sigma_max(Y_k).
// Deterministic; throws std::runtime_error if no candidate passes.
SymplecticMatrix find_transversal_rotation(
    const std::vector<LagrangianFrame>& frames,
    const ToleranceProfile& tol = {});

// Seeded random symplectic matrix: a product of a few unipotent upper/lower
// generators [I B; 0 I], [I 0; C I] (B, C symmetric), a block-diagonal
// K diag K^{-T} factor, and possibly J.  Bit-reproducible for a fixed seed.
SymplecticMatrix random_symplectic(int n, std::uint64_t seed);

// Seeded random Lagrangian frame: random_symplectic(n, seed) (0; I).
LagrangianFrame random_frame(int n, std::uint64_t seed);

// Seeded dense helpers for tests and the verification batteries.
Matrix random_symmetric_matrix(int n, std::uint64_t seed);
Matrix random_nonsingular_matrix(int n, std::uint64_t seed);

}  // namespace compidx
