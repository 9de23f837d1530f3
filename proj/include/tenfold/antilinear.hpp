#pragma once

#include <optional>

#include "tenfold/core.hpp"

namespace tenfold {

/// Anti-linear operator on C^n, stored by its matrix part:
/// v |-> mat * conj(v).  Anti-unitarity is not enforced at construction;
/// callers that need it check explicitly.
struct AntiLinearOp {
  Matrix mat;

  explicit AntiLinearOp(Matrix m) : mat(std::move(m)) {
    require(is_square(mat), "BadDimension", "anti-linear operator matrix must be square");
  }

  Eigen::Index dim() const { return mat.rows(); }

  Vector apply(const Vector& v) const { return mat * v.conjugate(); }

  /// Conjugation action on linear operators: X |-> A X A^{-1}.
  Matrix adjoint_action(const Matrix& x) const {
    return mat * x.conjugate() * mat.inverse();
  }

  /// Conjugation action on anti-linear operators; the result is again
  /// anti-linear with matrix part A * conj(B_mat) * A^{-1}-conjugate chain,
  /// which for A with A∘A = ±1 simplifies to mat * conj(b.mat) * conj(mat)^{-1}.
  AntiLinearOp adjoint_action(const AntiLinearOp& b) const {
    return AntiLinearOp(mat * b.mat.conjugate() * mat.conjugate().inverse());
  }
};

/// Composition of two anti-linear maps is linear: (a∘b)(v) = a.mat conj(b.mat) v.
inline Matrix compose(const AntiLinearOp& a, const AntiLinearOp& b) {
  require(a.dim() == b.dim(), "DimensionMismatch", "compose: operand dimensions differ");
  return a.mat * b.mat.conjugate();
}

/// a∘M for linear M: anti-linear with matrix part a.mat * conj(M).
inline AntiLinearOp compose(const AntiLinearOp& a, const Matrix& m) {
  require(a.dim() == m.rows(), "DimensionMismatch", "compose: operand dimensions differ");
  return AntiLinearOp(a.mat * m.conjugate());
}

/// M∘a for linear M: anti-linear with matrix part M * a.mat.
inline AntiLinearOp compose(const Matrix& m, const AntiLinearOp& a) {
  require(m.cols() == a.dim(), "DimensionMismatch", "compose: operand dimensions differ");
  return AntiLinearOp(m * a.mat);
}

inline bool is_antiunitary(const AntiLinearOp& a, double eps = tol::structural) {
  return is_unitary(a.mat, eps);
}

/// The square a∘a is linear; if it is ±Id return the sign.
inline std::optional<int> involution_sign(const AntiLinearOp& a, double eps = tol::structural) {
  Matrix sq = compose(a, a);
  auto [ok, c] = scalar_part(sq, eps);
  if (!ok) return std::nullopt;
  if (std::abs(c - 1.0) < eps) return 1;
  if (std::abs(c + 1.0) < eps) return -1;
  return std::nullopt;
}

/// Real structure: anti-unitary with square +1.
inline bool is_real_structure(const AntiLinearOp& a, double eps = tol::structural) {
  return is_antiunitary(a, eps) && involution_sign(a, eps) == 1;
}

/// Quaternionic structure: anti-unitary with square -1.
inline bool is_quaternionic(const AntiLinearOp& a, double eps = tol::structural) {
  return is_antiunitary(a, eps) && involution_sign(a, eps) == -1;
}

}  // namespace tenfold
