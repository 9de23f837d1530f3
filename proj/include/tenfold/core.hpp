#pragma once

#include <Eigen/Dense>

#include <complex>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>

namespace tenfold {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using RealMatrix = Eigen::MatrixXd;
using RealVector = Eigen::VectorXd;

namespace tol {

/// Tolerance for operator identities: symmetry residuals, algebra
/// relations, unitarity and self-adjointness defects.
inline constexpr double structural = 1e-10;

/// Tolerance for determinant-level cross-checks (Pfaffian vs. det).
inline constexpr double determinant = 1e-8;

/// Spectral flattening refuses to divide by gaps smaller than this.
inline constexpr double gap_floor = 1e-8;

}  // namespace tol

/// Every failure carries a short machine-readable code ("OddDimension",
/// "Gapless", ...) next to the human-readable message.
class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& what)
      : std::runtime_error(code + ": " + what), code_(std::move(code)) {}

  const std::string& code() const noexcept { return code_; }

 private:
  std::string code_;
};

[[noreturn]] inline void fail(const std::string& code, const std::string& what) {
  throw Error(code, what);
}

inline void require(bool ok, const std::string& code, const std::string& what) {
  if (!ok) fail(code, what);
}

inline bool is_square(const Matrix& m) { return m.rows() == m.cols(); }

inline Matrix identity(Eigen::Index n) { return Matrix::Identity(n, n); }

inline bool is_self_adjoint(const Matrix& m, double eps = tol::structural) {
  return is_square(m) && (m - m.adjoint()).norm() < eps;
}

inline bool is_antisymmetric(const Matrix& m, double eps = tol::structural) {
  return is_square(m) && (m + m.transpose()).norm() < eps;
}

inline bool is_unitary(const Matrix& m, double eps = tol::structural) {
  return is_square(m) && (m.adjoint() * m - identity(m.rows())).norm() < eps;
}

inline bool is_involution(const Matrix& m, double eps = tol::structural) {
  return is_square(m) && (m * m - identity(m.rows())).norm() < eps;
}

inline bool approx_equal(const Matrix& a, const Matrix& b, double eps = tol::structural) {
  return a.rows() == b.rows() && a.cols() == b.cols() && (a - b).norm() < eps;
}

/// If m is a scalar multiple of the identity, return the scalar.
inline std::pair<bool, Complex> scalar_part(const Matrix& m, double eps = tol::structural) {
  if (!is_square(m) || m.rows() == 0) return {false, 0.0};
  Complex c = m.trace() / static_cast<double>(m.rows());
  bool ok = (m - c * identity(m.rows())).norm() < eps;
  return {ok, c};
}

inline Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

inline Matrix block_diag(const Matrix& a, const Matrix& b) {
  Matrix out = Matrix::Zero(a.rows() + b.rows(), a.cols() + b.cols());
  out.topLeftCorner(a.rows(), a.cols()) = a;
  out.bottomRightCorner(b.rows(), b.cols()) = b;
  return out;
}

inline Matrix pauli_x() {
  Matrix m(2, 2);
  m << 0, 1, 1, 0;
  return m;
}

inline Matrix pauli_y() {
  Matrix m(2, 2);
  m << 0, Complex(0, -1), Complex(0, 1), 0;
  return m;
}

inline Matrix pauli_z() {
  Matrix m(2, 2);
  m << 1, 0, 0, -1;
  return m;
}

/// Deterministic random source; every randomized routine takes one
/// explicitly so runs are reproducible from a single seed.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  double normal() { return normal_(gen_); }

  double uniform() { return uniform_(gen_); }

  std::uint64_t integer() { return gen_(); }

  Complex cnormal() { return {normal(), normal()}; }

  Matrix gaussian(Eigen::Index rows, Eigen::Index cols) {
    Matrix m(rows, cols);
    for (Eigen::Index j = 0; j < cols; ++j)
      for (Eigen::Index i = 0; i < rows; ++i) m(i, j) = cnormal();
    return m;
  }

  Vector gaussian_vector(Eigen::Index n) {
    Vector v(n);
    for (Eigen::Index i = 0; i < n; ++i) v(i) = cnormal();
    return v;
  }

  Matrix hermitian(Eigen::Index n) {
    Matrix g = gaussian(n, n);
    return 0.5 * (g + g.adjoint());
  }

  /// Haar-distributed unitary via QR with phase fixing.
  Matrix unitary(Eigen::Index n) {
    Eigen::HouseholderQR<Matrix> qr(gaussian(n, n));
    Matrix q = qr.householderQ();
    Matrix r = qr.matrixQR().triangularView<Eigen::Upper>();
    for (Eigen::Index i = 0; i < n; ++i) {
      Complex d = r(i, i);
      q.col(i) *= (std::abs(d) > 0) ? d / std::abs(d) : 1.0;
    }
    return q;
  }

  std::mt19937_64& engine() { return gen_; }

 private:
  std::mt19937_64 gen_;
  std::normal_distribution<double> normal_{0.0, 1.0};
  std::uniform_real_distribution<double> uniform_{0.0, 1.0};
};

}  // namespace tenfold
