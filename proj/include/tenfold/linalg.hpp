#pragma once

#include <cmath>
#include <cstdlib>

#include "tenfold/antilinear.hpp"
#include "tenfold/core.hpp"

namespace tenfold {

/// Pfaffian of a (complex) antisymmetric matrix by skew-symmetric
/// Parlett-Reid tridiagonalization with partial pivoting, O(n^3).
/// Pf of the empty matrix is 1; odd dimension is an error.
inline Complex pfaffian(const Matrix& a_in, double eps = tol::structural) {
  require(is_square(a_in), "BadDimension", "pfaffian: matrix must be square");
  const Eigen::Index n = a_in.rows();
  require(n % 2 == 0, "OddDimension", "pfaffian: dimension must be even");
  double scale = std::max(1.0, a_in.norm());
  require((a_in + a_in.transpose()).norm() < eps * scale, "NotAntisymmetric",
          "pfaffian: matrix is not antisymmetric");
  if (n == 0) return 1.0;

  Matrix a = a_in;
  Complex pf = 1.0;
  for (Eigen::Index k = 0; k + 1 < n; k += 2) {
    // Pivot: bring the largest entry of column k below the diagonal to row k+1.
    Eigen::Index kp = k + 1;
    double best = std::abs(a(kp, k));
    for (Eigen::Index j = k + 2; j < n; ++j) {
      if (std::abs(a(j, k)) > best) {
        best = std::abs(a(j, k));
        kp = j;
      }
    }
    if (kp != k + 1) {
      a.row(kp).swap(a.row(k + 1));
      a.col(kp).swap(a.col(k + 1));
      pf = -pf;
    }
    if (std::abs(a(k + 1, k)) == 0.0) return 0.0;
    pf *= a(k, k + 1);
    if (k + 2 < n) {
      Vector tau = a.col(k).segment(k + 2, n - k - 2) / a(k + 1, k);
      Vector col = a.col(k + 1).segment(k + 2, n - k - 2);
      a.bottomRightCorner(n - k - 2, n - k - 2) +=
          tau * col.transpose() - col * tau.transpose();
    }
  }
  return pf;
}

/// Spectral sign function h |-> h |h|^{-1} of a self-adjoint matrix:
/// the difference of spectral projections above and below zero.
/// Fails with Gapless when the spectrum comes closer to zero than the
/// gap floor, and with NotSelfAdjoint on non-hermitian input.
inline Matrix spectral_sign(const Matrix& h, double gap_floor = tol::gap_floor) {
  require(is_self_adjoint(h), "NotSelfAdjoint", "spectral_sign: input is not self-adjoint");
  Eigen::SelfAdjointEigenSolver<Matrix> es(h);
  const RealVector& ev = es.eigenvalues();
  require(ev.size() == 0 || ev.cwiseAbs().minCoeff() > gap_floor, "Gapless",
          "spectral_sign: spectrum touches the gap floor");
  RealVector signs = ev.unaryExpr([](double x) { return x > 0 ? 1.0 : -1.0; });
  return es.eigenvectors() * signs.asDiagonal() * es.eigenvectors().adjoint();
}

/// Number of negative eigenvalues of a self-adjoint matrix.
inline int negative_eigenvalue_count(const Matrix& h, double gap_floor = tol::gap_floor) {
  require(is_self_adjoint(h), "NotSelfAdjoint", "negative count: input is not self-adjoint");
  Eigen::SelfAdjointEigenSolver<Matrix> es(h, Eigen::EigenvaluesOnly);
  int count = 0;
  for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i) {
    double v = es.eigenvalues()(i);
    require(std::abs(v) > gap_floor, "Gapless", "negative count: eigenvalue at zero");
    if (v < 0) ++count;
  }
  return count;
}

/// Signature (number of positive minus number of negative eigenvalues).
inline int signature(const Matrix& h, double gap_floor = tol::gap_floor) {
  int neg = negative_eigenvalue_count(h, gap_floor);
  return static_cast<int>(h.rows()) - 2 * neg;
}

}  // namespace tenfold
