#pragma once

#include <cstdint>
#include <vector>

#include "tenfold/core.hpp"

namespace tenfold::fock {

/// Fermionic Fock space over C^n: dimension 2^n, basis indexed by
/// occupation bitmasks (bit i set means mode e_i occupied), and the
/// basis wedge word lists occupied modes in ascending index order.
/// The vacuum is mask 0.
struct FockSpace {
  int modes;
  Eigen::Index dim;

  explicit FockSpace(int n) : modes(n), dim(Eigen::Index(1) << n) {
    require(n >= 1 && n <= 12, "TooLarge", "FockSpace supports 1..12 modes");
  }
};

/// Parity sign (-1)^{number of occupied modes with index < i}: the cost of
/// sorting a freshly inserted e_i into an ascending wedge word.
inline double insertion_parity(std::uint32_t mask, int i) {
  return (__builtin_popcount(mask & ((1u << i) - 1u)) % 2 == 0) ? 1.0 : -1.0;
}

/// Creation operator c+_x for x in C^n; linear in x.
inline Matrix creator(const FockSpace& f, const Vector& x) {
  require(x.size() == f.modes, "DimensionMismatch", "creator: vector has wrong mode count");
  Matrix m = Matrix::Zero(f.dim, f.dim);
  for (Eigen::Index col = 0; col < f.dim; ++col) {
    auto mask = static_cast<std::uint32_t>(col);
    for (int i = 0; i < f.modes; ++i) {
      if (mask & (1u << i)) continue;
      m(static_cast<Eigen::Index>(mask | (1u << i)), col) += insertion_parity(mask, i) * x(i);
    }
  }
  return m;
}

/// Annihilation operator c_x; anti-linear in x, and c_x = (c+_x)^*.
inline Matrix annihilator(const FockSpace& f, const Vector& x) {
  return creator(f, x).adjoint();
}

/// Inner product of wedge words det(<x_i, y_j>), anti-linear in the x's.
/// Words of different length are orthogonal; empty words give 1.
inline Complex wedge_inner_product(const std::vector<Vector>& xs,
                                   const std::vector<Vector>& ys) {
  if (xs.size() != ys.size()) return 0.0;
  if (xs.empty()) return 1.0;
  const Eigen::Index n = xs.front().size();
  Matrix gram(xs.size(), ys.size());
  for (std::size_t i = 0; i < xs.size(); ++i) {
    require(xs[i].size() == n, "DimensionMismatch", "wedge: mixed vector dimensions");
    for (std::size_t j = 0; j < ys.size(); ++j) {
      require(ys[j].size() == n, "DimensionMismatch", "wedge: mixed vector dimensions");
      gram(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = xs[i].dot(ys[j]);
    }
  }
  return gram.determinant();
}

/// Diagonal parity operator (-1)^N.
inline Matrix parity_operator(const FockSpace& f) {
  Matrix m = Matrix::Zero(f.dim, f.dim);
  for (Eigen::Index k = 0; k < f.dim; ++k)
    m(k, k) = (__builtin_popcount(static_cast<std::uint32_t>(k)) % 2 == 0) ? 1.0 : -1.0;
  return m;
}

/// Quadratic Hamiltonian
///   H = (1/2) [ c+ Theta c + c+ Xi c+ + c Xi~ c + c Gamma c+ ]
/// with the closure Gamma = -Theta^T and Xi~ = -conj(Xi) that makes H
/// self-adjoint.  Relative to the normal-ordered form this carries a
/// scalar shift: H = c+ Theta c - tr(Theta)/2 * Id + pairing terms.
/// Theta must be self-adjoint and Xi antisymmetric.
inline Matrix quadratic_hamiltonian(const FockSpace& f, const Matrix& theta,
                                    const Matrix& xi) {
  require(theta.rows() == f.modes && theta.cols() == f.modes, "DimensionMismatch",
          "quadratic_hamiltonian: Theta has wrong shape");
  require(xi.rows() == f.modes && xi.cols() == f.modes, "DimensionMismatch",
          "quadratic_hamiltonian: Xi has wrong shape");
  require(is_self_adjoint(theta), "NotSelfAdjoint", "quadratic_hamiltonian: Theta");
  require(is_antisymmetric(xi), "NotAntisymmetric", "quadratic_hamiltonian: Xi");

  std::vector<Matrix> cre(static_cast<std::size_t>(f.modes));
  std::vector<Matrix> ann(static_cast<std::size_t>(f.modes));
  for (int i = 0; i < f.modes; ++i) {
    Vector e = Vector::Zero(f.modes);
    e(i) = 1.0;
    cre[static_cast<std::size_t>(i)] = creator(f, e);
    ann[static_cast<std::size_t>(i)] = cre[static_cast<std::size_t>(i)].adjoint();
  }

  Matrix h = Matrix::Zero(f.dim, f.dim);
  for (int l = 0; l < f.modes; ++l) {
    for (int m = 0; m < f.modes; ++m) {
      auto ul = static_cast<std::size_t>(l), um = static_cast<std::size_t>(m);
      if (theta(l, m) != 0.0) h += 0.5 * theta(l, m) * (cre[ul] * ann[um]);
      if (xi(l, m) != 0.0) h += 0.5 * xi(l, m) * (cre[ul] * cre[um]);
      if (xi(l, m) != 0.0) h -= 0.5 * std::conj(xi(l, m)) * (ann[ul] * ann[um]);
      if (theta(m, l) != 0.0) h -= 0.5 * theta(m, l) * (ann[ul] * cre[um]);
    }
  }
  return h;
}

}  // namespace tenfold::fock
