#pragma once

#include <array>
#include <functional>
#include <optional>
#include <vector>

#include "tenfold/antilinear.hpp"
#include "tenfold/core.hpp"
#include "tenfold/nambu.hpp"

namespace tenfold::symmetry {

enum class Kind { trs, srs, charge, phs };

/// Bogoliubov lift of a one-particle unitary to Nambu space: creators
/// transform by u, annihilators by the complex conjugate.
inline Matrix lift_unitary(const Matrix& u) {
  require(is_square(u), "BadDimension", "lift_unitary needs a square matrix");
  Eigen::Index m = u.rows();
  Matrix out = Matrix::Zero(2 * m, 2 * m);
  out.topLeftCorner(m, m) = u;
  out.bottomRightCorner(m, m) = u.conjugate();
  return out;
}

/// Lift of an anti-unitary on V; the same block rule as for unitaries.
inline AntiLinearOp lift_trs(const AntiLinearOp& t) {
  return AntiLinearOp(lift_unitary(t.mat));
}

/// Particle-hole operator determined by a one-particle unitary s; the
/// lift exchanges the two blocks, so it commutes with gamma and
/// anticommutes with the charge operator.
inline AntiLinearOp lift_phs(const Matrix& s) {
  require(is_square(s) && is_unitary(s), "NotUnitary", "lift_phs needs a unitary block");
  Eigen::Index m = s.rows();
  Matrix out = Matrix::Zero(2 * m, 2 * m);
  out.topRightCorner(m, m) = s;
  out.bottomLeftCorner(m, m) = s.conjugate();
  return AntiLinearOp(out);
}

/// Charge operator on Nambu space: +1 on creators, -1 on annihilators.
inline Matrix charge_operator(int m) {
  Matrix out = identity(2 * m);
  out.bottomRightCorner(m, m) *= -1.0;
  return out;
}

/// Spin rotation generators i sigma_mu acting on the fast index of
/// V = C^{m/2} x C^2; they are skew-adjoint quaternion units with
/// j1 j2 = -j3 in this convention.
inline std::array<Matrix, 3> spin_generators(int m) {
  require(m >= 2 && m % 2 == 0, "BadSpinAlgebra",
          "spin rotations need an even one-particle dimension");
  const Complex im(0, 1);
  Matrix outer = identity(m / 2);
  return {im * kron(outer, pauli_x()), im * kron(outer, pauli_y()),
          im * kron(outer, pauli_z())};
}

/// Automorphism of a matrix algebra: X -> g X g^{-1}, preceded by
/// entrywise conjugation in the anti-linear case.
struct AlgebraAuto {
  bool antilinear = false;
  Matrix gen;

  Eigen::Index dim() const { return gen.rows(); }

  Matrix apply(const Matrix& x) const {
    require(x.rows() == gen.rows() && x.cols() == gen.cols(), "DimensionMismatch",
            "automorphism applied to a matrix of the wrong shape");
    Matrix inner = antilinear ? Matrix(x.conjugate()) : x;
    return gen * inner * gen.inverse();
  }
};

inline AlgebraAuto inner_auto(const Matrix& u) {
  require(is_square(u), "BadDimension", "inner_auto needs a square matrix");
  return {false, u};
}

inline AlgebraAuto conjugation_auto(const AntiLinearOp& a) { return {true, a.mat}; }

inline AlgebraAuto compose(const AlgebraAuto& f, const AlgebraAuto& g) {
  require(f.dim() == g.dim(), "DimensionMismatch", "automorphisms act on different spaces");
  Matrix second = f.antilinear ? Matrix(g.gen.conjugate()) : g.gen;
  return {f.antilinear != g.antilinear, f.gen * second};
}

/// Recover a unitary generator of an inner automorphism from its action
/// alone.  A unit vector w spanning the range of phi(E_00) determines
/// the candidate columns phi(E_j0) w, which all carry the same unknown
/// phase; the phase is fixed by making the largest entry positive real.
/// The candidate is then checked against phi on every matrix unit and on
/// a fixed complex matrix, so anti-linear or non-inner maps are refused.
inline Matrix find_inner_generator(Eigen::Index dim,
                                   const std::function<Matrix(const Matrix&)>& phi,
                                   double eps = 1e-8) {
  require(dim >= 1, "BadDimension", "find_inner_generator needs a positive dimension");
  auto unit = [dim](Eigen::Index a, Eigen::Index b) {
    Matrix e = Matrix::Zero(dim, dim);
    e(a, b) = 1.0;
    return e;
  };

  Matrix p = phi(unit(0, 0));
  require(approx_equal(Matrix(p * p), p, eps) && is_self_adjoint(p, eps) &&
              std::abs(p.trace() - 1.0) < eps,
          "NotInnerRelated", "image of a rank-one projection is not one");
  Eigen::Index best = 0;
  for (Eigen::Index j = 1; j < dim; ++j) {
    if (p.col(j).norm() > p.col(best).norm()) best = j;
  }
  Vector w = p.col(best).normalized();

  Matrix u(dim, dim);
  for (Eigen::Index j = 0; j < dim; ++j) u.col(j) = phi(unit(j, 0)) * w;
  require(is_unitary(u, eps), "NotInnerRelated", "candidate generator is not unitary");

  Eigen::Index mi = 0, mj = 0;
  u.cwiseAbs().maxCoeff(&mi, &mj);
  u *= std::conj(u(mi, mj)) / std::abs(u(mi, mj));

  for (Eigen::Index a = 0; a < dim; ++a) {
    for (Eigen::Index b = 0; b < dim; ++b) {
      require(approx_equal(phi(unit(a, b)), Matrix(u * unit(a, b) * u.adjoint()), eps),
              "NotInnerRelated", "map disagrees with conjugation on a matrix unit");
    }
  }
  Matrix probe = Complex(0, 1) * unit(0, 0) + Complex(0.5, 0.25) * unit(dim - 1, 0);
  require(approx_equal(phi(probe), Matrix(u * probe * u.adjoint()), eps), "NotInnerRelated",
          "map is not complex linear");
  return u;
}

struct SignPair {
  int eta1 = 0;
  std::optional<int> eta2;
};

/// Relative sign of an anti-linear automorphism g against the reference
/// anti-linear automorphism f: the composite g o f is linear and inner,
/// generated by some unitary u, and u f(u) is a real scalar +-1 that
/// does not depend on the phase ambiguity of u.
inline int relative_sign(const AlgebraAuto& f, const AlgebraAuto& g, double eps = 1e-8) {
  require(f.antilinear && g.antilinear, "NotAntilinear",
          "relative signs compare anti-linear automorphisms");
  AlgebraAuto c = compose(g, f);
  Matrix u = find_inner_generator(f.dim(), [&c](const Matrix& x) { return c.apply(x); }, eps);
  auto [ok, value] = scalar_part(Matrix(u * f.apply(u)), eps);
  require(ok, "NotScalar", "u f(u) is not a scalar");
  require(std::abs(std::abs(value.real()) - 1.0) < eps && std::abs(value.imag()) < eps,
          "NotScalar", "u f(u) is a scalar but not a sign");
  return value.real() > 0 ? 1 : -1;
}

inline SignPair relative_signs(const AlgebraAuto& f, const std::vector<AlgebraAuto>& ops,
                               double eps = 1e-8) {
  require(!ops.empty() && ops.size() <= 2, "BadDimension",
          "relative_signs expects one or two automorphisms");
  SignPair out;
  out.eta1 = relative_sign(f, ops[0], eps);
  if (ops.size() == 2) out.eta2 = relative_sign(f, ops[1], eps);
  return out;
}

/// Quaternionic factorization W = C^2 x W+ from a triple of quaternion
/// units: W+ is the +i eigenspace of j3 and the second coordinate block
/// is its image under -j1.  Operators commuting with the units become
/// kron(identity, reduced), the units themselves become constant
/// two-by-two blocks, and anti-unitaries commuting with the units reduce
/// after a twist by j1.
struct QuaternionicFactor {
  Matrix j1;
  Matrix into_plus;
  Matrix phi;

  Eigen::Index half_dim() const { return into_plus.cols(); }

  Matrix chi(const Matrix& x) const { return phi.adjoint() * x * phi; }

  /// Reduced block of an operator commuting with the units.
  Matrix reduce_commutant(const Matrix& x, double eps = tol::structural) const {
    Matrix c = chi(x);
    Eigen::Index h = half_dim();
    double scale = std::max(1.0, x.norm());
    require(c.topRightCorner(h, h).norm() < eps * scale &&
                c.bottomLeftCorner(h, h).norm() < eps * scale &&
                (c.topLeftCorner(h, h) - c.bottomRightCorner(h, h)).norm() < eps * scale,
            "NotQuaternionic", "operator does not commute with the quaternion units");
    return c.topLeftCorner(h, h);
  }

  /// Reduction r+ = -(r o j1) restricted to W+ of an anti-unitary
  /// commuting with the units; r alone exchanges the j3 eigenspaces, the
  /// twist by j1 brings it back.
  AntiLinearOp reduce_antilinear(const AntiLinearOp& r, double eps = tol::structural) const {
    Matrix carried = r.mat * (j1 * into_plus).conjugate();
    Matrix reduced = -(into_plus.adjoint() * carried);
    require((carried + into_plus * reduced).norm() < eps * std::max(1.0, carried.norm()),
            "NotQuaternionic", "anti-unitary does not preserve the factorization");
    return AntiLinearOp(reduced);
  }
};

inline QuaternionicFactor quaternionic_factor(const std::array<Matrix, 3>& j,
                                              double eps = tol::structural) {
  const Eigen::Index n = j[0].rows();
  require(n % 2 == 0, "BadSpinAlgebra", "quaternion units need even dimension");
  for (int mu = 0; mu < 3; ++mu) {
    require(is_square(j[mu]) && j[mu].rows() == n, "DimensionMismatch",
            "quaternion units must share one square shape");
    require(approx_equal(Matrix(j[mu] * j[mu]), Matrix(-identity(n)), eps), "BadSpinAlgebra",
            "quaternion unit does not square to minus one");
    require(approx_equal(Matrix(j[mu].adjoint()), Matrix(-j[mu]), eps), "BadSpinAlgebra",
            "quaternion unit is not skew-adjoint");
    for (int nu = mu + 1; nu < 3; ++nu) {
      require((j[mu] * j[nu] + j[nu] * j[mu]).norm() < eps, "BadSpinAlgebra",
              "quaternion units do not anticommute");
    }
  }
  require(approx_equal(Matrix(j[0] * j[1]), Matrix(-j[2]), eps) ||
              approx_equal(Matrix(j[0] * j[1]), j[2], eps),
          "BadSpinAlgebra", "units do not close into a quaternion triple");

  Matrix k = Complex(0, -1) * j[2];
  Eigen::SelfAdjointEigenSolver<Matrix> es(k);
  QuaternionicFactor out;
  out.j1 = j[0];
  out.into_plus = Matrix(n, n / 2);
  Eigen::Index found = 0;
  for (Eigen::Index c = 0; c < n; ++c) {
    if (es.eigenvalues()(c) > 0) {
      require(found < n / 2, "BadSpinAlgebra", "j3 eigenspaces are not half dimensional");
      out.into_plus.col(found++) = es.eigenvectors().col(c);
    }
  }
  require(found == n / 2, "BadSpinAlgebra", "j3 eigenspaces are not half dimensional");
  out.phi = Matrix(n, n);
  out.phi.leftCols(n / 2) = out.into_plus;
  out.phi.rightCols(n / 2) = -j[0] * out.into_plus;
  require(is_unitary(out.phi, 1e-9), "BadSpinAlgebra", "factorization basis is not unitary");
  return out;
}

/// One-particle block of a charge-conserving quadratic Hamiltonian.
inline Matrix charge_reduce(const nambu::BdGHamiltonian& b, double eps = tol::structural) {
  require(b.delta.norm() < eps * std::max(1.0, b.p.norm()), "NotChargeConserving",
          "pairing block must vanish for a charge-conserving system");
  return b.p;
}

}  // namespace tenfold::symmetry
