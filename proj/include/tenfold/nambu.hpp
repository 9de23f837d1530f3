#pragma once

#include <cmath>

#include "tenfold/antilinear.hpp"
#include "tenfold/fock.hpp"
#include "tenfold/linalg.hpp"

namespace tenfold::nambu {

/// Nambu space W = V + V* in coordinates: vectors are (x, phi) in C^{2m}
/// with x the V part and phi the covector coefficients in the dual basis.
/// The linear basis identification V -> V* is the identity on coordinates,
/// so the canonical real structure gamma acts by (x, y) -> (conj y, conj x).
struct NambuSpace {
  int dim_v;

  explicit NambuSpace(int m) : dim_v(m) {
    require(m >= 1, "BadDimension", "NambuSpace needs dim V >= 1");
  }

  Eigen::Index dim_w() const { return 2 * static_cast<Eigen::Index>(dim_v); }

  Matrix swap_blocks() const {
    Matrix s = Matrix::Zero(dim_w(), dim_w());
    s.block(0, dim_v, dim_v, dim_v) = identity(dim_v);
    s.block(dim_v, 0, dim_v, dim_v) = identity(dim_v);
    return s;
  }

  AntiLinearOp gamma() const { return AntiLinearOp(swap_blocks()); }
};

/// The symmetric bilinear form q((x,phi),(x',phi')) = phi(x') + phi'(x).
/// No complex conjugation enters: q is bilinear, not sesquilinear.
inline Complex q_form(const NambuSpace& n, const Vector& w, const Vector& wp) {
  require(w.size() == n.dim_w() && wp.size() == n.dim_w(), "DimensionMismatch",
          "q_form: vectors must live on W");
  return (w.transpose() * n.swap_blocks() * wp).value();
}

/// Field operator eta(x + phi) = c+_x + c_{rho^{-1} phi}; complex linear in
/// (x, phi) because the annihilator argument rho^{-1} phi = conj(phi)
/// cancels the anti-linearity of c.
inline Matrix eta(const NambuSpace& n, const fock::FockSpace& f, const Vector& w) {
  require(f.modes == n.dim_v, "DimensionMismatch", "eta: Fock modes must equal dim V");
  require(w.size() == n.dim_w(), "DimensionMismatch", "eta: vector must live on W");
  Vector x = w.head(n.dim_v);
  Vector phi = w.tail(n.dim_v);
  return fock::creator(f, x) + fock::annihilator(f, Vector(phi.conjugate()));
}

/// CAR defect {eta(w), eta(w')} - q(w, w') Id; zero for a faithful
/// representation of the canonical anticommutation relations.
inline Matrix car_defect(const NambuSpace& n, const fock::FockSpace& f, const Vector& w,
                         const Vector& wp) {
  Matrix a = eta(n, f, w), b = eta(n, f, wp);
  return a * b + b * a - q_form(n, w, wp) * identity(f.dim);
}

/// Bogoliubov-de Gennes Hamiltonian in block form
///   full = [[P, Delta], [Delta^*, -P^T]]
/// with P self-adjoint and Delta antisymmetric.  full is self-adjoint and
/// imaginary with respect to gamma: gamma full gamma^{-1} = -full.
struct BdGHamiltonian {
  Matrix p;
  Matrix delta;

  static BdGHamiltonian from_blocks(Matrix p, Matrix delta) {
    require(is_square(p) && p.rows() == delta.rows() && is_square(delta),
            "DimensionMismatch", "BdG blocks must be square of equal size");
    require(is_self_adjoint(p), "NotSelfAdjoint", "BdG block P must be self-adjoint");
    require(is_antisymmetric(delta), "NotAntisymmetric",
            "BdG block Delta must be antisymmetric");
    return BdGHamiltonian{std::move(p), std::move(delta)};
  }

  static BdGHamiltonian from_full(const Matrix& full) {
    require(is_square(full) && full.rows() % 2 == 0, "BadDimension",
            "BdG full matrix must have even dimension");
    Eigen::Index m = full.rows() / 2;
    BdGHamiltonian b =
        from_blocks(full.topLeftCorner(m, m), full.topRightCorner(m, m));
    require(approx_equal(full, b.full()), "NotParticleHoleSymmetric",
            "BdG full matrix is not gamma-imaginary");
    return b;
  }

  Eigen::Index dim_v() const { return p.rows(); }

  Matrix full() const {
    Eigen::Index m = dim_v();
    Matrix h(2 * m, 2 * m);
    h.topLeftCorner(m, m) = p;
    h.topRightCorner(m, m) = delta;
    h.bottomLeftCorner(m, m) = delta.adjoint();
    h.bottomRightCorner(m, m) = -p.transpose();
    return h;
  }
};

/// Extract the BdG matrix of a quadratic Fock Hamiltonian from the
/// commutator action ad_H on field operators: [H, eta(w)] = eta(full w).
/// The field operators c+_i, c_i are pairwise orthogonal in the
/// Hilbert-Schmidt inner product with norm^2 = 2^{n-1}, so coefficients
/// are traces; the residual detects non-quadratic input (NotFreeFermion).
inline BdGHamiltonian extract_bdg(const NambuSpace& n, const fock::FockSpace& f,
                                  const Matrix& h, double eps = tol::structural) {
  require(f.modes == n.dim_v, "DimensionMismatch", "extract_bdg: Fock modes != dim V");
  require(h.rows() == f.dim && h.cols() == f.dim, "DimensionMismatch",
          "extract_bdg: Hamiltonian has wrong shape");
  require(is_self_adjoint(h, eps * std::max(1.0, h.norm())), "NotSelfAdjoint",
          "extract_bdg: Hamiltonian must be self-adjoint");

  const int m = n.dim_v;
  std::vector<Matrix> field(static_cast<std::size_t>(2 * m));
  for (int i = 0; i < m; ++i) {
    Vector e = Vector::Zero(m);
    e(i) = 1.0;
    field[static_cast<std::size_t>(i)] = fock::creator(f, e);
    field[static_cast<std::size_t>(m + i)] = field[static_cast<std::size_t>(i)].adjoint();
  }
  const double hs_norm2 = std::pow(2.0, f.modes - 1);

  Matrix full(2 * m, 2 * m);
  double scale = std::max(1.0, h.norm());
  for (int j = 0; j < 2 * m; ++j) {
    Matrix k = h * field[static_cast<std::size_t>(j)] - field[static_cast<std::size_t>(j)] * h;
    Matrix recon = Matrix::Zero(f.dim, f.dim);
    for (int i = 0; i < 2 * m; ++i) {
      Complex coeff = (field[static_cast<std::size_t>(i)].adjoint() * k).trace() / hs_norm2;
      full(i, j) = coeff;
      recon += coeff * field[static_cast<std::size_t>(i)];
    }
    require((k - recon).norm() < eps * scale, "NotFreeFermion",
            "extract_bdg: commutator leaves the field-operator span");
  }
  return BdGHamiltonian::from_full(full);
}

inline bool is_gapped(const BdGHamiltonian& b, double floor = tol::gap_floor) {
  Eigen::SelfAdjointEigenSolver<Matrix> es(b.full(), Eigen::EigenvaluesOnly);
  return es.eigenvalues().cwiseAbs().minCoeff() > floor;
}

/// Spectral flattening h -> h |h|^{-1}; stays a valid BdG Hamiltonian
/// because the sign function commutes with the structural symmetries.
inline BdGHamiltonian flatten(const BdGHamiltonian& b) {
  return BdGHamiltonian::from_full(spectral_sign(b.full()));
}

/// Orthonormal basis of gamma-fixed (Majorana) vectors, interleaved per
/// mode: a_j = (e_j, e_j)/sqrt2, b_j = (e_j, -e_j)/(i sqrt2).  In this
/// basis any gamma-imaginary self-adjoint H becomes i * (real
/// antisymmetric), and direct sums of modes concatenate without extra
/// permutation signs.
inline Matrix majorana_basis(const NambuSpace& n) {
  const int m = n.dim_v;
  Matrix u = Matrix::Zero(2 * m, 2 * m);
  const double s = 1.0 / std::sqrt(2.0);
  const Complex is(0.0, 1.0);
  for (int j = 0; j < m; ++j) {
    u(j, 2 * j) = s;
    u(m + j, 2 * j) = s;
    u(j, 2 * j + 1) = s / is;
    u(m + j, 2 * j + 1) = -s / is;
  }
  return u;
}

/// The real antisymmetric matrix i U^* H U in the Majorana basis.
inline RealMatrix majorana_form(const NambuSpace& n, const Matrix& full,
                                double eps = tol::structural) {
  Matrix u = majorana_basis(n);
  Matrix transformed = Complex(0, 1) * u.adjoint() * full * u;
  require(transformed.imag().norm() < eps * std::max(1.0, full.norm()),
          "NotParticleHoleSymmetric", "majorana_form: input is not gamma-imaginary");
  return transformed.real();
}

}  // namespace tenfold::nambu
