#pragma once

#include <array>
#include <cmath>
#include <optional>
#include <string>
#include <vector>

#include "tenfold/antilinear.hpp"
#include "tenfold/core.hpp"
#include "tenfold/homotopy.hpp"
#include "tenfold/linalg.hpp"
#include "tenfold/nambu.hpp"
#include "tenfold/symmetry.hpp"

namespace tenfold::classify {

/// Which symmetries a model declares.  Particle-hole conjugation gamma
/// is always present implicitly; these flags select the optional ones:
/// anti-unitary time reversal, full spin rotation, charge conservation,
/// and a chiral (particle-hole) generator.
struct SymmetrySet {
  bool trs = false;
  bool srs = false;
  bool charge = false;
  bool phs = false;

  friend bool operator==(const SymmetrySet&, const SymmetrySet&) = default;
};

/// How the product of the two effective anti-unitaries (when both are
/// present) sits inside the algebra: squaring to +1 (real_inner) or to
/// -1 (imag_inner).  Complex chiral classes carry a plain inner grading.
enum class ChiralKind { none, real_inner, imag_inner, inner };

struct ClassLabel {
  std::string cartan;
  int position = 0;
  std::string series;
  int index = 0;
  std::optional<int> trs_sign;
  std::optional<int> phs_sign;
  ChiralKind chiral = ChiralKind::none;
  std::string group;

  friend bool operator==(const ClassLabel&, const ClassLabel&) = default;
};

struct TableRow {
  SymmetrySet set;
  ClassLabel label;
};

/// The ten admissible symmetry sets with their labels.  Signs are the
/// squares of the effective reduced anti-unitaries: on the spin-reduced
/// space an anti-unitary r commuting with the quaternion units squares
/// to -r^2, which is why C and CI carry phs -1 and CI carries trs +1.
inline const std::array<TableRow, 10>& classification_table() {
  using CK = ChiralKind;
  static const std::array<TableRow, 10> table = {{
      {{false, false, false, false},
       {"D", 0, "KO", 2, std::nullopt, 1, CK::none, "Z2"}},
      {{true, false, false, false},
       {"DIII", 1, "KO", 3, -1, 1, CK::imag_inner, "0"}},
      {{true, false, true, false},
       {"AII", 2, "KO", 4, -1, std::nullopt, CK::none, "Z"}},
      {{true, false, true, true},
       {"CII", 3, "KO", 5, -1, -1, CK::real_inner, "0"}},
      {{false, true, false, false},
       {"C", 4, "KO", 6, std::nullopt, -1, CK::none, "0"}},
      {{true, true, false, false},
       {"CI", 5, "KO", 7, 1, -1, CK::imag_inner, "0"}},
      {{true, true, true, false},
       {"AI", 6, "KO", 0, 1, std::nullopt, CK::none, "Z"}},
      {{true, true, true, true},
       {"BDI", 7, "KO", 1, 1, 1, CK::real_inner, "Z2"}},
      {{false, false, true, false},
       {"A", 0, "KU", 0, std::nullopt, std::nullopt, CK::none, "Z"}},
      {{false, false, true, true},
       {"AIII", 1, "KU", 1, std::nullopt, std::nullopt, CK::inner, "0"}},
  }};
  return table;
}

inline ClassLabel classify_set(const SymmetrySet& set) {
  for (const TableRow& row : classification_table())
    if (row.set == set) return row.label;
  fail("InadmissibleSet", "no class carries this combination of symmetries");
}

/// Position bookkeeping: real position s lands in KO_{(s+2) mod 8},
/// complex position s in KU_{s mod 2}.
inline int translate_abstract(const std::string& series, int position) {
  if (series == "KO") return ((position % 8) + 8 + 2) % 8;
  if (series == "KU") return ((position % 2) + 2) % 2;
  fail("BadSeries", "series must be KO or KU");
}

/// Adjoining full spin rotation tensors the symmetry algebra with the
/// quaternions, which moves a real class four steps along the eightfold
/// sequence.
inline int shift_by_quaternions(int ko_index) { return ((ko_index % 8) + 8 + 4) % 8; }

inline std::string k_group(const std::string& series, int index) {
  if (series == "KO") {
    static const std::array<const char*, 8> groups = {"Z", "Z2", "Z2", "0",
                                                      "Z", "0",  "0",  "0"};
    require(index >= 0 && index < 8, "BadIndex", "KO index out of range");
    return groups[static_cast<std::size_t>(index)];
  }
  if (series == "KU") {
    require(index == 0 || index == 1, "BadIndex", "KU index out of range");
    return index == 0 ? "Z" : "0";
  }
  fail("BadSeries", "series must be KO or KU");
}

/// A concrete model: a gamma-imaginary self-adjoint hamiltonian on the
/// doubled space W, plus the implementing operators on V for every
/// declared symmetry.  Time reversal is anti-unitary on V, the chiral
/// generator is a unitary involution on V, and spin rotation is given
/// by its three quaternion units on V.
struct Instance {
  SymmetrySet symmetries;
  Matrix hamiltonian;
  std::optional<AntiLinearOp> trs;
  std::optional<Matrix> phs;
  std::optional<std::array<Matrix, 3>> spin;
};

namespace detail {

inline void check_sign(const std::optional<int>& computed, const std::optional<int>& expected,
                       const std::string& which) {
  if (!expected) return;
  require(computed.has_value(), "NotInvolutive",
          "the effective " + which + " operator does not square to a sign");
  require(*computed == *expected, "SignMismatch",
          "the effective " + which + " operator squares to the wrong sign");
}

inline std::array<Matrix, 3> lift_units(const std::array<Matrix, 3>& j) {
  return {symmetry::lift_unitary(j[0]), symmetry::lift_unitary(j[1]),
          symmetry::lift_unitary(j[2])};
}

}  // namespace detail

/// Validate an instance against its declared symmetry set and return
/// the class label.  Every operator must implement its symmetry on the
/// hamiltonian, cross-commutation between operators must hold, and the
/// squares of the effective anti-unitaries must reproduce the signs in
/// the table; any failure is an error, never a silent reclassification.
inline ClassLabel derive_label(const Instance& inst, double eps = tol::structural) {
  ClassLabel label = classify_set(inst.symmetries);
  require(inst.trs.has_value() == inst.symmetries.trs,
          inst.symmetries.trs ? "MissingOperator" : "UnexpectedOperator",
          "time-reversal data must match the declared set");
  require(inst.phs.has_value() == inst.symmetries.phs,
          inst.symmetries.phs ? "MissingOperator" : "UnexpectedOperator",
          "chiral data must match the declared set");
  require(inst.spin.has_value() == inst.symmetries.srs,
          inst.symmetries.srs ? "MissingOperator" : "UnexpectedOperator",
          "spin data must match the declared set");

  const Matrix& h = inst.hamiltonian;
  require(is_square(h) && h.rows() >= 2 && h.rows() % 2 == 0, "BadDimension",
          "hamiltonian must act on the doubled space W");
  Eigen::Index m = h.rows() / 2;
  nambu::NambuSpace n(static_cast<int>(m));
  AntiLinearOp gamma = n.gamma();
  double scale = std::max(1.0, h.norm());
  require(is_self_adjoint(h, eps * scale), "NotSelfAdjoint", "hamiltonian is not self-adjoint");
  require((gamma.adjoint_action(h) + h).norm() < eps * scale, "NotParticleHoleSymmetric",
          "hamiltonian is not gamma-imaginary");

  Matrix p;
  if (inst.symmetries.charge)
    p = symmetry::charge_reduce(nambu::BdGHamiltonian::from_full(h), eps * scale);

  std::array<Matrix, 3> jv;
  if (inst.symmetries.srs) {
    jv = *inst.spin;
    for (const Matrix& u : jv) {
      require(u.rows() == m && u.cols() == m, "DimensionMismatch",
              "spin units must act on V");
      Matrix lifted = symmetry::lift_unitary(u);
      require((lifted * h - h * lifted).norm() < eps * scale, "NotSymmetric",
              "hamiltonian does not commute with the spin units");
    }
  }

  if (inst.symmetries.trs) {
    const AntiLinearOp& t = *inst.trs;
    require(t.dim() == m, "DimensionMismatch", "time reversal must act on V");
    require(is_antiunitary(t, eps), "NotAntiunitary", "time reversal must be anti-unitary");
    AntiLinearOp lifted = symmetry::lift_trs(t);
    require((lifted.adjoint_action(h) - h).norm() < eps * scale, "NotSymmetric",
            "time reversal does not preserve the hamiltonian");
    if (inst.symmetries.srs)
      for (const Matrix& u : jv)
        require((t.mat * u.conjugate() - u * t.mat).norm() < eps * std::max(1.0, u.norm()),
                "NotSymmetric", "time reversal does not commute with the spin units");
  }

  if (inst.symmetries.phs) {
    const Matrix& s = *inst.phs;
    require(s.rows() == m && s.cols() == m, "DimensionMismatch",
            "chiral generator must act on V");
    require(is_unitary(s, eps), "NotUnitary", "chiral generator must be unitary");
    require(is_involution(s, eps), "NotInvolutive",
            "chiral generator must square to the identity");
    require((s * p * s + p).norm() < eps * scale, "NotSymmetric",
            "charge block does not anticommute with the chiral generator");
    if (inst.symmetries.srs)
      for (const Matrix& u : jv)
        require((s * u - u * s).norm() < eps * std::max(1.0, u.norm()), "NotSymmetric",
                "chiral generator does not commute with the spin units");
    if (inst.symmetries.trs)
      require((inst.trs->mat * s.conjugate() - s * inst.trs->mat).norm() < eps, "NotSymmetric",
              "chiral generator does not commute with time reversal");
  }

  std::optional<int> trs_sign, phs_sign;
  if (!inst.symmetries.srs) {
    if (inst.symmetries.trs) trs_sign = involution_sign(*inst.trs, eps);
    if (!inst.symmetries.charge) {
      phs_sign = involution_sign(gamma, eps);
    } else if (inst.symmetries.phs && inst.symmetries.trs) {
      phs_sign = involution_sign(compose(*inst.phs, *inst.trs), eps);
    }
  } else if (!inst.symmetries.charge) {
    symmetry::QuaternionicFactor qf = symmetry::quaternionic_factor(detail::lift_units(jv), eps);
    phs_sign = involution_sign(qf.reduce_antilinear(gamma, eps), eps);
    if (inst.symmetries.trs)
      trs_sign =
          involution_sign(qf.reduce_antilinear(symmetry::lift_trs(*inst.trs), eps), eps);
  } else {
    symmetry::QuaternionicFactor qf = symmetry::quaternionic_factor(jv, eps);
    AntiLinearOp tplus = qf.reduce_antilinear(*inst.trs, eps);
    trs_sign = involution_sign(tplus, eps);
    if (inst.symmetries.phs)
      phs_sign = involution_sign(compose(qf.reduce_commutant(*inst.phs, eps), tplus), eps);
  }
  detail::check_sign(trs_sign, label.trs_sign, "time-reversal");
  detail::check_sign(phs_sign, label.phs_sign, "particle-hole");
  return label;
}

/// The classification-ready residue of an instance: the hamiltonian
/// transported to the smallest carrier space (V when charge conserving,
/// the spin-halved space when spin rotating) together with the algebra
/// of residual relations it satisfies there.  Relations are listed
/// reference-first: the anti-unitary reference (gamma or time reversal)
/// precedes the chiral relation when both are present.
struct ReducedSystem {
  ClassLabel label;
  Matrix hamiltonian;
  homotopy::GradedMatrixAlgebra algebra;
};

inline ReducedSystem reduce(const Instance& inst, double eps = tol::structural) {
  ReducedSystem out;
  out.label = derive_label(inst, eps);
  const SymmetrySet& set = inst.symmetries;
  const Matrix& h = inst.hamiltonian;
  Eigen::Index m = h.rows() / 2;
  nambu::NambuSpace n(static_cast<int>(m));

  if (!set.charge && !set.srs) {
    out.hamiltonian = h;
    out.algebra.dim = 2 * m;
    out.algebra.relations.push_back({symmetry::conjugation_auto(n.gamma()), -1});
    if (set.trs)
      out.algebra.relations.push_back(
          {symmetry::conjugation_auto(symmetry::lift_trs(*inst.trs)), 1});
  } else if (set.charge && !set.srs) {
    out.hamiltonian = symmetry::charge_reduce(nambu::BdGHamiltonian::from_full(h), eps);
    out.algebra.dim = m;
    if (set.trs) out.algebra.relations.push_back({symmetry::conjugation_auto(*inst.trs), 1});
    if (set.phs) out.algebra.relations.push_back({symmetry::inner_auto(*inst.phs), -1});
  } else if (!set.charge) {
    symmetry::QuaternionicFactor qf =
        symmetry::quaternionic_factor(detail::lift_units(*inst.spin), eps);
    out.hamiltonian = qf.reduce_commutant(h, eps * std::max(1.0, h.norm()));
    out.algebra.dim = m;
    out.algebra.relations.push_back(
        {symmetry::conjugation_auto(qf.reduce_antilinear(n.gamma(), eps)), -1});
    if (set.trs)
      out.algebra.relations.push_back(
          {symmetry::conjugation_auto(qf.reduce_antilinear(symmetry::lift_trs(*inst.trs), eps)),
           1});
  } else {
    Matrix p = symmetry::charge_reduce(nambu::BdGHamiltonian::from_full(h), eps);
    symmetry::QuaternionicFactor qf = symmetry::quaternionic_factor(*inst.spin, eps);
    out.hamiltonian = qf.reduce_commutant(p, eps * std::max(1.0, p.norm()));
    out.algebra.dim = m / 2;
    out.algebra.relations.push_back(
        {symmetry::conjugation_auto(qf.reduce_antilinear(*inst.trs, eps)), 1});
    if (set.phs)
      out.algebra.relations.push_back(
          {symmetry::inner_auto(qf.reduce_commutant(*inst.phs, eps)), -1});
  }

  double scale = std::max(1.0, out.hamiltonian.norm());
  for (const auto& rel : out.algebra.relations)
    require((rel.op.apply(out.hamiltonian) - double(rel.sign) * out.hamiltonian).norm() <
                eps * scale,
            "NotSymmetric", "reduction lost a declared relation");
  return out;
}

/// An element of the classifying group, tagged with the group it lives
/// in ("Z", "Z2" with values 0/1, or "0").
struct Invariant {
  std::string group;
  long value = 0;

  friend bool operator==(const Invariant&, const Invariant&) = default;
};

namespace detail {

/// Orthonormal basis of the +1 eigenspace of a real structure, found
/// by symmetrizing coordinate vectors and Gram-Schmidt.  Deterministic,
/// so repeated runs on the same operator give the same frame.
inline Matrix real_frame(const AntiLinearOp& t) {
  require(is_real_structure(t, 1e-8), "NotInvolutive",
          "real frame needs an anti-unitary squaring to +1");
  Eigen::Index d = t.dim();
  Matrix frame(d, d);
  Eigen::Index found = 0;
  for (Eigen::Index k = 0; k < d && found < d; ++k) {
    for (int imaginary = 0; imaginary < 2 && found < d; ++imaginary) {
      Vector e = Vector::Zero(d);
      e(k) = imaginary ? Complex(0, 1) : Complex(1, 0);
      Vector cand = e + t.apply(e);
      for (Eigen::Index j = 0; j < found; ++j)
        cand -= frame.col(j) * (frame.col(j).adjoint() * cand)(0);
      if (cand.norm() < 1e-6) continue;
      frame.col(found++) = cand / cand.norm();
    }
  }
  require(found == d, "NotInvolutive", "real frame construction did not span");
  return frame;
}

/// Sign of the determinant of the chiral off-diagonal block, evaluated
/// in the deterministic time-reversal-real frame with eigenvector
/// orientations fixed by their largest component.  The bit is
/// normalized relative to this frame, so values are comparable between
/// hamiltonians sharing the same symmetry operators.
inline long chiral_block_bit(const Matrix& z, const AntiLinearOp& tplus, const Matrix& splus) {
  Matrix frame = real_frame(tplus);
  Matrix zc = frame.adjoint() * z * frame;
  Matrix sc = frame.adjoint() * splus * frame;
  require(zc.imag().norm() < 1e-8 && sc.imag().norm() < 1e-8, "NotSymmetric",
          "data is not real in the time-reversal frame");
  RealMatrix zr = zc.real(), sr = sc.real();
  Eigen::SelfAdjointEigenSolver<RealMatrix> es(sr);
  Eigen::Index d = sr.rows();
  Eigen::Index neg = 0;
  for (Eigen::Index i = 0; i < d; ++i)
    if (es.eigenvalues()(i) < 0) ++neg;
  require(2 * neg == d, "Gapless", "chiral eigenspaces have unequal dimension");
  RealMatrix vectors = es.eigenvectors();
  for (Eigen::Index j = 0; j < d; ++j) {
    Eigen::Index top = 0;
    vectors.col(j).cwiseAbs().maxCoeff(&top);
    if (vectors(top, j) < 0) vectors.col(j) = -vectors.col(j);
  }
  RealMatrix block =
      vectors.rightCols(neg).transpose() * zr * vectors.leftCols(neg);
  double det = block.determinant();
  require(std::abs(det) > 1e-10, "Gapless", "chiral block is singular");
  return det > 0 ? 0 : 1;
}

}  // namespace detail

/// Evaluate the classifying invariant of a reduced system.  Classes
/// with group Z count spectra (A: negative eigenvalues; AI: signature;
/// AII: half the signature, which Kramers degeneracy makes integral).
/// Class D takes the sign of the pfaffian in the majorana basis, BDI
/// the sign of the chiral block determinant in the time-reversal frame.
/// Classes with trivial group always report zero, after checking the
/// gap.
inline Invariant invariant_value(const ReducedSystem& sys, double gap_floor = tol::gap_floor) {
  const Matrix& z = sys.hamiltonian;
  spectral_sign(z, gap_floor);
  Invariant out{sys.label.group, 0};
  const std::string& cartan = sys.label.cartan;
  if (cartan == "A") {
    out.value = negative_eigenvalue_count(z, gap_floor);
  } else if (cartan == "AI") {
    out.value = signature(z, gap_floor);
  } else if (cartan == "AII") {
    int sig = signature(z, gap_floor);
    require(sig % 2 == 0, "KramersViolation",
            "time reversal with square -1 requires an even signature");
    out.value = sig / 2;
  } else if (cartan == "D") {
    nambu::NambuSpace n(static_cast<int>(z.rows() / 2));
    Complex pf = pfaffian(nambu::majorana_form(n, z).cast<Complex>());
    out.value = pf.real() > 0 ? 0 : 1;
  } else if (cartan == "BDI") {
    AntiLinearOp tplus(sys.algebra.relations.at(0).op.gen);
    const Matrix& splus = sys.algebra.relations.at(1).op.gen;
    out.value = detail::chiral_block_bit(z, tplus, splus);
  }
  return out;
}

namespace detail {

/// Fixed minimal models, one per class: the smallest V that admits the
/// declared operators with the right signs.
inline Instance model_instance(const SymmetrySet& set) {
  Instance inst;
  inst.symmetries = set;
  ClassLabel label = classify_set(set);
  Matrix two = identity(2);
  AntiLinearOp flip(Complex(0, 1) * pauli_y());
  AntiLinearOp kramers(kron(two, Complex(0, 1) * pauli_y()));
  Eigen::Index m = 2;
  if (label.cartan == "DIII") {
    inst.trs = flip;
  } else if (label.cartan == "AII") {
    m = 4;
    inst.trs = kramers;
  } else if (label.cartan == "CII") {
    m = 4;
    inst.trs = kramers;
    inst.phs = kron(pauli_z(), two);
  } else if (label.cartan == "C") {
    inst.spin = symmetry::spin_generators(2);
  } else if (label.cartan == "CI") {
    inst.spin = symmetry::spin_generators(2);
    inst.trs = flip;
  } else if (label.cartan == "AI") {
    m = 4;
    inst.spin = symmetry::spin_generators(4);
    inst.trs = kramers;
  } else if (label.cartan == "BDI") {
    m = 4;
    inst.spin = symmetry::spin_generators(4);
    inst.trs = kramers;
    inst.phs = kron(pauli_z(), two);
  } else if (label.cartan == "A") {
    m = 3;
  } else if (label.cartan == "AIII") {
    inst.phs = pauli_z();
  }
  inst.hamiltonian = Matrix::Zero(2 * m, 2 * m);
  return inst;
}

}  // namespace detail

/// Project a matrix onto the subspace commuting with every declared
/// symmetry of the instance (and anticommuting with gamma, as any
/// quadratic hamiltonian must).  The projections commute for operators
/// passing derive_label, so a single pass is exact.
inline Matrix symmetrize(const Instance& inst, const Matrix& k0) {
  Eigen::Index d = inst.hamiltonian.rows();
  require(k0.rows() == d && k0.cols() == d, "DimensionMismatch",
          "perturbation has the wrong shape");
  Eigen::Index m = d / 2;
  nambu::NambuSpace n(static_cast<int>(m));
  Matrix k = 0.5 * (k0 + Matrix(k0.adjoint()));
  AntiLinearOp gamma = n.gamma();
  k = 0.5 * (k - gamma.adjoint_action(k));
  if (inst.symmetries.charge) {
    Matrix q = symmetry::charge_operator(static_cast<int>(m));
    k = 0.5 * (k + q * k * q);
  }
  if (inst.symmetries.trs) {
    AntiLinearOp lifted = symmetry::lift_trs(*inst.trs);
    k = 0.5 * (k + lifted.adjoint_action(k));
  }
  if (inst.symmetries.phs) {
    AntiLinearOp lifted = symmetry::lift_phs(*inst.phs);
    k = 0.5 * (k + lifted.adjoint_action(k));
  }
  if (inst.symmetries.srs) {
    for (int mu = 0; mu < 2; ++mu) {
      Matrix u = symmetry::lift_unitary((*inst.spin)[static_cast<std::size_t>(mu)]);
      k = 0.5 * (k + u * k * u.adjoint());
    }
  }
  return k;
}

/// Draw a random gapped instance of the class: a gaussian hamiltonian
/// symmetrized over the declared operators of the fixed minimal model,
/// rejected while the relative gap is slim, then spectrally flattened.
inline Instance random_instance(const SymmetrySet& set, Rng& rng) {
  Instance inst = detail::model_instance(set);
  Eigen::Index d = inst.hamiltonian.rows();
  for (int attempt = 0; attempt < 64; ++attempt) {
    Matrix h = symmetrize(inst, rng.hermitian(d));
    Eigen::SelfAdjointEigenSolver<Matrix> es(h, Eigen::EigenvaluesOnly);
    double top = es.eigenvalues().cwiseAbs().maxCoeff();
    if (top < 1e-8) continue;
    if (es.eigenvalues().cwiseAbs().minCoeff() < 0.05 * top) continue;
    inst.hamiltonian = spectral_sign(h);
    derive_label(inst);
    return inst;
  }
  fail("Gapless", "could not draw a gapped symmetric hamiltonian");
}

}  // namespace tenfold::classify
