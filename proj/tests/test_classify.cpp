#include <catch2/catch_amalgamated.hpp>

#include <map>
#include <set>
#include <string>

#include "tenfold/classify.hpp"
#include "tenfold/homotopy.hpp"

using namespace tenfold;
namespace cls = tenfold::classify;
namespace hom = tenfold::homotopy;
namespace sym = tenfold::symmetry;
using Catch::Matchers::Predicate;

namespace {

auto has_code(const std::string& code) {
  return Predicate<Error>([code](const Error& e) { return e.code() == code; },
                          "error code is " + code);
}

cls::SymmetrySet set_of(const std::string& cartan) {
  for (const auto& row : cls::classification_table())
    if (row.label.cartan == cartan) return row.set;
  FAIL("unknown class " << cartan);
  return {};
}

}  // namespace

TEST_CASE("classification table bookkeeping is consistent", "[classify]") {
  const auto& table = cls::classification_table();

  SECTION("every row agrees with the position and group maps") {
    for (const auto& row : table) {
      REQUIRE(row.label.index == cls::translate_abstract(row.label.series, row.label.position));
      REQUIRE(row.label.group == cls::k_group(row.label.series, row.label.index));
      if (row.label.trs_sign && row.label.phs_sign) {
        int product = *row.label.trs_sign * *row.label.phs_sign;
        REQUIRE(row.label.chiral == (product > 0 ? cls::ChiralKind::real_inner
                                                 : cls::ChiralKind::imag_inner));
      }
    }
  }

  SECTION("exactly ten of the sixteen subsets are admissible") {
    int admissible = 0;
    for (int mask = 0; mask < 16; ++mask) {
      cls::SymmetrySet set{(mask & 1) != 0, (mask & 2) != 0, (mask & 4) != 0, (mask & 8) != 0};
      try {
        cls::classify_set(set);
        ++admissible;
      } catch (const Error& e) {
        REQUIRE(e.code() == "InadmissibleSet");
      }
    }
    REQUIRE(admissible == 10);
    REQUIRE_THROWS_MATCHES(cls::classify_set({false, false, false, true}), Error,
                           has_code("InadmissibleSet"));
  }

  SECTION("adjoining spin rotation shifts real classes by four") {
    const std::map<std::string, std::string> partner = {
        {"D", "C"}, {"DIII", "CI"}, {"AII", "AI"}, {"CII", "BDI"}};
    for (const auto& [from, to] : partner) {
      cls::SymmetrySet set = set_of(from);
      REQUIRE_FALSE(set.srs);
      set.srs = true;
      cls::ClassLabel shifted = cls::classify_set(set);
      REQUIRE(shifted.cartan == to);
      REQUIRE(shifted.index ==
              cls::shift_by_quaternions(cls::classify_set(set_of(from)).index));
    }
  }

  SECTION("specific rows carry the advertised data") {
    cls::ClassLabel d = cls::classify_set({});
    REQUIRE(d.cartan == "D");
    REQUIRE(d.series == "KO");
    REQUIRE(d.index == 2);
    REQUIRE(d.group == "Z2");
    REQUIRE_FALSE(d.trs_sign.has_value());
    REQUIRE(d.phs_sign == std::optional<int>(1));

    cls::ClassLabel aii = cls::classify_set(set_of("AII"));
    REQUIRE(aii.index == 4);
    REQUIRE(aii.trs_sign == std::optional<int>(-1));
    REQUIRE(aii.group == "Z");

    REQUIRE(cls::classify_set(set_of("A")).series == "KU");
    REQUIRE(cls::classify_set(set_of("AIII")).chiral == cls::ChiralKind::inner);
  }

  SECTION("series helpers reject bad input") {
    REQUIRE_THROWS_MATCHES(cls::translate_abstract("K", 0), Error, has_code("BadSeries"));
    REQUIRE_THROWS_MATCHES(cls::k_group("KO", 9), Error, has_code("BadIndex"));
  }
}

TEST_CASE("random instances validate and reduce in every class", "[classify]") {
  Rng rng(811);
  const std::map<std::string, Eigen::Index> reduced_dim = {
      {"D", 4},  {"DIII", 4}, {"AII", 4}, {"CII", 4}, {"C", 2},
      {"CI", 2}, {"AI", 2},   {"BDI", 2}, {"A", 3},   {"AIII", 2}};

  for (const auto& row : cls::classification_table()) {
    INFO("class " << row.label.cartan);
    cls::Instance inst = cls::random_instance(row.set, rng);
    REQUIRE(cls::derive_label(inst) == row.label);
    REQUIRE(approx_equal(Matrix(inst.hamiltonian * inst.hamiltonian),
                         identity(inst.hamiltonian.rows())));

    cls::ReducedSystem sys = cls::reduce(inst);
    REQUIRE(sys.algebra.dim == reduced_dim.at(row.label.cartan));
    REQUIRE(hom::f_membership(sys.algebra, sys.hamiltonian).ok());

    cls::Invariant inv = cls::invariant_value(sys);
    REQUIRE(inv.group == row.label.group);
    if (row.label.group == "Z2") {
      REQUIRE((inv.value == 0 || inv.value == 1));
    } else if (row.label.group == "0") {
      REQUIRE(inv.value == 0);
    }
  }
}

TEST_CASE("validation refuses broken declarations", "[classify]") {
  SECTION("operator data must match the declared set") {
    cls::Instance inst;
    inst.symmetries = set_of("DIII");
    inst.hamiltonian = sym::charge_operator(2);
    REQUIRE_THROWS_MATCHES(cls::derive_label(inst), Error, has_code("MissingOperator"));

    inst.symmetries = {};
    inst.trs = AntiLinearOp(Complex(0, 1) * pauli_y());
    REQUIRE_THROWS_MATCHES(cls::derive_label(inst), Error, has_code("UnexpectedOperator"));
  }

  SECTION("the hamiltonian must be gamma-imaginary") {
    cls::Instance inst;
    inst.hamiltonian = identity(4);
    REQUIRE_THROWS_MATCHES(cls::derive_label(inst), Error,
                           has_code("NotParticleHoleSymmetric"));
  }

  SECTION("declared symmetries must actually hold") {
    Rng rng(821);
    cls::Instance broken = cls::random_instance({}, rng);
    broken.symmetries = set_of("DIII");
    broken.trs = AntiLinearOp(Complex(0, 1) * pauli_y());
    REQUIRE_THROWS_MATCHES(cls::derive_label(broken), Error, has_code("NotSymmetric"));
  }

  SECTION("a time reversal with the wrong square is a sign mismatch") {
    cls::Instance inst;
    inst.symmetries = set_of("AII");
    Matrix theta = Matrix::Zero(2, 2);
    theta.diagonal() << 1, -1;
    inst.hamiltonian = nambu::BdGHamiltonian::from_blocks(theta, Matrix::Zero(2, 2)).full();
    inst.trs = AntiLinearOp(identity(2));
    REQUIRE_THROWS_MATCHES(cls::derive_label(inst), Error, has_code("SignMismatch"));
  }

  SECTION("a time reversal squaring to a non-scalar is refused") {
    cls::Instance inst;
    inst.symmetries = set_of("AII");
    inst.hamiltonian = sym::charge_operator(2);
    Matrix twist = Matrix::Zero(2, 2);
    twist(0, 1) = 1;
    twist(1, 0) = Complex(0, 1);
    inst.trs = AntiLinearOp(twist);
    REQUIRE_THROWS_MATCHES(cls::derive_label(inst), Error, has_code("NotInvolutive"));
  }

  SECTION("chiral generators must be involutive and anticommute") {
    cls::Instance inst;
    inst.symmetries = set_of("AIII");
    inst.hamiltonian = nambu::BdGHamiltonian::from_blocks(pauli_x(), Matrix::Zero(2, 2)).full();
    Matrix bad = Matrix::Zero(2, 2);
    bad.diagonal() << 1, Complex(0, 1);
    inst.phs = bad;
    REQUIRE_THROWS_MATCHES(cls::derive_label(inst), Error, has_code("NotInvolutive"));

    inst.phs = pauli_x();
    REQUIRE_THROWS_MATCHES(cls::derive_label(inst), Error, has_code("NotSymmetric"));
  }

  SECTION("defective spin triples are refused") {
    Rng rng(823);
    cls::Instance inst = cls::random_instance(set_of("C"), rng);
    auto j = sym::spin_generators(2);
    inst.spin = std::array<Matrix, 3>{j[0], j[0], j[2]};
    REQUIRE_THROWS_MATCHES(cls::derive_label(inst), Error, has_code("BadSpinAlgebra"));
  }
}

TEST_CASE("reduction lands on pinned carriers and invariants", "[classify]") {
  SECTION("charge conservation recovers the number-conserving block") {
    cls::Instance inst;
    inst.symmetries = set_of("A");
    Matrix theta = Matrix::Zero(3, 3);
    theta.diagonal() << 2, -1, 3;
    inst.hamiltonian = nambu::BdGHamiltonian::from_blocks(theta, Matrix::Zero(3, 3)).full();
    cls::ReducedSystem sys = cls::reduce(inst);
    REQUIRE(approx_equal(sys.hamiltonian, theta));
    REQUIRE(cls::invariant_value(sys) == cls::Invariant{"Z", 1});
  }

  SECTION("AII counts Kramers pairs") {
    cls::Instance inst;
    inst.symmetries = set_of("AII");
    inst.trs = AntiLinearOp(kron(identity(2), Complex(0, 1) * pauli_y()));
    Matrix a(2, 2);
    a << 1, 2, 2, -3;
    Matrix p = kron(a, identity(2));
    inst.hamiltonian = nambu::BdGHamiltonian::from_blocks(p, Matrix::Zero(4, 4)).full();
    REQUIRE(cls::invariant_value(cls::reduce(inst)) == cls::Invariant{"Z", 0});

    inst.hamiltonian =
        nambu::BdGHamiltonian::from_blocks(kron(identity(2), identity(2)), Matrix::Zero(4, 4))
            .full();
    REQUIRE(cls::invariant_value(cls::reduce(inst)) == cls::Invariant{"Z", 2});
  }

  SECTION("an odd signature under a quaternionic time reversal is impossible") {
    cls::ReducedSystem sys;
    sys.label = cls::classify_set(set_of("AII"));
    sys.hamiltonian = Matrix::Zero(3, 3);
    sys.hamiltonian.diagonal() << 1, -1, -1;
    sys.algebra.dim = 3;
    REQUIRE_THROWS_MATCHES(cls::invariant_value(sys), Error, has_code("KramersViolation"));
  }

  SECTION("class D parity distinguishes the two vacua") {
    cls::Instance trivial;
    trivial.symmetries = set_of("D");
    trivial.hamiltonian =
        nambu::BdGHamiltonian::from_blocks(identity(2), Matrix::Zero(2, 2)).full();
    REQUIRE(cls::invariant_value(cls::reduce(trivial)) == cls::Invariant{"Z2", 0});

    cls::Instance flipped = trivial;
    Matrix theta = Matrix::Zero(2, 2);
    theta.diagonal() << 1, -1;
    flipped.hamiltonian = nambu::BdGHamiltonian::from_blocks(theta, Matrix::Zero(2, 2)).full();
    REQUIRE(cls::invariant_value(cls::reduce(flipped)) == cls::Invariant{"Z2", 1});
  }

  SECTION("BDI distinguishes the two chiral vacua deterministically") {
    cls::Instance inst;
    inst.symmetries = set_of("BDI");
    inst.spin = sym::spin_generators(4);
    inst.trs = AntiLinearOp(kron(identity(2), Complex(0, 1) * pauli_y()));
    inst.phs = kron(pauli_z(), identity(2));
    Matrix p = kron(pauli_x(), identity(2));
    inst.hamiltonian = nambu::BdGHamiltonian::from_blocks(p, Matrix::Zero(4, 4)).full();
    cls::ReducedSystem sys = cls::reduce(inst);
    REQUIRE(sys.hamiltonian.rows() == 2);
    REQUIRE(approx_equal(Matrix(sys.hamiltonian * sys.hamiltonian), identity(2)));
    const Matrix& splus = sys.algebra.relations.at(1).op.gen;
    REQUIRE((splus * sys.hamiltonian + sys.hamiltonian * splus).norm() < tol::structural);
    REQUIRE(cls::invariant_value(sys) == cls::Invariant{"Z2", 0});

    inst.hamiltonian =
        nambu::BdGHamiltonian::from_blocks(Matrix(-p), Matrix::Zero(4, 4)).full();
    REQUIRE(cls::invariant_value(cls::reduce(inst)) == cls::Invariant{"Z2", 1});
  }

  SECTION("AI reads the signature on the spin-reduced space") {
    cls::Instance inst;
    inst.symmetries = set_of("AI");
    inst.spin = sym::spin_generators(4);
    inst.trs = AntiLinearOp(kron(identity(2), Complex(0, 1) * pauli_y()));
    Matrix a = Matrix::Zero(2, 2);
    a.diagonal() << 1, -1;
    inst.hamiltonian =
        nambu::BdGHamiltonian::from_blocks(kron(a, identity(2)), Matrix::Zero(4, 4)).full();
    cls::ReducedSystem sys = cls::reduce(inst);
    REQUIRE(sys.hamiltonian.rows() == 2);
    REQUIRE(std::abs(sys.hamiltonian.trace()) < tol::structural);
    REQUIRE(approx_equal(Matrix(sys.hamiltonian * sys.hamiltonian), identity(2)));
    REQUIRE(cls::invariant_value(sys) == cls::Invariant{"Z", 0});

    inst.hamiltonian =
        nambu::BdGHamiltonian::from_blocks(identity(4), Matrix::Zero(4, 4)).full();
    REQUIRE(cls::invariant_value(cls::reduce(inst)) == cls::Invariant{"Z", 2});
  }
}

TEST_CASE("symmetrize projects onto the symmetric subspace", "[classify]") {
  Rng rng(829);
  for (const auto& row : cls::classification_table()) {
    INFO("class " << row.label.cartan);
    cls::Instance inst = cls::random_instance(row.set, rng);
    Eigen::Index d = inst.hamiltonian.rows();
    Matrix raw = rng.gaussian(d, d);
    Matrix k = cls::symmetrize(inst, raw);

    REQUIRE(is_self_adjoint(k));
    REQUIRE(approx_equal(cls::symmetrize(inst, k), k));

    cls::Instance probe = inst;
    probe.hamiltonian = k;
    REQUIRE(cls::derive_label(probe) == row.label);
  }

  SECTION("the projection is real-linear") {
    cls::Instance inst = cls::random_instance(set_of("CII"), rng);
    Matrix x = rng.hermitian(8), y = rng.hermitian(8);
    Matrix lhs = cls::symmetrize(inst, Matrix(2.0 * x - 0.5 * y));
    Matrix rhs = 2.0 * cls::symmetrize(inst, x) - 0.5 * cls::symmetrize(inst, y);
    REQUIRE(approx_equal(lhs, rhs));
  }
}

TEST_CASE("random instances are reproducible and cover the invariants", "[classify]") {
  SECTION("the same seed gives the same instance") {
    Rng a(831), b(831);
    cls::Instance x = cls::random_instance(set_of("CII"), a);
    cls::Instance y = cls::random_instance(set_of("CII"), b);
    REQUIRE(approx_equal(x.hamiltonian, y.hamiltonian));
  }

  SECTION("class D draws reach both parities") {
    Rng rng(837);
    std::set<long> seen;
    for (int trial = 0; trial < 40 && seen.size() < 2; ++trial) {
      cls::Instance inst = cls::random_instance({}, rng);
      seen.insert(cls::invariant_value(cls::reduce(inst)).value);
    }
    REQUIRE(seen == std::set<long>{0, 1});
  }

  SECTION("class A draws reach several filling counts") {
    Rng rng(839);
    std::set<long> seen;
    for (int trial = 0; trial < 40; ++trial) {
      cls::Instance inst = cls::random_instance(set_of("A"), rng);
      seen.insert(cls::invariant_value(cls::reduce(inst)).value);
    }
    REQUIRE(seen.size() >= 2);
  }
}

TEST_CASE("commutant perturbations preserve the invariant", "[classify]") {
  Rng rng(841);
  for (const std::string& cartan : {"A", "D", "BDI", "AII"}) {
    INFO("class " << cartan);
    cls::Instance inst = cls::random_instance(set_of(cartan), rng);
    cls::Invariant base = cls::invariant_value(cls::reduce(inst));
    for (int trial = 0; trial < 5; ++trial) {
      Matrix k = cls::symmetrize(inst, rng.hermitian(inst.hamiltonian.rows()));
      double size = std::max(k.norm(), 1e-12);
      cls::Instance moved = inst;
      moved.hamiltonian = inst.hamiltonian + (0.3 / size) * k;
      REQUIRE(cls::invariant_value(cls::reduce(moved)) == base);
    }
  }
}
