#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <vector>

#include "tenfold/homotopy.hpp"
#include "tenfold/linalg.hpp"
#include "tenfold/nambu.hpp"
#include "tenfold/symmetry.hpp"

using namespace tenfold;
namespace hom = tenfold::homotopy;
namespace sym = tenfold::symmetry;
using Catch::Matchers::Predicate;

namespace {

auto has_code(const std::string& code) {
  return Predicate<Error>([code](const Error& e) { return e.code() == code; },
                          "error code is " + code);
}

hom::GradedMatrixAlgebra plain(Eigen::Index dim) {
  hom::GradedMatrixAlgebra alg;
  alg.dim = dim;
  return alg;
}

hom::SignedRelation imaginary_under(const AntiLinearOp& r) {
  return {sym::conjugation_auto(r), -1};
}

}  // namespace

TEST_CASE("membership reports structure defects", "[homotopy]") {
  SECTION("ungraded complex algebra sees only the self-adjoint unitaries") {
    hom::GradedMatrixAlgebra alg = plain(3);
    Matrix x = Matrix::Zero(3, 3);
    x.diagonal() << 1, 1, -1;
    REQUIRE(hom::f_membership(alg, x).ok());

    Matrix squashed = x;
    squashed(1, 1) = 0.5;
    hom::MembershipReport rep = hom::f_membership(alg, squashed);
    REQUIRE(rep.self_adjoint);
    REQUIRE_FALSE(rep.involutive);
    REQUIRE(rep.worst > 0.1);

    Matrix skew = Matrix::Zero(3, 3);
    skew(0, 1) = 1;
    skew(1, 0) = -1;
    skew(2, 2) = 1;
    REQUIRE_FALSE(hom::f_membership(alg, skew).self_adjoint);

    REQUIRE_THROWS_MATCHES(hom::f_membership(alg, identity(2)), Error,
                           has_code("DimensionMismatch"));
  }

  SECTION("a grading restricts membership to odd elements") {
    hom::GradedMatrixAlgebra alg = plain(2);
    alg.grading = pauli_z();
    REQUIRE(hom::f_membership(alg, pauli_x()).ok());
    hom::MembershipReport rep = hom::f_membership(alg, pauli_z());
    REQUIRE(rep.self_adjoint);
    REQUIRE(rep.involutive);
    REQUIRE_FALSE(rep.odd);
  }

  SECTION("a real structure restricts membership to fixed points") {
    hom::GradedMatrixAlgebra alg = plain(2);
    alg.real_structure = AntiLinearOp(identity(2));
    REQUIRE(hom::f_membership(alg, pauli_x()).ok());
    REQUIRE_FALSE(hom::f_membership(alg, pauli_y()).real);
  }

  SECTION("signed relations carve out imaginary elements") {
    hom::GradedMatrixAlgebra alg = plain(2);
    alg.relations.push_back(imaginary_under(AntiLinearOp(identity(2))));
    REQUIRE(hom::f_membership(alg, pauli_y()).ok());
    REQUIRE_FALSE(hom::f_membership(alg, pauli_x()).relations);
  }

  SECTION("validate refuses malformed structure") {
    hom::GradedMatrixAlgebra alg = plain(2);
    alg.grading = pauli_y() * 0.5;
    REQUIRE_THROWS_MATCHES(hom::validate(alg), Error, has_code("BadGrading"));
    alg.grading.reset();
    alg.relations.push_back({sym::inner_auto(identity(2)), 2});
    REQUIRE_THROWS_MATCHES(hom::validate(alg), Error, has_code("BadSign"));
  }
}

TEST_CASE("direct sums concatenate constrained algebras", "[homotopy]") {
  hom::GradedMatrixAlgebra a = plain(2);
  a.grading = pauli_z();
  hom::GradedMatrixAlgebra b = plain(2);
  b.grading = Matrix(-pauli_z());

  SECTION("gradings and members combine blockwise") {
    hom::GradedMatrixAlgebra sum = hom::direct_sum(a, b);
    REQUIRE(sum.dim == 4);
    REQUIRE(approx_equal(*sum.grading, block_diag(pauli_z(), Matrix(-pauli_z()))));
    REQUIRE(hom::f_membership(sum, block_diag(pauli_x(), pauli_x())).ok());
    REQUIRE_FALSE(hom::f_membership(sum, block_diag(pauli_x(), pauli_z())).odd);
  }

  SECTION("structure shapes must match") {
    hom::GradedMatrixAlgebra bare = plain(2);
    REQUIRE_THROWS_MATCHES(hom::direct_sum(a, bare), Error, has_code("GradingMismatch"));

    hom::GradedMatrixAlgebra real_side = plain(2);
    real_side.real_structure = AntiLinearOp(identity(2));
    REQUIRE_THROWS_MATCHES(hom::direct_sum(bare, real_side), Error,
                           has_code("RealStructureMismatch"));

    hom::GradedMatrixAlgebra with_rel = plain(2);
    with_rel.relations.push_back(imaginary_under(AntiLinearOp(identity(2))));
    REQUIRE_THROWS_MATCHES(hom::direct_sum(bare, with_rel), Error,
                           has_code("RelationMismatch"));

    hom::GradedMatrixAlgebra flipped = plain(2);
    flipped.relations.push_back({sym::conjugation_auto(AntiLinearOp(identity(2))), 1});
    REQUIRE_THROWS_MATCHES(hom::direct_sum(with_rel, flipped), Error,
                           has_code("RelationMismatch"));
  }

  SECTION("summed relations act blockwise") {
    hom::GradedMatrixAlgebra w = plain(2);
    w.relations.push_back(imaginary_under(AntiLinearOp(identity(2))));
    hom::GradedMatrixAlgebra sum = hom::direct_sum(w, w);
    REQUIRE(hom::f_membership(sum, block_diag(pauli_y(), Matrix(-pauli_y()))).ok());
    REQUIRE_FALSE(hom::f_membership(sum, block_diag(pauli_y(), pauli_x())).relations);
  }
}

TEST_CASE("canonical reference supplies a verified base point", "[homotopy]") {
  SECTION("graded complex case") {
    hom::GradedMatrixAlgebra alg = plain(2);
    alg.grading = pauli_z();
    hom::Reference ref = hom::canonical_reference(alg);
    REQUIRE(ref.ambient.dim == 8);
    Matrix half = block_diag(pauli_z(), Matrix(-pauli_z()));
    REQUIRE(approx_equal(*ref.ambient.grading, block_diag(half, half)));
    Matrix f = Matrix::Zero(4, 4);
    f.topRightCorner(2, 2) = identity(2);
    f.bottomLeftCorner(2, 2) = identity(2);
    REQUIRE(approx_equal(ref.element, block_diag(f, Matrix(-f))));
    REQUIRE(hom::f_membership(ref.ambient, ref.element).ok());
  }

  SECTION("real structures amplify to the base point's benefit") {
    hom::GradedMatrixAlgebra alg = plain(2);
    alg.grading = pauli_z();
    alg.real_structure = AntiLinearOp(identity(2));
    hom::Reference ref = hom::canonical_reference(alg);
    REQUIRE(approx_equal(ref.ambient.real_structure->mat, identity(8)));
    REQUIRE(hom::f_membership(ref.ambient, ref.element).ok());
  }

  SECTION("ungraded algebras still get the balanced base point") {
    hom::Reference ref = hom::canonical_reference(plain(3));
    REQUIRE(ref.ambient.dim == 12);
    REQUIRE_FALSE(ref.ambient.grading.has_value());
    REQUIRE(hom::f_membership(ref.ambient, ref.element).ok());
  }

  SECTION("a minus-one relation has no balanced base point") {
    hom::GradedMatrixAlgebra alg = plain(2);
    alg.relations.push_back(imaginary_under(AntiLinearOp(identity(2))));
    REQUIRE_THROWS_MATCHES(hom::canonical_reference(alg), Error, has_code("NoBasePoint"));
  }
}

TEST_CASE("rotation family is a certificate and the oracle matches it", "[homotopy]") {
  hom::GradedMatrixAlgebra alg = plain(4);
  alg.grading = kron(pauli_z(), pauli_z());
  Matrix x = kron(pauli_z(), pauli_x());
  Matrix s = kron(pauli_x(), identity(2));

  SECTION("the explicit rotation path stays in the variety") {
    std::vector<Matrix> path;
    const int steps = 64;
    for (int k = 0; k <= steps; ++k) {
      double t = M_PI * double(k) / double(steps);
      path.push_back(std::cos(t) * x + std::sin(t) * s);
    }
    REQUIRE(approx_equal(path.front(), x));
    REQUIRE(approx_equal(path.back(), Matrix(-x)));
    REQUIRE(hom::verify_path(alg, path, 0.2));
    REQUIRE_FALSE(hom::verify_path(alg, {x, Matrix(-x)}, 0.2));
  }

  SECTION("the oracle recovers the connection through midpoints") {
    hom::OracleResult res = hom::homotopy_oracle(alg, x, Matrix(-x));
    REQUIRE(res.connected());
    REQUIRE_FALSE(res.stabilized);
    REQUIRE(hom::verify_path(alg, res.path, 0.2));
    REQUIRE(approx_equal(res.path.front(), x, 1e-8));
    REQUIRE(approx_equal(res.path.back(), Matrix(-x), 1e-8));
  }
}

TEST_CASE("spectral components separate and conjugates connect", "[homotopy]") {
  hom::GradedMatrixAlgebra alg = plain(3);
  Rng rng(713);
  Matrix x = Matrix::Zero(3, 3);
  x.diagonal() << -1, 1, 1;

  SECTION("a unitary conjugate is connected by the straight line") {
    Matrix u = rng.unitary(3);
    Matrix y = u * x * u.adjoint();
    hom::OracleResult res = hom::homotopy_oracle(alg, x, y);
    REQUIRE(res.connected());
    REQUIRE(hom::verify_path(alg, res.path, 0.2));
  }

  SECTION("different eigenvalue counts are never connected") {
    Matrix y = Matrix::Zero(3, 3);
    y.diagonal() << -1, -1, 1;
    hom::OracleResult res = hom::homotopy_oracle(alg, x, y);
    REQUIRE_FALSE(res.connected());
    REQUIRE(res.path.empty());
  }

  SECTION("endpoints must be members") {
    REQUIRE_THROWS_MATCHES(hom::homotopy_oracle(alg, x, Matrix(0.5 * x)), Error,
                           has_code("NotMember"));
  }
}

TEST_CASE("an anti-linear relation splits the variety by parity", "[homotopy]") {
  nambu::NambuSpace n(2);
  hom::GradedMatrixAlgebra alg = plain(4);
  alg.relations.push_back(imaginary_under(n.gamma()));
  Rng rng(719);

  Matrix x = sym::charge_operator(2);
  REQUIRE(hom::f_membership(alg, x).ok());

  auto parity = [&n](const Matrix& h) {
    return pfaffian(nambu::majorana_form(n, h).cast<Complex>()).real() > 0 ? 1 : -1;
  };

  SECTION("lifted conjugates preserve the relation and the parity") {
    Matrix lifted = sym::lift_unitary(rng.unitary(2));
    Matrix y = lifted * x * lifted.adjoint();
    REQUIRE(hom::f_membership(alg, y).ok());
    REQUIRE(parity(y) == parity(x));
    hom::OracleResult res = hom::homotopy_oracle(alg, x, y);
    REQUIRE(res.connected());
    REQUIRE(hom::verify_path(alg, res.path, 0.2));
  }

  SECTION("opposite parity is never connected") {
    Matrix theta = Matrix::Zero(2, 2);
    theta.diagonal() << 1, -1;
    Matrix y = nambu::BdGHamiltonian::from_blocks(theta, Matrix::Zero(2, 2)).full();
    REQUIRE(hom::f_membership(alg, y).ok());
    REQUIRE(parity(y) == -parity(x));
    hom::OracleResult res = hom::homotopy_oracle(alg, x, y);
    REQUIRE_FALSE(res.connected());
  }
}
