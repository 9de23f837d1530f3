#include <catch2/catch_amalgamated.hpp>

#include "oracles.hpp"
#include "tenfold/fock.hpp"

using namespace tenfold;
using fock::FockSpace;

namespace {

Vector basis_vector(int n, int i) {
  Vector e = Vector::Zero(n);
  e(i) = 1.0;
  return e;
}

}  // namespace

TEST_CASE("wedge_inner_product_small_cases", "[fock]") {
  Vector e0 = basis_vector(2, 0), e1 = basis_vector(2, 1);
  REQUIRE(std::abs(fock::wedge_inner_product({}, {}) - 1.0) < tol::structural);
  REQUIRE(std::abs(fock::wedge_inner_product({e0}, {e0}) - 1.0) < tol::structural);
  REQUIRE(std::abs(fock::wedge_inner_product({e0}, {e1})) < tol::structural);
  REQUIRE(std::abs(fock::wedge_inner_product({e0}, {e0, e1})) < tol::structural);

  // Swapping two factors flips the sign.
  Rng rng(21);
  Vector x0 = rng.gaussian_vector(3), x1 = rng.gaussian_vector(3);
  Vector y0 = rng.gaussian_vector(3), y1 = rng.gaussian_vector(3);
  Complex direct = fock::wedge_inner_product({x0, x1}, {y0, y1});
  Complex swapped = fock::wedge_inner_product({x1, x0}, {y0, y1});
  REQUIRE(std::abs(direct + swapped) < tol::structural);

  // Gram determinant against the permutation-sum oracle.
  Matrix gram(2, 2);
  gram << x0.dot(y0), x0.dot(y1), x1.dot(y0), x1.dot(y1);
  REQUIRE(std::abs(direct - oracles::determinant_by_permutations(gram)) < tol::structural);
}

TEST_CASE("creator_matrix_elements", "[fock]") {
  FockSpace f1(1);
  Matrix c = fock::creator(f1, basis_vector(1, 0));
  Matrix expected(2, 2);
  expected << 0, 0, 1, 0;
  REQUIRE(approx_equal(c, expected));

  // Sorted-insertion parity counts occupied modes below the inserted index:
  // creating e_1 over {e_0} or {e_0, e_2} costs one transposition each.
  FockSpace f3(3);
  Matrix c1 = fock::creator(f3, basis_vector(3, 1));
  REQUIRE(std::abs(c1(0b011, 0b001) - Complex(-1.0)) < tol::structural);
  REQUIRE(std::abs(c1(0b111, 0b101) - Complex(-1.0)) < tol::structural);
  REQUIRE(std::abs(c1(0b010, 0b000) - Complex(1.0)) < tol::structural);

  // Against the standalone rig.
  oracles::FockRig rig(3);
  for (int i = 0; i < 3; ++i)
    REQUIRE(approx_equal(fock::creator(f3, basis_vector(3, i)), rig.raise(i)));

  // Linearity and nilpotency.
  Rng rng(22);
  Vector x = rng.gaussian_vector(3), y = rng.gaussian_vector(3);
  Complex a = rng.cnormal();
  REQUIRE(approx_equal(fock::creator(f3, Vector(a * x + y)),
                       Matrix(a * fock::creator(f3, x) + fock::creator(f3, y))));
  Matrix cx = fock::creator(f3, x);
  REQUIRE((cx * cx).norm() < tol::structural);
}

TEST_CASE("annihilator_is_adjoint_and_antilinear", "[fock]") {
  FockSpace f1(1);
  Matrix c = fock::annihilator(f1, basis_vector(1, 0));
  Matrix expected(2, 2);
  expected << 0, 1, 0, 0;
  REQUIRE(approx_equal(c, expected));

  FockSpace f3(3);
  oracles::FockRig rig(3);
  for (int i = 0; i < 3; ++i)
    REQUIRE(approx_equal(fock::annihilator(f3, basis_vector(3, i)), rig.lower(i)));

  Rng rng(23);
  Vector x = rng.gaussian_vector(3), y = rng.gaussian_vector(3);
  Complex a = rng.cnormal();
  // c_{ax} = conj(a) c_x : anti-linear in the label.
  REQUIRE(approx_equal(fock::annihilator(f3, Vector(a * x)),
                       Matrix(std::conj(a) * fock::annihilator(f3, x))));
  // <c_x v, w> = <v, c+_x w> on random states.
  Matrix cx = fock::annihilator(f3, x), cdx = fock::creator(f3, x);
  Vector v = rng.gaussian_vector(f3.dim), w = rng.gaussian_vector(f3.dim);
  REQUIRE(std::abs((cx * v).dot(w) - v.dot(cdx * w)) < tol::structural);
  // The multiplication-by-vector rule on a wedge word: c_x (e0 ^ e1)
  // = <x,e0> e1 - <x,e1> e0.
  Vector state = Vector::Zero(f3.dim);
  state(0b011) = 1.0;
  Vector out = cx * state;
  REQUIRE(std::abs(out(0b010) - std::conj(x(0))) < tol::structural);
  REQUIRE(std::abs(out(0b001) - (-std::conj(x(1)))) < tol::structural);
}

TEST_CASE("quadratic_hamiltonian_number_operator", "[fock]") {
  // n=1, Theta=[eps], Xi=0: H = eps * occupation - eps/2.
  FockSpace f1(1);
  double eps = 0.7;
  Matrix h = fock::quadratic_hamiltonian(f1, eps * Matrix::Identity(1, 1), Matrix::Zero(1, 1));
  Matrix expected(2, 2);
  expected << -eps / 2, 0, 0, eps / 2;
  REQUIRE(approx_equal(h, expected));

  // Theta = Id on n modes: spectrum {k - n/2 : k = 0..n}.
  FockSpace f3(3);
  Matrix h3 = fock::quadratic_hamiltonian(f3, Matrix::Identity(3, 3), Matrix::Zero(3, 3));
  Eigen::SelfAdjointEigenSolver<Matrix> es(h3);
  for (Eigen::Index k = 0; k < f3.dim; ++k) {
    double n_occupied = __builtin_popcount(static_cast<std::uint32_t>(k));
    REQUIRE(std::abs(h3(k, k).real() - (n_occupied - 1.5)) < tol::structural);
  }
  REQUIRE(std::abs(es.eigenvalues().minCoeff() + 1.5) < tol::structural);
  REQUIRE(std::abs(es.eigenvalues().maxCoeff() - 1.5) < tol::structural);
}

TEST_CASE("quadratic_hamiltonian_structure", "[fock]") {
  Rng rng(24);
  FockSpace f(4);
  Matrix theta = rng.hermitian(4);
  Matrix xi = rng.gaussian(4, 4);
  xi = 0.5 * (xi - xi.transpose()).eval();

  Matrix h = fock::quadratic_hamiltonian(f, theta, xi);
  REQUIRE(is_self_adjoint(h));
  // Quadratic terms preserve fermion parity.
  Matrix parity = fock::parity_operator(f);
  REQUIRE(approx_equal(h * parity, parity * h));
  // Against the standalone rig.
  oracles::FockRig rig(4);
  REQUIRE(approx_equal(h, rig.quadratic(theta, xi), 1e-9));
  // Zero coefficients give the zero operator.
  REQUIRE(fock::quadratic_hamiltonian(f, Matrix::Zero(4, 4), Matrix::Zero(4, 4)).norm() <
          tol::structural);

  REQUIRE_THROWS_MATCHES(fock::quadratic_hamiltonian(f, xi, xi), Error,
                         Catch::Matchers::Predicate<Error>(
                             [](const Error& e) { return e.code() == "NotSelfAdjoint"; }));
  REQUIRE_THROWS_MATCHES(fock::quadratic_hamiltonian(f, theta, theta), Error,
                         Catch::Matchers::Predicate<Error>(
                             [](const Error& e) { return e.code() == "NotAntisymmetric"; }));
}
