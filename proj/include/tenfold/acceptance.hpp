#pragma once

#include <array>
#include <chrono>
#include <cmath>
#include <functional>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "tenfold/antilinear.hpp"
#include "tenfold/classify.hpp"
#include "tenfold/clifford.hpp"
#include "tenfold/core.hpp"
#include "tenfold/fock.hpp"
#include "tenfold/homotopy.hpp"
#include "tenfold/linalg.hpp"
#include "tenfold/nambu.hpp"
#include "tenfold/symmetry.hpp"

namespace tenfold::acceptance {

/// One verdict per criterion; `detail` summarizes the measurements the
/// verdict rests on.
struct CriterionResult {
  std::string name;
  bool pass = false;
  std::string detail;
  double seconds = 0.0;
};

namespace detail {

inline std::string sci(double x) {
  std::ostringstream out;
  out << std::scientific << std::setprecision(2) << x;
  return out.str();
}

}  // namespace detail

/// Every row of the built-in table must reproduce an independently
/// written copy, the position bookkeeping must close, and exactly ten
/// of the sixteen symmetry subsets may be admissible.
inline CriterionResult criterion_table_rows() {
  CriterionResult out{"table-rows", true, "", 0.0};
  struct Expected {
    const char* cartan;
    bool trs, srs, charge, phs;
    int position;
    const char* series;
    int index;
    int trs_sign, phs_sign;
    classify::ChiralKind chiral;
    const char* group;
  };
  using CK = classify::ChiralKind;
  static const std::array<Expected, 10> rows = {{
      {"D", false, false, false, false, 0, "KO", 2, 0, 1, CK::none, "Z2"},
      {"DIII", true, false, false, false, 1, "KO", 3, -1, 1, CK::imag_inner, "0"},
      {"AII", true, false, true, false, 2, "KO", 4, -1, 0, CK::none, "Z"},
      {"CII", true, false, true, true, 3, "KO", 5, -1, -1, CK::real_inner, "0"},
      {"C", false, true, false, false, 4, "KO", 6, 0, -1, CK::none, "0"},
      {"CI", true, true, false, false, 5, "KO", 7, 1, -1, CK::imag_inner, "0"},
      {"AI", true, true, true, false, 6, "KO", 0, 1, 0, CK::none, "Z"},
      {"BDI", true, true, true, true, 7, "KO", 1, 1, 1, CK::real_inner, "Z2"},
      {"A", false, false, true, false, 0, "KU", 0, 0, 0, CK::none, "Z"},
      {"AIII", false, false, true, true, 1, "KU", 1, 0, 0, CK::inner, "0"},
  }};
  int checked = 0;
  for (const Expected& e : rows) {
    classify::SymmetrySet set{e.trs, e.srs, e.charge, e.phs};
    classify::ClassLabel label = classify::classify_set(set);
    bool row_ok = label.cartan == e.cartan && label.position == e.position &&
                  label.series == e.series && label.index == e.index &&
                  label.chiral == e.chiral && label.group == e.group;
    std::optional<int> want_trs =
        e.trs_sign == 0 ? std::nullopt : std::optional<int>(e.trs_sign);
    std::optional<int> want_phs =
        e.phs_sign == 0 ? std::nullopt : std::optional<int>(e.phs_sign);
    row_ok = row_ok && label.trs_sign == want_trs && label.phs_sign == want_phs;
    row_ok = row_ok &&
             classify::translate_abstract(label.series, label.position) == label.index;
    row_ok = row_ok && classify::k_group(label.series, label.index) == label.group;
    if (!row_ok) {
      out.pass = false;
      out.detail += std::string("row ") + e.cartan + " disagrees; ";
    }
    ++checked;
  }
  int admissible = 0;
  for (int mask = 0; mask < 16; ++mask) {
    classify::SymmetrySet set{(mask & 1) != 0, (mask & 2) != 0, (mask & 4) != 0,
                              (mask & 8) != 0};
    try {
      classify::classify_set(set);
      ++admissible;
    } catch (const Error& e) {
      if (e.code() != "InadmissibleSet") {
        out.pass = false;
        out.detail += "unexpected error on an inadmissible subset; ";
      }
    }
  }
  if (admissible != 10) {
    out.pass = false;
    out.detail += "admissible subsets: " + std::to_string(admissible) + " of 16; ";
  }
  if (out.pass)
    out.detail = std::to_string(checked) + " rows match the independent copy, 10/16 subsets admissible";
  return out;
}

/// Creation and annihilation fields built from random vectors must
/// anticommute up to the symmetric form, across Fock spaces of one to
/// six modes.
inline CriterionResult criterion_car_relations(unsigned seed) {
  CriterionResult out{"car-relations", true, "", 0.0};
  Rng rng(seed);
  double worst = 0.0;
  int pairs = 0;
  for (int modes = 1; modes <= 6; ++modes) {
    nambu::NambuSpace n(modes);
    fock::FockSpace f(modes);
    for (int trial = 0; trial < 100; ++trial) {
      Vector w = rng.gaussian_vector(2 * modes);
      Vector wp = rng.gaussian_vector(2 * modes);
      worst = std::max(worst, nambu::car_defect(n, f, w, wp).norm());
      ++pairs;
    }
  }
  out.pass = worst < 1e-10;
  out.detail = std::to_string(pairs) + " pairs, worst defect " + detail::sci(worst);
  return out;
}

/// Extraction from the many-body quadratic hamiltonian must return the
/// exact one-particle and pairing blocks it was built from.
inline CriterionResult criterion_bdg_roundtrip(unsigned seed) {
  CriterionResult out{"bdg-roundtrip", true, "", 0.0};
  Rng rng(seed + 1);
  double worst = 0.0;
  int count = 0;
  for (int modes = 1; modes <= 4; ++modes) {
    nambu::NambuSpace n(modes);
    fock::FockSpace f(modes);
    for (int trial = 0; trial < 50; ++trial) {
      Matrix theta = rng.hermitian(modes);
      Matrix g = rng.gaussian(modes, modes);
      Matrix xi = 0.5 * (g - Matrix(g.transpose()));
      Matrix h = fock::quadratic_hamiltonian(f, theta, xi);
      nambu::BdGHamiltonian b = nambu::extract_bdg(n, f, h);
      worst = std::max(worst, (b.p - theta).norm());
      worst = std::max(worst, (b.delta - xi).norm());
      ++count;
    }
  }
  out.pass = worst < 1e-10;
  out.detail = std::to_string(count) + " hamiltonians, worst block deviation " + detail::sci(worst);
  return out;
}

/// Exhaustive graded-tensor isomorphism witnesses over all signature
/// tuples with at most six total generators, zero-generator factors
/// included, plus the quaternionic model of Cl_{0,4}.
inline CriterionResult criterion_clifford_witnesses() {
  CriterionResult out{"clifford-witnesses", true, "", 0.0};
  double worst = 0.0;
  int count = 0;
  for (int r1 = 0; r1 <= 6; ++r1)
    for (int s1 = 0; r1 + s1 <= 6; ++s1)
      for (int r2 = 0; r1 + s1 + r2 <= 6; ++r2)
        for (int s2 = 0; r1 + s1 + r2 + s2 <= 6; ++s2) {
          clifford::IsoWitness w = clifford::witness_iso_cl1({r1, s1}, {r2, s2});
          worst = std::max(worst, clifford::verify_iso(w));
          ++count;
        }
  clifford::QuaternionWitness qw = clifford::witness_iso_cl2();
  bool quaternion_ok = qw.images.size() == 4 && qw.span_rank == 16;
  out.pass = worst < 1e-10 && count == 210 && quaternion_ok;
  out.detail = std::to_string(count) + " tuples, worst deviation " + detail::sci(worst) +
               (quaternion_ok ? ", quaternion witness spans rank 16" : ", quaternion witness failed");
  return out;
}

/// The sign data behind the table: time reversal carries relative sign
/// -1 against particle-hole conjugation, its spin twist carries +1, and
/// the mixed classes pair their two anti-unitaries with the advertised
/// square.
inline CriterionResult criterion_effective_signs() {
  CriterionResult out{"effective-signs", true, "", 0.0};
  std::ostringstream detail_text;
  bool ok = true;
  for (int m : {2, 4}) {
    nambu::NambuSpace n(m);
    Matrix tmat = m == 2 ? Matrix(Complex(0, 1) * pauli_y())
                         : Matrix(kron(identity(2), Complex(0, 1) * pauli_y()));
    symmetry::AlgebraAuto gamma_auto = symmetry::conjugation_auto(n.gamma());
    symmetry::AlgebraAuto trs_auto =
        symmetry::conjugation_auto(symmetry::lift_trs(AntiLinearOp(tmat)));
    int eta = symmetry::relative_sign(gamma_auto, trs_auto);
    ok = ok && eta == -1;
    std::array<Matrix, 3> j = symmetry::spin_generators(m);
    symmetry::AlgebraAuto twisted =
        symmetry::compose(symmetry::inner_auto(symmetry::lift_unitary(j[0])), trs_auto);
    int eta_twisted = symmetry::relative_sign(gamma_auto, twisted);
    ok = ok && eta_twisted == 1;
    detail_text << "m=" << m << ": trs " << eta << ", twisted " << eta_twisted << "; ";
  }
  {
    AntiLinearOp t(kron(identity(2), Complex(0, 1) * pauli_y()));
    Matrix s = kron(pauli_z(), identity(2));
    AntiLinearOp c = compose(s, t);
    ok = ok && involution_sign(t) == std::optional<int>(-1);
    ok = ok && involution_sign(c) == std::optional<int>(-1);
    auto [scalar_ok, value] = scalar_part(Matrix(compose(t, c) * compose(t, c)));
    bool pair_real = scalar_ok && std::abs(value - Complex(1, 0)) < 1e-10;
    ok = ok && pair_real;
    detail_text << "mixed pair with two -1 squares multiplies to "
                << (pair_real ? "+1" : "a non-real value") << "; ";
  }
  {
    AntiLinearOp t = symmetry::lift_trs(AntiLinearOp(Complex(0, 1) * pauli_y()));
    AntiLinearOp gamma = nambu::NambuSpace(2).gamma();
    auto [scalar_ok, value] = scalar_part(Matrix(compose(t, gamma) * compose(t, gamma)));
    bool pair_imag = scalar_ok && std::abs(value - Complex(-1, 0)) < 1e-10;
    ok = ok && pair_imag;
    detail_text << "pair with squares -1 and +1 multiplies to " << (pair_imag ? "-1" : "a non-real value");
  }
  out.pass = ok;
  out.detail = detail_text.str();
  return out;
}

/// The quaternionic factorization must carry the units onto their
/// pinned two-by-two images, reconstruct commutant elements exactly,
/// respect products, and flip the square of every reduced anti-unitary.
inline CriterionResult criterion_quaternionic_reduction(unsigned seed) {
  CriterionResult out{"quaternionic-reduction", true, "", 0.0};
  Rng rng(seed + 2);
  double worst = 0.0;
  bool ok = true;
  const Complex im(0, 1);
  for (int m : {2, 4, 6}) {
    std::array<Matrix, 3> j = symmetry::spin_generators(m);
    symmetry::QuaternionicFactor qf = symmetry::quaternionic_factor(j);
    Matrix half = identity(qf.half_dim());
    worst = std::max(worst, (qf.chi(j[0]) - kron(im * pauli_y(), half)).norm());
    worst = std::max(worst, (qf.chi(j[1]) - kron(-im * pauli_x(), half)).norm());
    worst = std::max(worst, (qf.chi(j[2]) - kron(im * pauli_z(), half)).norm());
  }
  int samples = 0;
  for (int trial = 0; trial < 50; ++trial) {
    int m = std::array<int, 3>{2, 4, 6}[static_cast<std::size_t>(trial % 3)];
    std::array<Matrix, 3> j = symmetry::spin_generators(m);
    symmetry::QuaternionicFactor qf = symmetry::quaternionic_factor(j);
    Matrix x = kron(rng.gaussian(m / 2, m / 2), identity(2));
    Matrix y = kron(rng.gaussian(m / 2, m / 2), identity(2));
    Matrix rx = qf.reduce_commutant(x);
    Matrix rebuilt = qf.phi * block_diag(rx, rx) * qf.phi.adjoint();
    worst = std::max(worst, (rebuilt - x).norm());
    worst = std::max(worst,
                     (qf.reduce_commutant(Matrix(x * y)) - Matrix(rx * qf.reduce_commutant(y))).norm());
    ++samples;
  }
  {
    symmetry::QuaternionicFactor qf = symmetry::quaternionic_factor(symmetry::spin_generators(2));
    ok = ok && involution_sign(qf.reduce_antilinear(AntiLinearOp(im * pauli_y()))) ==
                   std::optional<int>(1);
  }
  {
    symmetry::QuaternionicFactor qf = symmetry::quaternionic_factor(symmetry::spin_generators(4));
    ok = ok && involution_sign(qf.reduce_antilinear(
                   AntiLinearOp(kron(identity(2), im * pauli_y())))) == std::optional<int>(1);
  }
  for (int m : {2, 4}) {
    std::array<Matrix, 3> j = symmetry::spin_generators(m);
    std::array<Matrix, 3> lifted = {symmetry::lift_unitary(j[0]), symmetry::lift_unitary(j[1]),
                                    symmetry::lift_unitary(j[2])};
    symmetry::QuaternionicFactor qf = symmetry::quaternionic_factor(lifted);
    ok = ok && involution_sign(qf.reduce_antilinear(nambu::NambuSpace(m).gamma())) ==
                   std::optional<int>(-1);
  }
  out.pass = ok && worst < 1e-10;
  out.detail = "unit images pinned, " + std::to_string(samples) +
               " commutant roundtrips, worst deviation " + detail::sci(worst) +
               (ok ? ", reduced squares flip" : ", a reduced square kept its sign");
  return out;
}

/// Within every class, pairs of random instances with equal invariants
/// must be connected by a certified path (always, for class A; at least
/// ninety percent of pairs elsewhere), and pairs with different
/// invariants must never be.
inline CriterionResult criterion_homotopy_classes(unsigned seed) {
  CriterionResult out{"homotopy-classes", true, "", 0.0};
  Rng rng(seed + 3);
  std::ostringstream detail_text;
  for (const classify::TableRow& row : classify::classification_table()) {
    int same = 0, same_connected = 0, diff = 0, diff_connected = 0;
    for (int pair = 0; pair < 25; ++pair) {
      classify::Instance a = classify::random_instance(row.set, rng);
      classify::Instance b = classify::random_instance(row.set, rng);
      classify::ReducedSystem sa = classify::reduce(a);
      classify::ReducedSystem sb = classify::reduce(b);
      classify::Invariant ia = classify::invariant_value(sa);
      classify::Invariant ib = classify::invariant_value(sb);
      homotopy::OracleOptions opts;
      opts.seed = seed + static_cast<std::uint64_t>(100 * row.label.position + pair);
      homotopy::OracleResult res =
          homotopy::homotopy_oracle(sa.algebra, sa.hamiltonian, sb.hamiltonian, opts);
      if (ia == ib) {
        ++same;
        if (res.connected()) ++same_connected;
      } else {
        ++diff;
        if (res.connected()) ++diff_connected;
      }
    }
    bool class_ok = diff_connected == 0;
    if (row.label.cartan == "A")
      class_ok = class_ok && same_connected == same;
    else if (same > 0)
      class_ok = class_ok && 10 * same_connected >= 9 * same;
    if (!class_ok) out.pass = false;
    detail_text << row.label.cartan << " " << same_connected << "/" << same << "+" << diff
                << (class_ok ? "" : " FAIL") << "; ";
  }
  out.detail = "connected/same+different per class: " + detail_text.str();
  return out;
}

/// Adding full spin rotation to any class without it must move the
/// class four steps along the real sequence, landing on the partner the
/// table declares.
inline CriterionResult criterion_spin_shift() {
  CriterionResult out{"spin-shift", true, "", 0.0};
  int pairs = 0;
  std::string moves;
  for (const classify::TableRow& row : classify::classification_table()) {
    if (row.set.srs || row.label.series != "KO") continue;
    classify::SymmetrySet enriched = row.set;
    enriched.srs = true;
    classify::ClassLabel partner = classify::classify_set(enriched);
    bool pair_ok = partner.series == "KO" &&
                   partner.index == classify::shift_by_quaternions(row.label.index);
    if (!pair_ok) out.pass = false;
    moves += row.label.cartan + "->" + partner.cartan + (pair_ok ? " " : " FAIL ");
    ++pairs;
  }
  if (pairs != 4) out.pass = false;
  out.detail = std::to_string(pairs) + " partner pairs: " + moves;
  return out;
}

/// Symmetric perturbations at thirty percent of the gap must leave the
/// invariant of every class unchanged.
inline CriterionResult criterion_stability(unsigned seed) {
  CriterionResult out{"stability", true, "", 0.0};
  Rng rng(seed + 4);
  int kept = 0, total = 0;
  for (int round = 0; round < 2; ++round) {
    for (const classify::TableRow& row : classify::classification_table()) {
      classify::Instance inst = classify::random_instance(row.set, rng);
      classify::Invariant base = classify::invariant_value(classify::reduce(inst));
      Matrix k = classify::symmetrize(inst, rng.hermitian(inst.hamiltonian.rows()));
      classify::Instance moved = inst;
      moved.hamiltonian = inst.hamiltonian + (0.3 / std::max(k.norm(), 1e-12)) * k;
      classify::Invariant after = classify::invariant_value(classify::reduce(moved));
      ++total;
      if (after == base) ++kept;
    }
  }
  out.pass = kept == total;
  out.detail = std::to_string(kept) + "/" + std::to_string(total) + " perturbations kept the invariant";
  return out;
}

/// Run all nine criteria with their time budgets.  A criterion that
/// throws or overruns its budget fails; `progress` receives one verdict
/// line per criterion as it completes.
inline std::vector<CriterionResult> run_criteria(unsigned seed = 20250825,
                                                 std::ostream* progress = nullptr) {
  struct Entry {
    std::string name;
    double budget;
    std::function<CriterionResult()> run;
  };
  const std::vector<Entry> plan = {
      {"table-rows", 1.0, [] { return criterion_table_rows(); }},
      {"car-relations", 30.0, [seed] { return criterion_car_relations(seed); }},
      {"bdg-roundtrip", 60.0, [seed] { return criterion_bdg_roundtrip(seed); }},
      {"clifford-witnesses", 60.0, [] { return criterion_clifford_witnesses(); }},
      {"effective-signs", 5.0, [] { return criterion_effective_signs(); }},
      {"quaternionic-reduction", 10.0, [seed] { return criterion_quaternionic_reduction(seed); }},
      {"homotopy-classes", 240.0, [seed] { return criterion_homotopy_classes(seed); }},
      {"spin-shift", 1.0, [] { return criterion_spin_shift(); }},
      {"stability", 60.0, [seed] { return criterion_stability(seed); }},
  };
  std::vector<CriterionResult> results;
  for (const Entry& entry : plan) {
    auto start = std::chrono::steady_clock::now();
    CriterionResult result;
    try {
      result = entry.run();
    } catch (const Error& e) {
      result.name = entry.name;
      result.pass = false;
      result.detail = "threw " + e.code() + ": " + e.what();
    }
    result.seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (result.seconds > entry.budget) {
      result.pass = false;
      result.detail += " (over the " + std::to_string(entry.budget) + "s budget)";
    }
    if (progress) {
      std::ostringstream line;
      line << (result.pass ? "PASS" : "FAIL") << "  " << std::left << std::setw(24)
           << result.name << std::fixed << std::setprecision(2) << std::setw(8)
           << result.seconds << result.detail << "\n";
      *progress << line.str() << std::flush;
    }
    results.push_back(std::move(result));
  }
  return results;
}

}  // namespace tenfold::acceptance
