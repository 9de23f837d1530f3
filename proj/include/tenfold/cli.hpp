#pragma once

#include <array>
#include <cmath>
#include <functional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "tenfold/acceptance.hpp"
#include "tenfold/classify.hpp"
#include "tenfold/clifford.hpp"
#include "tenfold/core.hpp"
#include "tenfold/homotopy.hpp"
#include "tenfold/io.hpp"

namespace tenfold::cli {

namespace detail {

inline int run_classify(const std::string& symmetries, std::ostream& out) {
  classify::SymmetrySet set = io::set_from_names(io::split_names(symmetries));
  out << io::describe_label(classify::classify_set(set));
  return 0;
}

inline int run_analyze(const std::string& path, unsigned seed, std::ostream& out) {
  classify::Instance inst = io::load_instance(path);
  classify::ClassLabel label = classify::derive_label(inst);
  classify::ReducedSystem sys = classify::reduce(inst);
  classify::Invariant inv = classify::invariant_value(sys);
  out << io::describe_label(label);
  out << "reduced dimension: " << sys.algebra.dim << "\n";
  out << io::describe_invariant(inv);

  Rng rng(seed);
  Eigen::SelfAdjointEigenSolver<Matrix> es(inst.hamiltonian, Eigen::EigenvaluesOnly);
  double gap = es.eigenvalues().cwiseAbs().minCoeff();
  const int probes = 5;
  int kept = 0;
  for (int probe = 0; probe < probes; ++probe) {
    Matrix k = classify::symmetrize(inst, rng.hermitian(inst.hamiltonian.rows()));
    classify::Instance moved = inst;
    moved.hamiltonian = inst.hamiltonian + (0.3 * gap / std::max(k.norm(), 1e-12)) * k;
    if (classify::invariant_value(classify::reduce(moved)) == inv) ++kept;
  }
  out << "stability: " << kept << "/" << probes << " probes kept the invariant\n";
  return kept == probes ? 0 : 1;
}

inline int run_clifford_iso(int r1, int s1, int r2, int s2, std::ostream& out) {
  clifford::IsoWitness w = clifford::witness_iso_cl1({r1, s1}, {r2, s2});
  double worst = clifford::verify_iso(w);
  out << "Cl_{" << r1 << "," << s1 << "} ox Cl_{" << r2 << "," << s2 << "} -> Cl_{"
      << w.target.r << "," << w.target.s << "}\n";
  for (std::size_t i = 0; i < w.images.size(); ++i)
    out << "  g" << i + 1 << " -> " << clifford::describe(w.images[i]) << "\n";
  out << "max deviation: " << worst << "\n";
  return 0;
}

inline bool selftest_table(bool corrupt) {
  std::array<classify::TableRow, 10> table = classify::classification_table();
  if (corrupt) table[2].label.index = 5;
  for (const classify::TableRow& row : table) {
    try {
      if (classify::translate_abstract(row.label.series, row.label.position) !=
          row.label.index)
        return false;
      if (classify::k_group(row.label.series, row.label.index) != row.label.group)
        return false;
      if (!(classify::classify_set(row.set) == row.label)) return false;
    } catch (const Error&) {
      return false;
    }
  }
  return true;
}

inline bool selftest_roundtrips(Rng& rng) {
  for (const classify::TableRow& row : classify::classification_table()) {
    classify::Instance inst = classify::random_instance(row.set, rng);
    classify::Instance back = io::instance_from_json(io::instance_to_json(inst));
    if (!(classify::derive_label(back) == row.label)) return false;
    classify::invariant_value(classify::reduce(back));
  }
  return true;
}

inline bool selftest_clifford() {
  clifford::IsoWitness w = clifford::witness_iso_cl1({1, 1}, {0, 1});
  if (clifford::verify_iso(w) > 1e-10) return false;
  clifford::IsoWitness empty = clifford::witness_iso_cl1({0, 0}, {0, 1});
  if (clifford::verify_iso(empty) > 1e-10) return false;
  return clifford::witness_iso_cl2().span_rank == 16;
}

inline bool selftest_homotopy(Rng& rng) {
  homotopy::GradedMatrixAlgebra alg;
  alg.dim = 3;
  Matrix x = Matrix::Zero(3, 3);
  x.diagonal() << -1, 1, 1;
  Matrix u = rng.unitary(3);
  Matrix y = u * x * u.adjoint();
  if (!homotopy::homotopy_oracle(alg, x, y).connected()) return false;
  Matrix z = Matrix::Zero(3, 3);
  z.diagonal() << -1, -1, 1;
  return !homotopy::homotopy_oracle(alg, x, z).connected();
}

inline bool selftest_car(Rng& rng) {
  nambu::NambuSpace n(2);
  fock::FockSpace f(2);
  for (int trial = 0; trial < 5; ++trial) {
    Vector w = rng.gaussian_vector(4);
    Vector wp = rng.gaussian_vector(4);
    if (nambu::car_defect(n, f, w, wp).norm() > 1e-10) return false;
  }
  return true;
}

inline bool selftest_bdg(Rng& rng) {
  nambu::NambuSpace n(2);
  fock::FockSpace f(2);
  Matrix theta = rng.hermitian(2);
  Matrix g = rng.gaussian(2, 2);
  Matrix xi = 0.5 * (g - Matrix(g.transpose()));
  nambu::BdGHamiltonian b = nambu::extract_bdg(n, f, fock::quadratic_hamiltonian(f, theta, xi));
  return (b.p - theta).norm() < 1e-10 && (b.delta - xi).norm() < 1e-10;
}

inline int run_selftest(const std::string& level, bool corrupt, std::ostream& out) {
  Rng rng(99);
  bool all = true;
  auto report = [&](const std::string& name, bool ok) {
    out << (ok ? "ok    " : "FAIL  ") << name << "\n";
    if (!ok) all = false;
  };
  auto guarded = [](const std::function<bool()>& step) {
    try {
      return step();
    } catch (const Error&) {
      return false;
    }
  };
  report("table bookkeeping", guarded([&] { return selftest_table(corrupt); }));
  report("instance round-trips", guarded([&] { return selftest_roundtrips(rng); }));
  report("clifford witnesses", guarded([&] { return selftest_clifford(); }));
  report("homotopy oracle", guarded([&] { return selftest_homotopy(rng); }));
  report("anticommutation relations", guarded([&] { return selftest_car(rng); }));
  report("quadratic extraction", guarded([&] { return selftest_bdg(rng); }));
  if (level == "full") {
    out << "acceptance criteria:\n";
    for (const acceptance::CriterionResult& r : acceptance::run_criteria(20250825, &out))
      if (!r.pass) all = false;
  }
  out << (all ? "selftest passed\n" : "selftest failed\n");
  return all ? 0 : 1;
}

}  // namespace detail

/// Parse and execute one command line.  Errors print their code on the
/// error stream and map to exit codes: bad symmetry input gives 2, bad
/// files give 3, every other failure gives 1.
inline int dispatch(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"symmetry classification of gapped free-fermion hamiltonians"};
  app.require_subcommand(1);

  CLI::App* table_cmd = app.add_subcommand("table", "print the classification table");

  std::string symmetries = "none";
  CLI::App* classify_cmd =
      app.add_subcommand("classify", "look up the class of a symmetry set");
  classify_cmd
      ->add_option("--symmetries", symmetries,
                   "comma- or plus-separated subset of TRS, SRS, Q, PHS")
      ->capture_default_str();

  std::string path;
  unsigned seed = 7;
  CLI::App* analyze_cmd =
      app.add_subcommand("analyze", "classify an instance file and probe its stability");
  analyze_cmd->add_option("file", path, "instance JSON file")->required();
  analyze_cmd->add_option("--seed", seed, "seed for the stability probes")
      ->capture_default_str();

  int r1 = 0, s1 = 0, r2 = 0, s2 = 0;
  CLI::App* iso_cmd = app.add_subcommand(
      "clifford-iso", "exhibit a graded tensor product isomorphism of Clifford algebras");
  iso_cmd->add_option("r1", r1, "plus generators of the first factor")
      ->required()
      ->check(CLI::NonNegativeNumber);
  iso_cmd->add_option("s1", s1, "minus generators of the first factor")
      ->required()
      ->check(CLI::NonNegativeNumber);
  iso_cmd->add_option("r2", r2, "plus generators of the second factor")
      ->required()
      ->check(CLI::NonNegativeNumber);
  iso_cmd->add_option("s2", s2, "minus generators of the second factor")
      ->required()
      ->check(CLI::NonNegativeNumber);

  std::string level = "quick";
  bool corrupt = false;
  CLI::App* self_cmd = app.add_subcommand("selftest", "run the built-in diagnostics");
  self_cmd->add_option("--level", level, "quick or full")
      ->check(CLI::IsMember({"quick", "full"}))
      ->capture_default_str();
  self_cmd->add_flag("--inject-table-corruption", corrupt)->group("");

  std::vector<const char*> argv;
  argv.push_back("tenfold");
  for (const std::string& arg : args) argv.push_back(arg.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (table_cmd->parsed()) {
      out << io::render_table();
      return 0;
    }
    if (classify_cmd->parsed()) return detail::run_classify(symmetries, out);
    if (analyze_cmd->parsed()) return detail::run_analyze(path, seed, out);
    if (iso_cmd->parsed()) return detail::run_clifford_iso(r1, s1, r2, s2, out);
    if (self_cmd->parsed()) return detail::run_selftest(level, corrupt, out);
  } catch (const Error& e) {
    err << "error [" << e.code() << "]: " << e.what() << "\n";
    if (e.code() == "InadmissibleSet" || e.code() == "UnknownSymmetry") return 2;
    if (e.code() == "ParseError" || e.code() == "BadFile") return 3;
    return 1;
  }
  return 0;
}

}  // namespace tenfold::cli
