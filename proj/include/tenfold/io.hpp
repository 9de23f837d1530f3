#pragma once

#include <cctype>
#include <fstream>
#include <iomanip>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "tenfold/classify.hpp"

namespace tenfold::io {

using Json = nlohmann::ordered_json;

/// Matrices are stored as row-major nested arrays with [re, im] pairs
/// for every entry.
inline Json matrix_to_json(const Matrix& m) {
  Json rows = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      row.push_back(Json::array({m(i, j).real(), m(i, j).imag()}));
    rows.push_back(row);
  }
  return rows;
}

inline Matrix matrix_from_json(const Json& j) {
  require(j.is_array() && !j.empty(), "ParseError", "matrix must be an array of rows");
  const Eigen::Index rows = static_cast<Eigen::Index>(j.size());
  require(j.at(0).is_array() && !j.at(0).empty(), "ParseError", "matrix rows must be arrays");
  const Eigen::Index cols = static_cast<Eigen::Index>(j.at(0).size());
  Matrix m(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i) {
    const Json& row = j.at(static_cast<std::size_t>(i));
    require(row.is_array() && static_cast<Eigen::Index>(row.size()) == cols, "ParseError",
            "matrix rows have inconsistent lengths");
    for (Eigen::Index k = 0; k < cols; ++k) {
      const Json& cell = row.at(static_cast<std::size_t>(k));
      require(cell.is_array() && cell.size() == 2 && cell.at(0).is_number() &&
                  cell.at(1).is_number(),
              "ParseError", "matrix entries must be [re, im] pairs");
      m(i, k) = Complex(cell.at(0).get<double>(), cell.at(1).get<double>());
    }
  }
  return m;
}

/// Symmetries are named TRS, SRS, Q and PHS; "none" denotes the empty
/// set.  Comma and plus both separate list entries.
inline std::vector<std::string> split_names(const std::string& text) {
  std::vector<std::string> out;
  std::string current;
  for (char c : text) {
    if (c == ',' || c == '+') {
      if (!current.empty()) out.push_back(current);
      current.clear();
    } else if (!std::isspace(static_cast<unsigned char>(c))) {
      current.push_back(c);
    }
  }
  if (!current.empty()) out.push_back(current);
  return out;
}

inline classify::SymmetrySet set_from_names(const std::vector<std::string>& names) {
  classify::SymmetrySet set;
  for (const std::string& name : names) {
    if (name == "TRS")
      set.trs = true;
    else if (name == "SRS")
      set.srs = true;
    else if (name == "Q")
      set.charge = true;
    else if (name == "PHS")
      set.phs = true;
    else if (name != "none")
      fail("UnknownSymmetry", "unknown symmetry name: " + name);
  }
  return set;
}

inline std::vector<std::string> names_of(const classify::SymmetrySet& set) {
  std::vector<std::string> names;
  if (set.srs) names.push_back("SRS");
  if (set.trs) names.push_back("TRS");
  if (set.charge) names.push_back("Q");
  if (set.phs) names.push_back("PHS");
  return names;
}

inline std::string set_to_string(const classify::SymmetrySet& set) {
  std::vector<std::string> names = names_of(set);
  if (names.empty()) return "none";
  std::string out = names.front();
  for (std::size_t i = 1; i < names.size(); ++i) out += "+" + names[i];
  return out;
}

inline Json instance_to_json(const classify::Instance& inst) {
  Json out;
  out["symmetries"] = names_of(inst.symmetries);
  out["hamiltonian"] = matrix_to_json(inst.hamiltonian);
  if (inst.trs) out["time_reversal"] = matrix_to_json(inst.trs->mat);
  if (inst.phs) out["chiral"] = matrix_to_json(*inst.phs);
  if (inst.spin) {
    Json triple = Json::array();
    for (const Matrix& u : *inst.spin) triple.push_back(matrix_to_json(u));
    out["spin"] = triple;
  }
  return out;
}

inline classify::Instance instance_from_json(const Json& j) {
  require(j.is_object(), "ParseError", "instance must be a JSON object");
  require(j.contains("symmetries") && j.at("symmetries").is_array(), "ParseError",
          "instance needs a symmetries array");
  require(j.contains("hamiltonian"), "ParseError", "instance needs a hamiltonian");
  classify::Instance inst;
  std::vector<std::string> names;
  for (const Json& name : j.at("symmetries")) {
    require(name.is_string(), "ParseError", "symmetry names must be strings");
    names.push_back(name.get<std::string>());
  }
  inst.symmetries = set_from_names(names);
  inst.hamiltonian = matrix_from_json(j.at("hamiltonian"));
  if (j.contains("time_reversal"))
    inst.trs = AntiLinearOp(matrix_from_json(j.at("time_reversal")));
  if (j.contains("chiral")) inst.phs = matrix_from_json(j.at("chiral"));
  if (j.contains("spin")) {
    const Json& triple = j.at("spin");
    require(triple.is_array() && triple.size() == 3, "ParseError",
            "spin must be an array of three matrices");
    inst.spin = std::array<Matrix, 3>{matrix_from_json(triple.at(0)),
                                      matrix_from_json(triple.at(1)),
                                      matrix_from_json(triple.at(2))};
  }
  return inst;
}

inline classify::Instance load_instance(const std::string& path) {
  std::ifstream in(path);
  require(in.good(), "BadFile", "cannot open " + path);
  Json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    fail("ParseError", std::string("invalid JSON in ") + path + ": " + e.what());
  }
  return instance_from_json(j);
}

inline void save_instance(const std::string& path, const classify::Instance& inst) {
  std::ofstream out(path);
  require(out.good(), "BadFile", "cannot write " + path);
  out << instance_to_json(inst).dump(2) << "\n";
}

inline std::string sign_cell(const std::optional<int>& sign) {
  if (!sign) return " .";
  return *sign > 0 ? "+1" : "-1";
}

inline std::string chiral_cell(classify::ChiralKind kind) {
  switch (kind) {
    case classify::ChiralKind::real_inner:
      return "real";
    case classify::ChiralKind::imag_inner:
      return "imag";
    case classify::ChiralKind::inner:
      return "inner";
    default:
      return "none";
  }
}

inline std::string series_tag(const classify::ClassLabel& label) {
  return label.series + "_" + std::to_string(label.index);
}

/// The ten-row table with single-space-separated sign cells; absent
/// signs render as a dot.
inline std::string render_table() {
  std::ostringstream out;
  out << std::left << std::setw(7) << "class" << std::setw(16) << "symmetries" << std::setw(3)
      << "s" << std::setw(6) << "K" << "trs phs  " << std::setw(7) << "chiral" << "pi0\n";
  for (const classify::TableRow& row : classify::classification_table()) {
    out << std::left << std::setw(7) << row.label.cartan << std::setw(16)
        << set_to_string(row.set) << std::setw(3) << row.label.position << std::setw(6)
        << series_tag(row.label) << sign_cell(row.label.trs_sign) << " "
        << sign_cell(row.label.phs_sign) << "  " << std::setw(7)
        << chiral_cell(row.label.chiral) << row.label.group << "\n";
  }
  return out.str();
}

/// Multi-line class description; the first line is always
/// "<cartan> / <series>_<index>".
inline std::string describe_label(const classify::ClassLabel& label) {
  std::ostringstream out;
  out << label.cartan << " / " << series_tag(label) << "\n";
  out << "position: " << label.position << "\n";
  out << "pi0:      " << label.group << "\n";
  out << "trs sign: " << (label.trs_sign ? std::to_string(*label.trs_sign) : "none") << "\n";
  out << "phs sign: " << (label.phs_sign ? std::to_string(*label.phs_sign) : "none") << "\n";
  out << "chiral:   " << chiral_cell(label.chiral) << "\n";
  return out.str();
}

inline std::string describe_invariant(const classify::Invariant& inv) {
  std::ostringstream out;
  out << "invariant: " << inv.value << " (" << (inv.group == "0" ? "trivial group" : inv.group)
      << ")\n";
  return out.str();
}

}  // namespace tenfold::io
