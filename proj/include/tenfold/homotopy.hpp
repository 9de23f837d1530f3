#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "tenfold/antilinear.hpp"
#include "tenfold/core.hpp"
#include "tenfold/linalg.hpp"
#include "tenfold/symmetry.hpp"

namespace tenfold::homotopy {

/// A constraint op(x) = sign * x cutting a real-linear subspace out of
/// the self-adjoint matrices.  The operation may be linear or
/// anti-linear; the sign must be +1 or -1.
struct SignedRelation {
  symmetry::AlgebraAuto op;
  int sign = 1;
};

/// A full matrix algebra together with the structure that carves out
/// its variety of odd self-adjoint unitaries: an optional grading
/// (members must anticommute with it), an optional anti-unitary real
/// structure (members must be fixed by its adjoint action), and any
/// further signed relations.  Ungraded algebras skip the parity check.
struct GradedMatrixAlgebra {
  Eigen::Index dim = 0;
  std::optional<Matrix> grading;
  std::optional<AntiLinearOp> real_structure;
  std::vector<SignedRelation> relations;
};

inline void validate(const GradedMatrixAlgebra& alg) {
  require(alg.dim >= 1, "BadDimension", "algebra dimension must be positive");
  if (alg.grading) {
    require(alg.grading->rows() == alg.dim && alg.grading->cols() == alg.dim,
            "DimensionMismatch", "grading has the wrong shape");
    require(is_self_adjoint(*alg.grading) && is_involution(*alg.grading), "BadGrading",
            "grading must be a self-adjoint unitary involution");
  }
  if (alg.real_structure) {
    require(alg.real_structure->dim() == alg.dim, "DimensionMismatch",
            "real structure has the wrong shape");
    require(is_antiunitary(*alg.real_structure), "NotAntiunitary",
            "real structure must be anti-unitary");
  }
  for (const auto& rel : alg.relations) {
    require(rel.op.dim() == alg.dim, "DimensionMismatch", "relation has the wrong shape");
    require(rel.sign == 1 || rel.sign == -1, "BadSign", "relation sign must be +1 or -1");
    require(is_unitary(rel.op.gen), "NotUnitary", "relation generator must be unitary");
  }
}

/// Per-condition diagnostics for membership in the variety, with the
/// worst residual across all checks.
struct MembershipReport {
  bool self_adjoint = false;
  bool involutive = false;
  bool odd = true;
  bool real = true;
  bool relations = true;
  double worst = 0.0;

  bool ok() const { return self_adjoint && involutive && odd && real && relations; }
};

inline MembershipReport f_membership(const GradedMatrixAlgebra& alg, const Matrix& x,
                                     double eps = tol::structural) {
  require(x.rows() == alg.dim && x.cols() == alg.dim, "DimensionMismatch",
          "membership candidate has the wrong shape");
  MembershipReport rep;
  auto check = [&rep, eps](double defect) {
    rep.worst = std::max(rep.worst, defect);
    return defect < eps;
  };
  rep.self_adjoint = check((x - x.adjoint()).norm());
  rep.involutive = check((x * x - identity(alg.dim)).norm());
  if (alg.grading) rep.odd = check(((*alg.grading) * x + x * (*alg.grading)).norm());
  if (alg.real_structure) rep.real = check((alg.real_structure->adjoint_action(x) - x).norm());
  for (const auto& rel : alg.relations)
    rep.relations = check((rel.op.apply(x) - double(rel.sign) * x).norm()) && rep.relations;
  return rep;
}

/// Block-diagonal sum of two constrained algebras.  Both must carry the
/// same shape of structure: gradings and real structures either on both
/// sides or on neither, and relation lists of equal length with matching
/// signs and linearity, which are then summed entrywise.
inline GradedMatrixAlgebra direct_sum(const GradedMatrixAlgebra& a,
                                      const GradedMatrixAlgebra& b) {
  require(a.grading.has_value() == b.grading.has_value(), "GradingMismatch",
          "cannot sum a graded and an ungraded algebra");
  require(a.real_structure.has_value() == b.real_structure.has_value(), "RealStructureMismatch",
          "cannot sum a real and a complex algebra");
  require(a.relations.size() == b.relations.size(), "RelationMismatch",
          "summands declare different numbers of relations");
  GradedMatrixAlgebra out;
  out.dim = a.dim + b.dim;
  if (a.grading) out.grading = block_diag(*a.grading, *b.grading);
  if (a.real_structure)
    out.real_structure = AntiLinearOp(block_diag(a.real_structure->mat, b.real_structure->mat));
  for (std::size_t i = 0; i < a.relations.size(); ++i) {
    const auto& ra = a.relations[i];
    const auto& rb = b.relations[i];
    require(ra.sign == rb.sign && ra.op.antilinear == rb.op.antilinear, "RelationMismatch",
            "summands declare incompatible relations");
    out.relations.push_back(
        {{ra.op.antilinear, block_diag(ra.op.gen, rb.op.gen)}, ra.sign});
  }
  return out;
}

/// Four-fold amplification with alternating grading, together with the
/// balanced base point diag(f, -f) where f is the off-diagonal identity.
/// Structure is inherited blockwise; the base point is refused when it
/// violates an inherited relation.
struct Reference {
  GradedMatrixAlgebra ambient;
  Matrix element;
};

inline Reference canonical_reference(const GradedMatrixAlgebra& alg) {
  validate(alg);
  Reference out;
  out.ambient.dim = 4 * alg.dim;
  if (alg.grading) {
    const Matrix& g = *alg.grading;
    out.ambient.grading = block_diag(block_diag(g, -g), block_diag(g, -g));
  }
  Matrix four = identity(4);
  if (alg.real_structure)
    out.ambient.real_structure = AntiLinearOp(kron(four, alg.real_structure->mat));
  for (const auto& rel : alg.relations)
    out.ambient.relations.push_back({{rel.op.antilinear, kron(four, rel.op.gen)}, rel.sign});
  Matrix f = Matrix::Zero(2 * alg.dim, 2 * alg.dim);
  f.topRightCorner(alg.dim, alg.dim) = identity(alg.dim);
  f.bottomLeftCorner(alg.dim, alg.dim) = identity(alg.dim);
  out.element = block_diag(f, -f);
  require(f_membership(out.ambient, out.element).ok(), "NoBasePoint",
          "the balanced base point violates an inherited relation");
  return out;
}

/// Repair an approximate member: hermitian part, averaging over the
/// grading, reality and signed relations, then spectral flattening.
/// Throws Gapless when the averaged matrix has an eigenvalue below the
/// gap floor.
inline Matrix project(const GradedMatrixAlgebra& alg, const Matrix& z0,
                      double gap_floor = tol::gap_floor) {
  Matrix z = 0.5 * (z0 + Matrix(z0.adjoint()));
  if (alg.grading) z = 0.5 * (z - (*alg.grading) * z * (*alg.grading));
  if (alg.real_structure) z = 0.5 * (z + alg.real_structure->adjoint_action(z));
  for (const auto& rel : alg.relations) z = 0.5 * (z + double(rel.sign) * rel.op.apply(z));
  return spectral_sign(z, gap_floor);
}

/// A path is a valid certificate when every vertex is a member and
/// consecutive vertices are no further apart than max_step in Frobenius
/// norm.  The oracle only reports connected alongside a path passing
/// this check.
inline bool verify_path(const GradedMatrixAlgebra& alg, const std::vector<Matrix>& path,
                        double max_step, double eps = tol::structural) {
  if (path.size() < 2) return false;
  for (const Matrix& x : path)
    if (!f_membership(alg, x, eps).ok()) return false;
  for (std::size_t k = 0; k + 1 < path.size(); ++k)
    if ((path[k + 1] - path[k]).norm() > max_step) return false;
  return true;
}

struct OracleOptions {
  int min_waypoints = 16;
  int max_waypoints = 128;
  double max_step = 0.2;
  int midpoint_attempts = 20;
  bool allow_stabilization = true;
  std::optional<Matrix> stabilizer;
  std::uint64_t seed = 1234;
};

enum class PathStatus { connected, not_found };

struct OracleResult {
  PathStatus status = PathStatus::not_found;
  bool stabilized = false;
  std::vector<Matrix> path;

  bool connected() const { return status == PathStatus::connected; }
};

namespace detail {

/// Project the straight-line interpolation between two members onto the
/// variety and keep the result only if it is a valid certificate.
inline std::optional<std::vector<Matrix>> straight_segment(const GradedMatrixAlgebra& alg,
                                                           const Matrix& x, const Matrix& y,
                                                           int waypoints, double max_step) {
  std::vector<Matrix> path;
  path.reserve(static_cast<std::size_t>(waypoints) + 1);
  for (int k = 0; k <= waypoints; ++k) {
    double t = double(k) / double(waypoints);
    try {
      path.push_back(project(alg, (1.0 - t) * x + t * y));
    } catch (const Error&) {
      return std::nullopt;
    }
  }
  if (!verify_path(alg, path, max_step)) return std::nullopt;
  return path;
}

inline std::optional<std::vector<Matrix>> refined_segment(const GradedMatrixAlgebra& alg,
                                                          const Matrix& x, const Matrix& y,
                                                          const OracleOptions& opts) {
  for (int n = opts.min_waypoints; n <= opts.max_waypoints; n *= 2)
    if (auto path = straight_segment(alg, x, y, n, opts.max_step)) return path;
  return std::nullopt;
}

}  // namespace detail

/// One-sided connectivity search in the variety of odd self-adjoint
/// unitaries.  Tries the projected straight line with doubling
/// resolution, then routes through randomly projected midpoints, then
/// retries once after stabilizing both endpoints by a common summand
/// (the second endpoint unless a stabilizer is supplied).  A connected
/// verdict always carries a verified path; not_found proves nothing.
inline OracleResult homotopy_oracle(const GradedMatrixAlgebra& alg, const Matrix& x,
                                    const Matrix& y, const OracleOptions& opts = {}) {
  validate(alg);
  require(opts.min_waypoints >= 2 && opts.max_waypoints >= opts.min_waypoints &&
              opts.max_step > 0 && opts.midpoint_attempts >= 0,
          "BadOptions", "nonsensical oracle options");
  require(f_membership(alg, x).ok() && f_membership(alg, y).ok(), "NotMember",
          "homotopy endpoints must satisfy all declared relations");

  OracleResult result;
  if (auto path = detail::refined_segment(alg, x, y, opts)) {
    result.status = PathStatus::connected;
    result.path = std::move(*path);
    return result;
  }

  Rng rng(opts.seed);
  for (int attempt = 0; attempt < opts.midpoint_attempts; ++attempt) {
    Matrix m;
    try {
      m = project(alg, 0.5 * (x + y) + 0.4 * rng.hermitian(alg.dim));
    } catch (const Error&) {
      continue;
    }
    if (!f_membership(alg, m).ok()) continue;
    auto left = detail::refined_segment(alg, x, m, opts);
    if (!left) continue;
    auto right = detail::refined_segment(alg, m, y, opts);
    if (!right) continue;
    result.status = PathStatus::connected;
    result.path = std::move(*left);
    result.path.insert(result.path.end(), right->begin() + 1, right->end());
    return result;
  }

  if (opts.allow_stabilization) {
    Matrix e = opts.stabilizer.value_or(y);
    require(f_membership(alg, e).ok(), "NotMember", "stabilizer must satisfy all relations");
    OracleOptions inner_opts = opts;
    inner_opts.allow_stabilization = false;
    inner_opts.stabilizer.reset();
    inner_opts.seed = opts.seed + 1;
    OracleResult inner = homotopy_oracle(direct_sum(alg, alg), block_diag(x, e),
                                         block_diag(y, e), inner_opts);
    if (inner.connected()) {
      inner.stabilized = true;
      return inner;
    }
  }
  return result;
}

}  // namespace tenfold::homotopy
