#pragma once

#include <bit>
#include <cstdint>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "tenfold/antilinear.hpp"
#include "tenfold/core.hpp"

namespace tenfold::clifford {

/// Generator counts of the real Clifford algebra Cl_{r,s}: indices
/// 0..r-1 are the plus generators (square +1, self-adjoint), indices
/// r..r+s-1 are the minus generators (square -1, skew-adjoint).
struct Signature {
  int r = 0;
  int s = 0;

  int gens() const { return r + s; }
  bool operator==(const Signature&) const = default;
};

inline constexpr int max_generators = 20;

namespace detail {

/// Number of transpositions, mod 2, needed to merge two ascending blade
/// words: one per pair (i, j) with i in a, j in b and i > j.
inline int transposition_parity(std::uint32_t a, std::uint32_t b) {
  int count = 0;
  for (std::uint32_t hi = a >> 1; hi != 0; hi >>= 1) count += std::popcount(hi & b);
  return count & 1;
}

inline std::uint32_t minus_range(const Signature& sig) {
  std::uint32_t all = (1u << sig.gens()) - 1u;
  std::uint32_t plus = (1u << sig.r) - 1u;
  return all & ~plus;
}

/// Sign and index set of the product of two basis blades.
inline std::pair<double, std::uint32_t> blade_product(const Signature& sig, std::uint32_t a,
                                                      std::uint32_t b) {
  int parity = transposition_parity(a, b);
  parity ^= std::popcount(a & b & minus_range(sig)) & 1;
  return {parity ? -1.0 : 1.0, a ^ b};
}

/// Sign picked up by a blade under the algebra involution: reversal of
/// the word plus one minus sign per skew-adjoint generator.
inline int blade_star_parity(const Signature& sig, std::uint32_t mask) {
  int k = std::popcount(mask);
  int nf = std::popcount(mask & minus_range(sig));
  return ((k * (k - 1) / 2) + nf) & 1;
}

inline void check_signature(const Signature& sig) {
  require(sig.r >= 0 && sig.s >= 0, "BadSignature", "generator counts must be nonnegative");
  require(sig.gens() <= max_generators, "TooLarge", "too many Clifford generators");
}

}  // namespace detail

/// Element of the complexified Clifford algebra on the blade basis of
/// Cl_{r,s}; elements with real coefficients form the real algebra.
struct Element {
  Signature sig;
  std::map<std::uint32_t, Complex> terms;

  explicit Element(Signature signature) : sig(signature) { detail::check_signature(sig); }

  Complex coefficient(std::uint32_t mask) const {
    auto it = terms.find(mask);
    return it == terms.end() ? Complex(0.0) : it->second;
  }

  double norm() const {
    double sum = 0.0;
    for (const auto& [mask, c] : terms) sum += std::norm(c);
    return std::sqrt(sum);
  }

  Element& prune(double eps = 1e-15) {
    for (auto it = terms.begin(); it != terms.end();) {
      if (std::abs(it->second) <= eps) {
        it = terms.erase(it);
      } else {
        ++it;
      }
    }
    return *this;
  }

  /// 0 for even, 1 for odd, nullopt for mixed; zero counts as even.
  std::optional<int> parity() const {
    std::optional<int> p;
    for (const auto& [mask, c] : terms) {
      if (std::abs(c) == 0.0) continue;
      int q = std::popcount(mask) & 1;
      if (!p) {
        p = q;
      } else if (*p != q) {
        return std::nullopt;
      }
    }
    return p ? p : std::optional<int>(0);
  }

  Element star() const {
    Element out(sig);
    for (const auto& [mask, c] : terms) {
      double sign = detail::blade_star_parity(sig, mask) ? -1.0 : 1.0;
      out.terms[mask] = sign * std::conj(c);
    }
    return out;
  }
};

inline Element blade(Signature sig, std::uint32_t mask, Complex c = 1.0) {
  detail::check_signature(sig);
  require(mask < (1u << sig.gens()), "BadGenerator", "blade uses generators beyond the signature");
  Element out(sig);
  out.terms[mask] = c;
  return out;
}

inline Element scalar(Signature sig, Complex c) { return blade(sig, 0u, c); }

inline Element generator(Signature sig, int i) {
  require(i >= 0 && i < sig.gens(), "BadGenerator", "generator index out of range");
  return blade(sig, 1u << i);
}

inline Element operator+(const Element& x, const Element& y) {
  require(x.sig == y.sig, "SignatureMismatch", "elements live in different algebras");
  Element out = x;
  for (const auto& [mask, c] : y.terms) out.terms[mask] += c;
  return out.prune();
}

inline Element operator-(const Element& x) {
  Element out = x;
  for (auto& [mask, c] : out.terms) c = -c;
  return out;
}

inline Element operator-(const Element& x, const Element& y) { return x + (-y); }

inline Element operator*(Complex c, const Element& x) {
  Element out = x;
  for (auto& [mask, coeff] : out.terms) coeff *= c;
  return out.prune();
}

inline Element operator*(const Element& x, const Element& y) {
  require(x.sig == y.sig, "SignatureMismatch", "elements live in different algebras");
  Element out(x.sig);
  for (const auto& [ma, ca] : x.terms) {
    for (const auto& [mb, cb] : y.terms) {
      auto [sign, mask] = detail::blade_product(x.sig, ma, mb);
      out.terms[mask] += sign * ca * cb;
    }
  }
  return out.prune();
}

inline std::string blade_label(const Signature& sig, std::uint32_t mask) {
  if (mask == 0) return "1";
  std::string out;
  for (int i = 0; i < sig.gens(); ++i) {
    if (!(mask & (1u << i))) continue;
    if (!out.empty()) out += " ";
    out += (i < sig.r) ? "e" + std::to_string(i + 1) : "f" + std::to_string(i - sig.r + 1);
  }
  return out;
}

inline std::string describe(const Element& x) {
  if (x.terms.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [mask, c] : x.terms) {
    double re = c.real(), im = c.imag();
    if (!first) out << " + ";
    first = false;
    if (std::abs(im) < 1e-12 && std::abs(re - 1.0) < 1e-12 && mask != 0) {
      out << blade_label(x.sig, mask);
    } else if (std::abs(im) < 1e-12 && std::abs(re + 1.0) < 1e-12 && mask != 0) {
      out << "-" << blade_label(x.sig, mask);
    } else {
      if (std::abs(im) < 1e-12) {
        out << re;
      } else {
        out << "(" << re << (im < 0 ? "" : "+") << im << "i)";
      }
      if (mask != 0) out << " " << blade_label(x.sig, mask);
    }
  }
  return out.str();
}

/// Matrix model of Cl_{r,s} built from the alternating chain
/// z..zx, z..zy of Pauli factors; generators are self-adjoint or
/// skew-adjoint as their squares demand, and the grading operator
/// (the all-z chain) anticommutes with every generator.
struct Representation {
  Signature sig;
  Eigen::Index dim = 1;
  std::vector<Matrix> generators;
  Matrix grading;
};

inline Representation standard_rep(Signature sig) {
  detail::check_signature(sig);
  require(sig.gens() <= 12, "TooLarge", "standard_rep supports at most 12 generators");
  const int m = sig.gens();
  const int q = (m + 1) / 2;
  Representation rep;
  rep.sig = sig;
  rep.dim = Eigen::Index(1) << q;

  std::vector<Matrix> gamma;
  for (int k = 0; k < q; ++k) {
    Matrix head = identity(1);
    for (int j = 0; j < k; ++j) head = kron(head, pauli_z());
    Matrix tail = identity(Eigen::Index(1) << (q - k - 1));
    gamma.push_back(kron(kron(head, pauli_x()), tail));
    gamma.push_back(kron(kron(head, pauli_y()), tail));
  }
  for (int i = 0; i < sig.r; ++i) rep.generators.push_back(gamma[static_cast<std::size_t>(i)]);
  for (int j = 0; j < sig.s; ++j)
    rep.generators.push_back(Complex(0, 1) * gamma[static_cast<std::size_t>(sig.r + j)]);

  rep.grading = identity(1);
  for (int k = 0; k < q; ++k) rep.grading = kron(rep.grading, pauli_z());
  return rep;
}

inline Matrix blade_matrix(const Representation& rep, std::uint32_t mask) {
  Matrix out = identity(rep.dim);
  for (int i = 0; i < rep.sig.gens(); ++i) {
    if (mask & (1u << i)) out = out * rep.generators[static_cast<std::size_t>(i)];
  }
  return out;
}

inline Matrix represent(const Representation& rep, const Element& x) {
  require(x.sig == rep.sig, "SignatureMismatch", "element does not match the representation");
  Matrix out = Matrix::Zero(rep.dim, rep.dim);
  for (const auto& [mask, c] : x.terms) out += c * blade_matrix(rep, mask);
  return out;
}

/// Element of the graded tensor product of two Clifford algebras, with
/// the Koszul rule (a1 ox b1)(a2 ox b2) = (-1)^{|a2||b1|} a1 a2 ox b1 b2
/// on blades and the matching involution
/// (a ox b)* = (-1)^{|a||b|} a* ox b*.
struct TensorElement {
  Signature first, second;
  std::map<std::uint64_t, Complex> terms;

  TensorElement(Signature a, Signature b) : first(a), second(b) {
    detail::check_signature(a);
    detail::check_signature(b);
  }

  static std::uint64_t key(std::uint32_t a, std::uint32_t b) {
    return (std::uint64_t(a) << 32) | b;
  }
  static std::uint32_t left_mask(std::uint64_t k) { return static_cast<std::uint32_t>(k >> 32); }
  static std::uint32_t right_mask(std::uint64_t k) {
    return static_cast<std::uint32_t>(k & 0xffffffffu);
  }

  double norm() const {
    double sum = 0.0;
    for (const auto& [k, c] : terms) sum += std::norm(c);
    return std::sqrt(sum);
  }

  TensorElement& prune(double eps = 1e-15) {
    for (auto it = terms.begin(); it != terms.end();) {
      if (std::abs(it->second) <= eps) {
        it = terms.erase(it);
      } else {
        ++it;
      }
    }
    return *this;
  }

  TensorElement star() const {
    TensorElement out(first, second);
    for (const auto& [k, c] : terms) {
      std::uint32_t a = left_mask(k), b = right_mask(k);
      int parity = (std::popcount(a) & std::popcount(b) & 1) ^
                   detail::blade_star_parity(first, a) ^ detail::blade_star_parity(second, b);
      out.terms[k] = (parity ? -1.0 : 1.0) * std::conj(c);
    }
    return out;
  }
};

inline TensorElement tensor(const Element& a, const Element& b) {
  TensorElement out(a.sig, b.sig);
  for (const auto& [ma, ca] : a.terms) {
    for (const auto& [mb, cb] : b.terms) {
      out.terms[TensorElement::key(ma, mb)] += ca * cb;
    }
  }
  return out;
}

inline TensorElement operator+(const TensorElement& x, const TensorElement& y) {
  require(x.first == y.first && x.second == y.second, "SignatureMismatch",
          "tensor elements live in different algebras");
  TensorElement out = x;
  for (const auto& [k, c] : y.terms) out.terms[k] += c;
  return out.prune();
}

inline TensorElement operator-(const TensorElement& x) {
  TensorElement out = x;
  for (auto& [k, c] : out.terms) c = -c;
  return out;
}

inline TensorElement operator-(const TensorElement& x, const TensorElement& y) {
  return x + (-y);
}

inline TensorElement operator*(Complex c, const TensorElement& x) {
  TensorElement out = x;
  for (auto& [k, coeff] : out.terms) coeff *= c;
  return out.prune();
}

inline TensorElement operator*(const TensorElement& x, const TensorElement& y) {
  require(x.first == y.first && x.second == y.second, "SignatureMismatch",
          "tensor elements live in different algebras");
  TensorElement out(x.first, x.second);
  for (const auto& [k1, c1] : x.terms) {
    for (const auto& [k2, c2] : y.terms) {
      std::uint32_t a1 = TensorElement::left_mask(k1), b1 = TensorElement::right_mask(k1);
      std::uint32_t a2 = TensorElement::left_mask(k2), b2 = TensorElement::right_mask(k2);
      auto [sa, am] = detail::blade_product(x.first, a1, a2);
      auto [sb, bm] = detail::blade_product(x.second, b1, b2);
      double koszul = (std::popcount(a2) & std::popcount(b1) & 1) ? -1.0 : 1.0;
      out.terms[TensorElement::key(am, bm)] += sa * sb * koszul * c1 * c2;
    }
  }
  return out.prune();
}

/// Matrix model of the graded tensor product: the first factor is
/// twisted by its grading operator once per odd second factor,
/// phi(a ox b) = kron(A Gamma^{|b|}, B).  This turns the Koszul sign
/// into plain matrix multiplication.
inline Matrix graded_rep(const Representation& ra, const Representation& rb,
                         const TensorElement& x) {
  require(x.first == ra.sig && x.second == rb.sig, "SignatureMismatch",
          "tensor element does not match the representations");
  Matrix out = Matrix::Zero(ra.dim * rb.dim, ra.dim * rb.dim);
  for (const auto& [k, c] : x.terms) {
    std::uint32_t a = TensorElement::left_mask(k), b = TensorElement::right_mask(k);
    Matrix ma = blade_matrix(ra, a);
    if (std::popcount(b) & 1) ma = ma * ra.grading;
    out += c * kron(ma, blade_matrix(rb, b));
  }
  return out;
}

/// Ordered products of a generating set, indexed by subset mask with the
/// lowest index leftmost; entry 0 is the identity element.
inline std::vector<Element> subset_products(Signature sig, const std::vector<Element>& gens) {
  require(gens.size() <= 16, "TooLarge", "subset_products supports at most 16 factors");
  std::vector<Element> out;
  out.reserve(std::size_t(1) << gens.size());
  out.push_back(scalar(sig, 1.0));
  for (std::uint32_t mask = 1; mask < (1u << gens.size()); ++mask) {
    int low = std::countr_zero(mask);
    out.push_back(gens[static_cast<std::size_t>(low)] * out[mask ^ (1u << low)]);
  }
  return out;
}

inline std::vector<Matrix> subset_products(const std::vector<Matrix>& gens) {
  require(!gens.empty() && gens.size() <= 16, "TooLarge",
          "subset_products supports 1 to 16 factors");
  std::vector<Matrix> out;
  out.reserve(std::size_t(1) << gens.size());
  out.push_back(identity(gens.front().rows()));
  for (std::uint32_t mask = 1; mask < (1u << gens.size()); ++mask) {
    int low = std::countr_zero(mask);
    out.push_back(gens[static_cast<std::size_t>(low)] * out[mask ^ (1u << low)]);
  }
  return out;
}

/// Rank of the real span of a family of complex matrices, computed on
/// stacked real and imaginary parts.
inline Eigen::Index real_span_rank(const std::vector<Matrix>& mats) {
  require(!mats.empty(), "BadDimension", "real_span_rank needs at least one matrix");
  Eigen::Index n = mats.front().size();
  RealMatrix stacked(static_cast<Eigen::Index>(mats.size()), 2 * n);
  for (std::size_t i = 0; i < mats.size(); ++i) {
    Eigen::Map<const Vector> v(mats[i].data(), n);
    stacked.row(static_cast<Eigen::Index>(i)).head(n) = v.real();
    stacked.row(static_cast<Eigen::Index>(i)).tail(n) = v.imag();
  }
  Eigen::ColPivHouseholderQR<RealMatrix> qr(stacked);
  qr.setThreshold(1e-9);
  return qr.rank();
}

inline Eigen::Index real_span_rank(Signature sig, const std::vector<Element>& elements) {
  require(!elements.empty(), "BadDimension", "real_span_rank needs at least one element");
  Eigen::Index n = Eigen::Index(1) << sig.gens();
  RealMatrix stacked(static_cast<Eigen::Index>(elements.size()), 2 * n);
  for (std::size_t i = 0; i < elements.size(); ++i) {
    for (Eigen::Index mask = 0; mask < n; ++mask) {
      Complex c = elements[i].coefficient(static_cast<std::uint32_t>(mask));
      stacked(static_cast<Eigen::Index>(i), mask) = c.real();
      stacked(static_cast<Eigen::Index>(i), n + mask) = c.imag();
    }
  }
  Eigen::ColPivHouseholderQR<RealMatrix> qr(stacked);
  qr.setThreshold(1e-9);
  return qr.rank();
}

/// Isomorphism of the graded tensor product Cl_{r1,s1} ox Cl_{r2,s2}
/// onto Cl_{r1+r2,s1+s2}, recorded through the images of the source
/// generators (first factor, then second factor).
struct IsoWitness {
  Signature first, second, target;
  std::vector<Element> images;

  Element map_blades(std::uint32_t a, std::uint32_t b) const {
    Element out = scalar(target, 1.0);
    for (int i = 0; i < first.gens(); ++i) {
      if (a & (1u << i)) out = out * images[static_cast<std::size_t>(i)];
    }
    for (int j = 0; j < second.gens(); ++j) {
      if (b & (1u << j)) out = out * images[static_cast<std::size_t>(first.gens() + j)];
    }
    return out;
  }

  Element map(const TensorElement& x) const {
    require(x.first == first && x.second == second, "SignatureMismatch",
            "tensor element does not match the witness");
    Element out(target);
    for (const auto& [k, c] : x.terms) {
      out = out + (c * map_blades(TensorElement::left_mask(k), TensorElement::right_mask(k)));
    }
    return out;
  }
};

namespace detail {

inline double expected_square(const Signature& sig, int k) { return k < sig.r ? 1.0 : -1.0; }

inline bool witness_relations_hold(const Signature& a, const Signature& b,
                                   const std::vector<Element>& images) {
  const Signature target = images.front().sig;
  const int m = static_cast<int>(images.size());
  auto expected = [&](int k) {
    return k < a.gens() ? expected_square(a, k) : expected_square(b, k - a.gens());
  };
  for (int k = 0; k < m; ++k) {
    const Element& g = images[static_cast<std::size_t>(k)];
    if ((g * g - scalar(target, expected(k))).norm() > tol::structural) return false;
    if ((g.star() - expected(k) * g).norm() > tol::structural) return false;
    if (g.parity() != std::optional<int>(1)) return false;
    for (int l = k + 1; l < m; ++l) {
      const Element& h = images[static_cast<std::size_t>(l)];
      if ((g * h + h * g).norm() > tol::structural) return false;
    }
  }
  return true;
}

}  // namespace detail

/// Search for generator images in the target algebra.  The first factor
/// maps onto the leading generators; for the second factor both the
/// plain generator and its twist by the first block's volume element are
/// enumerated as candidates, and the first assignment that satisfies
/// the relations and generates the target is returned.
inline IsoWitness witness_iso_cl1(Signature a, Signature b) {
  detail::check_signature(a);
  detail::check_signature(b);
  Signature t{a.r + b.r, a.s + b.s};
  require(t.gens() <= 10, "TooLarge", "witness_iso_cl1 supports at most 10 total generators");

  std::vector<Element> first_images;
  for (int i = 0; i < a.r; ++i) first_images.push_back(generator(t, i));
  for (int j = 0; j < a.s; ++j) first_images.push_back(generator(t, t.r + j));

  Element omega = scalar(t, 1.0);
  for (const Element& g : first_images) omega = omega * g;

  std::vector<std::array<Element, 2>> candidates;
  for (int i = 0; i < b.r; ++i) {
    Element g = generator(t, a.r + i);
    candidates.push_back({g, omega * g});
  }
  for (int j = 0; j < b.s; ++j) {
    Element g = generator(t, t.r + a.s + j);
    candidates.push_back({g, omega * g});
  }

  const int m2 = b.gens();
  for (std::uint32_t pick = 0; pick < (1u << m2); ++pick) {
    std::vector<Element> images = first_images;
    for (int k = 0; k < m2; ++k) {
      images.push_back(candidates[static_cast<std::size_t>(k)][(pick >> k) & 1u]);
    }
    if (t.gens() > 0 && !detail::witness_relations_hold(a, b, images)) continue;
    if (t.gens() > 0) {
      auto products = subset_products(t, images);
      if (real_span_rank(t, products) != Eigen::Index(1) << t.gens()) continue;
    }
    return IsoWitness{a, b, t, std::move(images)};
  }
  fail("NoWitness", "no generator assignment satisfies the Clifford relations");
}

/// Exhaustive multiplicativity check of a witness over all pairs of
/// source basis blades, on blade coefficients and in the standard
/// representation of the target.  Returns the worst deviation.
inline double verify_iso(const IsoWitness& w) {
  Representation rep = standard_rep(w.target);
  const std::uint32_t na = 1u << w.first.gens();
  const std::uint32_t nb = 1u << w.second.gens();

  std::vector<Element> mapped;
  std::vector<Matrix> mapped_mat;
  mapped.reserve(na * nb);
  mapped_mat.reserve(na * nb);
  for (std::uint32_t a = 0; a < na; ++a) {
    for (std::uint32_t b = 0; b < nb; ++b) {
      mapped.push_back(w.map_blades(a, b));
      mapped_mat.push_back(represent(rep, mapped.back()));
    }
  }
  auto at = [&](std::uint32_t a, std::uint32_t b) { return a * nb + b; };

  double worst = 0.0;
  for (std::uint32_t a1 = 0; a1 < na; ++a1) {
    for (std::uint32_t b1 = 0; b1 < nb; ++b1) {
      for (std::uint32_t a2 = 0; a2 < na; ++a2) {
        for (std::uint32_t b2 = 0; b2 < nb; ++b2) {
          auto [sa, am] = detail::blade_product(w.first, a1, a2);
          auto [sb, bm] = detail::blade_product(w.second, b1, b2);
          double koszul = (std::popcount(a2) & std::popcount(b1) & 1) ? -1.0 : 1.0;
          double sign = sa * sb * koszul;
          Element lhs = mapped[at(a1, b1)] * mapped[at(a2, b2)];
          Element rhs = sign * mapped[at(am, bm)];
          worst = std::max(worst, (lhs - rhs).norm());
          Matrix mat_lhs = mapped_mat[at(a1, b1)] * mapped_mat[at(a2, b2)];
          Matrix mat_rhs = sign * mapped_mat[at(am, bm)];
          worst = std::max(worst, (mat_lhs - mat_rhs).norm());
        }
      }
    }
  }
  return worst;
}

/// Generators of Cl_{0,4} found inside H ox Cl_{1,1}, where H is the
/// quaternion algebra spanned over the reals by the identity and the
/// three skew units i sigma_x, i sigma_y, i sigma_z (trivially graded)
/// and Cl_{1,1} carries its standard representation and grading.
struct QuaternionWitness {
  std::vector<Matrix> menu;
  std::vector<Matrix> images;
  std::vector<std::string> image_labels;
  Matrix grading;
  Eigen::Index span_rank = 0;
};

inline QuaternionWitness witness_iso_cl2() {
  Representation cl11 = standard_rep({1, 1});
  const Complex im(0, 1);
  std::vector<Matrix> hunits = {identity(2), im * pauli_x(), im * pauli_y(), im * pauli_z()};
  std::vector<std::string> hnames = {"1", "i", "j", "k"};
  std::vector<Matrix> odd = {cl11.generators[0], cl11.generators[1]};
  std::vector<std::string> odd_names = {"e1", "f1"};

  QuaternionWitness w;
  std::vector<std::string> menu_labels;
  for (std::size_t h = 0; h < hunits.size(); ++h) {
    for (std::size_t o = 0; o < odd.size(); ++o) {
      w.menu.push_back(kron(hunits[h], odd[o]));
      menu_labels.push_back(hnames[h] + " ox " + odd_names[o]);
    }
  }
  w.grading = kron(identity(2), cl11.grading);

  const auto n = static_cast<std::uint32_t>(w.menu.size());
  for (std::uint32_t pick = 0; pick < (1u << n); ++pick) {
    if (std::popcount(pick) != 4) continue;
    std::vector<Matrix> gens;
    std::vector<std::string> labels;
    for (std::uint32_t i = 0; i < n; ++i) {
      if (pick & (1u << i)) {
        gens.push_back(w.menu[i]);
        labels.push_back(menu_labels[i]);
      }
    }
    bool ok = true;
    for (std::size_t i = 0; i < gens.size() && ok; ++i) {
      ok = approx_equal(Matrix(gens[i] * gens[i]), Matrix(-identity(4))) &&
           approx_equal(Matrix(gens[i].adjoint()), Matrix(-gens[i])) &&
           approx_equal(Matrix(w.grading * gens[i]), Matrix(-gens[i] * w.grading));
      for (std::size_t j = i + 1; j < gens.size() && ok; ++j) {
        ok = (gens[i] * gens[j] + gens[j] * gens[i]).norm() < tol::structural;
      }
    }
    if (!ok) continue;
    Eigen::Index rank = real_span_rank(subset_products(gens));
    if (rank != 16) continue;
    w.images = std::move(gens);
    w.image_labels = std::move(labels);
    w.span_rank = rank;
    return w;
  }
  fail("NoWitness", "no quadruple in H ox Cl_{1,1} satisfies the Cl_{0,4} relations");
}

/// Anti-linear involution on the blade coefficient space of the
/// complexification whose fixed points are the real algebra Cl_{r,s},
/// written in the presentation where every generator squares to +1 and
/// each minus generator appears as i times a plus generator.
inline AntiLinearOp real_structure(Signature sig) {
  detail::check_signature(sig);
  require(sig.gens() <= 10, "TooLarge", "real_structure supports at most 10 generators");
  const Eigen::Index n = Eigen::Index(1) << sig.gens();
  Matrix d = Matrix::Zero(n, n);
  for (Eigen::Index mask = 0; mask < n; ++mask) {
    int nf = std::popcount(static_cast<std::uint32_t>(mask) & detail::minus_range(sig));
    d(mask, mask) = (nf & 1) ? -1.0 : 1.0;
  }
  return AntiLinearOp(d);
}

/// Coefficients of an element in the all-plus presentation.
inline Vector all_plus_coefficients(const Element& x) {
  require(x.sig.gens() <= 10, "TooLarge", "all_plus_coefficients supports at most 10 generators");
  const Eigen::Index n = Eigen::Index(1) << x.sig.gens();
  static const Complex unit_powers[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  Vector v = Vector::Zero(n);
  for (const auto& [mask, c] : x.terms) {
    int nf = std::popcount(mask & detail::minus_range(x.sig));
    v(static_cast<Eigen::Index>(mask)) = c * unit_powers[nf & 3];
  }
  return v;
}

/// Blade multiplication on all-plus coefficient vectors.
inline Vector all_plus_product(int gens, const Vector& a, const Vector& b) {
  Signature sig{gens, 0};
  detail::check_signature(sig);
  const Eigen::Index n = Eigen::Index(1) << gens;
  require(a.size() == n && b.size() == n, "DimensionMismatch",
          "coefficient vectors must match the generator count");
  Vector out = Vector::Zero(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    if (a(i) == Complex(0.0)) continue;
    for (Eigen::Index j = 0; j < n; ++j) {
      if (b(j) == Complex(0.0)) continue;
      auto [sign, mask] = detail::blade_product(sig, static_cast<std::uint32_t>(i),
                                                static_cast<std::uint32_t>(j));
      out(static_cast<Eigen::Index>(mask)) += sign * a(i) * b(j);
    }
  }
  return out;
}

}  // namespace tenfold::clifford
