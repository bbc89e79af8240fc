#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "tame2/coeff.hpp"

namespace tame2 {

/// Exponent of a monomial X^i Y^j.
struct Exp2 {
  int i = 0;
  int j = 0;
  int deg() const { return i + j; }
  bool operator==(const Exp2& o) const { return i == o.i && j == o.j; }
};

struct Exp2Less {
  bool operator()(const Exp2& x, const Exp2& y) const {
    if (x.deg() != y.deg()) return x.deg() < y.deg();
    return x.j > y.j;
  }
};

/// Sparse polynomial in the two automorphism variables X and Y with
/// coefficients in a fixed ring. No zero coefficients are stored.
class BiPoly {
 public:
  using Terms = std::map<Exp2, Coeff, Exp2Less>;

  explicit BiPoly(Ring ring) : ring_(std::move(ring)) {}
  static BiPoly constant(const Coeff& c);
  static BiPoly monomial(int i, int j, const Coeff& c);
  static BiPoly var_x(const Ring& r) { return monomial(1, 0, Coeff::one(r)); }
  static BiPoly var_y(const Ring& r) { return monomial(0, 1, Coeff::one(r)); }

  const Ring& ring() const { return ring_; }
  const Terms& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }
  Coeff coeff(int i, int j) const;

  /// Max total degree over the support; empty for the zero polynomial.
  std::optional<int> total_degree() const;
  bool is_constant() const;
  bool is_homogeneous() const;

  /// Homogeneous part of the top total degree; throws on zero input.
  BiPoly top_component() const;
  BiPoly homogeneous_component(int d) const;

  BiPoly operator+(const BiPoly& o) const;
  BiPoly operator-(const BiPoly& o) const;
  BiPoly operator*(const BiPoly& o) const;
  BiPoly operator-() const;
  bool operator==(const BiPoly& o) const;
  bool operator!=(const BiPoly& o) const { return !(*this == o); }

  BiPoly scaled(const Coeff& k) const;
  BiPoly pow(unsigned e) const;

  /// Exact expansion of this(G1, G2).
  BiPoly substitute(const BiPoly& g1, const BiPoly& g2) const;

  /// Apply a function to every coefficient, producing a polynomial over the
  /// target ring; used for embeddings and conversions.
  BiPoly map_coefficients(const Ring& target,
                          const std::function<Coeff(const Coeff&)>& fn) const;

  std::string str() const;  // re-parseable rendering

 private:
  Ring ring_;
  Terms t_;
  void add_term(Exp2 e, const Coeff& c);
};

/// The constant c of K(R) with h == c * g^e, for homogeneous nonzero h, g
/// with deg h == e * deg g; empty when no such constant exists.
std::optional<FracCoeff> power_proportionality(const BiPoly& h, const BiPoly& g, unsigned e);

/// Representative pair of the module spanned by two proportional homogeneous
/// polynomials: h2 * a == h1 * b, with (a, b) in the target ring and the
/// module R h1 + R h2 isomorphic to the ideal (a, b). Over gcd domains the
/// common polynomial part h1 / a is returned as well.
struct IdealPair {
  Coeff a, b;
  std::optional<BiPoly> common;
};
IdealPair extract_ideal_pair(const BiPoly& h1, const BiPoly& h2, const Ring& target);

/// Embed a polynomial over R into K(R).
BiPoly embed_poly(const BiPoly& p);

}  // namespace tame2
