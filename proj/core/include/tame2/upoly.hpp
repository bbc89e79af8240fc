#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tame2/numeric.hpp"

namespace tame2 {

/// Dense univariate polynomial over the rationals. Coefficient i is the
/// coefficient of the i-th power of the generator; no trailing zeros are
/// stored, so the zero polynomial has an empty coefficient vector.
class UPoly {
 public:
  UPoly() = default;
  explicit UPoly(const Rat& constant);
  explicit UPoly(std::vector<Rat> coeffs);  // trims trailing zeros

  static UPoly monomial(int degree, const Rat& c = Rat(1));
  static UPoly variable() { return monomial(1); }

  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for 0
  const Rat& lc() const;
  Rat coeff(int i) const;
  const std::vector<Rat>& coeffs() const { return c_; }

  UPoly operator+(const UPoly& o) const;
  UPoly operator-(const UPoly& o) const;
  UPoly operator*(const UPoly& o) const;
  UPoly operator-() const;
  bool operator==(const UPoly& o) const { return c_ == o.c_; }
  bool operator!=(const UPoly& o) const { return !(*this == o); }

  UPoly scaled(const Rat& k) const;
  UPoly shifted(int k) const;  // multiply by generator^k
  UPoly pow(unsigned e) const;
  UPoly derivative() const;
  Rat eval(const Rat& x) const;

  /// Euclidean division: *this == q * d + r with deg r < deg d.
  std::pair<UPoly, UPoly> divmod(const UPoly& d) const;
  std::optional<UPoly> exact_div(const UPoly& d) const;

  UPoly monic() const;  // unit-normalized (leading coefficient 1)

  std::string str(const std::string& var) const;

 private:
  std::vector<Rat> c_;
  void trim();
};

UPoly upoly_gcd(const UPoly& a, const UPoly& b);  // monic, gcd(0,0) == 0

struct UPolyExtGcd {
  UPoly g;  // monic
  UPoly s;
  UPoly t;  // g == s*a + t*b
};
UPolyExtGcd upoly_ext_gcd(const UPoly& a, const UPoly& b);

UPoly upoly_squarefree_part(const UPoly& a);  // monic product of distinct roots

/// Rational roots of a nonzero polynomial (with multiplicity collapsed),
/// found by the rational root theorem on the integer-scaled polynomial.
std::vector<Rat> upoly_rational_roots(const UPoly& a);

/// Monic irreducible factors at desk scale: linear factors are split off via
/// rational roots and quadratics via their discriminant. A remaining factor of
/// degree >= 3 with no rational root is returned as-is.
std::vector<UPoly> upoly_split_factors(const UPoly& a);

}  // namespace tame2
