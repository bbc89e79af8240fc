#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "tame2/mpoly2.hpp"
#include "tame2/numeric.hpp"
#include "tame2/ring.hpp"
#include "tame2/upoly.hpp"

namespace tame2 {

struct FracCoeff;

/// An element of a coefficient ring, kept in canonical form: rationals
/// reduced with positive denominators, polynomial payloads without stored
/// zeros, cuspidal elements with an exactly zero linear coefficient, localized
/// numerators not divisible by the multiplier unless the exponent is zero,
/// and fraction-field elements normalized per base ring.
class Coeff {
 public:
  struct FpVal {
    std::int64_t v = 0;
    bool operator==(const FpVal& o) const { return v == o.v; }
  };
  struct QuadVal {  // x + y*sqrt(-5)
    Int x, y;
    bool operator==(const QuadVal& o) const { return x == o.x && y == o.y; }
  };
  struct LocVal {  // num / multiplier^k
    std::shared_ptr<const Coeff> num;
    unsigned k = 0;
    bool operator==(const LocVal& o) const;
  };
  struct FracVal {  // num / den over the fraction base ring
    std::shared_ptr<const Coeff> num;
    std::shared_ptr<const Coeff> den;
    bool operator==(const FracVal& o) const;
  };
  using Payload = std::variant<Int, Rat, FpVal, UPoly, MPoly2, QuadVal, LocVal, FracVal>;

  Coeff() = default;  // empty handle; not a ring element

  static Coeff zero(const Ring& r);
  static Coeff one(const Ring& r);
  static Coeff from_int(const Ring& r, const Int& v);
  static Coeff from_int(const Ring& r, long long v) { return from_int(r, Int(v)); }
  static Coeff from_rat(const Ring& r, const Rat& v);  // fields and fraction fields
  static Coeff from_upoly(const Ring& r, UPoly p);     // UnivarPoly / CuspidalCubic
  static Coeff from_mpoly(const Ring& r, MPoly2 p);
  static Coeff quad(const Ring& r, Int x, Int y);
  static Coeff localized(const Ring& r, const Coeff& base_num, unsigned k);
  static Coeff fraction(const Ring& field, const Coeff& num, const Coeff& den);

  bool valid() const { return ring_ != nullptr; }
  const Ring& ring() const { return ring_; }
  RingKind kind() const { return ring_->kind(); }

  bool is_zero() const;
  bool is_one() const;

  const Int& as_int() const { return std::get<Int>(p_); }
  const Rat& as_rat() const { return std::get<Rat>(p_); }
  std::int64_t fp_value() const { return std::get<FpVal>(p_).v; }
  const UPoly& as_upoly() const { return std::get<UPoly>(p_); }
  const MPoly2& as_mpoly() const { return std::get<MPoly2>(p_); }
  const QuadVal& as_quad() const { return std::get<QuadVal>(p_); }
  const Coeff& loc_num() const { return *std::get<LocVal>(p_).num; }
  unsigned loc_exp() const { return std::get<LocVal>(p_).k; }
  const Coeff& frac_num() const { return *std::get<FracVal>(p_).num; }
  const Coeff& frac_den() const { return *std::get<FracVal>(p_).den; }

  Coeff operator+(const Coeff& o) const;
  Coeff operator-(const Coeff& o) const;
  Coeff operator*(const Coeff& o) const;
  Coeff operator-() const;
  bool operator==(const Coeff& o) const;
  bool operator!=(const Coeff& o) const { return !(*this == o); }

  Coeff pow(unsigned e) const;

  /// Multiplicative inverse of a unit; throws std::domain_error otherwise.
  Coeff inv() const;

  /// Canonical rendering, re-parseable by the expression grammar.
  std::string str() const;
  /// Whether the rendering needs parentheses when used as a factor.
  bool str_is_composite() const;

 private:
  Ring ring_;
  Payload p_;
  Coeff(Ring r, Payload p) : ring_(std::move(r)), p_(std::move(p)) {}
  friend Coeff make_raw_coeff(Ring r, Coeff::Payload p);
};

Coeff make_raw_coeff(Ring r, Coeff::Payload p);

bool is_unit(const Coeff& a);

/// Quotient q with q*b == a when it exists in the ring of a.
std::optional<Coeff> exact_div(const Coeff& a, const Coeff& b);

bool divides(const Coeff& b, const Coeff& a);  // b | a

/// gcd in gcd-capable rings, unit-normalized (positive over the integers,
/// monic for univariate polynomials, and with grevlex-leading coefficient 1
/// for bivariate ones). Throws for rings without gcd.
Coeff ring_gcd(const Coeff& a, const Coeff& b);

struct CoeffExtGcd {
  Coeff g, s, t;  // g == s*a + t*b
};
CoeffExtGcd ring_ext_gcd(const Coeff& a, const Coeff& b);  // ext-gcd rings only

/// A normalized fraction over a base ring; a value of K(R). Over gcd domains
/// the gcd is cancelled and the denominator unit-normalized; over the
/// quadratic and cuspidal rings a fixed deterministic representative is used.
struct FracCoeff {
  Coeff num, den;
  bool is_integral() const { return is_unit(den); }
  std::string str() const;
};

FracCoeff frac_normalize(const Coeff& num, const Coeff& den);

/// Embed an element of R into K(R).
Coeff embed_in_fraction_field(const Coeff& a);

/// Interpret an element of K(R) back in R when it lies there.
std::optional<Coeff> try_into_ring(const Coeff& k_elem, const Ring& target);

/// View an element of K(R) as a normalized fraction over the fraction base.
FracCoeff fraction_parts(const Coeff& k_elem);

/// Embed across compatible rings (same fraction field); throws when the
/// element does not lie in the target.
Coeff convert_to_ring(const Coeff& a, const Ring& target);

}  // namespace tame2
