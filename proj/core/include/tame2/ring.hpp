#pragma once

#include <cstdint>
#include <memory>
#include <string>

#include "tame2/numeric.hpp"

namespace tame2 {

class Coeff;
class RingDescriptor;
using Ring = std::shared_ptr<const RingDescriptor>;

enum class RingKind {
  Rationals,
  PrimeField,
  Integers,
  UnivarPoly,
  BivarPoly,
  Localized,
  QuadSqrtMinus5,  // integers extended by a square root of -5
  CuspidalCubic,   // univariate polynomials with no linear term
  FractionField,
};

/// Capability flags of a coefficient ring. The table is fixed per ring kind:
/// fields and principal ideal domains carry extended gcds and a complete
/// principality decision; the bivariate polynomial ring keeps gcds and
/// decides principality through Groebner bases; the quadratic extension has
/// no gcd but a complete lattice-based decision; the cuspidal ring has
/// neither, and its bounded principality oracle may answer Unknown.
struct RingTraits {
  bool has_gcd = false;
  bool has_ext_gcd = false;
  bool principality_complete = false;
  bool is_field = false;
  bool is_pid = false;
  bool is_dedekind = false;
};

/// Immutable description of a coefficient ring. Shared by every element of
/// the ring; equality is structural.
class RingDescriptor : public std::enable_shared_from_this<RingDescriptor> {
 public:
  static Ring rationals();
  static Ring prime_field(std::int64_t p);  // p must be prime, p < 2^31
  static Ring integers();
  static Ring univar(std::string gen);
  static Ring bivar(std::string gen1, std::string gen2);
  /// Base ring with the multiplier inverted. Only gcd-capable bases are
  /// accepted; the multiplier must be a nonzero nonunit of the base.
  static Ring localized(const Ring& base, const Coeff& multiplier);
  static Ring quad_sqrt_minus5();
  static Ring cuspidal_cubic();
  static Ring fraction_field_over(const Ring& base);  // internal; prefer fraction_field_of

  RingKind kind() const { return kind_; }
  const RingTraits& traits() const { return traits_; }
  std::int64_t char_p() const { return p_; }
  const std::string& gen_name(int i = 0) const;
  const Ring& base() const;         // Localized / FractionField
  const Coeff& multiplier() const;  // Localized

  /// Display name, e.g. "QQ[z,w]" or "ZZ[r5][1/2]".
  std::string name() const;

  ~RingDescriptor();

 private:
  friend struct RingBuilder;
  RingDescriptor() = default;
  RingKind kind_ = RingKind::Rationals;
  RingTraits traits_;
  std::int64_t p_ = 0;
  std::string gen1_, gen2_;
  Ring base_;
  std::shared_ptr<const Coeff> multiplier_;
};

bool same_ring(const Ring& a, const Ring& b);

/// The fraction field K(R) as a ring descriptor. Fields map to themselves,
/// the integers to the rationals, a localized ring to its base's fraction
/// field, and the cuspidal ring to the fraction field of the univariate ring
/// in the same generator (its normalization).
Ring fraction_field_of(const Ring& r);

/// The polynomial-like ring whose elements serve as numerators and
/// denominators of K(R): the base itself for most kinds, the base of a
/// localized ring, the univariate ring for the cuspidal ring, and the ring
/// itself for fields.
Ring fraction_base_of(const Ring& r);

}  // namespace tame2
