#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tame2/coeff.hpp"

namespace tame2 {

/// A prime ideal of a coefficient ring. Primality of user-supplied ideals is
/// trusted, not verified.
class PrimeSpec {
 public:
  enum class Kind { ZeroIdeal, PrimeElement, GeneratorList };

  static PrimeSpec zero_ideal(const Ring& r);
  static PrimeSpec element(Coeff p);  // nonzero nonunit
  static PrimeSpec generators(std::vector<Coeff> gens);

  Kind kind() const { return kind_; }
  const Ring& ring() const { return ring_; }
  const Coeff& element_value() const;
  const std::vector<Coeff>& gens() const { return gens_; }

  std::string str() const;

 private:
  Kind kind_ = Kind::ZeroIdeal;
  Ring ring_;
  std::vector<Coeff> gens_;
};

/// Ideal membership a in P. Throws std::invalid_argument for a prime kind the
/// ring does not support.
bool in_prime(const Coeff& a, const PrimeSpec& P);

/// Membership of an element of K(R) in the localization R_P.
bool in_local_ring(const Coeff& k_elem, const PrimeSpec& P);

/// P-adic valuation of a nonzero ring element in the Dedekind ring ZZ[r5].
int quad_valuation(const Coeff& a, const PrimeSpec& P);

/// For a prime of the cuspidal ring, the classified local structure.
struct CuspPrimeInfo {
  bool at_cusp = false;  // the singular point
  Rat point;             // the smooth point's parameter when not at the cusp
};
CuspPrimeInfo classify_cusp_prime(const PrimeSpec& P);

}  // namespace tame2
