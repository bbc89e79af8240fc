#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "tame2/autmap.hpp"
#include "tame2/prime.hpp"

namespace tame2 {

/// Syntax or ring-membership error with the offending input position.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& msg, size_t pos)
      : std::runtime_error(msg + " (at position " + std::to_string(pos) + ")"), pos_(pos) {}
  size_t pos() const { return pos_; }

 private:
  size_t pos_;
};

/// Parses "(expr, expr)" over the given ring. The grammar:
///   map    := '(' expr ',' expr ')'
///   expr   := term (('+'|'-') term)*
///   term   := ('+'|'-')? factor (('*'|'/') factor)*
///   factor := base ('^' nat)?
///   base   := '(' expr ')' | 'X' | 'Y' | integer | generator-name
/// Division is by coefficient-only subexpressions and must land in the ring;
/// whitespace is insignificant and implicit multiplication is not accepted.
/// Every coefficient of the result must lie in the ring (for the cuspidal
/// ring this rejects a bare linear generator with a targeted message).
PolyMap parse_map(const std::string& text, const Ring& ring);

/// Parses a coefficient expression (no X, Y) over the ring.
Coeff parse_coeff(const std::string& text, const Ring& ring);

/// Parses a polynomial in the indeterminate T with coefficients in the ring.
std::vector<Coeff> parse_poly_in_t(const std::string& text, const Ring& ring);

/// Parses a prime-ideal argument: "0", a single coefficient expression, or a
/// parenthesized comma-separated generator list.
PrimeSpec parse_prime_spec(const std::string& text, const Ring& ring);

/// Resolves a command-line ring name: Q, Z, Fp:<p>, Qz, Qt, Qzw, Zr5, cusp,
/// a _frac suffix for the fraction field, and <base>_loc:<expr> for a
/// localization at a base element.
Ring ring_from_flag(const std::string& flag);

}  // namespace tame2
