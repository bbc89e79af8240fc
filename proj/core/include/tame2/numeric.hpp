#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace tame2 {

// Exact arbitrary-precision integers and rationals. cpp_rational keeps values
// reduced with a positive denominator, which is the canonical form used
// throughout.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// Safe construction: boost's two-argument rational constructor rejects
// negative denominators, so normalize the sign first.
Rat make_rat(Int num, Int den);

inline Int rat_num(const Rat& r) { return numerator(r); }
inline Int rat_den(const Rat& r) { return denominator(r); }
inline bool rat_is_integer(const Rat& r) { return denominator(r) == 1; }

Int int_gcd(Int a, Int b);

struct ExtGcd {
  Int g;  // gcd >= 0
  Int s;
  Int t;  // g == s*a + t*b
};
ExtGcd ext_gcd(const Int& a, const Int& b);

Int int_pow(const Int& base, unsigned exp);
Rat rat_pow(const Rat& base, long exp);

// floor(sqrt(n)) for n >= 0
Int int_sqrt(const Int& n);

bool is_prime(const Int& n);

// Distinct prime factors of |n|, |n| > 1, by trial division. Intended for the
// small integers that show up in certificates, not for cryptographic sizes.
std::vector<Int> distinct_prime_factors(Int n);

std::string int_str(const Int& v);
std::string rat_str(const Rat& v);

}  // namespace tame2
