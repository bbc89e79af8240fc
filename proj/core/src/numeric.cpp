#include "tame2/numeric.hpp"

#include <stdexcept>

namespace tame2 {

Rat make_rat(Int num, Int den) {
  if (den == 0) throw std::domain_error("make_rat: zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  return Rat(num, den);
}

Int int_gcd(Int a, Int b) { return boost::multiprecision::gcd(a, b); }

ExtGcd ext_gcd(const Int& a, const Int& b) {
  Int old_r = a, r = b;
  Int old_s = 1, s = 0;
  Int old_t = 0, t = 1;
  while (r != 0) {
    Int q = old_r / r;  // truncated division; consistent on negatives
    Int tmp;
    tmp = old_r - q * r;
    old_r = r;
    r = tmp;
    tmp = old_s - q * s;
    old_s = s;
    s = tmp;
    tmp = old_t - q * t;
    old_t = t;
    t = tmp;
  }
  if (old_r < 0) {
    old_r = -old_r;
    old_s = -old_s;
    old_t = -old_t;
  }
  return {old_r, old_s, old_t};
}

Int int_pow(const Int& base, unsigned exp) {
  Int result = 1, b = base;
  while (exp > 0) {
    if (exp & 1u) result *= b;
    b *= b;
    exp >>= 1u;
  }
  return result;
}

Rat rat_pow(const Rat& base, long exp) {
  if (exp < 0) {
    if (base == 0) throw std::domain_error("rat_pow: zero to negative power");
    return rat_pow(Rat(1) / base, -exp);
  }
  Rat result = 1, b = base;
  unsigned long e = static_cast<unsigned long>(exp);
  while (e > 0) {
    if (e & 1u) result *= b;
    b *= b;
    e >>= 1u;
  }
  return result;
}

Int int_sqrt(const Int& n) {
  if (n < 0) throw std::domain_error("int_sqrt: negative argument");
  return boost::multiprecision::sqrt(n);
}

bool is_prime(const Int& n) {
  if (n < 2) return false;
  if (n < 4) return true;
  if (n % 2 == 0) return false;
  for (Int d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

std::vector<Int> distinct_prime_factors(Int n) {
  if (n < 0) n = -n;
  std::vector<Int> out;
  if (n < 2) return out;
  for (Int d = 2; d * d <= n; d == 2 ? d = 3 : d += 2) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

std::string int_str(const Int& v) { return v.str(); }

std::string rat_str(const Rat& v) {
  if (rat_is_integer(v)) return numerator(v).str();
  return numerator(v).str() + "/" + denominator(v).str();
}

}  // namespace tame2
