#include "tame2/upoly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace tame2 {

UPoly::UPoly(const Rat& constant) {
  if (constant != 0) c_.push_back(constant);
}

UPoly::UPoly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }

UPoly UPoly::monomial(int degree, const Rat& c) {
  if (degree < 0) throw std::invalid_argument("UPoly::monomial: negative degree");
  UPoly p;
  if (c != 0) {
    p.c_.assign(static_cast<size_t>(degree) + 1, Rat(0));
    p.c_.back() = c;
  }
  return p;
}

void UPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

const Rat& UPoly::lc() const {
  if (is_zero()) throw std::domain_error("UPoly::lc: zero polynomial");
  return c_.back();
}

Rat UPoly::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(c_.size())) return Rat(0);
  return c_[static_cast<size_t>(i)];
}

UPoly UPoly::operator+(const UPoly& o) const {
  std::vector<Rat> r(std::max(c_.size(), o.c_.size()), Rat(0));
  for (size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
  for (size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
  return UPoly(std::move(r));
}

UPoly UPoly::operator-(const UPoly& o) const { return *this + (-o); }

UPoly UPoly::operator-() const {
  std::vector<Rat> r(c_);
  for (auto& x : r) x = -x;
  UPoly p;
  p.c_ = std::move(r);
  return p;
}

UPoly UPoly::operator*(const UPoly& o) const {
  if (is_zero() || o.is_zero()) return UPoly();
  std::vector<Rat> r(c_.size() + o.c_.size() - 1, Rat(0));
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    for (size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
  }
  return UPoly(std::move(r));
}

UPoly UPoly::scaled(const Rat& k) const {
  if (k == 0) return UPoly();
  std::vector<Rat> r(c_);
  for (auto& x : r) x *= k;
  UPoly p;
  p.c_ = std::move(r);
  return p;
}

UPoly UPoly::shifted(int k) const {
  if (k < 0) throw std::invalid_argument("UPoly::shifted: negative shift");
  if (is_zero()) return UPoly();
  std::vector<Rat> r(static_cast<size_t>(k), Rat(0));
  r.insert(r.end(), c_.begin(), c_.end());
  UPoly p;
  p.c_ = std::move(r);
  return p;
}

UPoly UPoly::pow(unsigned e) const {
  UPoly result(Rat(1)), b = *this;
  while (e > 0) {
    if (e & 1u) result = result * b;
    b = b * b;
    e >>= 1u;
  }
  return result;
}

UPoly UPoly::derivative() const {
  if (c_.size() <= 1) return UPoly();
  std::vector<Rat> r(c_.size() - 1);
  for (size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * Rat(Int(i));
  return UPoly(std::move(r));
}

Rat UPoly::eval(const Rat& x) const {
  Rat acc(0);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

std::pair<UPoly, UPoly> UPoly::divmod(const UPoly& d) const {
  if (d.is_zero()) throw std::domain_error("UPoly::divmod: division by zero");
  UPoly q, r = *this;
  while (!r.is_zero() && r.degree() >= d.degree()) {
    Rat k = r.lc() / d.lc();
    int shift = r.degree() - d.degree();
    UPoly term = UPoly::monomial(shift, k);
    q = q + term;
    r = r - term * d;
  }
  return {q, r};
}

std::optional<UPoly> UPoly::exact_div(const UPoly& d) const {
  auto [q, r] = divmod(d);
  if (!r.is_zero()) return std::nullopt;
  return q;
}

UPoly UPoly::monic() const {
  if (is_zero()) return UPoly();
  return scaled(Rat(1) / lc());
}

std::string UPoly::str(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    Rat c = coeff(i);
    if (c == 0) continue;
    bool neg = c < 0;
    Rat a = neg ? Rat(-c) : c;
    if (first) {
      if (neg) os << "-";
      first = false;
    } else {
      os << (neg ? " - " : " + ");
    }
    if (i == 0) {
      os << rat_str(a);
    } else {
      if (a != 1) os << rat_str(a) << "*";
      os << var;
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

UPoly upoly_gcd(const UPoly& a, const UPoly& b) {
  UPoly x = a, y = b;
  while (!y.is_zero()) {
    UPoly r = x.divmod(y).second;
    x = y;
    y = r;
  }
  return x.is_zero() ? x : x.monic();
}

UPolyExtGcd upoly_ext_gcd(const UPoly& a, const UPoly& b) {
  UPoly old_r = a, r = b;
  UPoly old_s(Rat(1)), s;
  UPoly old_t, t(Rat(1));
  while (!r.is_zero()) {
    auto [q, rem] = old_r.divmod(r);
    old_r = r;
    r = rem;
    UPoly ns = old_s - q * s;
    old_s = s;
    s = ns;
    UPoly nt = old_t - q * t;
    old_t = t;
    t = nt;
  }
  if (old_r.is_zero()) return {UPoly(), old_s, old_t};
  Rat k = Rat(1) / old_r.lc();
  return {old_r.scaled(k), old_s.scaled(k), old_t.scaled(k)};
}

UPoly upoly_squarefree_part(const UPoly& a) {
  if (a.is_zero()) return a;
  if (a.is_constant()) return UPoly(Rat(1));
  UPoly g = upoly_gcd(a, a.derivative());
  return a.exact_div(g)->monic();
}

std::vector<Rat> upoly_rational_roots(const UPoly& a) {
  if (a.is_zero()) throw std::domain_error("upoly_rational_roots: zero polynomial");
  std::vector<Rat> roots;
  UPoly p = upoly_squarefree_part(a);
  if (p.is_constant()) return roots;

  // Strip the root at zero, then scale to integer coefficients.
  if (p.coeff(0) == 0) {
    roots.push_back(Rat(0));
    while (p.coeff(0) == 0) p = *p.exact_div(UPoly::variable());
  }
  if (p.is_constant()) return roots;
  Int den(1);
  for (const Rat& c : p.coeffs()) den = den / int_gcd(den, rat_den(c)) * rat_den(c);
  std::vector<Int> ic(p.coeffs().size());
  for (size_t i = 0; i < ic.size(); ++i) ic[i] = rat_num(p.coeffs()[i] * Rat(den));

  Int a0 = ic.front(), an = ic.back();
  if (a0 < 0) a0 = -a0;
  if (an < 0) an = -an;
  // Divisor enumeration; inputs here are certificate-sized.
  auto divisors = [](const Int& n) {
    std::vector<Int> ds;
    for (Int d = 1; d * d <= n; ++d) {
      if (n % d == 0) {
        ds.push_back(d);
        if (d * d != n) ds.push_back(n / d);
      }
    }
    return ds;
  };
  for (const Int& num : divisors(a0)) {
    for (const Int& den2 : divisors(an)) {
      if (int_gcd(num, den2) != 1) continue;
      for (int sign = 1; sign >= -1; sign -= 2) {
        Rat cand = make_rat(sign > 0 ? num : Int(-num), den2);
        if (p.eval(cand) == 0) roots.push_back(cand);
      }
    }
  }
  std::sort(roots.begin(), roots.end());
  roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
  return roots;
}

std::vector<UPoly> upoly_split_factors(const UPoly& a) {
  if (a.is_zero()) throw std::domain_error("upoly_split_factors: zero polynomial");
  std::vector<UPoly> out;
  UPoly p = upoly_squarefree_part(a);
  if (p.is_constant()) return out;
  for (const Rat& r : upoly_rational_roots(p)) {
    UPoly lin(std::vector<Rat>{-r, Rat(1)});
    out.push_back(lin);
    p = *p.exact_div(lin);
  }
  p = p.is_constant() ? UPoly(Rat(1)) : p.monic();
  if (p.degree() == 2) {
    // Split via the discriminant when it is a rational square.
    Rat b = p.coeff(1), c = p.coeff(0);
    Rat disc = b * b - Rat(4) * c;
    if (disc >= 0) {
      Int n = rat_num(disc), d = rat_den(disc);
      Int sn = int_sqrt(n), sd = int_sqrt(d);
      if (sn * sn == n && sd * sd == d) {
        Rat sq = make_rat(sn, sd);
        Rat r1 = (-b + sq) / 2, r2 = (-b - sq) / 2;
        out.push_back(UPoly(std::vector<Rat>{-r1, Rat(1)}));
        out.push_back(UPoly(std::vector<Rat>{-r2, Rat(1)}));
        return out;
      }
    }
    out.push_back(p);
  } else if (!p.is_constant()) {
    out.push_back(p);
  }
  return out;
}

}  // namespace tame2
