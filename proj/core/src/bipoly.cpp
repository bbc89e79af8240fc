#include "tame2/bipoly.hpp"

#include <sstream>
#include <stdexcept>

namespace tame2 {

BiPoly BiPoly::constant(const Coeff& c) {
  BiPoly p(c.ring());
  p.add_term({0, 0}, c);
  return p;
}

BiPoly BiPoly::monomial(int i, int j, const Coeff& c) {
  if (i < 0 || j < 0) throw std::invalid_argument("BiPoly::monomial: negative exponent");
  BiPoly p(c.ring());
  p.add_term({i, j}, c);
  return p;
}

void BiPoly::add_term(Exp2 e, const Coeff& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = t_.emplace(e, c);
  if (!inserted) {
    Coeff sum = it->second + c;
    if (sum.is_zero()) {
      t_.erase(it);
    } else {
      it->second = std::move(sum);
    }
  }
}

Coeff BiPoly::coeff(int i, int j) const {
  auto it = t_.find({i, j});
  return it == t_.end() ? Coeff::zero(ring_) : it->second;
}

std::optional<int> BiPoly::total_degree() const {
  if (t_.empty()) return std::nullopt;
  return t_.rbegin()->first.deg();
}

bool BiPoly::is_constant() const {
  return t_.empty() || (t_.size() == 1 && t_.begin()->first == Exp2{0, 0});
}

bool BiPoly::is_homogeneous() const {
  if (t_.empty()) return true;
  int d = t_.begin()->first.deg();
  for (const auto& [e, c] : t_) {
    if (e.deg() != d) return false;
  }
  return true;
}

BiPoly BiPoly::top_component() const {
  if (t_.empty()) throw std::domain_error("BiPoly::top_component: zero polynomial");
  return homogeneous_component(*total_degree());
}

BiPoly BiPoly::homogeneous_component(int d) const {
  BiPoly p(ring_);
  for (const auto& [e, c] : t_) {
    if (e.deg() == d) p.t_.emplace(e, c);
  }
  return p;
}

BiPoly BiPoly::operator+(const BiPoly& o) const {
  if (!same_ring(ring_, o.ring_)) throw std::invalid_argument("BiPoly: ring mismatch");
  BiPoly p = *this;
  for (const auto& [e, c] : o.t_) p.add_term(e, c);
  return p;
}

BiPoly BiPoly::operator-(const BiPoly& o) const { return *this + (-o); }

BiPoly BiPoly::operator-() const {
  BiPoly p(ring_);
  for (const auto& [e, c] : t_) p.t_.emplace(e, -c);
  return p;
}

BiPoly BiPoly::operator*(const BiPoly& o) const {
  if (!same_ring(ring_, o.ring_)) throw std::invalid_argument("BiPoly: ring mismatch");
  BiPoly p(ring_);
  for (const auto& [e1, c1] : t_) {
    for (const auto& [e2, c2] : o.t_) {
      p.add_term({e1.i + e2.i, e1.j + e2.j}, c1 * c2);
    }
  }
  return p;
}

bool BiPoly::operator==(const BiPoly& o) const {
  return same_ring(ring_, o.ring_) && t_ == o.t_;
}

BiPoly BiPoly::scaled(const Coeff& k) const {
  BiPoly p(ring_);
  if (k.is_zero()) return p;
  for (const auto& [e, c] : t_) p.add_term(e, c * k);
  return p;
}

BiPoly BiPoly::pow(unsigned e) const {
  BiPoly result = BiPoly::constant(Coeff::one(ring_));
  BiPoly b = *this;
  while (e > 0) {
    if (e & 1u) result = result * b;
    b = b * b;
    e >>= 1u;
  }
  return result;
}

BiPoly BiPoly::substitute(const BiPoly& g1, const BiPoly& g2) const {
  if (!same_ring(ring_, g1.ring()) || !same_ring(ring_, g2.ring())) {
    throw std::invalid_argument("BiPoly::substitute: ring mismatch");
  }
  // Cache powers of the substituted values; supports stay small at the
  // degrees this library works at, coefficients do not.
  std::vector<BiPoly> pow1{BiPoly::constant(Coeff::one(ring_))};
  std::vector<BiPoly> pow2{BiPoly::constant(Coeff::one(ring_))};
  auto power = [](std::vector<BiPoly>& cache, const BiPoly& base, int e) -> const BiPoly& {
    while (static_cast<int>(cache.size()) <= e) cache.push_back(cache.back() * base);
    return cache[static_cast<size_t>(e)];
  };
  BiPoly acc(ring_);
  for (const auto& [e, c] : t_) {
    acc = acc + (power(pow1, g1, e.i) * power(pow2, g2, e.j)).scaled(c);
  }
  return acc;
}

BiPoly BiPoly::map_coefficients(const Ring& target,
                                const std::function<Coeff(const Coeff&)>& fn) const {
  BiPoly p(target);
  for (const auto& [e, c] : t_) p.add_term(e, fn(c));
  return p;
}

std::string BiPoly::str() const {
  if (t_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  // Highest degree first.
  for (auto it = t_.rbegin(); it != t_.rend(); ++it) {
    const Exp2& e = it->first;
    const Coeff& c = it->second;
    std::string cs = c.str();
    bool composite = c.str_is_composite();
    bool neg = false;
    if (!composite && !cs.empty() && cs[0] == '-') {
      neg = true;
      cs = cs.substr(1);
    }
    if (first) {
      if (neg) os << "-";
      first = false;
    } else {
      os << (neg ? " - " : " + ");
    }
    std::vector<std::string> parts;
    bool coeff_is_one = !composite && cs == "1";
    if (!coeff_is_one || (e.i == 0 && e.j == 0)) {
      parts.push_back(composite ? "(" + cs + ")" : cs);
    }
    auto var = [&](const char* name, int exp) {
      if (exp == 0) return;
      parts.push_back(exp == 1 ? std::string(name)
                               : std::string(name) + "^" + std::to_string(exp));
    };
    var("X", e.i);
    var("Y", e.j);
    for (size_t k = 0; k < parts.size(); ++k) {
      if (k) os << "*";
      os << parts[k];
    }
  }
  return os.str();
}

BiPoly embed_poly(const BiPoly& p) {
  Ring k = fraction_field_of(p.ring());
  if (same_ring(k, p.ring())) return p;
  return p.map_coefficients(k, [](const Coeff& c) { return embed_in_fraction_field(c); });
}

std::optional<FracCoeff> power_proportionality(const BiPoly& h, const BiPoly& g, unsigned e) {
  if (h.is_zero() || g.is_zero()) {
    throw std::invalid_argument("power_proportionality: zero input");
  }
  if (!h.is_homogeneous() || !g.is_homogeneous()) {
    throw std::invalid_argument("power_proportionality: inputs must be homogeneous");
  }
  if (*h.total_degree() != static_cast<int>(e) * *g.total_degree()) {
    throw std::invalid_argument("power_proportionality: degree mismatch");
  }
  BiPoly hk = embed_poly(h);
  BiPoly ge = embed_poly(g).pow(e);
  // Ratio at the leading monomial, then exact verification.
  Exp2 lead = ge.terms().rbegin()->first;
  Coeff hc = hk.coeff(lead.i, lead.j);
  if (hc.is_zero()) return std::nullopt;
  Coeff c = hc * ge.terms().rbegin()->second.inv();
  if (hk != ge.scaled(c)) return std::nullopt;
  return fraction_parts(c);
}

IdealPair extract_ideal_pair(const BiPoly& h1, const BiPoly& h2, const Ring& target) {
  if (h1.is_zero() || h2.is_zero()) {
    throw std::invalid_argument("extract_ideal_pair: zero input");
  }
  if (!h1.is_homogeneous() || !h2.is_homogeneous() ||
      *h1.total_degree() != *h2.total_degree()) {
    throw std::invalid_argument("extract_ideal_pair: inputs must be homogeneous of equal degree");
  }
  auto lambda = power_proportionality(h2, h1, 1);  // h2 == lambda * h1
  if (!lambda) throw std::invalid_argument("extract_ideal_pair: inputs are not proportional");

  // lambda == b / a over the fraction base; move the representative into the
  // target ring. For the cuspidal ring the reduced pair may leave the
  // subring; multiplying both entries by the squared generator fixes that
  // without changing the module class.
  Coeff num = lambda->num, den = lambda->den;
  if (target->kind() == RingKind::CuspidalCubic &&
      (num.as_upoly().coeff(1) != 0 || den.as_upoly().coeff(1) != 0)) {
    Coeff t2 = Coeff::from_upoly(num.ring(), UPoly::monomial(2));
    num = num * t2;
    den = den * t2;
  }
  Coeff a = convert_to_ring(den, target);
  Coeff b = convert_to_ring(num, target);

  IdealPair out{a, b, std::nullopt};
  if (target->traits().is_field) {
    out.common = embed_poly(h1).scaled(embed_in_fraction_field(a).inv());
    return out;
  }
  if (target->traits().has_gcd && same_ring(h1.ring(), target)) {
    // Over a gcd domain the pair is in lowest terms, so a divides h1.
    BiPoly g(target);
    bool exact = true;
    for (const auto& [e, c] : h1.terms()) {
      auto q = exact_div(c, a);
      if (!q) {
        exact = false;
        break;
      }
      g = g + BiPoly::monomial(e.i, e.j, *q);
    }
    if (exact) out.common = g;
  }
  return out;
}

}  // namespace tame2
