#include "tame2/mpoly2.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace tame2 {

MPoly2::MPoly2(const Rat& constant) {
  if (constant != 0) t_[{0, 0}] = constant;
}

MPoly2 MPoly2::monomial(Mon2 m, const Rat& c) {
  MPoly2 p;
  if (c != 0) p.t_[m] = c;
  return p;
}

MPoly2 MPoly2::gen(int which) {
  if (which != 0 && which != 1) throw std::invalid_argument("MPoly2::gen: index out of range");
  return monomial(which == 0 ? Mon2{1, 0} : Mon2{0, 1});
}

MPoly2 mpoly2_from_terms(MPoly2::Terms t) {
  MPoly2 p;
  for (auto& [m, c] : t) {
    if (c != 0) p.t_.emplace(m, std::move(c));
  }
  return p;
}

bool MPoly2::is_constant() const {
  return t_.empty() || (t_.size() == 1 && t_.begin()->first == Mon2{0, 0});
}

int MPoly2::total_degree() const {
  if (t_.empty()) return -1;
  return t_.rbegin()->first.deg();
}

Rat MPoly2::coeff(Mon2 m) const {
  auto it = t_.find(m);
  return it == t_.end() ? Rat(0) : it->second;
}

Mon2 MPoly2::lm() const {
  if (t_.empty()) throw std::domain_error("MPoly2::lm: zero polynomial");
  return t_.rbegin()->first;
}

const Rat& MPoly2::lc() const {
  if (t_.empty()) throw std::domain_error("MPoly2::lc: zero polynomial");
  return t_.rbegin()->second;
}

Rat MPoly2::lc_lex() const {
  if (t_.empty()) throw std::domain_error("MPoly2::lc_lex: zero polynomial");
  auto best = t_.begin();
  for (auto it = t_.begin(); it != t_.end(); ++it) {
    if (it->first.a > best->first.a ||
        (it->first.a == best->first.a && it->first.b > best->first.b)) {
      best = it;
    }
  }
  return best->second;
}

void MPoly2::add_term(Mon2 m, const Rat& c) {
  if (c == 0) return;
  auto [it, inserted] = t_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) t_.erase(it);
  }
}

MPoly2 MPoly2::operator+(const MPoly2& o) const {
  MPoly2 r = *this;
  for (const auto& [m, c] : o.t_) r.add_term(m, c);
  return r;
}

MPoly2 MPoly2::operator-(const MPoly2& o) const {
  MPoly2 r = *this;
  for (const auto& [m, c] : o.t_) r.add_term(m, -c);
  return r;
}

MPoly2 MPoly2::operator-() const {
  MPoly2 r;
  for (const auto& [m, c] : t_) r.t_[m] = -c;
  return r;
}

MPoly2 MPoly2::operator*(const MPoly2& o) const {
  MPoly2 r;
  for (const auto& [m1, c1] : t_) {
    for (const auto& [m2, c2] : o.t_) {
      r.add_term({m1.a + m2.a, m1.b + m2.b}, c1 * c2);
    }
  }
  return r;
}

MPoly2 MPoly2::scaled(const Rat& k) const {
  MPoly2 r;
  if (k == 0) return r;
  for (const auto& [m, c] : t_) r.t_[m] = c * k;
  return r;
}

MPoly2 MPoly2::mul_monomial(Mon2 m, const Rat& c) const {
  MPoly2 r;
  if (c == 0) return r;
  for (const auto& [m1, c1] : t_) r.t_[{m1.a + m.a, m1.b + m.b}] = c1 * c;
  return r;
}

MPoly2 MPoly2::pow(unsigned e) const {
  MPoly2 result(Rat(1)), b = *this;
  while (e > 0) {
    if (e & 1u) result = result * b;
    b = b * b;
    e >>= 1u;
  }
  return result;
}

std::optional<MPoly2> MPoly2::exact_div(const MPoly2& d) const {
  if (d.is_zero()) throw std::domain_error("MPoly2::exact_div: division by zero");
  MPoly2 r = *this, q;
  while (!r.is_zero()) {
    Mon2 lmr = r.lm(), lmd = d.lm();
    if (!lmd.divides(lmr)) return std::nullopt;
    Mon2 m{lmr.a - lmd.a, lmr.b - lmd.b};
    Rat c = r.lc() / d.lc();
    q.add_term(m, c);
    r = r - d.mul_monomial(m, c);
  }
  return q;
}

std::string MPoly2::str(const std::string& g1, const std::string& g2) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = t_.rbegin(); it != t_.rend(); ++it) {
    const Mon2& m = it->first;
    Rat c = it->second;
    bool neg = c < 0;
    Rat a = neg ? Rat(-c) : c;
    if (first) {
      if (neg) os << "-";
      first = false;
    } else {
      os << (neg ? " - " : " + ");
    }
    std::vector<std::string> parts;
    if (a != 1 || (m.a == 0 && m.b == 0)) parts.push_back(rat_str(a));
    auto var = [&](const std::string& name, int e) {
      if (e == 0) return;
      parts.push_back(e == 1 ? name : name + "^" + std::to_string(e));
    };
    var(g1, m.a);
    var(g2, m.b);
    for (size_t i = 0; i < parts.size(); ++i) {
      if (i) os << "*";
      os << parts[i];
    }
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// gcd via content / primitive-part recursion
// ---------------------------------------------------------------------------

namespace {

// Recursive view: coefficient of the second generator's k-th power is a
// univariate polynomial in the first generator.
using RecPoly = std::vector<UPoly>;

RecPoly to_rec(const MPoly2& p) {
  RecPoly r;
  for (const auto& [m, c] : p.terms()) {
    if (static_cast<int>(r.size()) <= m.b) r.resize(static_cast<size_t>(m.b) + 1);
    r[static_cast<size_t>(m.b)] = r[static_cast<size_t>(m.b)] + UPoly::monomial(m.a, c);
  }
  while (!r.empty() && r.back().is_zero()) r.pop_back();
  return r;
}

MPoly2 from_rec(const RecPoly& r) {
  MPoly2::Terms t;
  for (size_t k = 0; k < r.size(); ++k) {
    for (int i = 0; i <= r[k].degree(); ++i) {
      Rat c = r[k].coeff(i);
      if (c != 0) t[{i, static_cast<int>(k)}] = c;
    }
  }
  return mpoly2_from_terms(std::move(t));
}

int rec_deg(const RecPoly& r) { return static_cast<int>(r.size()) - 1; }

bool rec_is_zero(const RecPoly& r) { return r.empty(); }

void rec_trim(RecPoly& r) {
  while (!r.empty() && r.back().is_zero()) r.pop_back();
}

RecPoly rec_sub(const RecPoly& x, const RecPoly& y) {
  RecPoly r(std::max(x.size(), y.size()));
  for (size_t i = 0; i < r.size(); ++i) {
    UPoly a = i < x.size() ? x[i] : UPoly();
    UPoly b = i < y.size() ? y[i] : UPoly();
    r[i] = a - b;
  }
  rec_trim(r);
  return r;
}

RecPoly rec_scale(const RecPoly& x, const UPoly& k) {
  RecPoly r(x.size());
  for (size_t i = 0; i < x.size(); ++i) r[i] = x[i] * k;
  rec_trim(r);
  return r;
}

RecPoly rec_shift(const RecPoly& x, int k) {
  RecPoly r(static_cast<size_t>(k), UPoly());
  r.insert(r.end(), x.begin(), x.end());
  return r;
}

UPoly rec_content(const RecPoly& x) {
  UPoly g;
  for (const UPoly& c : x) g = upoly_gcd(g, c);
  return g;
}

RecPoly rec_div_upoly(const RecPoly& x, const UPoly& d) {
  RecPoly r(x.size());
  for (size_t i = 0; i < x.size(); ++i) {
    if (x[i].is_zero()) continue;
    auto q = x[i].exact_div(d);
    if (!q) throw std::logic_error("rec_div_upoly: inexact division");
    r[i] = *q;
  }
  rec_trim(r);
  return r;
}

RecPoly rec_primitive(const RecPoly& x) {
  if (rec_is_zero(x)) return x;
  return rec_div_upoly(x, rec_content(x));
}

// Pseudo-remainder of x by y in the second generator; the result is a
// polynomial multiple of the true remainder, which suffices since the caller
// takes primitive parts.
RecPoly rec_prem(RecPoly x, const RecPoly& y) {
  const UPoly d = y.back();
  while (!rec_is_zero(x) && rec_deg(x) >= rec_deg(y)) {
    UPoly lx = x.back();
    int shift = rec_deg(x) - rec_deg(y);
    x = rec_sub(rec_scale(x, d), rec_shift(rec_scale(y, lx), shift));
  }
  return x;
}

MPoly2 normalize_grevlex_monic(const MPoly2& p) {
  if (p.is_zero()) return p;
  return p.scaled(Rat(1) / p.lc());
}

}  // namespace

MPoly2 gcd_bivar(const MPoly2& a, const MPoly2& b) {
  if (a.is_zero() && b.is_zero()) return MPoly2();
  if (a.is_zero()) return normalize_grevlex_monic(b);
  if (b.is_zero()) return normalize_grevlex_monic(a);

  RecPoly ra = to_rec(a), rb = to_rec(b);
  UPoly ca = rec_content(ra), cb = rec_content(rb);
  UPoly cont_g = upoly_gcd(ca, cb);
  RecPoly pa = rec_div_upoly(ra, ca), pb = rec_div_upoly(rb, cb);

  if (rec_deg(pa) < rec_deg(pb)) std::swap(pa, pb);
  // Primitive remainder sequence in the second generator.
  while (rec_deg(pb) > 0) {
    RecPoly r = rec_prem(pa, pb);
    if (rec_is_zero(r)) {
      RecPoly g = rec_scale(pb, cont_g);
      return normalize_grevlex_monic(from_rec(g));
    }
    pa = pb;
    pb = rec_primitive(r);
  }
  // Coprime primitive parts: the gcd is the content gcd.
  MPoly2 g = from_rec(RecPoly{cont_g});
  return normalize_grevlex_monic(g);
}

// ---------------------------------------------------------------------------
// Buchberger with cofactor tracking
// ---------------------------------------------------------------------------

namespace {

struct DivisionResult {
  MPoly2 remainder;
  std::vector<MPoly2> quotients;  // aligned with the divisor list
};

DivisionResult divide_tracked(const MPoly2& f, const std::vector<MPoly2>& divisors) {
  DivisionResult res;
  res.quotients.assign(divisors.size(), MPoly2());
  MPoly2 p = f;
  MPoly2::Terms rem;
  while (!p.is_zero()) {
    Mon2 lmp = p.lm();
    bool divided = false;
    for (size_t i = 0; i < divisors.size(); ++i) {
      if (divisors[i].is_zero()) continue;
      Mon2 lmd = divisors[i].lm();
      if (lmd.divides(lmp)) {
        Mon2 m{lmp.a - lmd.a, lmp.b - lmd.b};
        Rat c = p.lc() / divisors[i].lc();
        res.quotients[i] = res.quotients[i] + MPoly2::monomial(m, c);
        p = p - divisors[i].mul_monomial(m, c);
        divided = true;
        break;
      }
    }
    if (!divided) {
      rem[lmp] = p.lc();
      p = p - MPoly2::monomial(lmp, p.lc());
    }
  }
  res.remainder = mpoly2_from_terms(std::move(rem));
  return res;
}

TrackedPoly reduce_tracked(const TrackedPoly& f, const std::vector<TrackedPoly>& basis) {
  std::vector<MPoly2> gs;
  gs.reserve(basis.size());
  for (const auto& e : basis) gs.push_back(e.g);
  DivisionResult d = divide_tracked(f.g, gs);
  TrackedPoly r{d.remainder, f.u, f.v};
  for (size_t i = 0; i < basis.size(); ++i) {
    r.u = r.u - d.quotients[i] * basis[i].u;
    r.v = r.v - d.quotients[i] * basis[i].v;
  }
  return r;
}

TrackedPoly normalize_tracked(const TrackedPoly& f) {
  Rat k = Rat(1) / f.g.lc();
  return {f.g.scaled(k), f.u.scaled(k), f.v.scaled(k)};
}

}  // namespace

std::vector<TrackedPoly> buchberger_pair(const MPoly2& a, const MPoly2& b) {
  if (a.is_zero() && b.is_zero()) throw std::invalid_argument("buchberger_pair: zero ideal");
  std::vector<TrackedPoly> basis;
  if (!a.is_zero()) basis.push_back(normalize_tracked({a, MPoly2(Rat(1)), MPoly2()}));
  if (!b.is_zero()) basis.push_back(normalize_tracked({b, MPoly2(), MPoly2(Rat(1))}));

  std::vector<std::pair<size_t, size_t>> pairs;
  for (size_t i = 0; i < basis.size(); ++i)
    for (size_t j = i + 1; j < basis.size(); ++j) pairs.emplace_back(i, j);

  while (!pairs.empty()) {
    auto [i, j] = pairs.back();
    pairs.pop_back();
    Mon2 mi = basis[i].g.lm(), mj = basis[j].g.lm();
    Mon2 lcm{std::max(mi.a, mj.a), std::max(mi.b, mj.b)};
    TrackedPoly s;
    Mon2 fi{lcm.a - mi.a, lcm.b - mi.b}, fj{lcm.a - mj.a, lcm.b - mj.b};
    Rat ci = Rat(1) / basis[i].g.lc(), cj = Rat(1) / basis[j].g.lc();
    s.g = basis[i].g.mul_monomial(fi, ci) - basis[j].g.mul_monomial(fj, cj);
    s.u = basis[i].u.mul_monomial(fi, ci) - basis[j].u.mul_monomial(fj, cj);
    s.v = basis[i].v.mul_monomial(fi, ci) - basis[j].v.mul_monomial(fj, cj);
    TrackedPoly r = reduce_tracked(s, basis);
    if (!r.g.is_zero()) {
      basis.push_back(normalize_tracked(r));
      for (size_t k = 0; k + 1 < basis.size(); ++k) pairs.emplace_back(k, basis.size() - 1);
    }
  }

  // Minimalize: drop elements whose leading monomial is divisible by another's.
  std::vector<TrackedPoly> minimal;
  for (size_t i = 0; i < basis.size(); ++i) {
    bool redundant = false;
    for (size_t j = 0; j < basis.size(); ++j) {
      if (i == j) continue;
      if (basis[j].g.lm().divides(basis[i].g.lm()) &&
          !(basis[i].g.lm() == basis[j].g.lm() && i < j)) {
        redundant = true;
        break;
      }
    }
    if (!redundant) minimal.push_back(basis[i]);
  }

  // Tail-reduce each element against the others.
  std::vector<TrackedPoly> reduced;
  for (size_t i = 0; i < minimal.size(); ++i) {
    std::vector<TrackedPoly> others;
    for (size_t j = 0; j < minimal.size(); ++j) {
      if (j != i) others.push_back(minimal[j]);
    }
    TrackedPoly r = reduce_tracked(minimal[i], others);
    reduced.push_back(normalize_tracked(r));
  }
  std::sort(reduced.begin(), reduced.end(), [](const TrackedPoly& x, const TrackedPoly& y) {
    return GrevlexLess{}(x.g.lm(), y.g.lm());
  });
  return reduced;
}

std::optional<UnitIdealCofactors> unit_ideal_cofactors(const MPoly2& a, const MPoly2& b) {
  auto basis = buchberger_pair(a, b);
  if (basis.size() == 1 && basis[0].g == MPoly2(Rat(1))) {
    return UnitIdealCofactors{basis[0].u, basis[0].v};
  }
  return std::nullopt;
}

bool ideal_membership(const MPoly2& g, const std::vector<MPoly2>& gens) {
  if (gens.empty()) throw std::invalid_argument("ideal_membership: empty generator list");
  if (g.is_zero()) return true;
  // Untracked Buchberger over the full list.
  std::vector<MPoly2> basis;
  for (const auto& f : gens) {
    if (!f.is_zero()) basis.push_back(f.scaled(Rat(1) / f.lc()));
  }
  if (basis.empty()) return false;
  std::vector<std::pair<size_t, size_t>> pairs;
  for (size_t i = 0; i < basis.size(); ++i)
    for (size_t j = i + 1; j < basis.size(); ++j) pairs.emplace_back(i, j);
  while (!pairs.empty()) {
    auto [i, j] = pairs.back();
    pairs.pop_back();
    Mon2 mi = basis[i].lm(), mj = basis[j].lm();
    Mon2 lcm{std::max(mi.a, mj.a), std::max(mi.b, mj.b)};
    MPoly2 s = basis[i].mul_monomial({lcm.a - mi.a, lcm.b - mi.b}, Rat(1) / basis[i].lc()) -
               basis[j].mul_monomial({lcm.a - mj.a, lcm.b - mj.b}, Rat(1) / basis[j].lc());
    MPoly2 r = divide_tracked(s, basis).remainder;
    if (!r.is_zero()) {
      basis.push_back(r.scaled(Rat(1) / r.lc()));
      for (size_t k = 0; k + 1 < basis.size(); ++k) pairs.emplace_back(k, basis.size() - 1);
    }
  }
  return divide_tracked(g, basis).remainder.is_zero();
}

std::optional<UnitIdealCofactors> pair_membership_cofactors(const MPoly2& g, const MPoly2& a,
                                                            const MPoly2& b) {
  auto basis = buchberger_pair(a, b);
  std::vector<MPoly2> gs;
  gs.reserve(basis.size());
  for (const auto& e : basis) gs.push_back(e.g);
  DivisionResult d = divide_tracked(g, gs);
  if (!d.remainder.is_zero()) return std::nullopt;
  MPoly2 u, v;
  for (size_t i = 0; i < basis.size(); ++i) {
    u = u + d.quotients[i] * basis[i].u;
    v = v + d.quotients[i] * basis[i].v;
  }
  return UnitIdealCofactors{u, v};
}

MPoly2 reduce_by_basis(const MPoly2& g, const std::vector<MPoly2>& basis) {
  return divide_tracked(g, basis).remainder;
}

}  // namespace tame2
