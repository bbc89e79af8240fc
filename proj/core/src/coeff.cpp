#include "tame2/coeff.hpp"

#include <sstream>
#include <stdexcept>

namespace tame2 {

namespace {

[[noreturn]] void mismatch() { throw std::invalid_argument("coefficient ring mismatch"); }

void require_same(const Coeff& a, const Coeff& b) {
  if (!a.valid() || !b.valid() || !same_ring(a.ring(), b.ring())) mismatch();
}

std::int64_t fp_norm(std::int64_t v, std::int64_t p) {
  v %= p;
  if (v < 0) v += p;
  return v;
}

std::int64_t fp_inv(std::int64_t v, std::int64_t p) {
  ExtGcd e = ext_gcd(Int(v), Int(p));
  if (e.g != 1) throw std::domain_error("prime-field inverse of zero");
  Int s = e.s % p;
  if (s < 0) s += p;
  return static_cast<std::int64_t>(s);
}

}  // namespace

bool Coeff::LocVal::operator==(const LocVal& o) const { return k == o.k && *num == *o.num; }
bool Coeff::FracVal::operator==(const FracVal& o) const {
  return *num == *o.num && *den == *o.den;
}

Coeff make_raw_coeff(Ring r, Coeff::Payload p) { return Coeff(std::move(r), std::move(p)); }

// ---------------------------------------------------------------------------
// construction / canonicalization
// ---------------------------------------------------------------------------

Coeff Coeff::zero(const Ring& r) { return from_int(r, 0); }
Coeff Coeff::one(const Ring& r) { return from_int(r, 1); }

Coeff Coeff::from_int(const Ring& r, const Int& v) {
  if (!r) throw std::invalid_argument("Coeff::from_int: null ring");
  switch (r->kind()) {
    case RingKind::Integers:
      return Coeff(r, v);
    case RingKind::Rationals:
      return Coeff(r, Rat(v));
    case RingKind::PrimeField: {
      Int m = v % r->char_p();
      return Coeff(r, FpVal{fp_norm(static_cast<std::int64_t>(m), r->char_p())});
    }
    case RingKind::UnivarPoly:
    case RingKind::CuspidalCubic:
      return Coeff(r, UPoly(Rat(v)));
    case RingKind::BivarPoly:
      return Coeff(r, MPoly2(Rat(v)));
    case RingKind::QuadSqrtMinus5:
      return Coeff(r, QuadVal{v, 0});
    case RingKind::Localized:
      return localized(r, from_int(r->base(), v), 0);
    case RingKind::FractionField:
      return fraction(r, from_int(r->base(), v), from_int(r->base(), 1));
  }
  throw std::logic_error("Coeff::from_int: unhandled kind");
}

Coeff Coeff::from_rat(const Ring& r, const Rat& v) {
  switch (r->kind()) {
    case RingKind::Rationals:
      return Coeff(r, v);
    case RingKind::PrimeField: {
      Coeff num = from_int(r, rat_num(v));
      Coeff den = from_int(r, rat_den(v));
      return num * den.inv();
    }
    case RingKind::UnivarPoly:
    case RingKind::CuspidalCubic:
      return Coeff(r, UPoly(v));
    case RingKind::BivarPoly:
      return Coeff(r, MPoly2(v));
    case RingKind::FractionField:
      return fraction(r, from_int(r->base(), rat_num(v)), from_int(r->base(), rat_den(v)));
    case RingKind::Integers:
      if (!rat_is_integer(v)) throw std::domain_error("from_rat: not an integer");
      return Coeff(r, rat_num(v));
    default:
      throw std::invalid_argument("Coeff::from_rat: unsupported ring");
  }
}

Coeff Coeff::from_upoly(const Ring& r, UPoly p) {
  if (r->kind() == RingKind::UnivarPoly) return Coeff(r, std::move(p));
  if (r->kind() == RingKind::CuspidalCubic) {
    if (p.coeff(1) != 0) {
      throw std::domain_error("cuspidal ring element must have zero linear coefficient");
    }
    return Coeff(r, std::move(p));
  }
  throw std::invalid_argument("Coeff::from_upoly: not a univariate ring");
}

Coeff Coeff::from_mpoly(const Ring& r, MPoly2 p) {
  if (r->kind() != RingKind::BivarPoly) {
    throw std::invalid_argument("Coeff::from_mpoly: not a bivariate ring");
  }
  return Coeff(r, std::move(p));
}

Coeff Coeff::quad(const Ring& r, Int x, Int y) {
  if (r->kind() != RingKind::QuadSqrtMinus5) {
    throw std::invalid_argument("Coeff::quad: wrong ring");
  }
  return Coeff(r, QuadVal{std::move(x), std::move(y)});
}

Coeff Coeff::localized(const Ring& r, const Coeff& base_num, unsigned k) {
  if (r->kind() != RingKind::Localized) throw std::invalid_argument("Coeff::localized: wrong ring");
  if (!same_ring(base_num.ring(), r->base())) mismatch();
  Coeff num = base_num;
  const Coeff& f = r->multiplier();
  if (num.is_zero()) k = 0;
  while (k > 0) {
    auto q = exact_div(num, f);
    if (!q) break;
    num = *q;
    --k;
  }
  return Coeff(r, LocVal{std::make_shared<const Coeff>(std::move(num)), k});
}

// Deterministic fraction normalization per base kind. See frac_normalize.
Coeff Coeff::fraction(const Ring& field, const Coeff& num, const Coeff& den) {
  if (field->kind() != RingKind::FractionField) {
    throw std::invalid_argument("Coeff::fraction: not a fraction-field ring");
  }
  if (!same_ring(num.ring(), field->base()) || !same_ring(den.ring(), field->base())) mismatch();
  if (den.is_zero()) throw std::domain_error("Coeff::fraction: zero denominator");
  FracCoeff f = frac_normalize(num, den);
  return Coeff(field, FracVal{std::make_shared<const Coeff>(std::move(f.num)),
                              std::make_shared<const Coeff>(std::move(f.den))});
}

// ---------------------------------------------------------------------------
// predicates
// ---------------------------------------------------------------------------

bool Coeff::is_zero() const {
  switch (kind()) {
    case RingKind::Integers:
      return as_int() == 0;
    case RingKind::Rationals:
      return as_rat() == 0;
    case RingKind::PrimeField:
      return fp_value() == 0;
    case RingKind::UnivarPoly:
    case RingKind::CuspidalCubic:
      return as_upoly().is_zero();
    case RingKind::BivarPoly:
      return as_mpoly().is_zero();
    case RingKind::QuadSqrtMinus5:
      return as_quad().x == 0 && as_quad().y == 0;
    case RingKind::Localized:
      return loc_num().is_zero();
    case RingKind::FractionField:
      return frac_num().is_zero();
  }
  return false;
}

bool Coeff::is_one() const { return *this == Coeff::one(ring_); }

bool Coeff::operator==(const Coeff& o) const {
  if (!valid() || !o.valid()) return valid() == o.valid();
  if (!same_ring(ring_, o.ring_)) return false;
  return p_ == o.p_;
}

// ---------------------------------------------------------------------------
// arithmetic
// ---------------------------------------------------------------------------

Coeff Coeff::operator+(const Coeff& o) const {
  require_same(*this, o);
  switch (kind()) {
    case RingKind::Integers:
      return Coeff(ring_, Int(as_int() + o.as_int()));
    case RingKind::Rationals:
      return Coeff(ring_, Rat(as_rat() + o.as_rat()));
    case RingKind::PrimeField:
      return Coeff(ring_, FpVal{fp_norm(fp_value() + o.fp_value(), ring_->char_p())});
    case RingKind::UnivarPoly:
    case RingKind::CuspidalCubic:
      return Coeff(ring_, as_upoly() + o.as_upoly());
    case RingKind::BivarPoly:
      return Coeff(ring_, as_mpoly() + o.as_mpoly());
    case RingKind::QuadSqrtMinus5:
      return Coeff(ring_, QuadVal{as_quad().x + o.as_quad().x, as_quad().y + o.as_quad().y});
    case RingKind::Localized: {
      unsigned k1 = loc_exp(), k2 = o.loc_exp();
      unsigned k = std::max(k1, k2);
      const Coeff& f = ring_->multiplier();
      Coeff n = loc_num() * f.pow(k - k1) + o.loc_num() * f.pow(k - k2);
      return localized(ring_, n, k);
    }
    case RingKind::FractionField: {
      Coeff n = frac_num() * o.frac_den() + o.frac_num() * frac_den();
      Coeff d = frac_den() * o.frac_den();
      return fraction(ring_, n, d);
    }
  }
  throw std::logic_error("Coeff::operator+: unhandled kind");
}

Coeff Coeff::operator-() const {
  switch (kind()) {
    case RingKind::Integers:
      return Coeff(ring_, Int(-as_int()));
    case RingKind::Rationals:
      return Coeff(ring_, Rat(-as_rat()));
    case RingKind::PrimeField:
      return Coeff(ring_, FpVal{fp_norm(-fp_value(), ring_->char_p())});
    case RingKind::UnivarPoly:
    case RingKind::CuspidalCubic:
      return Coeff(ring_, -as_upoly());
    case RingKind::BivarPoly:
      return Coeff(ring_, -as_mpoly());
    case RingKind::QuadSqrtMinus5:
      return Coeff(ring_, QuadVal{-as_quad().x, -as_quad().y});
    case RingKind::Localized:
      return Coeff(ring_, LocVal{std::make_shared<const Coeff>(-loc_num()), loc_exp()});
    case RingKind::FractionField:
      return Coeff(ring_, FracVal{std::make_shared<const Coeff>(-frac_num()),
                                  std::get<FracVal>(p_).den});
  }
  throw std::logic_error("Coeff::operator-: unhandled kind");
}

Coeff Coeff::operator-(const Coeff& o) const { return *this + (-o); }

Coeff Coeff::operator*(const Coeff& o) const {
  require_same(*this, o);
  switch (kind()) {
    case RingKind::Integers:
      return Coeff(ring_, Int(as_int() * o.as_int()));
    case RingKind::Rationals:
      return Coeff(ring_, Rat(as_rat() * o.as_rat()));
    case RingKind::PrimeField:
      return Coeff(ring_, FpVal{fp_norm(fp_value() * o.fp_value(), ring_->char_p())});
    case RingKind::UnivarPoly:
    case RingKind::CuspidalCubic:
      return Coeff(ring_, as_upoly() * o.as_upoly());
    case RingKind::BivarPoly:
      return Coeff(ring_, as_mpoly() * o.as_mpoly());
    case RingKind::QuadSqrtMinus5: {
      const QuadVal &a = as_quad(), &b = o.as_quad();
      return Coeff(ring_, QuadVal{a.x * b.x - 5 * a.y * b.y, a.x * b.y + a.y * b.x});
    }
    case RingKind::Localized:
      return localized(ring_, loc_num() * o.loc_num(), loc_exp() + o.loc_exp());
    case RingKind::FractionField:
      return fraction(ring_, frac_num() * o.frac_num(), frac_den() * o.frac_den());
  }
  throw std::logic_error("Coeff::operator*: unhandled kind");
}

Coeff Coeff::pow(unsigned e) const {
  Coeff result = Coeff::one(ring_), b = *this;
  while (e > 0) {
    if (e & 1u) result = result * b;
    b = b * b;
    e >>= 1u;
  }
  return result;
}

bool is_unit(const Coeff& a) {
  switch (a.kind()) {
    case RingKind::Integers:
      return a.as_int() == 1 || a.as_int() == -1;
    case RingKind::Rationals:
    case RingKind::PrimeField:
    case RingKind::FractionField:
      return !a.is_zero();
    case RingKind::UnivarPoly:
    case RingKind::CuspidalCubic:
      return a.as_upoly().is_constant() && !a.as_upoly().is_zero();
    case RingKind::BivarPoly:
      return a.as_mpoly().is_constant() && !a.as_mpoly().is_zero();
    case RingKind::QuadSqrtMinus5: {
      const auto& q = a.as_quad();
      return q.x * q.x + 5 * q.y * q.y == 1;
    }
    case RingKind::Localized: {
      // Units are base units times divisors of multiplier powers.
      Coeff x = a.loc_num();
      if (x.is_zero()) return false;
      const Coeff& f = a.ring()->multiplier();
      while (!is_unit(x)) {
        Coeff g = ring_gcd(x, f);
        if (is_unit(g)) return false;
        x = *exact_div(x, g);
      }
      return true;
    }
  }
  return false;
}

Coeff Coeff::inv() const {
  if (is_zero()) throw std::domain_error("Coeff::inv: zero element");
  switch (kind()) {
    case RingKind::Rationals:
      return Coeff(ring_, Rat(Rat(1) / as_rat()));
    case RingKind::PrimeField:
      return Coeff(ring_, FpVal{fp_inv(fp_value(), ring_->char_p())});
    case RingKind::FractionField:
      return fraction(ring_, frac_den(), frac_num());
    case RingKind::Integers:
      if (as_int() == 1 || as_int() == -1) return *this;
      break;
    case RingKind::UnivarPoly:
    case RingKind::CuspidalCubic:
      if (is_unit(*this)) {
        return Coeff(ring_, UPoly(Rat(Rat(1) / as_upoly().coeff(0))));
      }
      break;
    case RingKind::BivarPoly:
      if (is_unit(*this)) {
        return Coeff(ring_, MPoly2(Rat(Rat(1) / as_mpoly().coeff({0, 0}))));
      }
      break;
    case RingKind::QuadSqrtMinus5:
      if (is_unit(*this)) return Coeff(ring_, QuadVal{as_quad().x, -as_quad().y});
      break;
    case RingKind::Localized: {
      if (!is_unit(*this)) break;
      // num divides a power of the multiplier: num * q == f^e.
      const Coeff& f = ring_->multiplier();
      Coeff fe = Coeff::one(ring_->base());
      unsigned e = 0;
      while (true) {
        if (auto q = exact_div(fe, loc_num())) {
          Coeff inv_num = *q;  // f^e / num
          // value^{-1} = f^k / num = inv_num * f^k / f^e
          Coeff scaled = inv_num * f.pow(loc_exp());
          return localized(ring_, scaled, e);
        }
        fe = fe * f;
        ++e;
        if (e > 4096) throw std::logic_error("Coeff::inv: multiplier power bound exceeded");
      }
    }
  }
  throw std::domain_error("Coeff::inv: not a unit");
}

// ---------------------------------------------------------------------------
// divisibility and gcd
// ---------------------------------------------------------------------------

std::optional<Coeff> exact_div(const Coeff& a, const Coeff& b) {
  require_same(a, b);
  if (b.is_zero()) throw std::domain_error("exact_div: division by zero");
  switch (a.kind()) {
    case RingKind::Integers: {
      if (a.as_int() % b.as_int() != 0) return std::nullopt;
      return Coeff::from_int(a.ring(), Int(a.as_int() / b.as_int()));
    }
    case RingKind::Rationals:
    case RingKind::PrimeField:
    case RingKind::FractionField:
      return a * b.inv();
    case RingKind::UnivarPoly: {
      auto q = a.as_upoly().exact_div(b.as_upoly());
      if (!q) return std::nullopt;
      return Coeff::from_upoly(a.ring(), *q);
    }
    case RingKind::CuspidalCubic: {
      auto q = a.as_upoly().exact_div(b.as_upoly());
      if (!q || q->coeff(1) != 0) return std::nullopt;
      return Coeff::from_upoly(a.ring(), *q);
    }
    case RingKind::BivarPoly: {
      auto q = a.as_mpoly().exact_div(b.as_mpoly());
      if (!q) return std::nullopt;
      return Coeff::from_mpoly(a.ring(), *q);
    }
    case RingKind::QuadSqrtMinus5: {
      const auto &x = a.as_quad(), &y = b.as_quad();
      Int n = y.x * y.x + 5 * y.y * y.y;
      // a * conj(b) / norm(b)
      Int px = x.x * y.x + 5 * x.y * y.y;
      Int py = x.y * y.x - x.x * y.y;
      if (px % n != 0 || py % n != 0) return std::nullopt;
      return Coeff::quad(a.ring(), Int(px / n), Int(py / n));
    }
    case RingKind::Localized: {
      Coeff q = embed_in_fraction_field(a) * embed_in_fraction_field(b).inv();
      return try_into_ring(q, a.ring());
    }
  }
  return std::nullopt;
}

bool divides(const Coeff& b, const Coeff& a) {
  if (b.is_zero()) return a.is_zero();
  return exact_div(a, b).has_value();
}

Coeff ring_gcd(const Coeff& a, const Coeff& b) {
  require_same(a, b);
  switch (a.kind()) {
    case RingKind::Integers:
      return Coeff::from_int(a.ring(), int_gcd(a.as_int(), b.as_int()));
    case RingKind::Rationals:
    case RingKind::PrimeField:
    case RingKind::FractionField:
      return (a.is_zero() && b.is_zero()) ? a : Coeff::one(a.ring());
    case RingKind::UnivarPoly:
      return Coeff::from_upoly(a.ring(), upoly_gcd(a.as_upoly(), b.as_upoly()));
    case RingKind::BivarPoly:
      return Coeff::from_mpoly(a.ring(), gcd_bivar(a.as_mpoly(), b.as_mpoly()));
    case RingKind::Localized: {
      // gcd of numerators with the multiplier's support removed.
      Coeff g = ring_gcd(a.loc_num(), b.loc_num());
      if (g.is_zero()) return Coeff::zero(a.ring());
      const Coeff& f = a.ring()->multiplier();
      while (true) {
        Coeff d = ring_gcd(g, f);
        if (is_unit(d)) break;
        g = *exact_div(g, d);
      }
      return Coeff::localized(a.ring(), g, 0);
    }
    default:
      throw std::domain_error("ring_gcd: ring has no gcd");
  }
}

CoeffExtGcd ring_ext_gcd(const Coeff& a, const Coeff& b) {
  require_same(a, b);
  switch (a.kind()) {
    case RingKind::Integers: {
      ExtGcd e = ext_gcd(a.as_int(), b.as_int());
      return {Coeff::from_int(a.ring(), e.g), Coeff::from_int(a.ring(), e.s),
              Coeff::from_int(a.ring(), e.t)};
    }
    case RingKind::UnivarPoly: {
      UPolyExtGcd e = upoly_ext_gcd(a.as_upoly(), b.as_upoly());
      return {Coeff::from_upoly(a.ring(), e.g), Coeff::from_upoly(a.ring(), e.s),
              Coeff::from_upoly(a.ring(), e.t)};
    }
    case RingKind::Rationals:
    case RingKind::PrimeField:
    case RingKind::FractionField: {
      if (!a.is_zero()) return {Coeff::one(a.ring()), a.inv(), Coeff::zero(a.ring())};
      if (!b.is_zero()) return {Coeff::one(a.ring()), Coeff::zero(a.ring()), b.inv()};
      return {Coeff::zero(a.ring()), Coeff::zero(a.ring()), Coeff::zero(a.ring())};
    }
    case RingKind::Localized: {
      // Clear multiplier powers (units), run the base extended gcd.
      const Coeff& f = a.ring()->multiplier();
      CoeffExtGcd e = ring_ext_gcd(a.loc_num(), b.loc_num());
      Coeff s = Coeff::localized(a.ring(), e.s * f.pow(a.loc_exp()), 0);
      Coeff t = Coeff::localized(a.ring(), e.t * f.pow(b.loc_exp()), 0);
      return {Coeff::localized(a.ring(), e.g, 0), s, t};
    }
    default:
      throw std::domain_error("ring_ext_gcd: ring has no extended gcd");
  }
}

// ---------------------------------------------------------------------------
// fractions
// ---------------------------------------------------------------------------

std::string FracCoeff::str() const {
  if (is_integral() && den.is_one()) return num.str();
  std::string n = num.str_is_composite() ? "(" + num.str() + ")" : num.str();
  std::string d = den.str_is_composite() ? "(" + den.str() + ")" : den.str();
  return n + "/" + d;
}

FracCoeff frac_normalize(const Coeff& num, const Coeff& den) {
  require_same(num, den);
  if (den.is_zero()) throw std::domain_error("frac_normalize: zero denominator");
  const Ring& r = num.ring();
  if (num.is_zero()) return {Coeff::zero(r), Coeff::one(r)};
  switch (r->kind()) {
    case RingKind::Rationals:
    case RingKind::PrimeField:
    case RingKind::FractionField:
      return {num * den.inv(), Coeff::one(r)};
    case RingKind::Integers: {
      Int g = int_gcd(num.as_int(), den.as_int());
      Int n = num.as_int() / g, d = den.as_int() / g;
      if (d < 0) {
        n = -n;
        d = -d;
      }
      return {Coeff::from_int(r, n), Coeff::from_int(r, d)};
    }
    case RingKind::UnivarPoly: {
      UPoly g = upoly_gcd(num.as_upoly(), den.as_upoly());
      UPoly n = *num.as_upoly().exact_div(g);
      UPoly d = *den.as_upoly().exact_div(g);
      Rat k = Rat(1) / d.lc();
      return {Coeff::from_upoly(r, n.scaled(k)), Coeff::from_upoly(r, d.scaled(k))};
    }
    case RingKind::CuspidalCubic: {
      // Reduce in the normalization; multiply by the square of the generator
      // when the reduced pair leaves the subring.
      UPoly g = upoly_gcd(num.as_upoly(), den.as_upoly());
      UPoly n = *num.as_upoly().exact_div(g);
      UPoly d = *den.as_upoly().exact_div(g);
      Rat k = Rat(1) / d.lc();
      n = n.scaled(k);
      d = d.scaled(k);
      if (n.coeff(1) != 0 || d.coeff(1) != 0) {
        n = n.shifted(2);
        d = d.shifted(2);
      }
      return {Coeff::from_upoly(r, n), Coeff::from_upoly(r, d)};
    }
    case RingKind::BivarPoly: {
      MPoly2 g = gcd_bivar(num.as_mpoly(), den.as_mpoly());
      MPoly2 n = *num.as_mpoly().exact_div(g);
      MPoly2 d = *den.as_mpoly().exact_div(g);
      Rat k = Rat(1) / d.lc_lex();
      return {Coeff::from_mpoly(r, n.scaled(k)), Coeff::from_mpoly(r, d.scaled(k))};
    }
    case RingKind::QuadSqrtMinus5: {
      // Clear the denominator by its conjugate, then cancel integer content.
      const auto& dq = den.as_quad();
      Coeff conj = Coeff::quad(r, dq.x, -dq.y);
      Coeff n = num * conj;
      Int d = dq.x * dq.x + 5 * dq.y * dq.y;
      Int content = int_gcd(int_gcd(n.as_quad().x, n.as_quad().y), d);
      Int nx = n.as_quad().x / content, ny = n.as_quad().y / content;
      Int dd = d / content;
      return {Coeff::quad(r, nx, ny), Coeff::quad(r, dd, 0)};
    }
    case RingKind::Localized: {
      FracCoeff base = frac_normalize(num.loc_num(), den.loc_num());
      const Coeff& f = r->multiplier();
      // Fold the exponent difference into the numerator side.
      unsigned kn = num.loc_exp(), kd = den.loc_exp();
      Coeff n = Coeff::localized(r, base.num * f.pow(kd), kn);
      Coeff d = Coeff::localized(r, base.den, 0);
      return {n, d};
    }
  }
  throw std::logic_error("frac_normalize: unhandled kind");
}

Coeff embed_in_fraction_field(const Coeff& a) {
  Ring k = fraction_field_of(a.ring());
  if (same_ring(k, a.ring())) return a;
  switch (a.kind()) {
    case RingKind::Integers:
      return Coeff::from_rat(k, Rat(a.as_int()));
    case RingKind::UnivarPoly:
    case RingKind::BivarPoly:
    case RingKind::QuadSqrtMinus5:
      return Coeff::fraction(k, a, Coeff::one(a.ring()));
    case RingKind::CuspidalCubic: {
      Ring base = k->base();
      return Coeff::fraction(k, Coeff::from_upoly(base, a.as_upoly()), Coeff::one(base));
    }
    case RingKind::Localized: {
      const Coeff& f = a.ring()->multiplier();
      Coeff den = f.pow(a.loc_exp());
      if (k->kind() == RingKind::Rationals) {
        return Coeff::from_rat(k, make_rat(a.loc_num().as_int(), den.as_int()));
      }
      return Coeff::fraction(k, a.loc_num(), den);
    }
    default:
      throw std::logic_error("embed_in_fraction_field: unhandled kind");
  }
}

FracCoeff fraction_parts(const Coeff& elem) {
  Coeff c = embed_in_fraction_field(elem);
  switch (c.kind()) {
    case RingKind::Rationals: {
      Ring z = RingDescriptor::integers();
      return {Coeff::from_int(z, rat_num(c.as_rat())), Coeff::from_int(z, rat_den(c.as_rat()))};
    }
    case RingKind::PrimeField:
      return {c, Coeff::one(c.ring())};
    case RingKind::FractionField:
      return {c.frac_num(), c.frac_den()};
    default:
      throw std::logic_error("fraction_parts: not a field element");
  }
}

std::optional<Coeff> try_into_ring(const Coeff& elem, const Ring& target) {
  if (same_ring(elem.ring(), target)) return elem;
  Ring k = fraction_field_of(target);
  // Allow elements of the fraction base to be lifted directly.
  if (same_ring(elem.ring(), fraction_base_of(target)) && !same_ring(elem.ring(), k)) {
    switch (target->kind()) {
      case RingKind::Localized:
        return Coeff::localized(target, elem, 0);
      case RingKind::CuspidalCubic:
        if (elem.as_upoly().coeff(1) != 0) return std::nullopt;
        return Coeff::from_upoly(target, elem.as_upoly());
      case RingKind::Rationals:
        return Coeff::from_rat(target, Rat(elem.as_int()));
      case RingKind::FractionField:
        return Coeff::fraction(target, elem, Coeff::one(elem.ring()));
      default:
        return elem;  // fraction base equals the ring itself
    }
  }
  if (!same_ring(elem.ring(), k)) {
    return std::nullopt;
  }
  switch (target->kind()) {
    case RingKind::Rationals:
    case RingKind::PrimeField:
    case RingKind::FractionField:
      return elem;
    case RingKind::Integers:
      if (!rat_is_integer(elem.as_rat())) return std::nullopt;
      return Coeff::from_int(target, rat_num(elem.as_rat()));
    case RingKind::UnivarPoly:
    case RingKind::BivarPoly:
    case RingKind::QuadSqrtMinus5:
      if (!elem.frac_den().is_one()) return std::nullopt;
      return elem.frac_num();
    case RingKind::CuspidalCubic: {
      if (!elem.frac_den().is_one()) return std::nullopt;
      const UPoly& p = elem.frac_num().as_upoly();
      if (p.coeff(1) != 0) return std::nullopt;
      return Coeff::from_upoly(target, p);
    }
    case RingKind::Localized: {
      FracCoeff f = fraction_parts(elem);
      Coeff den = f.den;
      const Coeff& mult = target->multiplier();
      // Denominator must divide a power of the multiplier.
      Coeff fe = Coeff::one(target->base());
      for (unsigned e = 0; e <= 4096; ++e) {
        if (auto q = exact_div(fe, den)) {
          return Coeff::localized(target, f.num * *q, e);
        }
        fe = fe * mult;
        // Early exit: once gcd stops making progress the denominator has a
        // prime outside the multiplier's support.
        if (e == 0) {
          Coeff d = den;
          while (true) {
            Coeff g = ring_gcd(d, mult);
            if (is_unit(g)) break;
            d = *exact_div(d, g);
          }
          if (!is_unit(d)) return std::nullopt;
        }
      }
      return std::nullopt;
    }
  }
  return std::nullopt;
}

Coeff convert_to_ring(const Coeff& a, const Ring& target) {
  auto c = try_into_ring(a, target);
  if (!c) {
    throw std::domain_error("convert_to_ring: element does not lie in " + target->name());
  }
  return *c;
}

// ---------------------------------------------------------------------------
// rendering
// ---------------------------------------------------------------------------

namespace {

std::string quad_str(const Coeff::QuadVal& q) {
  if (q.x == 0 && q.y == 0) return "0";
  std::ostringstream os;
  bool first = true;
  if (q.x != 0) {
    os << q.x.str();
    first = false;
  }
  if (q.y != 0) {
    Int ay = q.y < 0 ? Int(-q.y) : q.y;
    if (first) {
      if (q.y < 0) os << "-";
    } else {
      os << (q.y < 0 ? " - " : " + ");
    }
    if (ay != 1) os << ay.str() << "*";
    os << "r5";
    first = false;
  }
  return os.str();
}

std::string wrap_composite(const Coeff& c) {
  return c.str_is_composite() ? "(" + c.str() + ")" : c.str();
}

}  // namespace

std::string Coeff::str() const {
  switch (kind()) {
    case RingKind::Integers:
      return as_int().str();
    case RingKind::Rationals:
      return rat_str(as_rat());
    case RingKind::PrimeField:
      return std::to_string(fp_value());
    case RingKind::UnivarPoly:
    case RingKind::CuspidalCubic:
      return as_upoly().str(ring_->gen_name(0));
    case RingKind::BivarPoly:
      return as_mpoly().str(ring_->gen_name(0), ring_->gen_name(1));
    case RingKind::QuadSqrtMinus5:
      return quad_str(as_quad());
    case RingKind::Localized: {
      if (loc_exp() == 0) return loc_num().str();
      const Coeff& f = ring_->multiplier();
      std::string s = wrap_composite(loc_num()) + "/" + wrap_composite(f);
      if (loc_exp() > 1) s += "^" + std::to_string(loc_exp());
      return s;
    }
    case RingKind::FractionField: {
      if (frac_den().is_one()) return frac_num().str();
      return wrap_composite(frac_num()) + "/" + wrap_composite(frac_den());
    }
  }
  return "?";
}

bool Coeff::str_is_composite() const {
  std::string s = str();
  int depth = 0;
  for (size_t i = 0; i < s.size(); ++i) {
    char ch = s[i];
    if (ch == '(') ++depth;
    if (ch == ')') --depth;
    if (depth == 0 && i > 0 && (ch == '+' || ch == '-')) return true;
  }
  return false;
}

}  // namespace tame2
