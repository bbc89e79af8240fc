#include "tame2/prime.hpp"

#include <sstream>
#include <stdexcept>

#include "tame2/quad_lattice.hpp"

namespace tame2 {

PrimeSpec PrimeSpec::zero_ideal(const Ring& r) {
  PrimeSpec p;
  p.kind_ = Kind::ZeroIdeal;
  p.ring_ = r;
  return p;
}

PrimeSpec PrimeSpec::element(Coeff c) {
  if (!c.valid()) throw std::invalid_argument("PrimeSpec::element: invalid coefficient");
  if (c.is_zero() || is_unit(c)) {
    throw std::invalid_argument("PrimeSpec::element: prime element must be a nonzero nonunit");
  }
  PrimeSpec p;
  p.kind_ = Kind::PrimeElement;
  p.ring_ = c.ring();
  p.gens_.push_back(std::move(c));
  return p;
}

PrimeSpec PrimeSpec::generators(std::vector<Coeff> gens) {
  if (gens.empty()) throw std::invalid_argument("PrimeSpec::generators: empty list");
  for (const Coeff& g : gens) {
    if (!g.valid() || !same_ring(g.ring(), gens.front().ring())) {
      throw std::invalid_argument("PrimeSpec::generators: mixed rings");
    }
  }
  PrimeSpec p;
  p.kind_ = Kind::GeneratorList;
  p.ring_ = gens.front().ring();
  p.gens_ = std::move(gens);
  return p;
}

const Coeff& PrimeSpec::element_value() const {
  if (kind_ != Kind::PrimeElement) throw std::logic_error("PrimeSpec: not a prime element");
  return gens_.front();
}

std::string PrimeSpec::str() const {
  switch (kind_) {
    case Kind::ZeroIdeal:
      return "(0)";
    case Kind::PrimeElement:
      return "(" + gens_.front().str() + ")";
    case Kind::GeneratorList: {
      std::ostringstream os;
      os << "(";
      for (size_t i = 0; i < gens_.size(); ++i) {
        if (i) os << ", ";
        os << gens_[i].str();
      }
      os << ")";
      return os.str();
    }
  }
  return "?";
}

namespace {

[[noreturn]] void unsupported(const PrimeSpec& P) {
  throw std::invalid_argument("prime ideal " + P.str() + " unsupported for ring " +
                              P.ring()->name());
}

std::vector<std::pair<Int, Int>> quad_vectors(const std::vector<Coeff>& gens) {
  std::vector<std::pair<Int, Int>> v;
  for (const Coeff& g : gens) v.emplace_back(g.as_quad().x, g.as_quad().y);
  return v;
}

}  // namespace

CuspPrimeInfo classify_cusp_prime(const PrimeSpec& P) {
  if (P.ring()->kind() != RingKind::CuspidalCubic || P.kind() != PrimeSpec::Kind::GeneratorList) {
    throw std::invalid_argument("classify_cusp_prime: expected a generator-list cuspidal prime");
  }
  bool all_vanish_at_origin = true;
  UPoly g;
  for (const Coeff& c : P.gens()) {
    if (c.as_upoly().coeff(0) != 0) all_vanish_at_origin = false;
    g = upoly_gcd(g, c.as_upoly());
  }
  if (all_vanish_at_origin) return {true, Rat(0)};
  if (g.is_zero() || g.is_constant()) unsupported(P);
  std::vector<Rat> roots = upoly_rational_roots(g);
  std::vector<Rat> nonzero;
  for (const Rat& r : roots) {
    if (r != 0) nonzero.push_back(r);
  }
  if (nonzero.size() != 1) unsupported(P);
  return {false, nonzero.front()};
}

bool in_prime(const Coeff& a, const PrimeSpec& P) {
  if (!same_ring(a.ring(), P.ring())) throw std::invalid_argument("in_prime: ring mismatch");
  switch (P.kind()) {
    case PrimeSpec::Kind::ZeroIdeal:
      return a.is_zero();
    case PrimeSpec::Kind::PrimeElement:
      return divides(P.element_value(), a);
    case PrimeSpec::Kind::GeneratorList:
      break;
  }
  switch (P.ring()->kind()) {
    case RingKind::BivarPoly: {
      std::vector<MPoly2> gens;
      for (const Coeff& g : P.gens()) gens.push_back(g.as_mpoly());
      return ideal_membership(a.as_mpoly(), gens);
    }
    case RingKind::QuadSqrtMinus5: {
      if (a.is_zero()) return true;
      QuadLattice L = ideal_lattice(quad_vectors(P.gens()));
      return L.contains(a.as_quad().x, a.as_quad().y);
    }
    case RingKind::CuspidalCubic: {
      CuspPrimeInfo info = classify_cusp_prime(P);
      if (info.at_cusp) return a.as_upoly().coeff(0) == 0;
      return a.as_upoly().eval(info.point) == 0;
    }
    default:
      unsupported(P);
  }
}

int quad_valuation(const Coeff& a, const PrimeSpec& P) {
  if (P.ring()->kind() != RingKind::QuadSqrtMinus5) {
    throw std::invalid_argument("quad_valuation: wrong ring");
  }
  if (a.is_zero()) throw std::domain_error("quad_valuation: zero element");
  if (P.kind() == PrimeSpec::Kind::PrimeElement) {
    int v = 0;
    Coeff x = a;
    while (auto q = exact_div(x, P.element_value())) {
      x = *q;
      ++v;
    }
    return v;
  }
  // Power membership against the ideal lattice; the norm bounds the answer.
  // After each product the generating set is re-based to the two Hermite
  // basis vectors, which span the same ideal.
  std::vector<std::pair<Int, Int>> pk = quad_vectors(P.gens());
  const std::vector<std::pair<Int, Int>> p1 = pk;
  int v = 0;
  while (true) {
    QuadLattice L = ideal_lattice(pk);
    if (!L.contains(a.as_quad().x, a.as_quad().y)) return v;
    ++v;
    pk = ideal_product_gens({{L.a, L.b}, {Int(0), L.c}}, p1);
    if (v > 20000) throw std::logic_error("quad_valuation: runaway valuation");
  }
}

namespace {

// Valuation of a nonzero K(r5)-element at P.
int quad_valuation_frac(const Coeff& k_elem, const PrimeSpec& P) {
  FracCoeff f = fraction_parts(k_elem);
  return quad_valuation(f.num, P) - quad_valuation(f.den, P);
}

}  // namespace

bool in_local_ring(const Coeff& k_elem, const PrimeSpec& P) {
  const Ring& R = P.ring();
  Ring K = fraction_field_of(R);
  if (!same_ring(k_elem.ring(), K)) {
    throw std::invalid_argument("in_local_ring: element must lie in the fraction field");
  }
  if (P.kind() == PrimeSpec::Kind::ZeroIdeal) return true;
  if (k_elem.is_zero()) return true;

  switch (R->kind()) {
    case RingKind::Integers:
    case RingKind::UnivarPoly:
    case RingKind::BivarPoly: {
      // Reduced fraction over a gcd domain: membership means the denominator
      // avoids the prime.
      FracCoeff f = fraction_parts(k_elem);
      return !in_prime(f.den, P);
    }
    case RingKind::Localized: {
      if (P.kind() != PrimeSpec::Kind::PrimeElement) unsupported(P);
      FracCoeff f = fraction_parts(k_elem);
      // Denominator may carry multiplier factors (units); strip them.
      Coeff d = f.den;
      const Coeff& mult = R->multiplier();
      while (true) {
        Coeff g = ring_gcd(d, mult);
        if (is_unit(g)) break;
        d = *exact_div(d, g);
      }
      return !divides(P.element_value().loc_num(), d);
    }
    case RingKind::QuadSqrtMinus5:
      return quad_valuation_frac(k_elem, P) >= 0;
    case RingKind::CuspidalCubic: {
      if (P.kind() != PrimeSpec::Kind::GeneratorList) unsupported(P);
      CuspPrimeInfo info = classify_cusp_prime(P);
      FracCoeff f = fraction_parts(k_elem);  // reduced over QQ[t]
      const UPoly &n = f.num.as_upoly(), &d = f.den.as_upoly();
      if (info.at_cusp) {
        // No pole at the origin and the local power series has no linear
        // term: n1*d0 == n0*d1.
        if (d.coeff(0) == 0) return false;
        return n.coeff(1) * d.coeff(0) == n.coeff(0) * d.coeff(1);
      }
      return d.eval(info.point) != 0;
    }
    default:
      unsupported(P);
  }
}

}  // namespace tame2
