#include "tame2/autmap.hpp"

#include <sstream>
#include <stdexcept>

namespace tame2 {

PolyMap::PolyMap(BiPoly f1, BiPoly f2) : f1_(std::move(f1)), f2_(std::move(f2)) {
  if (!same_ring(f1_.ring(), f2_.ring())) {
    throw std::invalid_argument("PolyMap: components over different rings");
  }
}

PolyMap PolyMap::identity(const Ring& r) { return PolyMap(BiPoly::var_x(r), BiPoly::var_y(r)); }

std::string PolyMap::str() const { return "(" + f1_.str() + ", " + f2_.str() + ")"; }

PolyMap compose(const PolyMap& f, const PolyMap& g) {
  if (!same_ring(f.ring(), g.ring())) throw std::invalid_argument("compose: ring mismatch");
  return PolyMap(f.f1().substitute(g.f1(), g.f2()), f.f2().substitute(g.f1(), g.f2()));
}

bool is_identity(const PolyMap& f) { return f == PolyMap::identity(f.ring()); }

DegVec deg_vec(const PolyMap& f) {
  auto d1 = f.f1().total_degree(), d2 = f.f2().total_degree();
  if (!d1 || !d2 || *d1 == 0 || *d2 == 0) {
    throw std::domain_error("deg_vec: constant component");
  }
  return {*d1, *d2};
}

AffineFactor make_affine(Ring ring, std::array<Coeff, 4> m, std::array<Coeff, 2> t) {
  AffineFactor f{std::move(ring), std::move(m), std::move(t)};
  for (const Coeff& c : f.m) {
    if (!same_ring(c.ring(), f.ring)) throw std::invalid_argument("make_affine: ring mismatch");
  }
  for (const Coeff& c : f.t) {
    if (!same_ring(c.ring(), f.ring)) throw std::invalid_argument("make_affine: ring mismatch");
  }
  if (!is_unit(f.det())) {
    throw std::domain_error("make_affine: determinant " + f.det().str() + " is not a unit");
  }
  return f;
}

ElementaryFactor make_elementary(Ring ring, int axis, std::vector<Coeff> p) {
  if (axis != 1 && axis != 2) throw std::invalid_argument("make_elementary: axis must be 1 or 2");
  while (!p.empty() && p.back().is_zero()) p.pop_back();
  if (!p.empty() && p.size() <= 2) {
    throw std::domain_error("make_elementary: degree <= 1 content belongs to affine factors");
  }
  for (const Coeff& c : p) {
    if (!same_ring(c.ring(), ring)) throw std::invalid_argument("make_elementary: ring mismatch");
  }
  return ElementaryFactor{std::move(ring), axis, std::move(p)};
}

const Ring& factor_ring(const Factor& f) {
  return std::visit([](const auto& x) -> const Ring& { return x.ring; }, f);
}

namespace {

BiPoly eval_poly_at(const std::vector<Coeff>& p, const BiPoly& arg, const Ring& r) {
  BiPoly acc(r);
  for (size_t i = p.size(); i-- > 0;) {
    acc = acc * arg + BiPoly::constant(p[i]);
  }
  return acc;
}

}  // namespace

PolyMap factor_to_map(const Factor& f) {
  if (const auto* a = std::get_if<AffineFactor>(&f)) {
    const Ring& r = a->ring;
    BiPoly x = BiPoly::var_x(r), y = BiPoly::var_y(r);
    BiPoly f1 = x.scaled(a->m[0]) + y.scaled(a->m[1]) + BiPoly::constant(a->t[0]);
    BiPoly f2 = x.scaled(a->m[2]) + y.scaled(a->m[3]) + BiPoly::constant(a->t[1]);
    return PolyMap(std::move(f1), std::move(f2));
  }
  const auto& e = std::get<ElementaryFactor>(f);
  const Ring& r = e.ring;
  BiPoly x = BiPoly::var_x(r), y = BiPoly::var_y(r);
  if (e.axis == 1) return PolyMap(x + eval_poly_at(e.p, y, r), y);
  return PolyMap(x, y + eval_poly_at(e.p, x, r));
}

Factor factor_inverse(const Factor& f) {
  if (const auto* a = std::get_if<AffineFactor>(&f)) {
    // Adjugate over the unit determinant, then the translation pulls back.
    Coeff di = a->det().inv();
    std::array<Coeff, 4> m{a->m[3] * di, -a->m[1] * di, -a->m[2] * di, a->m[0] * di};
    std::array<Coeff, 2> t{-(m[0] * a->t[0] + m[1] * a->t[1]),
                           -(m[2] * a->t[0] + m[3] * a->t[1])};
    return make_affine(a->ring, std::move(m), std::move(t));
  }
  const auto& e = std::get<ElementaryFactor>(f);
  std::vector<Coeff> q;
  q.reserve(e.p.size());
  for (const Coeff& c : e.p) q.push_back(-c);
  return ElementaryFactor{e.ring, e.axis, std::move(q)};
}

bool factor_valid(const Factor& f) {
  if (const auto* a = std::get_if<AffineFactor>(&f)) return is_unit(a->det());
  const auto& e = std::get<ElementaryFactor>(f);
  if (e.axis != 1 && e.axis != 2) return false;
  if (e.p.empty()) return true;
  return e.p.size() > 2 && !e.p.back().is_zero();
}

Factor factor_convert(const Factor& f, const Ring& target) {
  auto conv = [&](const Coeff& c) { return convert_to_ring(embed_in_fraction_field(c), target); };
  if (const auto* a = std::get_if<AffineFactor>(&f)) {
    return make_affine(target, {conv(a->m[0]), conv(a->m[1]), conv(a->m[2]), conv(a->m[3])},
                       {conv(a->t[0]), conv(a->t[1])});
  }
  const auto& e = std::get<ElementaryFactor>(f);
  std::vector<Coeff> p;
  p.reserve(e.p.size());
  for (const Coeff& c : e.p) p.push_back(conv(c));
  return ElementaryFactor{target, e.axis, std::move(p)};
}

std::string factor_str(const Factor& f) {
  std::ostringstream os;
  if (const auto* a = std::get_if<AffineFactor>(&f)) {
    os << "affine [[" << a->m[0].str() << ", " << a->m[1].str() << "], [" << a->m[2].str()
       << ", " << a->m[3].str() << "]] + (" << a->t[0].str() << ", " << a->t[1].str() << ")";
  } else {
    const auto& e = std::get<ElementaryFactor>(f);
    os << "elementary axis " << e.axis << " " << factor_to_map(f).str();
  }
  return os.str();
}

Decomposition::Decomposition(std::vector<Factor> factors, PolyMap certified)
    : factors_(std::move(factors)), certified_(std::move(certified)) {}

PolyMap Decomposition::compose_all() const {
  PolyMap acc = PolyMap::identity(certified_.ring());
  bool started = false;
  for (const Factor& f : factors_) {
    PolyMap m = factor_to_map(f);
    if (!same_ring(m.ring(), certified_.ring())) {
      m = PolyMap(m.f1().map_coefficients(certified_.ring(),
                                          [&](const Coeff& c) {
                                            return convert_to_ring(embed_in_fraction_field(c),
                                                                   certified_.ring());
                                          }),
                  m.f2().map_coefficients(certified_.ring(), [&](const Coeff& c) {
                    return convert_to_ring(embed_in_fraction_field(c), certified_.ring());
                  }));
    }
    acc = started ? compose(acc, m) : m;
    started = true;
  }
  return acc;
}

bool Decomposition::verify() const {
  for (const Factor& f : factors_) {
    if (!factor_valid(f)) return false;
  }
  return compose_all() == certified_;
}

}  // namespace tame2
