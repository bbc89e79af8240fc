#include "tame2/gallery.hpp"

#include <set>
#include <stdexcept>

namespace tame2 {

PolyMap nagata_map(const Ring& r, const Coeff& z) {
  if (!same_ring(z.ring(), r)) throw std::invalid_argument("nagata_map: ring mismatch");
  BiPoly x = BiPoly::var_x(r), y = BiPoly::var_y(r);
  BiPoly inner = x.scaled(z) + y * y;  // zX + Y^2
  BiPoly f1 = x - (y * inner).scaled(Coeff::from_int(r, 2)) - (inner * inner).scaled(z);
  BiPoly f2 = y + inner.scaled(z);
  return PolyMap(std::move(f1), std::move(f2));
}

IdealShear ideal_shear(const IdealShearSpec& spec) {
  const Ring& r = spec.ring;
  if (!same_ring(spec.z.ring(), r) || !same_ring(spec.w.ring(), r)) {
    throw std::invalid_argument("ideal_shear: ring mismatch");
  }
  if (spec.z.is_zero() && spec.w.is_zero()) {
    throw std::invalid_argument("ideal_shear: the pair (z, w) must be nonzero");
  }
  std::vector<Coeff> q = spec.q;
  while (!q.empty() && q.back().is_zero()) q.pop_back();
  if (q.size() < 3) throw std::invalid_argument("ideal_shear: q must have degree at least 2");

  BiPoly x = BiPoly::var_x(r), y = BiPoly::var_y(r);
  BiPoly form = x.scaled(spec.z) + y.scaled(spec.w);  // zX + wY
  BiPoly shear(r);
  for (size_t i = q.size(); i-- > 0;) {
    shear = shear * form + BiPoly::constant(q[i]);
  }
  PolyMap forward(x + shear.scaled(spec.w), y - shear.scaled(spec.z));
  PolyMap inverse(x - shear.scaled(spec.w), y + shear.scaled(spec.z));
  if (!is_identity(compose(forward, inverse)) || !is_identity(compose(inverse, forward))) {
    throw std::logic_error("ideal_shear: inverse check failed");
  }
  return {std::move(forward), std::move(inverse)};
}

std::pair<Coeff, Coeff> cusp_point_ideal(const Rat& a) {
  Ring r = RingDescriptor::cuspidal_cubic();
  Rat a2 = a * a, a3 = a2 * a;
  Coeff z = Coeff::from_upoly(r, UPoly(std::vector<Rat>{-a2, Rat(0), Rat(1)}));
  Coeff w = Coeff::from_upoly(r, UPoly(std::vector<Rat>{-a3, Rat(0), Rat(0), Rat(1)}));
  return {std::move(z), std::move(w)};
}

TameVerdict tame_over_normalization(const PolyMap& f) {
  if (f.ring()->kind() != RingKind::CuspidalCubic) {
    throw std::invalid_argument("tame_over_normalization: expected cuspidal coefficients");
  }
  Ring qt = RingDescriptor::univar(f.ring()->gen_name(0));
  auto lift = [&](const Coeff& c) { return Coeff::from_upoly(qt, c.as_upoly()); };
  PolyMap lifted(f.f1().map_coefficients(qt, lift), f.f2().map_coefficients(qt, lift));
  return decide_tame(lifted, qt);
}

namespace {

Int quad_norm(const Coeff& c) {
  const auto& q = c.as_quad();
  return q.x * q.x + 5 * q.y * q.y;
}

// Index of the ideal (a, b) in ZZ[r5] computed without Hermite forms: the
// ideal contains M = gcd(N(a), N(b)) times the full lattice, so the index is
// M^2 over the size of the subgroup the generators span modulo M.
std::optional<Int> quad_index_by_counting(const Coeff& a, const Coeff& b) {
  Int M = int_gcd(quad_norm(a), quad_norm(b));
  if (M == 0) return std::nullopt;
  if (M > 4096) return std::nullopt;  // counting bound
  long m = static_cast<long>(M);
  auto idx = [m](long x, long y) { return static_cast<size_t>(x * m + y); };
  std::vector<char> seen(static_cast<size_t>(m) * static_cast<size_t>(m), 0);
  std::vector<std::pair<long, long>> queue;
  auto push = [&](long x, long y) {
    x %= m;
    y %= m;
    if (x < 0) x += m;
    if (y < 0) y += m;
    if (!seen[idx(x, y)]) {
      seen[idx(x, y)] = 1;
      queue.emplace_back(x, y);
    }
  };
  std::vector<std::pair<long, long>> gens;
  for (const Coeff* c : {&a, &b}) {
    long x = static_cast<long>(c->as_quad().x % M), y = static_cast<long>(c->as_quad().y % M);
    gens.emplace_back(x, y);
    gens.emplace_back(-5 * y, x);
  }
  push(0, 0);
  for (size_t i = 0; i < queue.size(); ++i) {
    auto [x, y] = queue[i];
    for (const auto& [gx, gy] : gens) push(x + gx, y + gy);
  }
  Int subgroup = Int(static_cast<long>(queue.size()));
  return M * M / subgroup;
}

ModuleVerdict brute_force_int(const Coeff& a, const Coeff& b, unsigned bound) {
  const Ring& r = a.ring();
  long B = static_cast<long>(bound);
  Int best = 0;
  long best_s = 0, best_t = 0;
  for (long s = -B; s <= B; ++s) {
    for (long t = -B; t <= B; ++t) {
      Int v = s * a.as_int() + t * b.as_int();
      if (v > 0 && (best == 0 || v < best)) {
        best = v;
        best_s = s;
        best_t = t;
      }
    }
  }
  if (best == 0) return ModuleVerdict::unknown("no positive combination within the bound");
  if (a.as_int() % best != 0 || b.as_int() % best != 0) {
    return ModuleVerdict::unknown("smallest combination within the bound is not a common divisor");
  }
  Coeff g = Coeff::from_int(r, best);
  return ModuleVerdict::principal({g, Coeff::from_int(r, Int(a.as_int() / best)),
                                   Coeff::from_int(r, Int(b.as_int() / best)),
                                   Coeff::from_int(r, best_s), Coeff::from_int(r, best_t)});
}

ModuleVerdict brute_force_quad(const Coeff& a, const Coeff& b, unsigned bound) {
  const Ring& r = a.ring();
  auto index = quad_index_by_counting(a, b);
  if (!index) return ModuleVerdict::unknown("ideal index not computable within counting bound");
  Int NI = *index;
  if (NI > Int(static_cast<long>(bound))) {
    return ModuleVerdict::unknown("ideal norm exceeds the search bound");
  }
  // A generator is exactly a common divisor of norm equal to the ideal norm.
  Int ymax = int_sqrt(Int(NI / 5));
  for (Int y = -ymax; y <= ymax; ++y) {
    Int rest = NI - 5 * y * y;
    Int x = int_sqrt(rest);
    if (x * x != rest) continue;
    for (int sx = 1; sx >= -1; sx -= 2) {
      if (sx < 0 && x == 0) break;
      Coeff g = Coeff::quad(r, sx * x, y);
      if (!divides(g, a) || !divides(g, b)) continue;
      Coeff a0 = *exact_div(a, g), b0 = *exact_div(b, g);
      // Cofactors of 1 over the reduced pair by a small exact search.
      const long C = 60;
      for (long p = -C; p <= C; ++p) {
        for (long q = -C; q <= C; ++q) {
          Coeff s = Coeff::quad(r, p, q);
          Coeff rem = Coeff::one(r) - s * a0;
          if (b0.is_zero()) {
            if (rem.is_zero()) {
              return ModuleVerdict::principal({g, a0, b0, s, Coeff::zero(r)});
            }
            continue;
          }
          if (auto t = exact_div(rem, b0)) {
            return ModuleVerdict::principal({g, a0, b0, s, *t});
          }
        }
      }
      return ModuleVerdict::unknown("generator found but cofactor search exhausted");
    }
  }
  return ModuleVerdict::not_principal(
      {"no-element-of-ideal-norm",
       "no common divisor of norm " + NI.str() + " (the ideal norm) exists"});
}

}  // namespace

ModuleVerdict brute_force_principality(const Coeff& a, const Coeff& b, unsigned bound) {
  if (!same_ring(a.ring(), b.ring())) {
    throw std::invalid_argument("brute_force_principality: ring mismatch");
  }
  if (a.is_zero() && b.is_zero()) {
    throw std::invalid_argument("brute_force_principality: both generators are zero");
  }
  switch (a.ring()->kind()) {
    case RingKind::Integers:
      return brute_force_int(a, b, bound);
    case RingKind::QuadSqrtMinus5:
      return brute_force_quad(a, b, bound);
    default:
      throw std::invalid_argument("brute_force_principality: supported over ZZ and ZZ[r5] only");
  }
}

}  // namespace tame2
