#include "tame2/principality.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "tame2/quad_lattice.hpp"

namespace tame2 {

ModuleVerdict ModuleVerdict::principal(PrincipalCert c) {
  ModuleVerdict v;
  v.status_ = Status::Principal;
  v.cert_ = std::move(c);
  return v;
}

ModuleVerdict ModuleVerdict::not_principal(NotPrincipalWitness w) {
  ModuleVerdict v;
  v.status_ = Status::NotPrincipal;
  v.witness_ = std::move(w);
  return v;
}

ModuleVerdict ModuleVerdict::unknown(std::string reason) {
  ModuleVerdict v;
  v.status_ = Status::Unknown;
  v.reason_ = std::move(reason);
  return v;
}

const PrincipalCert& ModuleVerdict::cert() const {
  if (!cert_) throw std::logic_error("ModuleVerdict::cert: not principal");
  return *cert_;
}

const NotPrincipalWitness& ModuleVerdict::witness() const {
  if (!witness_) throw std::logic_error("ModuleVerdict::witness: no witness");
  return *witness_;
}

bool ModuleVerdict::verify(const Coeff& a, const Coeff& b) const {
  if (status_ != Status::Principal) return true;
  const PrincipalCert& c = *cert_;
  Coeff ka = embed_in_fraction_field(a), kb = embed_in_fraction_field(b);
  Coeff kg = embed_in_fraction_field(c.g);
  Coeff ka0 = embed_in_fraction_field(c.a0), kb0 = embed_in_fraction_field(c.b0);
  Coeff ks = embed_in_fraction_field(c.s), kt = embed_in_fraction_field(c.t);
  Coeff one = Coeff::one(ka.ring());
  return kg * ka0 == ka && kg * kb0 == kb && ks * ka0 + kt * kb0 == one;
}

std::string ModuleVerdict::str() const {
  switch (status_) {
    case Status::Principal: {
      std::ostringstream os;
      os << "principal: g=" << cert_->g.str() << ", a0=" << cert_->a0.str()
         << ", b0=" << cert_->b0.str() << ", s=" << cert_->s.str() << ", t=" << cert_->t.str();
      return os.str();
    }
    case Status::NotPrincipal:
      return "not principal: " + witness_->kind +
             (witness_->detail.empty() ? "" : " (" + witness_->detail + ")");
    case Status::Unknown:
      return "unknown: " + reason_;
  }
  return "?";
}

namespace {

ModuleVerdict principal_zero_case(const Coeff& a, const Coeff& b) {
  const Ring& r = a.ring();
  if (a.is_zero()) {
    return ModuleVerdict::principal(
        {b, Coeff::zero(r), Coeff::one(r), Coeff::zero(r), Coeff::one(r)});
  }
  return ModuleVerdict::principal(
      {a, Coeff::one(r), Coeff::zero(r), Coeff::one(r), Coeff::zero(r)});
}

ModuleVerdict principal_field(const Coeff& a, const Coeff& b) {
  const Ring& r = a.ring();
  return ModuleVerdict::principal(
      {a, Coeff::one(r), b * a.inv(), Coeff::one(r), Coeff::zero(r)});
}

ModuleVerdict principal_ext_gcd(const Coeff& a, const Coeff& b) {
  CoeffExtGcd e = ring_ext_gcd(a, b);
  Coeff a0 = *exact_div(a, e.g), b0 = *exact_div(b, e.g);
  return ModuleVerdict::principal({e.g, a0, b0, e.s, e.t});
}

ModuleVerdict reduce_bivar(const Coeff& a, const Coeff& b) {
  Coeff g = ring_gcd(a, b);
  Coeff a0 = *exact_div(a, g), b0 = *exact_div(b, g);
  auto cof = unit_ideal_cofactors(a0.as_mpoly(), b0.as_mpoly());
  if (cof) {
    return ModuleVerdict::principal({g, a0, b0, Coeff::from_mpoly(a.ring(), cof->s),
                                     Coeff::from_mpoly(a.ring(), cof->t)});
  }
  auto basis = buchberger_pair(a0.as_mpoly(), b0.as_mpoly());
  std::ostringstream os;
  os << "reduced basis {";
  for (size_t i = 0; i < basis.size(); ++i) {
    if (i) os << ", ";
    os << basis[i].g.str(a.ring()->gen_name(0), a.ring()->gen_name(1));
  }
  os << "} != {1}";
  return ModuleVerdict::not_principal({"groebner-basis-not-unit", os.str()});
}

// Localized bivariate base: (a, b) is principal exactly when a multiplier
// power lies in the reduced pair's ideal over the base. The power is bounded
// by the effective Nullstellensatz exponent max(3, deg a0, deg b0)^2.
ModuleVerdict reduce_localized_bivar(const Coeff& a, const Coeff& b) {
  const Ring& S = a.ring();
  const Ring& base = S->base();
  const Coeff& f = S->multiplier();
  Coeff n1 = a.loc_num(), n2 = b.loc_num();
  Coeff gb = ring_gcd(n1, n2);
  Coeff a0 = *exact_div(n1, gb), b0 = *exact_div(n2, gb);

  int d = std::max({3, a0.as_mpoly().total_degree(), b0.as_mpoly().total_degree()});
  unsigned bound = static_cast<unsigned>(d) * static_cast<unsigned>(d);
  for (unsigned k = 0; k <= bound; ++k) {
    Coeff fk = f.pow(k);
    auto cof = pair_membership_cofactors(fk.as_mpoly(), a0.as_mpoly(), b0.as_mpoly());
    if (cof) {
      // g*(a0/f^{ka}) == a and the cofactors absorb the multiplier powers.
      Coeff g = Coeff::localized(S, gb, 0);
      Coeff la0 = Coeff::localized(S, a0, a.loc_exp());
      Coeff lb0 = Coeff::localized(S, b0, b.loc_exp());
      Coeff s = Coeff::localized(S, Coeff::from_mpoly(base, cof->s) * f.pow(a.loc_exp()), k);
      Coeff t = Coeff::localized(S, Coeff::from_mpoly(base, cof->t) * f.pow(b.loc_exp()), k);
      return ModuleVerdict::principal({g, la0, lb0, s, t});
    }
  }
  return ModuleVerdict::not_principal(
      {"multiplier-power-not-in-reduced-pair",
       "no power of " + f.str() + " up to exponent " + std::to_string(bound) +
           " lies in the ideal of the reduced pair"});
}

// ZZ[r5]: Hermite-form lattice of the ideal, exhaustive search for a
// generator of the exact ideal norm, cofactors from the tracked lattice of
// the reduced pair.
ModuleVerdict reduce_quad(const Coeff& a, const Coeff& b) {
  const Ring& r = a.ring();
  std::vector<std::pair<Int, Int>> gens = {{a.as_quad().x, a.as_quad().y},
                                           {b.as_quad().x, b.as_quad().y}};
  QuadLattice L = ideal_lattice(gens);
  Int N = L.det();

  std::optional<Coeff> gen;
  Int ymax = int_sqrt(Int(N / 5));
  for (Int y = 0; y <= ymax && !gen; ++y) {
    Int rest = N - 5 * y * y;
    Int x = int_sqrt(rest);
    if (x * x != rest) continue;
    // Fixed sign scan keeps the certificate deterministic.
    for (int sx = 1; sx >= -1 && !gen; sx -= 2) {
      if (sx < 0 && x == 0) break;
      for (int sy = 1; sy >= -1; sy -= 2) {
        if (sy < 0 && y == 0) break;
        Int cx = sx * x, cy = sy * y;
        if (L.contains(cx, cy)) {
          gen = Coeff::quad(r, cx, cy);
          break;
        }
      }
    }
  }
  if (!gen) {
    return ModuleVerdict::not_principal(
        {"no-element-of-ideal-norm",
         "ideal norm " + N.str() + " admits no element x^2+5y^2 = " + N.str() +
             " inside the ideal"});
  }
  Coeff a0 = *exact_div(a, *gen), b0 = *exact_div(b, *gen);
  // (a0, b0) is the unit ideal; express 1 over its four lattice generators.
  std::vector<std::pair<Int, Int>> unit_gens = {
      {a0.as_quad().x, a0.as_quad().y},
      {Int(-5) * a0.as_quad().y, a0.as_quad().x},
      {b0.as_quad().x, b0.as_quad().y},
      {Int(-5) * b0.as_quad().y, b0.as_quad().x}};
  TrackedQuadLattice T = lattice_from_vectors_tracked(unit_gens);
  auto sol = T.lattice.solve(Int(1), Int(0));
  if (!sol) throw std::logic_error("reduce_quad: unit ideal without 1");
  std::vector<Int> comb(4, Int(0));
  for (size_t j = 0; j < 4; ++j) {
    comb[j] = sol->first * T.basis_expr[0][j] + sol->second * T.basis_expr[1][j];
  }
  Coeff s = Coeff::quad(r, comb[0], comb[1]);
  Coeff t = Coeff::quad(r, comb[2], comb[3]);
  return ModuleVerdict::principal({*gen, a0, b0, s, t});
}

// Dense exact linear solve M x == rhs over QQ; any one solution.
std::optional<std::vector<Rat>> solve_linear(std::vector<std::vector<Rat>> M,
                                             std::vector<Rat> rhs) {
  const size_t rows = M.size();
  const size_t cols = rows ? M[0].size() : 0;
  std::vector<size_t> pivot_col;
  size_t rank = 0;
  for (size_t col = 0; col < cols && rank < rows; ++col) {
    size_t piv = rank;
    while (piv < rows && M[piv][col] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(M[piv], M[rank]);
    std::swap(rhs[piv], rhs[rank]);
    Rat inv = Rat(1) / M[rank][col];
    for (size_t j = col; j < cols; ++j) M[rank][j] *= inv;
    rhs[rank] *= inv;
    for (size_t i = 0; i < rows; ++i) {
      if (i == rank || M[i][col] == 0) continue;
      Rat k = M[i][col];
      for (size_t j = col; j < cols; ++j) M[i][j] -= k * M[rank][j];
      rhs[i] -= k * rhs[rank];
    }
    pivot_col.push_back(col);
    ++rank;
  }
  for (size_t i = rank; i < rows; ++i) {
    if (rhs[i] != 0) return std::nullopt;
  }
  std::vector<Rat> x(cols, Rat(0));
  for (size_t i = 0; i < rank; ++i) x[pivot_col[i]] = rhs[i];
  return x;
}

// Membership h in a*R + b*R for the cuspidal ring, by linear algebra on
// coefficients with both cofactor degrees bounded by B.
std::optional<std::pair<UPoly, UPoly>> cusp_membership(const UPoly& h, const UPoly& a,
                                                       const UPoly& b, int B) {
  // Admissible degrees for ring elements: 0, 2, 3, ..., B.
  std::vector<int> degs;
  degs.push_back(0);
  for (int d = 2; d <= B; ++d) degs.push_back(d);
  const size_t per = degs.size();
  int max_deg = B + std::max(a.degree(), b.degree());
  std::vector<std::vector<Rat>> M(static_cast<size_t>(max_deg) + 1,
                                  std::vector<Rat>(2 * per, Rat(0)));
  std::vector<Rat> rhs(static_cast<size_t>(max_deg) + 1, Rat(0));
  for (int d = 0; d <= max_deg; ++d) rhs[static_cast<size_t>(d)] = h.coeff(d);
  for (size_t j = 0; j < per; ++j) {
    for (int i = 0; i <= a.degree(); ++i) {
      M[static_cast<size_t>(degs[j] + i)][j] += a.coeff(i);
    }
    for (int i = 0; i <= b.degree(); ++i) {
      M[static_cast<size_t>(degs[j] + i)][per + j] += b.coeff(i);
    }
  }
  auto sol = solve_linear(std::move(M), std::move(rhs));
  if (!sol) return std::nullopt;
  auto build = [&](size_t offset) {
    std::vector<Rat> c(static_cast<size_t>(B) + 1, Rat(0));
    for (size_t j = 0; j < per; ++j) c[static_cast<size_t>(degs[j])] = (*sol)[offset + j];
    return UPoly(std::move(c));
  };
  return std::make_pair(build(0), build(per));
}

ModuleVerdict reduce_cusp(const Coeff& a, const Coeff& b) {
  const Ring& r = a.ring();
  const UPoly &pa = a.as_upoly(), &pb = b.as_upoly();
  UPoly h = upoly_gcd(pa, pb);
  if (h.coeff(1) != 0) {
    return ModuleVerdict::not_principal(
        {"normalization-gcd-outside-ring",
         "gcd " + h.str("t") + " in the normalization has a linear term"});
  }
  UPoly qa = *pa.exact_div(h), qb = *pb.exact_div(h);
  if (qa.coeff(1) != 0 || qb.coeff(1) != 0) {
    return ModuleVerdict::not_principal(
        {"quotient-outside-ring", "generator quotient by the gcd leaves the ring"});
  }
  int B = pa.degree() + pb.degree() + 4;
  auto uv = cusp_membership(h, pa, pb, B);
  if (!uv) {
    return ModuleVerdict::unknown("bounded membership search (degree <= " + std::to_string(B) +
                                  ") found no expression of the gcd in the pair");
  }
  return ModuleVerdict::principal({Coeff::from_upoly(r, h), Coeff::from_upoly(r, qa),
                                   Coeff::from_upoly(r, qb), Coeff::from_upoly(r, uv->first),
                                   Coeff::from_upoly(r, uv->second)});
}

}  // namespace

ModuleVerdict two_gen_reduce(const Coeff& a, const Coeff& b) {
  if (!same_ring(a.ring(), b.ring())) throw std::invalid_argument("two_gen_reduce: ring mismatch");
  if (a.is_zero() && b.is_zero()) {
    throw std::invalid_argument("two_gen_reduce: both generators are zero");
  }
  if (a.is_zero() || b.is_zero()) return principal_zero_case(a, b);

  const Ring& r = a.ring();
  if (r->traits().is_field) return principal_field(a, b);
  switch (r->kind()) {
    case RingKind::Integers:
    case RingKind::UnivarPoly:
      return principal_ext_gcd(a, b);
    case RingKind::BivarPoly:
      return reduce_bivar(a, b);
    case RingKind::Localized:
      if (r->traits().has_ext_gcd) return principal_ext_gcd(a, b);
      return reduce_localized_bivar(a, b);
    case RingKind::QuadSqrtMinus5:
      return reduce_quad(a, b);
    case RingKind::CuspidalCubic:
      return reduce_cusp(a, b);
    default:
      throw std::logic_error("two_gen_reduce: unhandled ring kind");
  }
}

Int quad_ideal_norm(const Coeff& a, const Coeff& b) {
  if (a.ring()->kind() != RingKind::QuadSqrtMinus5) {
    throw std::invalid_argument("quad_ideal_norm: wrong ring");
  }
  if (a.is_zero() && b.is_zero()) throw std::invalid_argument("quad_ideal_norm: zero ideal");
  std::vector<std::pair<Int, Int>> gens;
  if (!a.is_zero()) gens.emplace_back(a.as_quad().x, a.as_quad().y);
  if (!b.is_zero()) gens.emplace_back(b.as_quad().x, b.as_quad().y);
  return ideal_lattice(gens).det();
}

namespace {

// Embeds a global certificate into the fraction field for a local verdict.
ModuleVerdict embed_cert(const ModuleVerdict& v) {
  if (!v.is_principal()) return v;
  const PrincipalCert& c = v.cert();
  return ModuleVerdict::principal({c.g, embed_in_fraction_field(c.a0),
                                   embed_in_fraction_field(c.b0), embed_in_fraction_field(c.s),
                                   embed_in_fraction_field(c.t)});
}

ModuleVerdict local_generated_by(const Coeff& g, const Coeff& a, const Coeff& b, const Coeff& s,
                                 const Coeff& t) {
  // g == s*a + t*b with s, t in R; quotients live in the fraction field.
  Coeff kg = embed_in_fraction_field(g);
  Coeff a0 = embed_in_fraction_field(a) * kg.inv();
  Coeff b0 = embed_in_fraction_field(b) * kg.inv();
  return ModuleVerdict::principal(
      {g, a0, b0, embed_in_fraction_field(s), embed_in_fraction_field(t)});
}

int cusp_order(const UPoly& p) {
  int o = 0;
  while (p.coeff(o) == 0) ++o;
  return o;
}

ModuleVerdict reduce_cusp_at(const Coeff& a, const Coeff& b, const PrimeSpec& P) {
  const Ring& r = a.ring();
  CuspPrimeInfo info = classify_cusp_prime(P);
  Coeff one = Coeff::one(r), zero = Coeff::zero(r);

  if (!info.at_cusp) {
    // Smooth point: the localization is a discrete valuation ring and the
    // generator of smaller valuation generates.
    auto val = [&](const UPoly& p) {
      UPoly lin(std::vector<Rat>{-info.point, Rat(1)});
      int v = 0;
      UPoly q = p;
      while (true) {
        auto d = q.exact_div(lin);
        if (!d) return v;
        q = *d;
        ++v;
      }
    };
    if (val(a.as_upoly()) <= val(b.as_upoly())) return local_generated_by(a, a, b, one, zero);
    return local_generated_by(b, a, b, zero, one);
  }

  // At the cusp. Unit shortcut first.
  if (a.as_upoly().coeff(0) != 0) return local_generated_by(a, a, b, one, zero);
  if (b.as_upoly().coeff(0) != 0) return local_generated_by(b, a, b, zero, one);

  int oa = cusp_order(a.as_upoly()), ob = cusp_order(b.as_upoly());
  const Coeff& lo = oa <= ob ? a : b;
  const Coeff& hi = oa <= ob ? b : a;
  int delta = oa <= ob ? ob - oa : oa - ob;
  if (delta == 1) {
    // Any generator has the minimal order, and the other quotient would need
    // order exactly 1, which no element of the local ring attains.
    return ModuleVerdict::not_principal(
        {"valuation-gap", "orders " + std::to_string(oa) + " and " + std::to_string(ob) +
                              " differ by 1, impossible for a principal ideal"});
  }
  auto quotient_ok = [&](const Coeff& g) {
    Coeff kg = embed_in_fraction_field(g);
    return in_local_ring(embed_in_fraction_field(a) * kg.inv(), P) &&
           in_local_ring(embed_in_fraction_field(b) * kg.inv(), P);
  };
  if (quotient_ok(lo)) {
    return oa <= ob ? local_generated_by(lo, a, b, one, zero)
                    : local_generated_by(lo, a, b, zero, one);
  }
  if (quotient_ok(hi)) {
    return oa <= ob ? local_generated_by(hi, a, b, zero, one)
                    : local_generated_by(hi, a, b, one, zero);
  }
  // Small deterministic sweep of combinations lo + c*hi of the minimal order.
  const Rat cands[8] = {Rat(1), Rat(-1), Rat(2),      Rat(-2),
                        Rat(3), Rat(-3), Rat(1) / 2, Rat(-1) / 2};
  int m = std::min(oa, ob);
  for (const Rat& c : cands) {
    Coeff g = lo + hi * Coeff::from_rat(r, c);
    if (g.is_zero() || cusp_order(g.as_upoly()) != m) continue;
    if (quotient_ok(g)) {
      Coeff cc = Coeff::from_rat(r, c);
      if (oa <= ob) return local_generated_by(g, a, b, one, cc);
      return local_generated_by(g, a, b, cc, one);
    }
  }
  return ModuleVerdict::unknown("cusp-local oracle inconclusive for orders " +
                                std::to_string(oa) + ", " + std::to_string(ob));
}

}  // namespace

ModuleVerdict two_gen_reduce_at(const Coeff& a, const Coeff& b, const PrimeSpec& P) {
  if (!same_ring(a.ring(), b.ring()) || !same_ring(a.ring(), P.ring())) {
    throw std::invalid_argument("two_gen_reduce_at: ring mismatch");
  }
  if (a.is_zero() && b.is_zero()) {
    throw std::invalid_argument("two_gen_reduce_at: both generators are zero");
  }
  const Ring& r = a.ring();
  if (a.is_zero() || b.is_zero()) return embed_cert(principal_zero_case(a, b));
  if (r->traits().is_field || P.kind() == PrimeSpec::Kind::ZeroIdeal) {
    // Localization at (0) is the fraction field.
    Coeff ka = embed_in_fraction_field(a), kb = embed_in_fraction_field(b);
    Ring K = ka.ring();
    return ModuleVerdict::principal(
        {a, Coeff::one(K), kb * ka.inv(), Coeff::one(K), Coeff::zero(K)});
  }

  switch (r->kind()) {
    case RingKind::Integers:
    case RingKind::UnivarPoly:
      return embed_cert(two_gen_reduce(a, b));
    case RingKind::Localized:
      if (r->traits().is_pid) return embed_cert(two_gen_reduce(a, b));
      [[fallthrough]];
    case RingKind::BivarPoly: {
      // Unique factorization: principal at P exactly when one reduced
      // generator escapes P.
      Coeff g = ring_gcd(a, b);
      Coeff a0 = *exact_div(a, g), b0 = *exact_div(b, g);
      Ring K = fraction_field_of(r);
      if (!in_prime(a0, P)) {
        return ModuleVerdict::principal({g, embed_in_fraction_field(a0),
                                         embed_in_fraction_field(b0),
                                         embed_in_fraction_field(a0).inv(), Coeff::zero(K)});
      }
      if (!in_prime(b0, P)) {
        return ModuleVerdict::principal({g, embed_in_fraction_field(a0),
                                         embed_in_fraction_field(b0), Coeff::zero(K),
                                         embed_in_fraction_field(b0).inv()});
      }
      return ModuleVerdict::not_principal(
          {"both-reduced-generators-in-prime",
           "both " + a0.str() + " and " + b0.str() + " lie in " + P.str()});
    }
    case RingKind::QuadSqrtMinus5: {
      // Dedekind: every nonzero ideal is locally principal; the generator of
      // smaller valuation generates the localization.
      int va = quad_valuation(a, P), vb = quad_valuation(b, P);
      const Coeff& g = va <= vb ? a : b;
      Coeff kg = embed_in_fraction_field(g);
      Coeff a0 = embed_in_fraction_field(a) * kg.inv();
      Coeff b0 = embed_in_fraction_field(b) * kg.inv();
      Ring K = kg.ring();
      Coeff s = va <= vb ? Coeff::one(K) : Coeff::zero(K);
      Coeff t = va <= vb ? Coeff::zero(K) : Coeff::one(K);
      return ModuleVerdict::principal({g, a0, b0, s, t});
    }
    case RingKind::CuspidalCubic:
      return reduce_cusp_at(a, b, P);
    default:
      throw std::invalid_argument("two_gen_reduce_at: unsupported ring");
  }
}

}  // namespace tame2
