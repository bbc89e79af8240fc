#include <random>

#include "doctest.h"
#include "tame2/engine.hpp"
#include "tame2/gallery.hpp"
#include "tame2/text.hpp"

using namespace tame2;

namespace {

Ring QQ() { return RingDescriptor::rationals(); }
Ring ZZ() { return RingDescriptor::integers(); }
Ring Qz() { return RingDescriptor::univar("z"); }
Ring Qzw() { return RingDescriptor::bivar("z", "w"); }
Ring Zr5() { return RingDescriptor::quad_sqrt_minus5(); }

Coeff zgen() { return Coeff::from_upoly(Qz(), UPoly::variable()); }

}  // namespace

TEST_CASE("reduction_step on the nagata map") {
  PolyMap f = nagata_map(Qz(), zgen());
  SUBCASE("over the fraction field: reduced to degree (2, 2)") {
    RingView kview = RingView::whole(fraction_field_of(Qz()));
    StepResult s = reduction_step(f, kview);
    auto* red = std::get_if<StepReduced>(&s);
    REQUIRE(red != nullptr);
    // F' = (X + z^{-1} Y^2, z^2 X + z Y^2 + Y)
    PolyMap expect = parse_map("(X + 1/z*Y^2, z^2*X + z*Y^2 + Y)", fraction_field_of(Qz()));
    CHECK(red->next == expect);
    CHECK(deg_vec(red->next) == DegVec{2, 2});
    auto* el = std::get_if<ElementaryFactor>(&red->applied);
    REQUIRE(el != nullptr);
    CHECK(el->axis == 1);
  }
  SUBCASE("over the polynomial ring: blocked by -1/z") {
    RingView rview = RingView::whole(Qz());
    StepResult s = reduction_step(f, rview);
    auto* blk = std::get_if<StepBlocked>(&s);
    REQUIRE(blk != nullptr);
    auto* obs = std::get_if<ObsCoefficientNotInRing>(&blk->obstruction);
    REQUIRE(obs != nullptr);
    CHECK(obs->c.str() == "-1/z");
    CHECK(obstruction_reverify(blk->obstruction, rview));
  }
  SUBCASE("affine input") {
    PolyMap aff = parse_map("(X + 1, Y)", Qz());
    StepResult s = reduction_step(aff, RingView::whole(Qz()));
    CHECK(std::holds_alternative<StepAlreadyAffine>(s));
  }
}

TEST_CASE("reduction_step on the degree-(2,2) shear over the integers") {
  IdealShearSpec spec{ZZ(), Coeff::from_int(ZZ(), 2), Coeff::from_int(ZZ(), 3),
                      {Coeff::zero(ZZ()), Coeff::zero(ZZ()), Coeff::one(ZZ())}};
  IdealShear sh = ideal_shear(spec);
  CHECK(deg_vec(sh.forward) == DegVec{2, 2});
  StepResult s = reduction_step(sh.forward, RingView::whole(ZZ()));
  auto* red = std::get_if<StepReduced>(&s);
  REQUIRE(red != nullptr);
  auto* aff = std::get_if<AffineFactor>(&red->applied);
  REQUIRE(aff != nullptr);
  // matrix [[b0, -a0], [s, t]] = [[-2, -3], [1, 1]]
  Ring K = QQ();
  CHECK(aff->m[0] == Coeff::from_rat(K, Rat(-2)));
  CHECK(aff->m[1] == Coeff::from_rat(K, Rat(-3)));
  CHECK(aff->m[2] == Coeff::from_rat(K, Rat(1)));
  CHECK(aff->m[3] == Coeff::from_rat(K, Rat(1)));
  CHECK(aff->det() == Coeff::one(K));
  // first component drops to -2X - 3Y
  CHECK(red->next.f1() == parse_map("(-2*X - 3*Y, Y)", K).f1());
  CHECK(deg_vec(red->next) == DegVec{1, 2});
}

TEST_CASE("decide_tame on the nagata battery") {
  PolyMap f = nagata_map(Qz(), zgen());
  SUBCASE("not tame over the polynomial ring, obstructed by -1/z") {
    TameVerdict v = decide_tame(f, Qz());
    REQUIRE(v.status() == TameVerdict::Status::NotTame);
    auto* obs = std::get_if<ObsCoefficientNotInRing>(&v.obstruction());
    REQUIRE(obs != nullptr);
    CHECK(obs->c.str() == "-1/z");
  }
  SUBCASE("tame over the fraction field with the classical factors") {
    Ring K = fraction_field_of(Qz());
    PolyMap fk = embed_map(f);
    TameVerdict v = decide_tame(fk, K);
    REQUIRE(v.is_tame());
    CHECK(v.decomposition().verify());
    CHECK(v.decomposition().compose_all() == fk);
    // first factor is (X - z^{-1} Y^2, Y); the rest compose to the tail
    const auto& factors = v.decomposition().factors();
    REQUIRE(factors.size() >= 2);
    CHECK(factor_to_map(factors.front()) == parse_map("(X - 1/z*Y^2, Y)", K));
    PolyMap tail = PolyMap::identity(K);
    bool started = false;
    for (size_t i = 1; i < factors.size(); ++i) {
      tail = started ? compose(tail, factor_to_map(factors[i])) : factor_to_map(factors[i]);
      started = true;
    }
    CHECK(tail == parse_map("(X + 1/z*Y^2, z^2*X + z*Y^2 + Y)", K));
  }
  SUBCASE("locally: blocked exactly at the primes containing z") {
    PrimeSpec at_z = PrimeSpec::element(zgen());
    PrimeSpec at_zm1 = PrimeSpec::element(parse_coeff("z - 1", Qz()));
    PrimeSpec at_zp1 = PrimeSpec::element(parse_coeff("z + 1", Qz()));
    CHECK(decide_locally_tame(f, Qz(), at_z).status() == TameVerdict::Status::NotTame);
    TameVerdict good = decide_locally_tame(f, Qz(), at_zm1);
    REQUIRE(good.is_tame());
    CHECK(good.decomposition().verify());
    CHECK(decide_locally_tame(f, Qz(), at_zp1).is_tame());
  }
  SUBCASE("z = 0 collapses to an elementary map") {
    PolyMap f0 = nagata_map(Qz(), Coeff::zero(Qz()));
    CHECK(f0 == parse_map("(X - 2*Y^3, Y)", Qz()));
    CHECK(decide_tame(f0, Qz()).is_tame());
  }
  SUBCASE("z invertible makes it tame") {
    PolyMap f1 = nagata_map(QQ(), Coeff::one(QQ()));
    CHECK(decide_tame(f1, QQ()).is_tame());
  }
}

TEST_CASE("nagata inverse over the fraction field") {
  PolyMap f = nagata_map(Qz(), zgen());
  PolyMap inv = inverse_over_fraction_field(f);
  Ring K = fraction_field_of(Qz());
  // frozen closed form: (X + 2Y(zX+Y^2) - z(zX+Y^2)^2, Y - z(zX+Y^2))
  PolyMap expect =
      parse_map("(X + 2*Y*(z*X + Y^2) - z*(z*X + Y^2)^2, Y - z*(z*X + Y^2))", K);
  CHECK(inv == expect);
  CHECK(is_identity(compose(embed_map(f), inv)));
  CHECK(is_identity(compose(inv, embed_map(f))));
}

TEST_CASE("is_automorphism") {
  CHECK(is_automorphism(nagata_map(Qz(), zgen()), Qz()));
  CHECK(!is_automorphism(parse_map("(X^2, Y)", ZZ()), ZZ()));
  // half-integral triangular map: automorphism over QQ, not over ZZ
  PolyMap half = parse_map("(X, Y + 1/2*X^2)", QQ());
  CHECK(is_automorphism(half, QQ()));
  CHECK(!is_automorphism(half, ZZ()));
  CHECK(is_automorphism(parse_map("(X, Y + 2*X^2)", ZZ()), ZZ()));
}

TEST_CASE("shear over ZZ[r5]: not tame, locally tame") {
  Coeff z = Coeff::from_int(Zr5(), 2);
  Coeff w = Coeff::quad(Zr5(), 1, 1);
  IdealShearSpec spec{Zr5(), z, w, {Coeff::zero(Zr5()), Coeff::zero(Zr5()), Coeff::one(Zr5())}};
  IdealShear sh = ideal_shear(spec);
  TameVerdict v = decide_tame(sh.forward, Zr5());
  REQUIRE(v.status() == TameVerdict::Status::NotTame);
  auto* obs = std::get_if<ObsNonPrincipalPair>(&v.obstruction());
  REQUIRE(obs != nullptr);
  CHECK(obs->verdict.witness().kind == "no-element-of-ideal-norm");
  CHECK(obstruction_reverify(v.obstruction(), RingView::whole(Zr5())));

  // locally tame at the primes above 2, 3 and 7
  PrimeSpec p2 = PrimeSpec::generators({Coeff::from_int(Zr5(), 2), Coeff::quad(Zr5(), 1, 1)});
  PrimeSpec p3 = PrimeSpec::generators({Coeff::from_int(Zr5(), 3), Coeff::quad(Zr5(), 1, 1)});
  PrimeSpec p7 = PrimeSpec::generators({Coeff::from_int(Zr5(), 7), Coeff::quad(Zr5(), 3, 1)});
  for (const PrimeSpec& p : {p2, p3, p7}) {
    TameVerdict lv = decide_locally_tame(sh.forward, Zr5(), p);
    REQUIRE(lv.is_tame());
    CHECK(lv.decomposition().verify());
  }
}

TEST_CASE("shear over QQ[z,w]: tame only after inverting z or w") {
  Coeff z = parse_coeff("z", Qzw()), w = parse_coeff("w", Qzw());
  IdealShearSpec spec{Qzw(), z, w, {Coeff::zero(Qzw()), Coeff::zero(Qzw()), Coeff::one(Qzw())}};
  IdealShear sh = ideal_shear(spec);
  CHECK(decide_tame(sh.forward, Qzw()).status() == TameVerdict::Status::NotTame);
  for (const char* flag : {"Qzw_loc:z", "Qzw_loc:w"}) {
    Ring loc = ring_from_flag(flag);
    PolyMap lifted = convert_map(sh.forward, loc);
    TameVerdict v = decide_tame(lifted, loc);
    REQUIRE(v.is_tame());
    CHECK(v.decomposition().verify());
  }
}

TEST_CASE("minimal tame localization") {
  SUBCASE("nagata over QQ[z] needs exactly 1/z") {
    PolyMap f = nagata_map(Qz(), zgen());
    OverringResult r = minimal_tame_localization(f, Qz());
    CHECK(r.r == zgen());
    REQUIRE(r.obstructing_primes.size() == 1);
    CHECK(r.obstructing_primes[0].first == zgen());
    // contract: tame after inverting r, not tame locally at each prime
    Ring loc = RingDescriptor::localized(Qz(), r.r);
    CHECK(decide_tame(convert_map(f, loc), loc).is_tame());
    for (const auto& [p, step] : r.obstructing_primes) {
      CHECK(decide_locally_tame(f, Qz(), PrimeSpec::element(p)).status() ==
            TameVerdict::Status::NotTame);
    }
  }
  SUBCASE("nagata over ZZ with z = 2 needs exactly 1/2") {
    PolyMap f = nagata_map(ZZ(), Coeff::from_int(ZZ(), 2));
    OverringResult r = minimal_tame_localization(f, ZZ());
    CHECK(r.r == Coeff::from_int(ZZ(), 2));
    Ring loc = RingDescriptor::localized(ZZ(), r.r);
    CHECK(decide_tame(convert_map(f, loc), loc).is_tame());
    CHECK(decide_locally_tame(f, ZZ(), PrimeSpec::element(Coeff::from_int(ZZ(), 2))).status() ==
          TameVerdict::Status::NotTame);
  }
  SUBCASE("tame maps need nothing") {
    PolyMap f = parse_map("(X, Y + X^3)", ZZ());
    OverringResult r = minimal_tame_localization(f, ZZ());
    CHECK(r.r == Coeff::one(ZZ()));
    CHECK(r.obstructing_primes.empty());
  }
  SUBCASE("rejects non-automorphisms and unsupported rings") {
    CHECK_THROWS(minimal_tame_localization(parse_map("(X^2, Y)", ZZ()), ZZ()));
    PolyMap f = parse_map("(X, Y)", Qzw());
    CHECK_THROWS(minimal_tame_localization(f, Qzw()));
  }
}

TEST_CASE("field completeness on random compositions") {
  std::mt19937_64 rng(424242);
  for (Ring K : {QQ(), RingDescriptor::prime_field(101)}) {
    auto rnd_coeff = [&]() {
      return Coeff::from_int(K, static_cast<long long>(rng() % 11) - 5);
    };
    auto rnd_factor = [&]() -> Factor {
      if (rng() % 2 == 0) {
        Coeff c = rnd_coeff();
        if (rng() % 2) {
          return make_affine(K, {Coeff::one(K), c, Coeff::zero(K), Coeff::one(K)},
                             {rnd_coeff(), rnd_coeff()});
        }
        return make_affine(K, {Coeff::one(K), Coeff::zero(K), c, Coeff::one(K)},
                           {rnd_coeff(), rnd_coeff()});
      }
      size_t deg = 2 + rng() % 2;
      std::vector<Coeff> p(deg + 1, Coeff::zero(K));
      p[deg] = rnd_coeff();
      if (p[deg].is_zero()) p[deg] = Coeff::one(K);
      p[2] = rnd_coeff();
      return make_elementary(K, 1 + static_cast<int>(rng() % 2), std::move(p));
    };
    for (int it = 0; it < 20; ++it) {
      PolyMap f = PolyMap::identity(K);
      int n = 1 + static_cast<int>(rng() % 4);
      long deg_budget = 1;
      for (int i = 0; i < n; ++i) {
        Factor fac = rnd_factor();
        PolyMap m = factor_to_map(fac);
        long d = std::holds_alternative<ElementaryFactor>(fac)
                     ? static_cast<long>(std::get<ElementaryFactor>(fac).p.size()) - 1
                     : 1;
        if (deg_budget * d > 32) continue;
        deg_budget *= d;
        f = compose(f, m);
      }
      TameVerdict v = decide_tame(f, K);
      REQUIRE(v.is_tame());
      CHECK(v.decomposition().verify());
      // divisibility along the trace
      for (const DegVec& d : v.degree_trace()) {
        CHECK((d.d1 % d.d2 == 0 || d.d2 % d.d1 == 0));
      }
      // inverse round-trip
      PolyMap inv = inverse_over_fraction_field(f);
      CHECK(is_identity(compose(f, inv)));
    }
    // non-automorphisms are detected
    CHECK(decide_tame(parse_map("(X^2, Y)", K), K).status() ==
          TameVerdict::Status::NotAutomorphism);
    CHECK(decide_tame(parse_map("(X, X)", K), K).status() ==
          TameVerdict::Status::NotAutomorphism);
    CHECK(decide_tame(parse_map("(X + Y^2, Y + X^2)", K), K).status() ==
          TameVerdict::Status::NotAutomorphism);
  }
}

TEST_CASE("monotonicity: tame maps stay tame over larger rings") {
  PolyMap f = parse_map("(X + 2*Y^2, Y)", ZZ());
  CHECK(decide_tame(f, ZZ()).is_tame());
  Ring loc = RingDescriptor::localized(ZZ(), Coeff::from_int(ZZ(), 3));
  CHECK(decide_tame(convert_map(f, loc), loc).is_tame());
  CHECK(decide_tame(convert_map(f, QQ()), QQ()).is_tame());
}

TEST_CASE("unknown verdicts propagate from the cusp oracle") {
  // At the cusp, equal-order pairs outside the oracle's candidate sweep give
  // Unknown rather than a false negative. (t^2+t^3, t^2-t^3) yields the cusp
  // maximal ideal, whose reduced quotients defeat every candidate generator.
  Ring cusp = RingDescriptor::cuspidal_cubic();
  Coeff a = parse_coeff("t^2 + t^3", cusp);
  Coeff b = parse_coeff("t^2 - t^3", cusp);
  PrimeSpec m0 = PrimeSpec::generators({parse_coeff("t^2", cusp), parse_coeff("t^3", cusp)});
  ModuleVerdict v = two_gen_reduce_at(a, b, m0);
  CHECK(v.is_unknown());
}
