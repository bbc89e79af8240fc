#include "doctest.h"
#include "tame2/engine.hpp"
#include "tame2/gallery.hpp"
#include "tame2/text.hpp"

using namespace tame2;

TEST_CASE("parsing the worked map examples") {
  Ring qz = ring_from_flag("Qz");
  PolyMap nagata =
      parse_map("(X - 2*Y*(z*X + Y^2) - z*(z*X + Y^2)^2, Y + z*(z*X + Y^2))", qz);
  CHECK(nagata == nagata_map(qz, parse_coeff("z", qz)));

  CHECK(is_identity(parse_map("(X, Y)", ring_from_flag("Z"))));

  Ring zr5 = ring_from_flag("Zr5");
  PolyMap aff = parse_map("(X + r5*Y, Y)", zr5);
  CHECK(aff.f1().coeff(0, 1) == Coeff::quad(zr5, 0, 1));
}

TEST_CASE("parse errors carry positions and messages") {
  Ring z = ring_from_flag("Z");
  CHECK_THROWS_AS(parse_map("(X, Y", z), ParseError);
  CHECK_THROWS_AS(parse_map("(X + , Y)", z), ParseError);
  CHECK_THROWS_AS(parse_map("(X ? Y, Y)", z), ParseError);
  CHECK_THROWS_AS(parse_map("(2 X, Y)", z), ParseError);  // implicit product
  CHECK_THROWS_AS(parse_map("(w*X, Y)", ring_from_flag("Qz")), ParseError);  // unknown generator
  CHECK_THROWS_AS(parse_map("(X/Y, Y)", ring_from_flag("Q")), ParseError);
  CHECK_THROWS_AS(parse_map("(X/0, Y)", ring_from_flag("Q")), ParseError);
  // 1/2 is no integer
  CHECK_THROWS_AS(parse_map("(1/2*X, Y)", z), ParseError);
  // but it is a rational
  CHECK(parse_map("(1/2*X, Y)", ring_from_flag("Q")).f1().coeff(1, 0) ==
        Coeff::from_rat(RingDescriptor::rationals(), Rat(1, 2)));
}

TEST_CASE("cusp parsing validates the linear-term constraint") {
  Ring cusp = ring_from_flag("cusp");
  CHECK_THROWS_WITH_AS(parse_map("(X + t*Y, Y)", cusp),
                       doctest::Contains("powers >= 2"), ParseError);
  PolyMap ok = parse_map("(X + t^2*Y, Y)", cusp);
  CHECK(ok.f1().coeff(0, 1) == parse_coeff("t^2", cusp));
  CHECK(parse_coeff("t*t", cusp) == parse_coeff("t^2", cusp));
  CHECK_THROWS_AS(parse_coeff("t^3 - t", cusp), ParseError);
}

TEST_CASE("ring flags") {
  CHECK(ring_from_flag("Q")->kind() == RingKind::Rationals);
  CHECK(ring_from_flag("Z")->kind() == RingKind::Integers);
  CHECK(ring_from_flag("Fp:101")->char_p() == 101);
  CHECK(ring_from_flag("Qzw")->kind() == RingKind::BivarPoly);
  CHECK(ring_from_flag("Qz_frac")->kind() == RingKind::FractionField);
  CHECK(ring_from_flag("cusp_frac")->kind() == RingKind::FractionField);
  Ring loc = ring_from_flag("Qzw_loc:z*w");
  CHECK(loc->kind() == RingKind::Localized);
  CHECK(loc->multiplier() == parse_coeff("z*w", ring_from_flag("Qzw")));
  CHECK(same_ring(ring_from_flag("Z_loc:6")->base(), RingDescriptor::integers()));
  CHECK_THROWS_AS(ring_from_flag("Fp:91"), std::exception);
  CHECK_THROWS_AS(ring_from_flag("Kz"), ParseError);
}

TEST_CASE("prime spec parsing") {
  Ring qz = ring_from_flag("Qz");
  PrimeSpec p = parse_prime_spec("z - 1", qz);
  CHECK(p.kind() == PrimeSpec::Kind::PrimeElement);
  PrimeSpec zero = parse_prime_spec("0", qz);
  CHECK(zero.kind() == PrimeSpec::Kind::ZeroIdeal);
  Ring zr5 = ring_from_flag("Zr5");
  PrimeSpec p2 = parse_prime_spec("(2, 1 + r5)", zr5);
  CHECK(p2.kind() == PrimeSpec::Kind::GeneratorList);
  CHECK(p2.gens().size() == 2);
  CHECK_THROWS(parse_prime_spec("1", qz));  // unit
}

TEST_CASE("round trip: parse after print is the identity") {
  Ring qz = ring_from_flag("Qz");
  std::vector<PolyMap> gallery;
  gallery.push_back(nagata_map(qz, parse_coeff("z", qz)));
  gallery.push_back(PolyMap::identity(ring_from_flag("Z")));
  {
    Ring zr5 = ring_from_flag("Zr5");
    IdealShear sh = ideal_shear({zr5, Coeff::from_int(zr5, 2), Coeff::quad(zr5, 1, 1),
                                 {Coeff::zero(zr5), Coeff::zero(zr5), Coeff::one(zr5)}});
    gallery.push_back(sh.forward);
    gallery.push_back(sh.inverse);
  }
  {
    Ring cusp = ring_from_flag("cusp");
    auto [z, w] = cusp_point_ideal(Rat(1));
    IdealShear sh =
        ideal_shear({cusp, z, w, {Coeff::zero(cusp), Coeff::zero(cusp), Coeff::one(cusp)}});
    gallery.push_back(sh.forward);
  }
  {
    Ring k = ring_from_flag("Qz_frac");
    gallery.push_back(parse_map("(X - 1/z*Y^2, Y)", k));
    gallery.push_back(inverse_over_fraction_field(nagata_map(qz, parse_coeff("z", qz))));
  }
  {
    Ring loc = ring_from_flag("Qzw_loc:z");
    gallery.push_back(parse_map("(X + w/z^2*Y^2, Y)", loc));
  }
  for (const PolyMap& f : gallery) {
    CAPTURE(f.str());
    PolyMap again = parse_map(f.str(), f.ring());
    CHECK(again == f);
  }
}
