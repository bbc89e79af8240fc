#pragma once

#include <utility>
#include <vector>

#include "tame2/engine.hpp"

namespace tame2 {

/// The classical wild automorphism attached to a ring element z:
/// (X - 2Y(zX + Y^2) - z(zX + Y^2)^2, Y + z(zX + Y^2)), expanded over the
/// ring of z.
PolyMap nagata_map(const Ring& r, const Coeff& z);

/// Shear along the linear form zX + wY weighted by the ideal pair (z, w):
/// F = (X + w q(zX + wY), Y - z q(zX + wY)). The inverse flips the signs of
/// the shear, so F is always an automorphism; it is tame exactly when the
/// ideal (z, w) is principal.
struct IdealShearSpec {
  Ring ring;
  Coeff z, w;
  std::vector<Coeff> q;  // coefficient list, degree >= 2
};

struct IdealShear {
  PolyMap forward;
  PolyMap inverse;
};

/// Builds the pair and checks compose(forward, inverse) == identity.
IdealShear ideal_shear(const IdealShearSpec& spec);

/// The ideal pair (t^2 - a^2, t^3 - a^3) of the point with parameter a on
/// the cuspidal cubic; a == 0 gives the maximal ideal of the cusp itself.
std::pair<Coeff, Coeff> cusp_point_ideal(const Rat& a);

/// Re-decides tameness after embedding a cuspidal-coefficient map into the
/// normalization (the full univariate polynomial ring).
TameVerdict tame_over_normalization(const PolyMap& f);

/// Exhaustive-search principality oracle over the integers and ZZ[r5],
/// independent of the certificate-producing path: candidate generators are
/// enumerated by size (absolute value, resp. norm) up to the bound, each
/// checked by divisibility and ideal membership.
ModuleVerdict brute_force_principality(const Coeff& a, const Coeff& b, unsigned bound);

}  // namespace tame2
