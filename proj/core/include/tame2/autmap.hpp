#pragma once

#include <array>
#include <string>
#include <variant>
#include <vector>

#include "tame2/bipoly.hpp"

namespace tame2 {

/// Endomorphism of R[X,Y] given by its two component polynomials.
class PolyMap {
 public:
  PolyMap(BiPoly f1, BiPoly f2);
  static PolyMap identity(const Ring& r);

  const Ring& ring() const { return f1_.ring(); }
  const BiPoly& f1() const { return f1_; }
  const BiPoly& f2() const { return f2_; }

  bool operator==(const PolyMap& o) const { return f1_ == o.f1_ && f2_ == o.f2_; }
  bool operator!=(const PolyMap& o) const { return !(*this == o); }

  std::string str() const;

 private:
  BiPoly f1_, f2_;
};

/// Componentwise total degrees in the product order; both entries >= 1 for
/// candidate automorphisms.
struct DegVec {
  int d1 = 0;
  int d2 = 0;
  int sum() const { return d1 + d2; }
  bool operator==(const DegVec& o) const { return d1 == o.d1 && d2 == o.d2; }
  /// Strict product-order comparison (both components <=, at least one <).
  bool strictly_below(const DegVec& o) const {
    return d1 <= o.d1 && d2 <= o.d2 && (d1 < o.d1 || d2 < o.d2);
  }
};

/// (F o G)_i = F_i(G_1, G_2); in a factor list the leftmost map is applied
/// last, so compose(A, compose(B, C)) realizes the product A B C.
PolyMap compose(const PolyMap& f, const PolyMap& g);

bool is_identity(const PolyMap& f);

/// Throws std::domain_error on constant components.
DegVec deg_vec(const PolyMap& f);

/// Linear-plus-translation factor with unit determinant, row-major matrix.
struct AffineFactor {
  Ring ring;
  std::array<Coeff, 4> m;  // m11 m12 m21 m22
  std::array<Coeff, 2> t;  // t1 t2
  Coeff det() const { return m[0] * m[3] - m[1] * m[2]; }
};

/// (X + p(Y), Y) for axis 1 and (X, Y + p(X)) for axis 2; p has degree >= 2
/// or is zero, lower-degree content belongs to affine factors.
struct ElementaryFactor {
  Ring ring;
  int axis = 1;
  std::vector<Coeff> p;  // coefficient of the i-th power
};

using Factor = std::variant<AffineFactor, ElementaryFactor>;

AffineFactor make_affine(Ring ring, std::array<Coeff, 4> m, std::array<Coeff, 2> t);
ElementaryFactor make_elementary(Ring ring, int axis, std::vector<Coeff> p);

const Ring& factor_ring(const Factor& f);
PolyMap factor_to_map(const Factor& f);
Factor factor_inverse(const Factor& f);
bool factor_valid(const Factor& f);  // invariants: unit determinant, degree rule

/// Move a factor's coefficients into another ring with the same fraction
/// field; throws when any coefficient falls outside.
Factor factor_convert(const Factor& f, const Ring& target);

std::string factor_str(const Factor& f);

/// Ordered factor list together with the map it certifies; the composed
/// product must reproduce the certified map exactly.
class Decomposition {
 public:
  Decomposition(std::vector<Factor> factors, PolyMap certified);

  const std::vector<Factor>& factors() const { return factors_; }
  const PolyMap& certified() const { return certified_; }

  PolyMap compose_all() const;
  bool verify() const;  // recomposition and per-factor invariants

 private:
  std::vector<Factor> factors_;
  PolyMap certified_;
};

}  // namespace tame2
