#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tame2/numeric.hpp"
#include "tame2/upoly.hpp"

namespace tame2 {

/// Exponent pair of a monomial in the two coefficient-ring generators.
struct Mon2 {
  int a = 0;  // first generator
  int b = 0;  // second generator
  int deg() const { return a + b; }
  bool operator==(const Mon2& o) const { return a == o.a && b == o.b; }
  bool divides(const Mon2& o) const { return a <= o.a && b <= o.b; }
};

/// Graded reverse lexicographic order, first generator heaviest.
struct GrevlexLess {
  bool operator()(const Mon2& x, const Mon2& y) const {
    if (x.deg() != y.deg()) return x.deg() < y.deg();
    return x.b > y.b;
  }
};

/// Sparse bivariate polynomial over the rationals under the fixed grevlex
/// order. Used both as the Groebner kernel's working type and as the payload
/// of bivariate coefficient-ring elements.
class MPoly2 {
 public:
  using Terms = std::map<Mon2, Rat, GrevlexLess>;

  MPoly2() = default;
  explicit MPoly2(const Rat& constant);
  static MPoly2 monomial(Mon2 m, const Rat& c = Rat(1));
  static MPoly2 gen(int which);  // 0 or 1

  bool is_zero() const { return t_.empty(); }
  bool is_constant() const;
  int total_degree() const;  // -1 for zero
  const Terms& terms() const { return t_; }
  Rat coeff(Mon2 m) const;

  Mon2 lm() const;       // grevlex-leading monomial
  const Rat& lc() const; // grevlex-leading coefficient
  Rat lc_lex() const;    // leading coefficient under plain lex (a, then b)

  MPoly2 operator+(const MPoly2& o) const;
  MPoly2 operator-(const MPoly2& o) const;
  MPoly2 operator*(const MPoly2& o) const;
  MPoly2 operator-() const;
  bool operator==(const MPoly2& o) const { return t_ == o.t_; }
  bool operator!=(const MPoly2& o) const { return !(*this == o); }

  MPoly2 scaled(const Rat& k) const;
  MPoly2 mul_monomial(Mon2 m, const Rat& c) const;
  MPoly2 pow(unsigned e) const;

  std::optional<MPoly2> exact_div(const MPoly2& d) const;

  std::string str(const std::string& g1, const std::string& g2) const;

 private:
  Terms t_;
  void add_term(Mon2 m, const Rat& c);
  friend MPoly2 mpoly2_from_terms(MPoly2::Terms t);
};

MPoly2 mpoly2_from_terms(MPoly2::Terms t);

/// gcd, unit-normalized to leading coefficient 1 under the fixed order.
/// Computed by content extraction and a primitive subresultant remainder
/// sequence in the second generator over polynomials in the first.
MPoly2 gcd_bivar(const MPoly2& a, const MPoly2& b);

/// Basis element together with its representation in the original pair:
/// g == u*a + v*b.
struct TrackedPoly {
  MPoly2 g, u, v;
};

/// Reduced Groebner basis of (a, b) with cofactor tracking.
std::vector<TrackedPoly> buchberger_pair(const MPoly2& a, const MPoly2& b);

struct UnitIdealCofactors {
  MPoly2 s, t;  // s*a + t*b == 1
};
/// Empty optional means the ideal is proper (reduced basis != {1}).
std::optional<UnitIdealCofactors> unit_ideal_cofactors(const MPoly2& a, const MPoly2& b);

bool ideal_membership(const MPoly2& g, const std::vector<MPoly2>& gens);

/// If g lies in (a, b), produce u, v with g == u*a + v*b.
std::optional<UnitIdealCofactors> pair_membership_cofactors(const MPoly2& g, const MPoly2& a,
                                                            const MPoly2& b);

/// Remainder of g on division by the basis (used by tests to check the
/// reduced-basis property).
MPoly2 reduce_by_basis(const MPoly2& g, const std::vector<MPoly2>& basis);

}  // namespace tame2
