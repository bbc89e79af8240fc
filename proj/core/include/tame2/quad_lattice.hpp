#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "tame2/numeric.hpp"

namespace tame2 {

/// Full-rank sublattice of Z^2 in Hermite form: rows (a, b) and (0, c) with
/// a > 0, c > 0, 0 <= b < c. An element x + y*r5 is identified with (x, y);
/// an ideal of ZZ[r5] is the lattice spanned by g and r5*g for each
/// generator g.
struct QuadLattice {
  Int a, b, c;

  Int det() const { return a * c; }
  bool contains(const Int& x, const Int& y) const;

  /// Coordinates (p, q) with (x, y) == p*(a, b) + q*(0, c), when contained.
  std::optional<std::pair<Int, Int>> solve(const Int& x, const Int& y) const;
};

/// Lattice spanned by the given Z^2 vectors; throws if the span has rank < 2.
QuadLattice lattice_from_vectors(const std::vector<std::pair<Int, Int>>& gens);

/// Hermite reduction that also tracks how each basis row is expressed in the
/// input vectors: basis_expr[i][j] is the coefficient of gens[j] in row i.
struct TrackedQuadLattice {
  QuadLattice lattice;
  std::vector<std::vector<Int>> basis_expr;  // 2 x gens.size()
};
TrackedQuadLattice lattice_from_vectors_tracked(const std::vector<std::pair<Int, Int>>& gens);

/// Lattice of the ideal generated by the elements (x_i, y_i) of ZZ[r5]
/// (each generator contributes itself and its multiple by r5).
QuadLattice ideal_lattice(const std::vector<std::pair<Int, Int>>& elems);

/// Lattice of the product of two ideals given by their element generators.
std::vector<std::pair<Int, Int>> ideal_product_gens(const std::vector<std::pair<Int, Int>>& x,
                                                    const std::vector<std::pair<Int, Int>>& y);

}  // namespace tame2
