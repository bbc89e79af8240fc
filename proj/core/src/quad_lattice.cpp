#include "tame2/quad_lattice.hpp"

#include <stdexcept>

namespace tame2 {

bool QuadLattice::contains(const Int& x, const Int& y) const {
  return solve(x, y).has_value();
}

std::optional<std::pair<Int, Int>> QuadLattice::solve(const Int& x, const Int& y) const {
  if (x % a != 0) return std::nullopt;
  Int p = x / a;
  Int rem = y - p * b;
  if (rem % c != 0) return std::nullopt;
  return std::make_pair(p, Int(rem / c));
}

TrackedQuadLattice lattice_from_vectors_tracked(const std::vector<std::pair<Int, Int>>& gens) {
  const size_t n = gens.size();
  if (n < 2) throw std::invalid_argument("lattice_from_vectors: need at least two vectors");
  std::vector<std::pair<Int, Int>> rows = gens;
  std::vector<std::vector<Int>> expr(n, std::vector<Int>(n, Int(0)));
  for (size_t i = 0; i < n; ++i) expr[i][i] = 1;

  auto row_sub = [&](size_t i, size_t j, const Int& q) {
    // rows[i] -= q * rows[j]
    rows[i].first -= q * rows[j].first;
    rows[i].second -= q * rows[j].second;
    for (size_t k = 0; k < n; ++k) expr[i][k] -= q * expr[j][k];
  };
  auto row_swap = [&](size_t i, size_t j) {
    std::swap(rows[i], rows[j]);
    std::swap(expr[i], expr[j]);
  };
  auto row_neg = [&](size_t i) {
    rows[i].first = -rows[i].first;
    rows[i].second = -rows[i].second;
    for (size_t k = 0; k < n; ++k) expr[i][k] = -expr[i][k];
  };

  // Column 1: Euclidean elimination to a single pivot in row 0.
  while (true) {
    size_t best = n;
    for (size_t i = 0; i < n; ++i) {
      if (rows[i].first == 0) continue;
      if (best == n || abs(rows[i].first) < abs(rows[best].first)) best = i;
    }
    if (best == n) throw std::invalid_argument("lattice rank < 2 (no x component)");
    if (best != 0) row_swap(0, best);
    if (rows[0].first < 0) row_neg(0);
    bool done = true;
    for (size_t i = 1; i < n; ++i) {
      if (rows[i].first != 0) {
        Int q = rows[i].first / rows[0].first;
        row_sub(i, 0, q);
        if (rows[i].first != 0) done = false;
      }
    }
    if (done) break;
  }
  // Column 2 among rows 1..n-1.
  while (true) {
    size_t best = n;
    for (size_t i = 1; i < n; ++i) {
      if (rows[i].second == 0) continue;
      if (best == n || abs(rows[i].second) < abs(rows[best].second)) best = i;
    }
    if (best == n) throw std::invalid_argument("lattice rank < 2 (degenerate second column)");
    if (best != 1) row_swap(1, best);
    if (rows[1].second < 0) row_neg(1);
    bool done = true;
    for (size_t i = 2; i < n; ++i) {
      if (rows[i].second != 0) {
        Int q = rows[i].second / rows[1].second;
        row_sub(i, 1, q);
        if (rows[i].second != 0) done = false;
      }
    }
    if (done) break;
  }
  // Canonicalize: 0 <= b < c.
  Int c = rows[1].second;
  Int q = rows[0].second / c;
  if (rows[0].second - q * c < 0) q -= 1;
  row_sub(0, 1, q);

  TrackedQuadLattice out;
  out.lattice = QuadLattice{rows[0].first, rows[0].second, c};
  out.basis_expr = {expr[0], expr[1]};
  return out;
}

QuadLattice lattice_from_vectors(const std::vector<std::pair<Int, Int>>& gens) {
  return lattice_from_vectors_tracked(gens).lattice;
}

QuadLattice ideal_lattice(const std::vector<std::pair<Int, Int>>& elems) {
  std::vector<std::pair<Int, Int>> vecs;
  for (const auto& [x, y] : elems) {
    vecs.emplace_back(x, y);
    vecs.emplace_back(Int(-5) * y, x);  // r5 * (x + y*r5)
  }
  return lattice_from_vectors(vecs);
}

std::vector<std::pair<Int, Int>> ideal_product_gens(const std::vector<std::pair<Int, Int>>& x,
                                                    const std::vector<std::pair<Int, Int>>& y) {
  std::vector<std::pair<Int, Int>> out;
  for (const auto& [a, b] : x) {
    for (const auto& [c, d] : y) {
      out.emplace_back(a * c - 5 * b * d, a * d + b * c);
    }
  }
  return out;
}

}  // namespace tame2
