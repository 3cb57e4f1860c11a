#pragma once

// Reference computations that share no code with the ideal-basis and
// quadratic-form route. Slow, exhaustive, meant for cross-checking.

#include <optional>
#include <utility>
#include <vector>

#include "qxgcd/errors.hpp"
#include "qxgcd/ideal.hpp"
#include "qxgcd/qform.hpp"
#include "qxgcd/ring.hpp"

namespace qxgcd::oracle {

// Rows (constant, theta-coefficient) spanning a sublattice of Z^2.
using RowList = std::vector<std::pair<Int, Int>>;

// Hermite normal form [a, b + c*theta] of the lattice spanned by rows:
// a > 0, c > 0, 0 <= b < a.
inline IdealBasis hnf_2col(RowList rows) {
  // Euclid on the second column by row subtraction until one pivot remains.
  while (true) {
    std::size_t pivot = rows.size();
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].second == 0) continue;
      if (pivot == rows.size() ||
          abs(rows[i].second) < abs(rows[pivot].second)) {
        pivot = i;
      }
    }
    if (pivot == rows.size()) throw RankDeficient("no theta component");
    bool done = true;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == pivot || rows[i].second == 0) continue;
      const Int q = floor_div(rows[i].second, rows[pivot].second);
      rows[i].first -= q * rows[pivot].first;
      rows[i].second -= q * rows[pivot].second;
      if (rows[i].second != 0) done = false;
    }
    if (!done) continue;

    auto [b, c] = rows[pivot];
    if (c < 0) {
      b = -b;
      c = -c;
    }
    Int a = 0;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i != pivot) a = gcd(a, rows[i].first);
    }
    if (a == 0) throw RankDeficient("rows span a rank-1 lattice");
    return {a, floor_mod(b, a), c};
  }
}

// Rows X, X*theta, Y, Y*theta of the ideal (X, Y), written out by hand.
inline RowList ideal_rows(const RingSpec& ring, const QInt& x, const QInt& y) {
  RowList rows;
  for (const QInt* z : {&x, &y}) {
    rows.emplace_back(z->x0, z->x1);
    rows.emplace_back(-ring.p * z->x1, z->x0 + ring.s * z->x1);
  }
  return rows;
}

// Common divisor of X and Y of largest norm among x0 + x1*theta with
// |x0|, |x1| <= bound. Imaginary rings only.
inline QInt brute_gcd(const RingSpec& ring, const QInt& x, const QInt& y,
                      const Int& bound) {
  if (!ring.imaginary()) {
    throw InvalidRing("brute_gcd needs an imaginary ring");
  }
  const Int nx = norm(ring, x);
  const Int ny = norm(ring, y);
  std::optional<QInt> best;
  Int best_norm = 0;
  for (Int c0 = -bound; c0 <= bound; ++c0) {
    for (Int c1 = -bound; c1 <= bound; ++c1) {
      if (c0 == 0 && c1 == 0) continue;
      const QInt z{c0, c1};
      const Int nz = norm(ring, z);
      if (nz <= best_norm) continue;
      if (!divides(nz, nx) || !divides(nz, ny)) continue;
      if (!exact_div(ring, x, z) || !exact_div(ring, y, z)) continue;
      best = z;
      best_norm = nz;
    }
  }
  if (!best) throw BoundTooSmall("no common divisor inside the box");
  return *best;
}

// Pair with |q(m, n)| = 1 of least max(|m|, |n|), ties broken by the
// lexicographic order on (m, n).
inline std::optional<SolutionPair> brute_unit_rep(const QForm& q,
                                                  const Int& bound) {
  for (Int r = 0; r <= bound; ++r) {
    for (Int m = -r; m <= r; ++m) {
      for (Int n = -r; n <= r; ++n) {
        if (abs(m) != r && abs(n) != r) continue;
        if (abs(evaluate(q, m, n)) == 1) return SolutionPair{m, n};
      }
    }
  }
  return std::nullopt;
}

}  // namespace qxgcd::oracle
