#pragma once

#include <array>
#include <ostream>
#include <set>
#include <utility>

#include "qxgcd/errors.hpp"
#include "qxgcd/ideal.hpp"
#include "qxgcd/integer.hpp"
#include "qxgcd/ring.hpp"

namespace qxgcd {

// a*x^2 + b*x*y + c*y^2
struct QForm {
  Int a;
  Int b;
  Int c;

  friend bool operator==(const QForm&, const QForm&) = default;
};

inline std::ostream& operator<<(std::ostream& os, const QForm& q) {
  return os << "[" << q.a << ", " << q.b << ", " << q.c << "]";
}

// 2x2 integer matrix acting on column vectors (x, y).
struct UniMat {
  Int m00 = 1, m01 = 0;
  Int m10 = 0, m11 = 1;

  static UniMat identity() { return {}; }

  Int det() const { return m00 * m11 - m01 * m10; }

  friend bool operator==(const UniMat&, const UniMat&) = default;
};

inline std::ostream& operator<<(std::ostream& os, const UniMat& m) {
  return os << "[[" << m.m00 << ", " << m.m01 << "], [" << m.m10 << ", "
            << m.m11 << "]]";
}

inline UniMat operator*(const UniMat& l, const UniMat& r) {
  return {l.m00 * r.m00 + l.m01 * r.m10, l.m00 * r.m01 + l.m01 * r.m11,
          l.m10 * r.m00 + l.m11 * r.m10, l.m10 * r.m01 + l.m11 * r.m11};
}

struct SolutionPair {
  Int m;
  Int n;

  friend bool operator==(const SolutionPair&, const SolutionPair&) = default;
};

// A form together with M such that q(M * (x, y)) = form(x, y) for the form q
// the reduction started from.
struct ReducedForm {
  QForm form;
  UniMat transform;
};

inline std::pair<Int, Int> apply(const UniMat& m, const Int& x, const Int& y) {
  return {m.m00 * x + m.m01 * y, m.m10 * x + m.m11 * y};
}

inline Int evaluate(const QForm& q, const Int& m, const Int& n) {
  return q.a * m * m + q.b * m * n + q.c * n * n;
}

inline Int discriminant(const QForm& q) { return q.b * q.b - 4 * q.a * q.c; }

// The norm form of the ideal [a, b + c*theta] divided by its norm:
// N(x*a + y*(b + c*theta)) / (a*c).
inline QForm form_from_basis(const RingSpec& ring, const IdealBasis& basis) {
  const auto& [a, b, c] = basis;
  const Int lead_num = a;
  const Int mid_num = 2 * b + c * ring.s;
  const Int tail_num = b * b + b * c * ring.s + c * c * ring.p;
  if (!divides(c, lead_num) || !divides(c, mid_num) ||
      !divides(a * c, tail_num)) {
    throw InternalInvariant("form_from_basis: inexact division");
  }
  return {lead_num / c, mid_num / c, tail_num / (a * c)};
}

namespace detail {

// x -> x + k*y
inline QForm translate(const QForm& q, const Int& k) {
  return {q.a, q.b + 2 * q.a * k, q.a * k * k + q.b * k + q.c};
}

inline UniMat translation(const Int& k) { return {1, k, 0, 1}; }

// (x, y) -> (-y, x)
inline QForm swap(const QForm& q) { return {q.c, -q.b, q.a}; }

inline UniMat swap_matrix() { return {0, -1, 1, 0}; }

}  // namespace detail

inline bool is_reduced_definite(const QForm& q) {
  if (abs_value(q.b) > q.a || q.a > q.c) return false;
  if ((abs_value(q.b) == q.a || q.a == q.c) && q.b < 0) return false;
  return true;
}

// Gauss reduction of a positive definite form.
inline ReducedForm reduce_definite(const QForm& q) {
  if (discriminant(q) >= 0 || q.a <= 0) {
    throw NotDefinite("reduce_definite needs a positive definite form");
  }
  QForm cur = q;
  UniMat m;
  while (true) {
    // Bring b into (-a, a].
    const Int k = floor_div(cur.a - cur.b, 2 * cur.a);
    if (k != 0) {
      cur = detail::translate(cur, k);
      m = m * detail::translation(k);
    }
    if (cur.a > cur.c || (cur.a == cur.c && cur.b < 0)) {
      cur = detail::swap(cur);
      m = m * detail::swap_matrix();
      continue;
    }
    break;
  }
  return {cur, m};
}

// True for indefinite forms with |sqrt(D) - 2|a|| < b < sqrt(D).
inline bool is_reduced_indefinite(const QForm& q) {
  const Int disc = discriminant(q);
  if (disc <= 0 || q.b <= 0) return false;
  if (q.b * q.b >= disc) return false;
  const Int two_a = 2 * abs_value(q.a);
  // sqrt(D) < 2|a| + b
  const Int upper = two_a + q.b;
  if (upper * upper <= disc) return false;
  // 2|a| - b < sqrt(D)
  const Int lower = two_a - q.b;
  return lower < 0 || lower * lower < disc;
}

// One step of the indefinite reduction operator:
// (a, b, c) -> (c, r, (r^2 - D) / (4c)) with r = -b (mod 2|c|) in the
// normalizing window.
inline ReducedForm rho_step(const QForm& q) {
  const Int disc = discriminant(q);
  if (disc <= 0 || is_perfect_square(disc) || q.c == 0) {
    throw NotIndefinite("rho_step needs an indefinite form, non-square D");
  }
  const Int root = isqrt(disc);
  const Int abs_c = abs_value(q.c);
  const Int modulus = 2 * abs_c;
  Int r;
  if (abs_c > root) {
    r = floor_mod(-q.b, modulus);
    if (r > abs_c) r -= modulus;
  } else {
    r = root - floor_mod(root + q.b, modulus);
  }
  const Int t = (r + q.b) / (2 * q.c);
  QForm next{q.c, r, (r * r - disc) / (4 * q.c)};
  return {std::move(next), UniMat{0, -1, 1, t}};
}

// Applies rho until the form is reduced.
inline ReducedForm reduce_indefinite(const QForm& q) {
  QForm cur = q;
  UniMat m;
  while (!is_reduced_indefinite(cur)) {
    auto step = rho_step(cur);
    cur = std::move(step.form);
    m = m * step.transform;
  }
  return {cur, m};
}

// (m, n) with |q(m, n)| = 1.
inline SolutionPair solve_unit_rep(const QForm& q) {
  const Int disc = discriminant(q);
  if (disc < 0) {
    const ReducedForm red = reduce_definite(q);
    if (red.form.a != 1) {
      throw NonPrincipal("reduced form " + to_string(red.form.a) + "x^2+... "
                         "does not represent 1");
    }
    auto [m, n] = apply(red.transform, 1, 0);
    return {m, n};
  }
  if (disc == 0 || is_perfect_square(disc)) {
    throw NotIndefinite("solve_unit_rep needs a non-square discriminant");
  }

  QForm cur = q;
  UniMat m;
  auto unit_lead = [&]() -> bool { return abs_value(cur.a) == 1; };
  while (!is_reduced_indefinite(cur)) {
    if (unit_lead()) break;
    auto step = rho_step(cur);
    cur = std::move(step.form);
    m = m * step.transform;
  }
  std::set<std::array<Int, 3>> visited;
  while (!unit_lead()) {
    if (!visited.insert({cur.a, cur.b, cur.c}).second) {
      throw NonPrincipal("cycle of reduced forms has no form with |a| = 1");
    }
    auto step = rho_step(cur);
    cur = std::move(step.form);
    m = m * step.transform;
  }
  auto [x, y] = apply(m, 1, 0);
  return {x, y};
}

}  // namespace qxgcd
