#pragma once

#include <array>

#include "qxgcd/errors.hpp"
#include "qxgcd/ring.hpp"
#include "qxgcd/xgcd.hpp"

namespace qxgcd {

// An element together with its expression u*X + v*Y in the generators of
// the tracking context.
struct TrackedElement {
  QInt elem;
  QInt u;
  QInt v;
};

inline TrackedElement tracked_mul(const RingSpec& ring, const TrackedElement& t,
                                  const QInt& factor) {
  return {mul(ring, t.elem, factor), mul(ring, t.u, factor),
          mul(ring, t.v, factor)};
}

inline TrackedElement tracked_scale(const TrackedElement& t, const Int& k) {
  return {scale(t.elem, k), scale(t.u, k), scale(t.v, k)};
}

inline TrackedElement tracked_add(const TrackedElement& a,
                                  const TrackedElement& b) {
  return {{a.elem.x0 + b.elem.x0, a.elem.x1 + b.elem.x1},
          {a.u.x0 + b.u.x0, a.u.x1 + b.u.x1},
          {a.v.x0 + b.v.x0, a.v.x1 + b.v.x1}};
}

// ka*a + kb*b
inline TrackedElement tracked_combine(const Int& ka, const TrackedElement& a,
                                      const Int& kb, const TrackedElement& b) {
  return tracked_add(tracked_scale(a, ka), tracked_scale(b, kb));
}

// The Z-module [a, b + c*theta] = Z*a + Z*(b + c*theta).
struct IdealBasis {
  Int a;
  Int b;
  Int c;

  friend bool operator==(const IdealBasis&, const IdealBasis&) = default;
};

// Canonical basis of X*Z[theta] + Y*Z[theta] with Bezout certificates for
// both basis elements.
struct ModBasis {
  IdealBasis basis;
  TrackedElement cert_a;   // elem == a
  TrackedElement cert_bc;  // elem == b + c*theta
};

// Intermediate quantities of sum_basis, kept for inspection.
struct SumTrace {
  Int d1, d2, d3;
  XgcdResult2 bezout1, bezout2, bezout3;
  std::array<Int, 3> three_integers;
  XgcdResult3 three_coeffs;
};

struct SumBasisResult {
  ModBasis basis;
  SumTrace trace;
};

inline Int ideal_norm(const IdealBasis& basis) { return basis.a * basis.c; }

// The three lattice conditions c | a, c | b, ac | N(b + c*theta), plus the
// canonical ranges a > 0, c > 0, 0 <= b < a.
inline bool is_valid_basis(const RingSpec& ring, const IdealBasis& basis) {
  const auto& [a, b, c] = basis;
  if (a <= 0 || c <= 0 || b < 0 || b >= a) return false;
  if (!divides(c, a) || !divides(c, b)) return false;
  return divides(a * c, norm(ring, QInt{b, c}));
}

inline bool is_valid_basis(const RingSpec& ring, const ModBasis& mb) {
  return is_valid_basis(ring, mb.basis) &&
         mb.cert_a.elem == QInt{mb.basis.a, 0} &&
         mb.cert_bc.elem == QInt{mb.basis.b, mb.basis.c};
}

inline bool contains(const RingSpec&, const IdealBasis& basis, const QInt& z) {
  if (!divides(basis.c, z.x1)) return false;
  return divides(basis.a, z.x0 - (z.x1 / basis.c) * basis.b);
}

namespace detail {

// Splits the Z-span of {x, x*theta} into a rational element N(x)/d and an
// element with theta-coefficient d, d = gcd(x1, x0 + x1*s). Returns the
// Bezout pair (u, v) of u*x1 + v*(x0 + x1*s) = d.
struct GeneratorSplit {
  TrackedElement rational;
  TrackedElement with_theta;
  XgcdResult2 bezout;
};

inline GeneratorSplit split_generator(const RingSpec& ring,
                                      const TrackedElement& x) {
  const Int& x0 = x.elem.x0;
  const Int& x1 = x.elem.x1;
  const Int shifted = x0 + x1 * ring.s;
  XgcdResult2 bz = xgcd2(x1, shifted);
  const Int& d = bz.g;
  GeneratorSplit out;
  out.rational = tracked_mul(ring, x, QInt{shifted / d, -x1 / d});
  out.with_theta = tracked_mul(ring, x, QInt{bz.u, bz.v});
  out.bezout = std::move(bz);
  return out;
}

}  // namespace detail

inline SumBasisResult sum_basis(const RingSpec& ring, const QInt& x,
                                const QInt& y) {
  if (x.is_zero() && y.is_zero()) throw ZeroIdeal("both generators are zero");

  TrackedElement gx{x, {1, 0}, {0, 0}};
  TrackedElement gy{y, {0, 0}, {1, 0}};
  if (x.is_zero()) gx = gy;
  if (y.is_zero()) gy = gx;

  const auto sx = detail::split_generator(ring, gx);
  const auto sy = detail::split_generator(ring, gy);

  SumTrace tr;
  tr.d1 = sx.bezout.g;
  tr.d2 = sy.bezout.g;
  tr.bezout1 = sx.bezout;
  tr.bezout2 = sy.bezout;
  tr.bezout3 = xgcd2(tr.d1, tr.d2);
  tr.d3 = tr.bezout3.g;

  // Both theta-bearing elements become one rational element and one with
  // theta-coefficient d3.
  const TrackedElement mixed_rational = tracked_combine(
      tr.d2 / tr.d3, sx.with_theta, -(tr.d1 / tr.d3), sy.with_theta);
  TrackedElement mixed_theta = tracked_combine(
      tr.bezout3.u, sx.with_theta, tr.bezout3.v, sy.with_theta);

  tr.three_integers = {sx.rational.elem.x0, sy.rational.elem.x0,
                       mixed_rational.elem.x0};
  tr.three_coeffs = xgcd3(tr.three_integers[0], tr.three_integers[1],
                          tr.three_integers[2]);

  const Int& a = tr.three_coeffs.g;
  if (a == 0) throw InternalInvariant("sum_basis: ideal has rank < 2");

  TrackedElement cert_a = tracked_add(
      tracked_combine(tr.three_coeffs.u, sx.rational, tr.three_coeffs.v,
                      sy.rational),
      tracked_scale(mixed_rational, tr.three_coeffs.w));

  const Int shift = floor_div(mixed_theta.elem.x0, a);
  mixed_theta = tracked_combine(1, mixed_theta, -shift, cert_a);

  SumBasisResult out;
  out.basis.basis = {a, mixed_theta.elem.x0, mixed_theta.elem.x1};
  out.basis.cert_a = std::move(cert_a);
  out.basis.cert_bc = std::move(mixed_theta);
  out.trace = std::move(tr);

  if (!is_valid_basis(ring, out.basis)) {
    throw InternalInvariant("sum_basis produced an invalid ideal basis");
  }
  return out;
}

}  // namespace qxgcd
