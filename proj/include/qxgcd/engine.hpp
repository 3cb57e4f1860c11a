#pragma once

#include <tuple>

#include "qxgcd/errors.hpp"
#include "qxgcd/ideal.hpp"
#include "qxgcd/qform.hpp"
#include "qxgcd/ring.hpp"

namespace qxgcd {

// u*X + v*Y = g with g a gcd of X and Y.
struct Certificate {
  QInt g;
  QInt u;
  QInt v;
};

// Everything the extended gcd computed on the way, for reporting.
struct GcdReport {
  Certificate cert;
  IdealBasis basis;
  QForm form;
  SolutionPair solution;
};

// Checks a certificate against X, Y without trusting how it was produced:
// the Bezout identity, divisibility of X and Y by g, and |N(g)| equal to the
// norm of the ideal (X, Y).
inline bool verify_certificate(const RingSpec& ring, const QInt& x,
                               const QInt& y, const Certificate& cert) {
  if (x.is_zero() && y.is_zero()) return false;
  const QInt lhs = add(ring, mul(ring, cert.u, x), mul(ring, cert.v, y));
  if (lhs != cert.g) return false;
  if (cert.g.is_zero()) return false;
  if (!exact_div(ring, x, cert.g) || !exact_div(ring, y, cert.g)) return false;
  const IdealBasis basis = sum_basis(ring, x, y).basis.basis;
  return abs_value(norm(ring, cert.g)) == ideal_norm(basis);
}

inline GcdReport quadratic_xgcd_report(const RingSpec& ring, const QInt& x,
                                       const QInt& y) {
  if (x.is_zero() && y.is_zero()) throw ZeroInput("gcd(0, 0) is undefined");

  const ModBasis mb = sum_basis(ring, x, y).basis;
  GcdReport rep;
  rep.basis = mb.basis;
  rep.form = form_from_basis(ring, mb.basis);

  if (x.is_zero() || y.is_zero()) {
    rep.cert = x.is_zero() ? Certificate{y, {0}, {1}} : Certificate{x, {1}, {0}};
    rep.solution = {0, 0};
  } else {
    rep.solution = solve_unit_rep(rep.form);
    const Int& m = rep.solution.m;
    const Int& n = rep.solution.n;
    const TrackedElement g =
        tracked_combine(m, mb.cert_a, n, mb.cert_bc);
    rep.cert = {g.elem, g.u, g.v};
  }

  if (!verify_certificate(ring, x, y, rep.cert)) {
    throw InternalInvariant("quadratic_xgcd produced an invalid certificate");
  }
  return rep;
}

inline Certificate quadratic_xgcd(const RingSpec& ring, const QInt& x,
                                  const QInt& y) {
  return quadratic_xgcd_report(ring, x, y).cert;
}

// Generator of the (finite) unit group of an imaginary ring.
inline QInt unit_group_generator(const RingSpec& ring) {
  if (ring.d == -1 || ring.d == -3) return {0, 1};  // i, or a 6th root of 1
  return {-1, 0};
}

// Lexicographically smallest (x0, x1) among the unit multiples of g in an
// imaginary ring. Real rings return g unchanged.
inline QInt normalize_associate(const RingSpec& ring, const QInt& g) {
  if (!ring.imaginary() || g.is_zero()) return g;
  const QInt gen = unit_group_generator(ring);
  QInt best = g;
  for (QInt cur = mul(ring, g, gen); cur != g; cur = mul(ring, cur, gen)) {
    if (std::tie(cur.x0, cur.x1) < std::tie(best.x0, best.x1)) best = cur;
  }
  return best;
}

}  // namespace qxgcd
