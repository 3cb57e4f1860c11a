#pragma once

#include <optional>
#include <ostream>
#include <utility>

#include "qxgcd/errors.hpp"
#include "qxgcd/integer.hpp"

namespace qxgcd {

// The maximal order Z[theta] of Q(sqrt(d)).
//
// theta = (1 + sqrt(d)) / 2 when d = 1 (mod 4), theta = sqrt(d) otherwise,
// so theta^2 = s * theta - p with s = theta + conj(theta) and
// p = theta * conj(theta).
struct RingSpec {
  Int d;
  Int s;     // trace of theta
  Int p;     // norm of theta
  Int disc;  // field discriminant s^2 - 4p

  bool imaginary() const { return d < 0; }

  friend bool operator==(const RingSpec&, const RingSpec&) = default;
};

// x0 + x1 * theta.
struct QInt {
  Int x0;
  Int x1;

  QInt() = default;
  QInt(Int c0, Int c1 = 0) : x0(std::move(c0)), x1(std::move(c1)) {}

  bool is_zero() const { return x0 == 0 && x1 == 0; }

  friend bool operator==(const QInt& a, const QInt& b) {
    return a.x0 == b.x0 && a.x1 == b.x1;
  }
  friend bool operator!=(const QInt& a, const QInt& b) { return !(a == b); }
};

inline std::ostream& operator<<(std::ostream& os, const QInt& z) {
  return os << "(" << z.x0 << ", " << z.x1 << ")";
}

inline bool is_square_free(const Int& n) {
  Int m = abs_value(n);
  if (m == 0) return false;
  for (Int f = 2; f * f <= m; ++f) {
    if (divides(f * f, m)) return false;
    while (divides(f, m)) m /= f;
  }
  return true;
}

inline RingSpec make_ring(const Int& d) {
  if (d == 0 || d == 1) {
    throw InvalidRing("d must differ from 0 and 1, got " + to_string(d));
  }
  if (!is_square_free(d)) {
    throw InvalidRing("d must be square-free, got " + to_string(d));
  }
  RingSpec ring;
  ring.d = d;
  if (floor_mod(d, 4) == 1) {
    ring.s = 1;
    ring.p = (1 - d) / 4;
    ring.disc = d;
  } else {
    ring.s = 0;
    ring.p = -d;
    ring.disc = 4 * d;
  }
  return ring;
}

inline QInt add(const RingSpec&, const QInt& z, const QInt& w) {
  return {z.x0 + w.x0, z.x1 + w.x1};
}

inline QInt sub(const RingSpec&, const QInt& z, const QInt& w) {
  return {z.x0 - w.x0, z.x1 - w.x1};
}

inline QInt neg(const RingSpec&, const QInt& z) { return {-z.x0, -z.x1}; }

// Uses theta^2 = s*theta - p.
inline QInt mul(const RingSpec& ring, const QInt& z, const QInt& w) {
  Int hi = z.x1 * w.x1;
  return {z.x0 * w.x0 - ring.p * hi, z.x0 * w.x1 + z.x1 * w.x0 + ring.s * hi};
}

inline QInt scale(const QInt& z, const Int& k) { return {z.x0 * k, z.x1 * k}; }

inline QInt conj(const RingSpec& ring, const QInt& z) {
  return {z.x0 + ring.s * z.x1, -z.x1};
}

inline Int norm(const RingSpec& ring, const QInt& z) {
  return z.x0 * z.x0 + ring.s * z.x0 * z.x1 + ring.p * z.x1 * z.x1;
}

inline Int trace(const RingSpec& ring, const QInt& z) {
  return 2 * z.x0 + ring.s * z.x1;
}

// q with q * w == z, or nullopt when w does not divide z.
inline std::optional<QInt> exact_div(const RingSpec& ring, const QInt& z,
                                     const QInt& w) {
  if (w.is_zero()) throw DivisionByZero("exact_div by zero");
  const Int n = norm(ring, w);
  const QInt t = mul(ring, z, conj(ring, w));
  if (!divides(n, t.x0) || !divides(n, t.x1)) return std::nullopt;
  return QInt{t.x0 / n, t.x1 / n};
}

inline bool divides(const RingSpec& ring, const QInt& w, const QInt& z) {
  if (w.is_zero()) return z.is_zero();
  return exact_div(ring, z, w).has_value();
}

inline bool is_unit(const RingSpec& ring, const QInt& z) {
  return abs_value(norm(ring, z)) == 1;
}

inline bool is_associate(const RingSpec& ring, const QInt& z, const QInt& w) {
  if (z.is_zero() || w.is_zero()) return z.is_zero() && w.is_zero();
  return exact_div(ring, z, w).has_value() && exact_div(ring, w, z).has_value();
}

}  // namespace qxgcd
