#pragma once

#include <gmpxx.h>

#include <string>

namespace qxgcd {

// Unbounded rational integer.
using Int = mpz_class;

inline Int abs_value(const Int& a) { return abs(a); }

// Floor of the square root; a must be nonnegative.
inline Int isqrt(const Int& a) { return sqrt(a); }

// Quotient rounded toward negative infinity.
inline Int floor_div(const Int& a, const Int& b) {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

// Residue in [0, |m|).
inline Int floor_mod(const Int& a, const Int& m) {
  Int r;
  mpz_mod(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  return r;
}

// True iff d divides a. divides(0, a) holds only for a == 0.
inline bool divides(const Int& d, const Int& a) {
  if (d == 0) return a == 0;
  return mpz_divisible_p(a.get_mpz_t(), d.get_mpz_t()) != 0;
}

inline bool is_perfect_square(const Int& a) {
  return a >= 0 && mpz_perfect_square_p(a.get_mpz_t()) != 0;
}

inline std::string to_string(const Int& a) { return a.get_str(); }

}  // namespace qxgcd
