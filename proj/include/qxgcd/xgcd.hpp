#pragma once

#include "qxgcd/integer.hpp"

namespace qxgcd {

// g = u*a + v*b, g >= 0.
struct XgcdResult2 {
  Int g;
  Int u;
  Int v;
};

// g = u*a + v*b + w*c, g >= 0.
struct XgcdResult3 {
  Int g;
  Int u;
  Int v;
  Int w;
};

// Classical iterative extended Euclid. xgcd2(0, 0) = (0, 0, 0).
inline XgcdResult2 xgcd2(const Int& a, const Int& b) {
  Int r0 = a, r1 = b;
  Int s0 = 1, s1 = 0;
  Int t0 = 0, t1 = 1;
  while (r1 != 0) {
    const Int q = r0 / r1;
    Int tmp = r0 - q * r1;
    r0 = r1;
    r1 = tmp;
    tmp = s0 - q * s1;
    s0 = s1;
    s1 = tmp;
    tmp = t0 - q * t1;
    t0 = t1;
    t1 = tmp;
  }
  if (r0 < 0) {
    r0 = -r0;
    s0 = -s0;
    t0 = -t0;
  }
  if (r0 == 0) return {0, 0, 0};
  return {r0, s0, t0};
}

inline XgcdResult3 xgcd3(const Int& a, const Int& b, const Int& c) {
  const XgcdResult2 ab = xgcd2(a, b);
  const XgcdResult2 abc = xgcd2(ab.g, c);
  return {abc.g, abc.u * ab.u, abc.u * ab.v, abc.v};
}

}  // namespace qxgcd
