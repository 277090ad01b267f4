#pragma once
#include <array>
#include <cstdint>

#include "core/field.hpp"
#include "core/rng.hpp"

namespace zetafn {

// Log-domain view of a tabled field: elements are discrete logs, zero is
// LOGZERO.  Kept deliberately tiny; these ops sit in the innermost loops of
// point counting.
struct TF {
  uint32_t qm1;
  uint32_t p;
  uint32_t lneg1;  // log of -1
  const uint32_t* zech;
  const uint32_t* log;
  const uint32_t* exp;

  static constexpr uint32_t LZ = ZechTables::LOGZERO;

  static TF of(const FieldDesc& F, const ZechTables& zt) {
    TF t;
    t.qm1 = (uint32_t)(F.q_u64 - 1);
    t.p = F.p;
    t.lneg1 = (F.p == 2) ? 0 : t.qm1 / 2;
    t.zech = zt.zech.data();
    t.log = zt.log.data();
    t.exp = zt.exp.data();
    return t;
  }

  uint32_t mul(uint32_t a, uint32_t b) const {
    if (a == LZ || b == LZ) return LZ;
    uint32_t s = a + b;
    return s >= qm1 ? s - qm1 : s;
  }
  uint32_t sq(uint32_t a) const { return mul(a, a); }
  uint32_t inv(uint32_t a) const { return a == 0 ? 0 : qm1 - a; }
  uint32_t neg(uint32_t a) const { return mul(a, lneg1); }
  uint32_t add(uint32_t a, uint32_t b) const {
    if (a == LZ) return b;
    if (b == LZ) return a;
    uint32_t d = a >= b ? a - b : a + qm1 - b;
    uint32_t z = zech[d];
    if (z == LZ) return LZ;
    uint32_t s = b + z;
    return s >= qm1 ? s - qm1 : s;
  }
  uint32_t sub(uint32_t a, uint32_t b) const { return add(a, neg(b)); }
  uint32_t pow_u64(uint32_t a, uint64_t e) const {
    if (a == LZ) return e ? LZ : 0;
    return (uint32_t)((__uint128_t)a * (e % qm1) % qm1);
  }
};

// Fixed-capacity univariate polynomial over a TF, coefficients as logs.
constexpr int TP_CAP = 36;

struct TPoly {
  int deg = -1;  // -1 = zero polynomial
  std::array<uint32_t, TP_CAP> c;

  void trim() {
    while (deg >= 0 && c[deg] == TF::LZ) deg--;
  }
};

inline TPoly tp_zero() { return TPoly{-1, {}}; }

inline TPoly tp_mod(const TF& f, const TPoly& a, const TPoly& b) {
  // b nonzero; result degree < deg b
  if (a.deg < b.deg) return a;
  TPoly r = a;
  uint32_t il = f.inv(b.c[b.deg]);
  for (int i = r.deg; i >= b.deg; i--) {
    uint32_t q = f.mul(r.c[i], il);
    if (q == TF::LZ) continue;
    for (int j = 0; j <= b.deg; j++) r.c[i - b.deg + j] = f.sub(r.c[i - b.deg + j], f.mul(q, b.c[j]));
  }
  r.deg = b.deg - 1;
  r.trim();
  return r;
}

inline TPoly tp_mulmod(const TF& f, const TPoly& a, const TPoly& b, const TPoly& m) {
  if (a.deg < 0 || b.deg < 0) return tp_zero();
  TPoly t;
  t.deg = a.deg + b.deg;
  for (int i = 0; i <= t.deg; i++) t.c[i] = TF::LZ;
  for (int i = 0; i <= a.deg; i++) {
    if (a.c[i] == TF::LZ) continue;
    for (int j = 0; j <= b.deg; j++) t.c[i + j] = f.add(t.c[i + j], f.mul(a.c[i], b.c[j]));
  }
  t.trim();
  if (t.deg >= m.deg) t = tp_mod(f, t, m);
  return t;
}

inline TPoly tp_powmod(const TF& f, TPoly base, uint64_t e, const TPoly& m) {
  TPoly r;
  r.deg = 0;
  r.c[0] = 0;  // the constant 1
  if (m.deg == 0) return tp_zero();
  if (base.deg >= m.deg) base = tp_mod(f, base, m);
  while (e) {
    if (e & 1) r = tp_mulmod(f, r, base, m);
    base = tp_mulmod(f, base, base, m);
    e >>= 1;
  }
  return r;
}

inline TPoly tp_gcd(const TF& f, TPoly a, TPoly b) {
  while (b.deg >= 0) {
    TPoly r = tp_mod(f, a, b);
    a = b;
    b = r;
  }
  // monic-normalise
  if (a.deg >= 0) {
    uint32_t il = f.inv(a.c[a.deg]);
    for (int i = 0; i <= a.deg; i++) a.c[i] = f.mul(a.c[i], il);
  }
  return a;
}

// x^Q - x mod m, for the field's own Q = qm1+1
inline TPoly tp_frob_minus_x(const TF& f, const TPoly& m) {
  TPoly x;
  x.deg = 1;
  x.c[0] = TF::LZ;
  x.c[1] = 0;
  TPoly xq = tp_powmod(f, x, (uint64_t)f.qm1 + 1, m);
  // xq - x
  TPoly r = xq;
  if (r.deg < 1) {
    r.deg = 1;
    for (int i = (xq.deg < 0 ? 0 : xq.deg + 1); i <= 1; i++) r.c[i] = TF::LZ;
  }
  r.c[1] = f.sub(r.c[1], 0);
  r.trim();
  return r;
}

// Number of distinct roots of m in the field.
inline int tp_count_roots(const TF& f, const TPoly& m) {
  if (m.deg <= 0) return 0;
  TPoly g = tp_gcd(f, tp_frob_minus_x(f, m), m);
  return g.deg < 0 ? 0 : g.deg;
}

// All roots (as logs) of a nonzero polynomial, distinct, unsorted.
void tp_roots(const TF& f, const TPoly& m, Rng& rng, std::vector<uint32_t>& out);

}  // namespace zetafn
