#include "core/tablepoly.hpp"

namespace zetafn {

static TPoly tp_quot(const TF& f, const TPoly& a, const TPoly& b) {
  if (a.deg < b.deg) return tp_zero();
  TPoly r = a;
  TPoly q;
  q.deg = a.deg - b.deg;
  for (int i = 0; i <= q.deg; i++) q.c[i] = TF::LZ;
  uint32_t il = f.inv(b.c[b.deg]);
  for (int i = r.deg; i >= b.deg; i--) {
    uint32_t qi = f.mul(r.c[i], il);
    q.c[i - b.deg] = qi;
    if (qi == TF::LZ) continue;
    for (int j = 0; j <= b.deg; j++)
      r.c[i - b.deg + j] = f.sub(r.c[i - b.deg + j], f.mul(qi, b.c[j]));
  }
  q.trim();
  return q;
}

static void split(const TF& f, const TPoly& g, Rng& rng, std::vector<uint32_t>& out) {
  if (g.deg <= 0) return;
  if (g.deg == 1) {
    // monic x + c0: root is -c0
    out.push_back(f.neg(g.c[0]));
    return;
  }
  uint64_t Q = (uint64_t)f.qm1 + 1;
  while (true) {
    TPoly h;
    if (f.p != 2) {
      // (x+a)^((Q-1)/2) - 1 mod g
      uint64_t ar = rng.below(Q);
      TPoly xa;
      xa.deg = 1;
      xa.c[1] = 0;
      xa.c[0] = ar == 0 ? TF::LZ : f.log[ar];
      h = tp_powmod(f, xa, f.qm1 / 2, g);
      if (h.deg < 0) {
        h.deg = 0;
        h.c[0] = TF::LZ;
      }
      h.c[0] = f.sub(h.deg >= 0 ? h.c[0] : TF::LZ, 0);
      h.trim();
    } else {
      // trace polynomial of a*x over F_2
      uint64_t ar = 1 + rng.below(Q - 1);
      TPoly t;
      t.deg = 1;
      t.c[1] = f.log[ar];
      t.c[0] = TF::LZ;
      TPoly acc = t;
      unsigned m = 0;
      while ((1ULL << m) < Q) m++;
      for (unsigned i = 1; i < m; i++) {
        t = tp_mulmod(f, t, t, g);
        // acc += t
        TPoly s;
        s.deg = std::max(acc.deg, t.deg);
        for (int j = 0; j <= s.deg; j++) {
          uint32_t x = j <= acc.deg ? acc.c[j] : TF::LZ;
          uint32_t y = j <= t.deg ? t.c[j] : TF::LZ;
          s.c[j] = f.add(x, y);
        }
        s.trim();
        acc = s;
      }
      h = acc;
    }
    if (h.deg < 0) continue;
    TPoly w = tp_gcd(f, h, g);
    if (w.deg > 0 && w.deg < g.deg) {
      split(f, w, rng, out);
      split(f, tp_quot(f, g, w), rng, out);
      return;
    }
  }
}

void tp_roots(const TF& f, const TPoly& m, Rng& rng, std::vector<uint32_t>& out) {
  if (m.deg <= 0) return;
  TPoly g = tp_gcd(f, tp_frob_minus_x(f, m), m);
  split(f, g, rng, out);
}

}  // namespace zetafn
