#include "core/fieldpoly.hpp"

#include <algorithm>

#include "core/err.hpp"
#include "core/nt.hpp"

namespace zetafn {

bool felem_less(const FElem& a, const FElem& b) {
  for (size_t i = a.size(); i-- > 0;) {
    if (a[i] != b[i]) return a[i] < b[i];
  }
  return false;
}

FPoly fp_trim(const Field& F, FPoly a) {
  while (!a.empty() && F->is_zero(a.back())) a.pop_back();
  return a;
}

int fp_deg(const FPoly& a) { return (int)a.size() - 1; }

bool fp_is_zero(const FPoly& a) { return a.empty(); }

FPoly fp_x(const Field& F) { return {F->zero(), F->one()}; }

FPoly fp_const(const Field& F, const FElem& c) {
  if (F->is_zero(c)) return {};
  return {c};
}

FPoly fp_add(const Field& F, const FPoly& a, const FPoly& b) {
  FPoly r(std::max(a.size(), b.size()), F->zero());
  for (size_t i = 0; i < a.size(); i++) r[i] = a[i];
  for (size_t i = 0; i < b.size(); i++) r[i] = F->add(r[i], b[i]);
  return fp_trim(F, std::move(r));
}

FPoly fp_sub(const Field& F, const FPoly& a, const FPoly& b) {
  FPoly r(std::max(a.size(), b.size()), F->zero());
  for (size_t i = 0; i < a.size(); i++) r[i] = a[i];
  for (size_t i = 0; i < b.size(); i++) r[i] = F->sub(r[i], b[i]);
  return fp_trim(F, std::move(r));
}

FPoly fp_neg(const Field& F, const FPoly& a) {
  FPoly r = a;
  for (auto& c : r) c = F->neg(c);
  return r;
}

FPoly fp_mul(const Field& F, const FPoly& a, const FPoly& b) {
  if (a.empty() || b.empty()) return {};
  FPoly r(a.size() + b.size() - 1, F->zero());
  for (size_t i = 0; i < a.size(); i++) {
    if (F->is_zero(a[i])) continue;
    for (size_t j = 0; j < b.size(); j++) {
      if (F->is_zero(b[j])) continue;
      r[i + j] = F->add(r[i + j], F->mul(a[i], b[j]));
    }
  }
  return fp_trim(F, std::move(r));
}

FPoly fp_scale(const Field& F, const FPoly& a, const FElem& c) {
  if (F->is_zero(c)) return {};
  FPoly r = a;
  for (auto& x : r) x = F->mul(x, c);
  return r;
}

std::pair<FPoly, FPoly> fp_divmod(const Field& F, const FPoly& a, const FPoly& b) {
  if (b.empty()) fail(Err::BadArg, "division by zero polynomial");
  if (a.size() < b.size()) return {FPoly{}, a};
  FElem ilead = F->inv(b.back());
  FPoly rem = a;
  FPoly q(a.size() - b.size() + 1, F->zero());
  for (size_t i = q.size(); i-- > 0;) {
    FElem c = F->mul(rem[i + b.size() - 1], ilead);
    if (F->is_zero(c)) continue;
    q[i] = c;
    for (size_t j = 0; j < b.size(); j++) rem[i + j] = F->sub(rem[i + j], F->mul(c, b[j]));
  }
  return {fp_trim(F, std::move(q)), fp_trim(F, std::move(rem))};
}

FPoly fp_mod(const Field& F, const FPoly& a, const FPoly& b) { return fp_divmod(F, a, b).second; }

FPoly fp_monic(const Field& F, const FPoly& a) {
  if (a.empty()) return a;
  return fp_scale(F, a, F->inv(a.back()));
}

FPoly fp_gcd(const Field& F, FPoly a, FPoly b) {
  a = fp_trim(F, std::move(a));
  b = fp_trim(F, std::move(b));
  while (!b.empty()) {
    FPoly r = fp_mod(F, a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return fp_monic(F, a);
}

FPoly fp_powmod(const Field& F, const FPoly& base, const mpz_class& e, const FPoly& mod) {
  FPoly r{F->one()};
  r = fp_mod(F, r, mod);
  FPoly b = fp_mod(F, base, mod);
  for (long i = (long)mpz_sizeinbase(e.get_mpz_t(), 2) - 1; i >= 0; i--) {
    r = fp_mod(F, fp_mul(F, r, r), mod);
    if (mpz_tstbit(e.get_mpz_t(), i)) r = fp_mod(F, fp_mul(F, r, b), mod);
  }
  return r;
}

FElem fp_eval(const Field& F, const FPoly& a, const FElem& x) {
  FElem r = F->zero();
  for (size_t i = a.size(); i-- > 0;) r = F->add(F->mul(r, x), a[i]);
  return r;
}

FPoly fp_derivative(const Field& F, const FPoly& a) {
  if (a.size() <= 1) return {};
  FPoly r(a.size() - 1, F->zero());
  for (size_t i = 1; i < a.size(); i++) {
    FElem m = F->from_int(i % F->p);
    r[i - 1] = F->mul(a[i], m);
  }
  return fp_trim(F, std::move(r));
}

static FPoly pth_root_poly(const Field& F, const FPoly& a) {
  // a has only T^(p*i) terms; take the p-th root coefficientwise.
  FPoly r((a.size() + F->p - 1) / F->p, F->zero());
  mpz_class e = F->q / F->p;  // c^(p^(k-1)) is the p-th root
  for (size_t i = 0; i < a.size(); i += F->p) r[i / F->p] = F->pow(a[i], e);
  return fp_trim(F, std::move(r));
}

static void squarefree_rec(const Field& F, const FPoly& f, int mult,
                           std::vector<std::pair<FPoly, int>>& out) {
  if (fp_deg(f) < 1) return;
  FPoly df = fp_derivative(F, f);
  if (fp_is_zero(df)) {
    squarefree_rec(F, pth_root_poly(F, f), mult * (int)F->p, out);
    return;
  }
  FPoly c = fp_gcd(F, f, df);
  FPoly w = fp_divmod(F, f, c).first;  // product of factors with mult not divisible by p
  int i = 1;
  while (fp_deg(w) > 0) {
    FPoly y = fp_gcd(F, w, c);
    FPoly fac = fp_divmod(F, w, y).first;
    if (fp_deg(fac) > 0) out.push_back({fp_monic(F, fac), mult * i});
    w = std::move(y);
    c = fp_divmod(F, c, w).first;
    i++;
  }
  // remaining c is a p-th power
  squarefree_rec(F, c, mult, out);
}

std::vector<std::pair<FPoly, int>> fp_squarefree(const Field& F, const FPoly& a) {
  std::vector<std::pair<FPoly, int>> out;
  squarefree_rec(F, fp_monic(F, fp_trim(F, a)), 1, out);
  std::sort(out.begin(), out.end(), [](auto& x, auto& y) { return x.second < y.second; });
  return out;
}

// Split a product of distinct degree-d irreducibles into the irreducibles.
static void edf(const Field& F, const FPoly& f, unsigned d, Rng& rng, std::vector<FPoly>& out) {
  if ((unsigned)fp_deg(f) == d) {
    out.push_back(fp_monic(F, f));
    return;
  }
  unsigned n = fp_deg(f);
  FPoly a(n, F->zero());
  while (true) {
    for (auto& c : a) {
      if (F->q_u64)
        c = F->unrank(rng.below(F->q_u64));
      else {
        for (auto& digit : c) digit = (uint32_t)rng.below(F->p);
      }
    }
    FPoly b;
    if (F->p == 2) {
      // trace map over F_2 of the degree-d residue algebra
      unsigned m = F->k * d;
      FPoly t = fp_mod(F, a, f);
      b = t;
      for (unsigned i = 1; i < m; i++) {
        t = fp_mod(F, fp_mul(F, t, t), f);
        b = fp_add(F, b, t);
      }
    } else {
      mpz_class e = (pow_mpz(F->q, d) - 1) / 2;
      b = fp_powmod(F, a, e, f);
      b = fp_sub(F, b, {F->one()});
    }
    FPoly g = fp_gcd(F, b, f);
    unsigned dg = std::max(fp_deg(g), 0);
    if (dg > 0 && dg < n) {
      edf(F, g, d, rng, out);
      edf(F, fp_divmod(F, f, g).first, d, rng, out);
      return;
    }
  }
}

std::vector<std::pair<FPoly, int>> fp_factor(const Field& F, const FPoly& a0, Rng& rng) {
  FPoly a = fp_trim(F, a0);
  if (fp_deg(a) < 1) fail(Err::BadArg, "factor of constant polynomial");
  std::vector<std::pair<FPoly, int>> out;
  for (auto& [sf, mult] : fp_squarefree(F, a)) {
    // distinct-degree on the squarefree part
    FPoly f = sf;
    FPoly h = fp_mod(F, fp_x(F), f);
    for (unsigned d = 1; 2 * d <= (unsigned)fp_deg(f); d++) {
      h = fp_powmod(F, h, F->q, f);
      FPoly g = fp_gcd(F, fp_sub(F, h, fp_x(F)), f);
      if (fp_deg(g) > 0) {
        std::vector<FPoly> irr;
        edf(F, g, d, rng, irr);
        for (auto& u : irr) out.push_back({u, mult});
        f = fp_divmod(F, f, g).first;
        h = fp_mod(F, h, f);
      }
    }
    if (fp_deg(f) > 0) out.push_back({fp_monic(F, f), mult});
  }
  std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) {
    if (x.first.size() != y.first.size()) return x.first.size() < y.first.size();
    for (size_t i = x.first.size(); i-- > 0;) {
      if (x.first[i] != y.first[i]) return felem_less(x.first[i], y.first[i]);
    }
    return x.second < y.second;
  });
  return out;
}

std::vector<std::pair<FElem, int>> fp_roots(const Field& F, const FPoly& a, Rng& rng) {
  FPoly f = fp_trim(F, a);
  std::vector<std::pair<FElem, int>> out;
  if (fp_deg(f) < 1) return out;
  // roots of the squarefree part, then multiplicities by repeated division
  FPoly xq = fp_powmod(F, fp_x(F), F->q, f);
  FPoly lin = fp_gcd(F, fp_sub(F, xq, fp_x(F)), f);
  if (fp_deg(lin) < 1) return out;
  std::vector<FPoly> irr;
  edf(F, lin, 1, rng, irr);
  for (auto& u : irr) {
    FElem r = F->neg(u[0]);
    int mult = 0;
    FPoly g = f;
    FPoly d{F->neg(r), F->one()};
    while (true) {
      auto [q, rem] = fp_divmod(F, g, d);
      if (!fp_is_zero(rem)) break;
      mult++;
      g = std::move(q);
    }
    out.push_back({r, mult});
  }
  std::sort(out.begin(), out.end(), [](auto& x, auto& y) { return felem_less(x.first, y.first); });
  return out;
}

bool fp_irreducible(const Field& F, const FPoly& a) {
  FPoly f = fp_trim(F, a);
  int n = fp_deg(f);
  if (n < 1) return false;
  if (n == 1) return true;
  FPoly h = fp_powmod(F, fp_x(F), F->q, f);
  FPoly acc = h;
  for (int d = 1; 2 * d <= n; d++) {
    if (d > 1) acc = fp_powmod(F, acc, F->q, f);
    FPoly g = fp_gcd(F, fp_sub(F, acc, fp_x(F)), f);
    if (fp_deg(g) != 0) return false;
  }
  return true;
}

}  // namespace zetafn
