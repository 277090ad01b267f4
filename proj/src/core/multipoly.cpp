#include "core/multipoly.hpp"

#include <algorithm>

#include "core/err.hpp"
#include "core/fieldpoly.hpp"

namespace zetafn {

MPoly mp_zero(unsigned nvars) { return MPoly{nvars, {}}; }

MPoly mp_const(const Field& F, unsigned nvars, const FElem& c) {
  MPoly a{nvars, {}};
  if (!F->is_zero(c)) a.t.emplace(std::vector<uint16_t>(nvars, 0), c);
  return a;
}

MPoly mp_var(const Field& F, unsigned nvars, unsigned i) {
  MPoly a{nvars, {}};
  std::vector<uint16_t> e(nvars, 0);
  e[i] = 1;
  a.t.emplace(std::move(e), F->one());
  return a;
}

void mp_set(const Field& F, MPoly& a, const std::vector<uint16_t>& exps, const FElem& c) {
  if (F->is_zero(c))
    a.t.erase(exps);
  else
    a.t[exps] = c;
}

void mp_addto(const Field& F, MPoly& a, const std::vector<uint16_t>& exps, const FElem& c) {
  auto it = a.t.find(exps);
  if (it == a.t.end()) {
    if (!F->is_zero(c)) a.t.emplace(exps, c);
    return;
  }
  it->second = F->add(it->second, c);
  if (F->is_zero(it->second)) a.t.erase(it);
}

bool mp_is_zero(const MPoly& a) { return a.t.empty(); }

int mp_total_deg(const MPoly& a) {
  int d = -1;
  for (auto& [e, c] : a.t) {
    int s = 0;
    for (auto x : e) s += x;
    d = std::max(d, s);
  }
  return d;
}

int mp_deg_in(const MPoly& a, unsigned v) {
  int d = -1;
  for (auto& [e, c] : a.t) d = std::max(d, (int)e[v]);
  return d;
}

bool mp_is_homogeneous(const MPoly& a) {
  int d = -1;
  for (auto& [e, c] : a.t) {
    int s = 0;
    for (auto x : e) s += x;
    if (d < 0) d = s;
    if (s != d) return false;
  }
  return true;
}

MPoly mp_add(const Field& F, const MPoly& a, const MPoly& b) {
  MPoly r = a;
  for (auto& [e, c] : b.t) mp_addto(F, r, e, c);
  return r;
}

MPoly mp_sub(const Field& F, const MPoly& a, const MPoly& b) {
  MPoly r = a;
  for (auto& [e, c] : b.t) mp_addto(F, r, e, F->neg(c));
  return r;
}

MPoly mp_neg(const Field& F, const MPoly& a) {
  MPoly r = a;
  for (auto& [e, c] : r.t) c = F->neg(c);
  return r;
}

MPoly mp_mul(const Field& F, const MPoly& a, const MPoly& b) {
  MPoly r{a.nvars, {}};
  std::vector<uint16_t> e(a.nvars);
  for (auto& [ea, ca] : a.t) {
    for (auto& [eb, cb] : b.t) {
      for (unsigned i = 0; i < a.nvars; i++) e[i] = ea[i] + eb[i];
      mp_addto(F, r, e, F->mul(ca, cb));
    }
  }
  return r;
}

MPoly mp_scale(const Field& F, const MPoly& a, const FElem& c) {
  if (F->is_zero(c)) return mp_zero(a.nvars);
  MPoly r = a;
  for (auto& [e, x] : r.t) x = F->mul(x, c);
  return r;
}

MPoly mp_pow(const Field& F, const MPoly& a, unsigned e) {
  MPoly r = mp_const(F, a.nvars, F->one());
  for (unsigned i = 0; i < e; i++) r = mp_mul(F, r, a);
  return r;
}

MPoly mp_derivative(const Field& F, const MPoly& a, unsigned v) {
  MPoly r{a.nvars, {}};
  for (auto& [e, c] : a.t) {
    if (!e[v]) continue;
    FElem m = F->mul(c, F->from_int(e[v] % F->p));
    if (F->is_zero(m)) continue;
    auto e2 = e;
    e2[v]--;
    mp_addto(F, r, e2, m);
  }
  return r;
}

FElem mp_eval(const Field& F, const MPoly& a, const std::vector<FElem>& x) {
  FElem acc = F->zero();
  for (auto& [e, c] : a.t) {
    FElem term = c;
    for (unsigned i = 0; i < a.nvars; i++) {
      if (e[i]) term = F->mul(term, F->pow_u64(x[i], e[i]));
    }
    acc = F->add(acc, term);
  }
  return acc;
}

MPoly mp_subst_const(const Field& F, const MPoly& a, unsigned v, const FElem& c) {
  MPoly r{a.nvars, {}};
  for (auto& [e, coef] : a.t) {
    FElem nc = e[v] ? F->mul(coef, F->pow_u64(c, e[v])) : coef;
    if (F->is_zero(nc)) continue;
    auto e2 = e;
    e2[v] = 0;
    mp_addto(F, r, e2, nc);
  }
  return r;
}

MPoly mp_subst_linear(const Field& F, const MPoly& a, const std::vector<std::vector<FElem>>& M) {
  std::vector<MPoly> img(a.nvars, mp_zero(a.nvars));
  for (unsigned i = 0; i < a.nvars; i++) {
    for (unsigned j = 0; j < a.nvars; j++) {
      if (!F->is_zero(M[i][j])) img[i] = mp_add(F, img[i], mp_scale(F, mp_var(F, a.nvars, j), M[i][j]));
    }
  }
  MPoly r = mp_zero(a.nvars);
  // memoised powers of each image
  std::vector<std::vector<MPoly>> pw(a.nvars);
  for (unsigned i = 0; i < a.nvars; i++) pw[i].push_back(mp_const(F, a.nvars, F->one()));
  auto power = [&](unsigned i, unsigned e) -> const MPoly& {
    while (pw[i].size() <= e) pw[i].push_back(mp_mul(F, pw[i].back(), img[i]));
    return pw[i][e];
  };
  for (auto& [e, c] : a.t) {
    MPoly term = mp_const(F, a.nvars, c);
    for (unsigned i = 0; i < a.nvars; i++) {
      if (e[i]) term = mp_mul(F, term, power(i, e[i]));
    }
    r = mp_add(F, r, term);
  }
  return r;
}

MPoly mp_subst_poly(const Field& F, const MPoly& a, unsigned v, const MPoly& val) {
  MPoly r = mp_zero(a.nvars);
  std::vector<MPoly> pw{mp_const(F, a.nvars, F->one())};
  auto power = [&](unsigned e) -> const MPoly& {
    while (pw.size() <= e) pw.push_back(mp_mul(F, pw.back(), val));
    return pw[e];
  };
  for (auto& [e, c] : a.t) {
    auto e2 = e;
    e2[v] = 0;
    MPoly term{a.nvars, {}};
    term.t.emplace(e2, c);
    r = mp_add(F, r, mp_mul(F, term, power(e[v])));
  }
  return r;
}

MPoly mp_embed(const Field& from, const Field& to, const MPoly& a) {
  MPoly r{a.nvars, {}};
  for (auto& [e, c] : a.t) r.t.emplace(e, embed_up(from, to, c));
  return r;
}

MPoly mp_project(const Field& from, const Field& to, const MPoly& a) {
  MPoly r{a.nvars, {}};
  for (auto& [e, c] : a.t) r.t.emplace(e, project_down(from, to, c));
  return r;
}

std::vector<MPoly> mp_coeffs_in(const Field& F, const MPoly& a, unsigned v) {
  int d = mp_deg_in(a, v);
  std::vector<MPoly> cs(d + 1, mp_zero(a.nvars));
  for (auto& [e, c] : a.t) {
    auto e2 = e;
    e2[v] = 0;
    mp_addto(F, cs[e[v]], e2, c);
  }
  return cs;
}

MPoly mp_from_coeffs_in(const Field& F, const std::vector<MPoly>& cs, unsigned v) {
  if (cs.empty()) fail(Err::BadArg, "empty coefficient list");
  MPoly r = mp_zero(cs[0].nvars);
  for (size_t i = 0; i < cs.size(); i++) {
    for (auto& [e, c] : cs[i].t) {
      auto e2 = e;
      e2[v] += (uint16_t)i;
      mp_addto(F, r, e2, c);
    }
  }
  return r;
}

// ---- resultant by specialisation and interpolation ----

namespace {

struct BadSample {};

// exact univariate resultant over F via the Euclidean remainder sequence
FElem uni_resultant(const Field& F, FPoly A, FPoly B) {
  int da = fp_deg(A), db = fp_deg(B);
  if (da < 0 || db < 0) return F->zero();
  FElem r = F->one();
  bool neg = false;
  while (fp_deg(B) > 0) {
    FPoly R = fp_mod(F, A, B);
    if (fp_is_zero(R)) return F->zero();
    int dA = fp_deg(A), dB = fp_deg(B), dR = fp_deg(R);
    if ((dA & 1) && (dB & 1)) neg = !neg;
    r = F->mul(r, F->pow_u64(B.back(), dA - dR));
    A = std::move(B);
    B = std::move(R);
  }
  r = F->mul(r, F->pow_u64(B[0], fp_deg(A)));
  return neg ? F->neg(r) : r;
}

FPoly specialise_to_uni(const Field& F, const MPoly& a, unsigned v) {
  // all vars except v must have exponent 0 already
  FPoly r(std::max(mp_deg_in(a, v) + 1, 0), F->zero());
  for (auto& [e, c] : a.t) r[e[v]] = c;
  return fp_trim(F, std::move(r));
}

// interpolation nodes are field elements by ascending rank
FElem node(const Field& F, uint64_t i) { return F->unrank(i); }

MPoly res_rec(const Field& F, const MPoly& A, const MPoly& B, const MPoly& lcA, const MPoly& lcB,
              unsigned v, const std::vector<unsigned>& rem, const std::vector<int>& bound) {
  if (rem.empty()) {
    if (mp_is_zero(lcA) || mp_is_zero(lcB)) throw BadSample{};
    FPoly ua = specialise_to_uni(F, A, v);
    FPoly ub = specialise_to_uni(F, B, v);
    FElem r = uni_resultant(F, ua, ub);
    return mp_const(F, A.nvars, r);
  }
  unsigned w = rem.back();
  std::vector<unsigned> rem2(rem.begin(), rem.end() - 1);
  int need = bound[w] + 1;
  std::vector<FElem> xs;
  std::vector<MPoly> ys;
  uint64_t pool = F->q_u64 ? F->q_u64 : UINT64_MAX;
  pool = std::min<uint64_t>(pool, (uint64_t)need + 4096);
  for (uint64_t i = 0; i < pool && (int)xs.size() < need; i++) {
    FElem c = node(F, i);
    MPoly lA = mp_subst_const(F, lcA, w, c);
    MPoly lB = mp_subst_const(F, lcB, w, c);
    if (mp_is_zero(lA) || mp_is_zero(lB)) continue;
    try {
      MPoly val = res_rec(F, mp_subst_const(F, A, w, c), mp_subst_const(F, B, w, c), lA, lB, v,
                          rem2, bound);
      xs.push_back(c);
      ys.push_back(std::move(val));
    } catch (const BadSample&) {
      continue;
    }
  }
  if ((int)xs.size() < need) throw BadSample{};
  // Lagrange interpolation in x_w, coefficients are polynomials in the vars
  // below w.
  MPoly acc = mp_zero(A.nvars);
  for (int i = 0; i < need; i++) {
    FElem denom = F->one();
    for (int j = 0; j < need; j++) {
      if (j != i) denom = F->mul(denom, F->sub(xs[i], xs[j]));
    }
    MPoly basis = mp_const(F, A.nvars, F->inv(denom));
    for (int j = 0; j < need; j++) {
      if (j == i) continue;
      MPoly lin = mp_sub(F, mp_var(F, A.nvars, w), mp_const(F, A.nvars, xs[j]));
      basis = mp_mul(F, basis, lin);
    }
    acc = mp_add(F, acc, mp_mul(F, basis, ys[i]));
  }
  return acc;
}

}  // namespace

MPoly mp_resultant(const Field& F, const MPoly& a, const MPoly& b, unsigned v) {
  int da = mp_deg_in(a, v), db = mp_deg_in(b, v);
  if (da < 1 || db < 1) fail(Err::BadArg, "resultant needs positive degree in the variable");
  std::vector<unsigned> rem;
  std::vector<int> bound(a.nvars, 0);
  for (unsigned w = 0; w < a.nvars; w++) {
    if (w == v) continue;
    int dwa = mp_deg_in(a, w), dwb = mp_deg_in(b, w);
    if (dwa < 1 && dwb < 1) continue;
    rem.push_back(w);
    bound[w] = da * std::max(dwb, 0) + db * std::max(dwa, 0);
  }
  MPoly lcA = mp_coeffs_in(F, a, v)[da];
  MPoly lcB = mp_coeffs_in(F, b, v)[db];
  // Try over F, lifting to extensions while the sample pool is too small.
  for (unsigned e = 1; e <= 12; e++) {
    Field K = e == 1 ? F : ext_field(F, e);
    try {
      MPoly ra = e == 1 ? a : mp_embed(F, K, a);
      MPoly rb = e == 1 ? b : mp_embed(F, K, b);
      MPoly lA = e == 1 ? lcA : mp_embed(F, K, lcA);
      MPoly lB = e == 1 ? lcB : mp_embed(F, K, lcB);
      MPoly r = res_rec(K, ra, rb, lA, lB, v, rem, bound);
      return e == 1 ? r : mp_project(F, K, r);
    } catch (const BadSample&) {
      continue;
    }
  }
  fail(Err::Degenerate, "resultant specialisation failed in all lifts");
}

}  // namespace zetafn
