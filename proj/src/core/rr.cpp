#include "core/rr.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <string>
#include <tuple>

#include "core/err.hpp"
#include "core/fieldpoly.hpp"
#include "core/rng.hpp"

namespace zetafn {

namespace {

std::string form_key(const MPoly& a) {
  std::string s;
  s.push_back(char(a.nvars));
  for (auto& [ex, c] : a.t) {
    for (uint16_t x : ex) {
      s.push_back(char(x & 0xff));
      s.push_back(char(x >> 8));
    }
    for (uint32_t w : c)
      for (int i = 0; i < 4; i++) s.push_back(char((w >> (8 * i)) & 0xff));
    s.push_back('|');
  }
  return s;
}

// Univariate slice in x2 after substituting values for x0 and x1.
FPoly z_slice(const Field& K, const MPoly& a, const FElem& x0, const FElem& x1) {
  int dz = mp_deg_in(a, 2);
  FPoly r(dz < 0 ? 1 : (size_t)dz + 1, K->zero());
  for (auto& [ex, c] : a.t) {
    FElem v = K->mul(c, K->mul(K->pow_u64(x0, ex[0]), K->pow_u64(x1, ex[1])));
    r[ex[2]] = K->add(r[ex[2]], v);
  }
  return fp_trim(K, r);
}

}  // namespace

unsigned smooth_genus(const Curve& C, const Budget& bu) {
  static std::mutex mu;
  static std::map<std::pair<const void*, std::string>, unsigned> cache;
  auto key = std::make_pair((const void*)C.F.get(), form_key(C.form));
  {
    std::lock_guard<std::mutex> lk(mu);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  unsigned g = genus(C, bu);
  std::lock_guard<std::mutex> lk(mu);
  cache.emplace(std::move(key), g);
  return g;
}

// univariate resultant through the Euclidean remainder sequence
FElem fp_resultant(const Field& F, FPoly A, FPoly B) {
  if (fp_deg(A) < 0 || fp_deg(B) < 0) return F->zero();
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

// Res_z of two forms whose z-leading coefficients are nonzero constants.  The
// resultant is then a homogeneous binary form of degree de in (x0, x1), fully
// determined by its slice r(t) at x0 = 1, which one round of interpolation
// recovers: the slices z_slice(1, t) keep their z-degrees, so every sample is
// a clean Sylvester specialisation.
FPoly resultant_slice(const Field& W, const MPoly& Fs, const MPoly& Gs, size_t de) {
  unsigned lift = 1;
  if (W->q_u64) {
    uint64_t have = W->q_u64;
    while (have < de + 1) {
      have *= W->q_u64;
      lift++;
    }
  }
  Field K = lift == 1 ? W : ext_field(W, lift);
  MPoly Fk = lift == 1 ? Fs : mp_embed(W, K, Fs);
  MPoly Gk = lift == 1 ? Gs : mp_embed(W, K, Gs);
  std::vector<FElem> xs(de + 1), vs(de + 1);
  for (size_t i = 0; i <= de; i++) {
    xs[i] = K->unrank(i);
    vs[i] = fp_resultant(K, z_slice(K, Fk, K->one(), xs[i]), z_slice(K, Gk, K->one(), xs[i]));
  }
  FPoly prod = {K->one()};
  for (auto& x : xs) prod = fp_mul(K, prod, {K->neg(x), K->one()});
  FPoly acc;
  for (size_t i = 0; i <= de; i++) {
    // synthetic division of the node product by (T - xs[i])
    FPoly Q(de + 1, K->zero());
    FElem carry = K->zero();
    for (size_t j = de + 1; j-- > 0;) {
      carry = K->add(prod[j + 1], K->mul(xs[i], carry));
      Q[j] = carry;
    }
    FElem scale = K->mul(vs[i], K->inv(fp_eval(K, Q, xs[i])));
    acc = fp_add(K, acc, fp_scale(K, Q, scale));
  }
  if (fp_deg(acc) > (long long)de) fail(Err::Internal, "resultant slice overflows its degree");
  if (lift > 1)
    for (auto& c : acc) c = project_down(W, K, c);
  return fp_trim(W, std::move(acc));
}

Divisor form_section_divisor(const Curve& C, const MPoly& G) {
  const Field& F = C.F;
  if (G.nvars != 3 || mp_is_zero(G) || !mp_is_homogeneous(G))
    fail(Err::BadArg, "need a nonzero homogeneous form in three variables");
  long de0 = (long)C.degree * mp_total_deg(G);
  if (mp_total_deg(G) < 1) fail(Err::BadArg, "need a form of positive degree");
  size_t de = (size_t)de0;
  Rng rng(fnv1a64("form-section-divisor"));
  static const unsigned lifts[] = {1, 1, 1, 2, 2, 3, 3, 4, 4, 6, 6, 8, 10, 12};
  for (unsigned attempt = 0; attempt < sizeof(lifts) / sizeof(lifts[0]); attempt++) {
    unsigned s = lifts[attempt];
    Field W = ext_field(F, s);
    MPoly Fw = mp_embed(F, W, C.form);
    MPoly Gw = mp_embed(F, W, G);
    std::vector<std::vector<FElem>> M(3, std::vector<FElem>(3, W->zero()));
    for (int i = 0; i < 3; i++) M[i][i] = W->one();
    if (attempt > 0) {
      // product of a random unit lower and unit upper triangle: invertible
      uint64_t bound = W->q_u64 ? W->q_u64 : (uint64_t(1) << 32);
      std::vector<std::vector<FElem>> L = M, U = M;
      for (int i = 0; i < 3; i++)
        for (int j = 0; j < 3; j++) {
          if (j < i) L[i][j] = W->unrank(rng.below(bound));
          if (j > i) U[i][j] = W->unrank(rng.below(bound));
        }
      for (int i = 0; i < 3; i++)
        for (int j = 0; j < 3; j++) {
          FElem acc = W->zero();
          for (int k = 0; k < 3; k++) acc = W->add(acc, W->mul(L[i][k], U[k][j]));
          M[i][j] = acc;
        }
    }
    MPoly Fs = mp_subst_linear(W, Fw, M);
    MPoly Gs = mp_subst_linear(W, Gw, M);
    std::vector<FElem> zpt = {W->zero(), W->zero(), W->one()};
    if (W->is_zero(mp_eval(W, Fs, zpt)) || W->is_zero(mp_eval(W, Gs, zpt))) continue;
    FPoly ry = resultant_slice(W, Fs, Gs, de);
    if (fp_is_zero(ry)) fail(Err::BadArg, "form vanishes identically on the curve");
    long long m0 = (long long)de - fp_deg(ry);
    // Weight each fiber point by multiplicity * residue degree of its (x0:x1)
    // root; per base-field orbit the weights add up to orbit degree times the
    // intersection multiplicity.
    std::map<std::string, std::pair<CurvePoint, long long>> acc;
    bool generic = true;
    auto add_fiber = [&](const Field& K, const MPoly& FsK, const MPoly& GsK, const FElem& a0,
                         const FElem& a1, long long weight) {
      FPoly fz = z_slice(K, FsK, a0, a1);
      FPoly gz = z_slice(K, GsK, a0, a1);
      FPoly gc = fp_gcd(K, fz, gz);
      if (fp_deg(gc) < 1) fail(Err::Internal, "resultant root without a fiber point");
      auto sqf = fp_squarefree(K, gc);
      if (sqf.size() != 1 || fp_deg(sqf[0].first) != 1) {
        generic = false;
        return;
      }
      FElem z0 = K->neg(K->div(sqf[0].first[0], sqf[0].first[1]));
      std::array<FElem, 3> v = {a0, a1, z0};
      std::array<FElem, 3> orig;
      for (int i = 0; i < 3; i++) {
        FElem t = K->zero();
        for (int j = 0; j < 3; j++) t = K->add(t, K->mul(embed_up(W, K, M[i][j]), v[j]));
        orig[i] = t;
      }
      CurvePoint cp = make_point(C, K, orig);
      auto [it, fresh] = acc.emplace(point_key(cp), std::make_pair(cp, 0));
      it->second.second += weight;
    };
    if (m0 > 0) add_fiber(W, Fs, Gs, W->zero(), W->one(), m0);
    if (generic && fp_deg(ry) >= 1) {
      for (auto& [u, mu] : fp_factor(W, ry, rng)) {
        unsigned du = (unsigned)fp_deg(u);
        Field K = ext_field(W, du);
        FElem y0;
        if (du == 1) {
          y0 = W->neg(W->div(u[0], u[1]));
        } else {
          FPoly uK(u.size());
          for (size_t i = 0; i < u.size(); i++) uK[i] = embed_up(W, K, u[i]);
          auto roots = fp_roots(K, uK, rng);
          if (roots.size() != du) fail(Err::Internal, "irreducible factor without full roots");
          y0 = roots[0].first;
        }
        MPoly FsK = mp_embed(W, K, Fs);
        MPoly GsK = mp_embed(W, K, Gs);
        add_fiber(K, FsK, GsK, embed_up(W, K, W->one()), y0, (long long)mu * du);
        if (!generic) break;
      }
    }
    if (!generic) continue;
    std::vector<std::pair<CurvePoint, long long>> terms;
    long long total = 0;
    bool divok = true;
    for (auto& [k, pr] : acc) {
      auto& [cp, w] = pr;
      if (w % cp.e != 0) {
        divok = false;
        break;
      }
      terms.emplace_back(cp, w / cp.e);
      total += w;
    }
    if (!divok || total != de0) continue;
    return dv_make(std::move(terms));
  }
  fail(Err::Internal, "no generic projection found for the section divisor");
}

Divisor principal_divisor(const Curve& C, const MPoly& num, const MPoly& den) {
  if (mp_is_zero(num) || mp_is_zero(den)) fail(Err::BadArg, "zero form has no divisor");
  if (mp_total_deg(num) != mp_total_deg(den))
    fail(Err::BadArg, "numerator and denominator degrees differ");
  if (mp_total_deg(num) == 0) return dv_zero();
  return dv_sub(form_section_divisor(C, num), form_section_divisor(C, den));
}

namespace {

using Series = std::vector<FElem>;

Series ts_mul(const Field& K, const Series& a, const Series& b, size_t len) {
  Series r(len, K->zero());
  for (size_t i = 0; i < a.size() && i < len; i++) {
    if (K->is_zero(a[i])) continue;
    for (size_t j = 0; j < b.size() && i + j < len; j++)
      r[i + j] = K->add(r[i + j], K->mul(a[i], b[j]));
  }
  return r;
}

// Value series of a chart form along x_u = su(t), x_v = sv(t).
Series chart_series(const Field& K, const MPoly& a, unsigned u, unsigned v, const Series& su,
                    const Series& sv, size_t len) {
  int du = std::max(0, mp_deg_in(a, u)), dv = std::max(0, mp_deg_in(a, v));
  std::vector<Series> pu(du + 1), pv(dv + 1);
  pu[0] = Series{K->one()};
  for (int i = 1; i <= du; i++) pu[i] = ts_mul(K, pu[i - 1], su, len);
  pv[0] = Series{K->one()};
  for (int i = 1; i <= dv; i++) pv[i] = ts_mul(K, pv[i - 1], sv, len);
  Series r(len, K->zero());
  for (auto& [ex, c] : a.t) {
    Series tmp = ts_mul(K, pu[ex[u]], pv[ex[v]], len);
    for (size_t i = 0; i < len; i++) r[i] = K->add(r[i], K->mul(c, tmp[i]));
  }
  return r;
}

struct Branch {
  Field K;
  unsigned u = 0, v = 0;  // the two affine chart variables, u < v
  Series su, sv;          // their series along the local parameter
};

// Local power-series parametrisation of the curve at a smooth closed point,
// to len coefficients.
Branch branch_at(const Curve& C, const CurvePoint& P, size_t len) {
  Branch br;
  br.K = ext_field(C.F, P.e);
  const Field& K = br.K;
  unsigned c = 0;
  while (c < 2 && K->is_zero(P.P[c])) c++;
  unsigned vars[2];
  int nv = 0;
  for (unsigned i = 0; i < 3; i++)
    if (i != c) vars[nv++] = i;
  br.u = vars[0];
  br.v = vars[1];
  MPoly fch = mp_embed(C.F, K, chart_form(C, c));
  std::vector<FElem> at = {P.P[0], P.P[1], P.P[2]};
  FElem fu = mp_eval(K, mp_derivative(K, fch, br.u), at);
  FElem fv = mp_eval(K, mp_derivative(K, fch, br.v), at);
  unsigned pvar, dvar;
  FElem fd;
  if (!K->is_zero(fv)) {
    pvar = br.u;
    dvar = br.v;
    fd = fv;
  } else if (!K->is_zero(fu)) {
    pvar = br.v;
    dvar = br.u;
    fd = fu;
  } else {
    fail(Err::NotSmooth, "divisor point is singular on the curve");
  }
  Series sp(len, K->zero()), sd(len, K->zero());
  sp[0] = at[pvar];
  if (len > 1) sp[1] = K->one();
  sd[0] = at[dvar];
  FElem fdinv = K->inv(fd);
  for (size_t k = 1; k < len; k++) {
    const Series& asu = pvar == br.u ? sp : sd;
    const Series& asv = pvar == br.u ? sd : sp;
    Series E = chart_series(K, fch, br.u, br.v, asu, asv, k + 1);
    for (size_t j = 0; j < k; j++)
      if (!K->is_zero(E[j])) fail(Err::Internal, "branch expansion lost exactness");
    sd[k] = K->neg(K->mul(E[k], fdinv));
  }
  br.su = pvar == br.u ? sp : sd;
  br.sv = pvar == br.u ? sd : sp;
  return br;
}

// One line through the representative of P, as coefficients over its field.
std::array<FElem, 3> point_line(const Curve& C, const Field& K, const CurvePoint& P) {
  static const int pairs[3][2] = {{0, 1}, {0, 2}, {1, 2}};
  std::vector<FElem> form_c;
  if (C.degree == 1) {
    form_c.assign(3, K->zero());
    for (auto& [ex, c] : C.form.t)
      for (int i = 0; i < 3; i++)
        if (ex[i] == 1) form_c[i] = embed_up(C.F, K, c);
  }
  for (auto& pr : pairs) {
    int a = pr[0], b = pr[1];
    if (K->is_zero(P.P[a]) && K->is_zero(P.P[b])) continue;
    std::array<FElem, 3> L = {K->zero(), K->zero(), K->zero()};
    L[a] = P.P[b];
    L[b] = K->neg(P.P[a]);
    if (C.degree == 1) {
      // skip the curve itself
      bool prop = true;
      for (int i = 0; i < 3 && prop; i++)
        for (int j = i + 1; j < 3 && prop; j++)
          if (!K->eq(K->mul(L[i], form_c[j]), K->mul(L[j], form_c[i]))) prop = false;
      if (prop) continue;
    }
    return L;
  }
  fail(Err::Internal, "no line through the point");
}

// Norm of the chosen line over the base field: product over the Frobenius
// conjugates, a form of degree equal to the point's.
MPoly point_line_norm(const Curve& C, const CurvePoint& P) {
  const Field& F = C.F;
  Field K = ext_field(F, P.e);
  std::array<FElem, 3> cur = point_line(C, K, P);
  MPoly N = mp_const(K, 3, K->one());
  for (unsigned t = 0; t < P.e; t++) {
    MPoly line = mp_zero(3);
    for (unsigned i = 0; i < 3; i++) {
      if (K->is_zero(cur[i])) continue;
      std::vector<uint16_t> ex(3, 0);
      ex[i] = 1;
      mp_set(K, line, ex, cur[i]);
    }
    N = mp_mul(K, N, line);
    for (auto& cc : cur) cc = frob_over(F, K, cc);
  }
  return mp_project(F, K, N);
}

// Right-nullspace basis of an r x n matrix, canonical echelon form.
std::vector<std::vector<FElem>> nullspace_basis(const Field& F, std::vector<std::vector<FElem>> M,
                                                size_t n) {
  size_t r = M.size();
  std::vector<size_t> piv;
  size_t row = 0;
  for (size_t col = 0; col < n && row < r; col++) {
    size_t pr = row;
    while (pr < r && F->is_zero(M[pr][col])) pr++;
    if (pr == r) continue;
    std::swap(M[row], M[pr]);
    FElem inv = F->inv(M[row][col]);
    for (size_t j = col; j < n; j++) M[row][j] = F->mul(M[row][j], inv);
    for (size_t i = 0; i < r; i++) {
      if (i == row || F->is_zero(M[i][col])) continue;
      FElem f = M[i][col];
      for (size_t j = col; j < n; j++) M[i][j] = F->sub(M[i][j], F->mul(f, M[row][j]));
    }
    piv.push_back(col);
    row++;
  }
  std::vector<bool> ispiv(n, false);
  for (size_t c : piv) ispiv[c] = true;
  std::vector<std::vector<FElem>> basis;
  for (size_t fc = 0; fc < n; fc++) {
    if (ispiv[fc]) continue;
    std::vector<FElem> v(n, F->zero());
    v[fc] = F->one();
    for (size_t pi = 0; pi < piv.size(); pi++) v[piv[pi]] = F->neg(M[pi][fc]);
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace

RRBasis rr_space(const Curve& C, const Divisor& D, const Budget& bu) {
  const Field& F = C.F;
  unsigned g = smooth_genus(C, bu);
  long long degD = dv_degree(D);
  RRBasis out;
  out.eaux = mp_const(F, 3, F->one());
  out.eauxdiv = dv_zero();
  if (degD < 0) return out;
  Divisor Dp = dv_pos(D);
  long long e = dv_degree(Dp);
  if ((uint64_t)e > bu.rr_degree)
    fail(Err::BudgetExceeded, "divisor positive part exceeds the degree cap");
  MPoly eaux = mp_const(F, 3, F->one());
  Divisor A = dv_zero();
  for (auto& [P, n] : Dp.t) {
    MPoly N = point_line_norm(C, P);
    Divisor dN = form_section_divisor(C, N);
    if (dv_mult(dN, P) < 1) fail(Err::Internal, "line norm misses its point");
    for (long long i = 0; i < n; i++) eaux = mp_mul(F, eaux, N);
    A = dv_add(A, dv_scale(n, dN));
  }
  if (mp_total_deg(eaux) != (int)e) fail(Err::Internal, "denominator degree out of step");
  out.eaux = eaux;
  out.eauxdiv = A;
  Divisor B = dv_sub(A, D);
  if (!dv_effective(B)) fail(Err::Internal, "denominator divisor misses the positive part");

  std::vector<std::vector<uint16_t>> mons;
  for (uint16_t a0 = 0; a0 <= e; a0++)
    for (uint16_t a1 = 0; a0 + a1 <= e; a1++)
      mons.push_back({a0, a1, (uint16_t)(e - a0 - a1)});
  size_t ncols = mons.size();
  std::map<std::vector<uint16_t>, size_t> monidx;
  for (size_t i = 0; i < ncols; i++) monidx[mons[i]] = i;

  std::vector<std::vector<FElem>> rows;
  for (auto& [P, bmult] : B.t) {
    size_t b = (size_t)bmult;
    Branch br = branch_at(C, P, b);
    const Field& K = br.K;
    std::vector<Series> pu((size_t)e + 1), pv((size_t)e + 1);
    pu[0] = Series{K->one()};
    pv[0] = Series{K->one()};
    for (long long i = 1; i <= e; i++) {
      pu[i] = ts_mul(K, pu[i - 1], br.su, b);
      pv[i] = ts_mul(K, pv[i - 1], br.sv, b);
    }
    std::vector<Series> val(ncols);
    for (size_t mi = 0; mi < ncols; mi++)
      val[mi] = ts_mul(K, pu[mons[mi][br.u]], pv[mons[mi][br.v]], b);
    for (size_t j = 0; j < b; j++) {
      std::vector<std::vector<FElem>> slot(P.e, std::vector<FElem>(ncols, F->zero()));
      for (size_t mi = 0; mi < ncols; mi++) {
        std::vector<FElem> co = rel_coords(F, K, val[mi][j]);
        for (unsigned s = 0; s < P.e; s++) slot[s][mi] = co[s];
      }
      for (auto& rowv : slot) rows.push_back(std::move(rowv));
    }
  }

  std::vector<std::vector<FElem>> ns = nullspace_basis(F, std::move(rows), ncols);

  // Quotient out multiples of the curve form, which give the zero function.
  std::vector<std::pair<size_t, std::vector<FElem>>> red;
  auto lead_of = [&](const std::vector<FElem>& v) -> size_t {
    for (size_t i = 0; i < v.size(); i++)
      if (!F->is_zero(v[i])) return i;
    return v.size();
  };
  auto reduce_vec = [&](std::vector<FElem>& v) {
    for (auto& [lead, rv] : red) {
      if (F->is_zero(v[lead])) continue;
      FElem f = v[lead];
      for (size_t i = lead; i < v.size(); i++) v[i] = F->sub(v[i], F->mul(f, rv[i]));
    }
  };
  auto push_red = [&](std::vector<FElem> v) {
    size_t lead = lead_of(v);
    if (lead == v.size()) return false;
    FElem inv = F->inv(v[lead]);
    for (size_t i = lead; i < v.size(); i++) v[i] = F->mul(v[i], inv);
    red.emplace_back(lead, std::move(v));
    return true;
  };
  if (e >= (long long)C.degree) {
    long long ew = e - C.degree;
    for (uint16_t a0 = 0; a0 <= ew; a0++)
      for (uint16_t a1 = 0; a0 + a1 <= ew; a1++) {
        MPoly mon = mp_zero(3);
        mp_set(F, mon, {a0, a1, (uint16_t)(ew - a0 - a1)}, F->one());
        MPoly w = mp_mul(F, C.form, mon);
        std::vector<FElem> v(ncols, F->zero());
        for (auto& [ex, c] : w.t) v[monidx.at(ex)] = c;
        reduce_vec(v);
        push_red(std::move(v));
      }
  }
  std::vector<std::vector<FElem>> picked;
  for (auto& v0 : ns) {
    std::vector<FElem> v = v0;
    reduce_vec(v);
    size_t lead = lead_of(v);
    if (lead == v.size()) continue;
    FElem inv = F->inv(v[lead]);
    for (size_t i = lead; i < v.size(); i++) v[i] = F->mul(v[i], inv);
    picked.push_back(v);
    red.emplace_back(lead, std::move(v));
  }
  // canonical basis: eliminate every pick's lead from the other picks
  for (size_t i = 0; i < picked.size(); i++) {
    size_t lead = lead_of(picked[i]);
    for (size_t j = 0; j < picked.size(); j++) {
      if (i == j || F->is_zero(picked[j][lead])) continue;
      FElem f = picked[j][lead];
      for (size_t k2 = lead; k2 < ncols; k2++)
        picked[j][k2] = F->sub(picked[j][k2], F->mul(f, picked[i][k2]));
    }
  }
  for (auto& v : picked) {
    MPoly Gf = mp_zero(3);
    for (size_t i = 0; i < ncols; i++)
      if (!F->is_zero(v[i])) mp_set(F, Gf, mons[i], v[i]);
    out.fs.push_back(std::move(Gf));
  }
  out.dim = (unsigned)out.fs.size();
  if (degD > 2 * (long long)g - 2 && out.dim != (unsigned)(degD + 1 - g))
    fail(Err::Internal, "Riemann-Roch dimension is off");
  return out;
}

}  // namespace zetafn
