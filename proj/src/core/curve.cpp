#include "core/curve.hpp"

#include <algorithm>
#include <array>

#include "core/err.hpp"
#include "core/fieldpoly.hpp"
#include "core/nt.hpp"
#include "core/tablepoly.hpp"

namespace zetafn {

bool point_less(const CurvePoint& a, const CurvePoint& b) {
  if (a.e != b.e) return a.e < b.e;
  for (int i = 0; i < 3; i++) {
    if (a.P[i] != b.P[i]) return felem_less(a.P[i], b.P[i]);
  }
  return false;
}

bool point_eq(const CurvePoint& a, const CurvePoint& b) { return a.e == b.e && a.P == b.P; }

Curve curve_make(const Field& F, const MPoly& form) {
  if (form.nvars != 3) fail(Err::BadArg, "curve form needs exactly 3 variables");
  if (mp_is_zero(form)) fail(Err::BadArg, "curve form is zero");
  if (!mp_is_homogeneous(form)) fail(Err::BadArg, "curve form is not homogeneous");
  int d = mp_total_deg(form);
  if (d < 1 || d > 16) fail(Err::BadArg, "curve degree out of supported range");
  return Curve{F, (unsigned)d, form};
}

MPoly chart_form(const Curve& C, unsigned c) {
  return mp_subst_const(C.F, C.form, c, C.F->one());
}

bool on_curve(const Curve& C, const Field& K, const std::array<FElem, 3>& P) {
  MPoly f = mp_embed(C.F, K, C.form);
  return K->is_zero(mp_eval(K, f, {P[0], P[1], P[2]}));
}

std::array<FElem, 3> frob_point(const Curve& C, const Field& K, const std::array<FElem, 3>& P) {
  return {frob_over(C.F, K, P[0], 1), frob_over(C.F, K, P[1], 1), frob_over(C.F, K, P[2], 1)};
}

CurvePoint make_point(const Curve& C, const Field& K, const std::array<FElem, 3>& P0) {
  if (K->p != C.F->p || K->k % C.F->k) fail(Err::WrongField, "point field is not an extension");
  std::array<FElem, 3> P = P0;
  int lead = -1;
  for (int i = 0; i < 3; i++) {
    if (!K->is_zero(P[i])) {
      lead = i;
      break;
    }
  }
  if (lead < 0) fail(Err::BadArg, "projective point cannot be (0:0:0)");
  FElem s = K->inv(P[lead]);
  for (auto& c : P) c = K->mul(c, s);
  if (!on_curve(C, K, P)) fail(Err::NotOnCurve, "point does not satisfy the curve equation");
  // exact degree over the curve base
  unsigned n = K->k / C.F->k;
  unsigned e = n;
  for (unsigned t = 1; t <= n; t++) {
    if (n % t) continue;
    bool fixed = true;
    for (auto& c : P) {
      if (frob_over(C.F, K, c, t) != c) {
        fixed = false;
        break;
      }
    }
    if (fixed) {
      e = t;
      break;
    }
  }
  Field Ke = field_make(C.F->p, C.F->k * e);
  std::array<FElem, 3> small;
  for (int i = 0; i < 3; i++) small[i] = project_down(Ke, K, P[i]);
  std::array<FElem, 3> best = small, cur = small;
  for (unsigned t = 1; t < e; t++) {
    for (auto& c : cur) c = frob_over(C.F, Ke, c, 1);
    if (std::lexicographical_compare(cur.begin(), cur.end(), best.begin(), best.end(),
                                     [](const FElem& a, const FElem& b) { return felem_less(a, b); }))
      best = cur;
  }
  return CurvePoint{e, best};
}

// ---- point counting ----

namespace {

struct EmbeddedTerm {
  uint16_t e0, e1, e2;
  FElem c;
};

std::vector<EmbeddedTerm> embed_terms(const Curve& C, const Field& T) {
  std::vector<EmbeddedTerm> v;
  for (auto& [e, c] : C.form.t) v.push_back({e[0], e[1], e[2], embed_up(C.F, T, c)});
  return v;
}

mpz_class ambient_plane(const mpz_class& qj) { return qj * qj + qj + 1; }

// Chart x0=1 contribution plus the x0=0 line, table kernel.
uint64_t count_tabled(const Curve& C, const Field& T, const ZechTables& zt) {
  TF tf = TF::of(*T, zt);
  uint64_t q = T->q_u64;
  auto terms = embed_terms(C, T);
  unsigned d = C.degree;

  // chart A: per z-degree m, dense y-polynomial of log-coefficients
  std::vector<std::vector<uint32_t>> A(d + 1, std::vector<uint32_t>(d + 1, TF::LZ));
  for (auto& t : terms) {
    uint64_t r = T->rank(t.c);
    A[t.e2][t.e1] = tf.add(A[t.e2][t.e1], zt.log[r]);
  }
  uint64_t n = 0;
  for (uint64_t yi = 0; yi < q; yi++) {
    uint32_t ly = yi == 0 ? TF::LZ : zt.log[yi];
    TPoly fz;
    fz.deg = d;
    bool all_zero = true;
    for (unsigned m = 0; m <= d; m++) {
      uint32_t val = TF::LZ;
      for (size_t i = A[m].size(); i-- > 0;) val = tf.add(tf.mul(val, ly), A[m][i]);
      fz.c[m] = val;
      if (val != TF::LZ) all_zero = false;
    }
    if (all_zero) {
      n += q;
      continue;
    }
    fz.trim();
    if (fz.deg <= 0) continue;
    n += tp_count_roots(tf, fz);
  }

  // chart B: x0=0, x1=1
  TPoly g;
  g.deg = d;
  for (unsigned m = 0; m <= d; m++) g.c[m] = TF::LZ;
  bool gz = true;
  for (auto& t : terms) {
    if (t.e0) continue;
    uint64_t r = T->rank(t.c);
    g.c[t.e2] = tf.add(g.c[t.e2], zt.log[r]);
  }
  for (unsigned m = 0; m <= d; m++)
    if (g.c[m] != TF::LZ) gz = false;
  if (gz) {
    n += q;
  } else {
    g.trim();
    if (g.deg > 0) n += tp_count_roots(tf, g);
  }

  // the point (0:0:1)
  bool zd_zero = true;
  for (auto& t : terms) {
    if (t.e0 == 0 && t.e1 == 0) zd_zero = false;
  }
  if (zd_zero) n += 1;
  return n;
}

mpz_class count_generic(const Curve& C, const Field& T) {
  if (!T->q_u64) fail(Err::BudgetExceeded, "field too large to iterate");
  uint64_t q = T->q_u64;
  auto terms = embed_terms(C, T);
  unsigned d = C.degree;
  std::vector<FPoly> A(d + 1);
  for (unsigned m = 0; m <= d; m++) A[m] = FPoly(d + 1, T->zero());
  for (auto& t : terms) A[t.e2][t.e1] = T->add(A[t.e2][t.e1], t.c);
  mpz_class n = 0;
  for (uint64_t yi = 0; yi < q; yi++) {
    FElem y = T->unrank(yi);
    FPoly fz(d + 1, T->zero());
    for (unsigned m = 0; m <= d; m++) fz[m] = fp_eval(T, A[m], y);
    fz = fp_trim(T, std::move(fz));
    if (fp_is_zero(fz)) {
      n += (unsigned long)q;
      continue;
    }
    if (fp_deg(fz) < 1) continue;
    FPoly xq = fp_powmod(T, fp_x(T), T->q, fz);
    FPoly g = fp_gcd(T, fp_sub(T, xq, fp_x(T)), fz);
    n += std::max(fp_deg(g), 0);
  }
  FPoly gb(d + 1, T->zero());
  for (auto& t : terms) {
    if (!t.e0) gb[t.e2] = T->add(gb[t.e2], t.c);
  }
  gb = fp_trim(T, std::move(gb));
  if (fp_is_zero(gb)) {
    n += (unsigned long)q;
  } else if (fp_deg(gb) >= 1) {
    FPoly xq = fp_powmod(T, fp_x(T), T->q, gb);
    FPoly g = fp_gcd(T, fp_sub(T, xq, fp_x(T)), gb);
    n += std::max(fp_deg(g), 0);
  }
  bool zd_zero = true;
  for (auto& t : terms) {
    if (t.e0 == 0 && t.e1 == 0) zd_zero = false;
  }
  if (zd_zero) n += 1;
  return n;
}

}  // namespace

mpz_class count_points(const Curve& C, unsigned j, const Budget& bu) {
  if (j < 1) fail(Err::BadArg, "extension order must be positive");
  mpz_class qj = pow_mpz(C.F->q, j);
  if (ambient_plane(qj) > mpz_class((unsigned long)bu.ambient_points))
    fail(Err::BudgetExceeded, "ambient point budget exceeded");
  Field T = field_make(C.F->p, C.F->k * j);
  if (const ZechTables* zt = T->tables(bu.table_field)) {
    return mpz_class((unsigned long)count_tabled(C, T, *zt));
  }
  return count_generic(C, T);
}

std::vector<std::array<FElem, 3>> enumerate_points(const Curve& C, unsigned j, const Budget& bu) {
  mpz_class qj = pow_mpz(C.F->q, j);
  if (ambient_plane(qj) > mpz_class((unsigned long)bu.ambient_points))
    fail(Err::BudgetExceeded, "ambient point budget exceeded");
  Field T = field_make(C.F->p, C.F->k * j);
  const ZechTables* zt = T->tables(bu.table_field);
  if (!zt) fail(Err::BudgetExceeded, "field too large for point enumeration tables");
  TF tf = TF::of(*T, *zt);
  uint64_t q = T->q_u64;
  auto terms = embed_terms(C, T);
  unsigned d = C.degree;
  std::vector<std::array<FElem, 3>> out;
  Rng rng(fnv1a64("enumerate-points") ^ T->q_u64 ^ C.degree);

  std::vector<std::vector<uint32_t>> A(d + 1, std::vector<uint32_t>(d + 1, TF::LZ));
  for (auto& t : terms) {
    A[t.e2][t.e1] = tf.add(A[t.e2][t.e1], zt->log[T->rank(t.c)]);
  }
  std::vector<uint32_t> roots;
  for (uint64_t yi = 0; yi < q; yi++) {
    uint32_t ly = yi == 0 ? TF::LZ : zt->log[yi];
    TPoly fz;
    fz.deg = d;
    bool all_zero = true;
    for (unsigned m = 0; m <= d; m++) {
      uint32_t val = TF::LZ;
      for (size_t i = A[m].size(); i-- > 0;) val = tf.add(tf.mul(val, ly), A[m][i]);
      fz.c[m] = val;
      if (val != TF::LZ) all_zero = false;
    }
    FElem y = T->unrank(yi);
    if (all_zero) {
      for (uint64_t zi = 0; zi < q; zi++) out.push_back({T->one(), y, T->unrank(zi)});
      continue;
    }
    fz.trim();
    if (fz.deg <= 0) {
      // constant nonzero: no roots; but a genuine constant-zero was caught above
      continue;
    }
    roots.clear();
    tp_roots(tf, fz, rng, roots);
    for (uint32_t lr : roots) {
      uint64_t zr = lr == TF::LZ ? 0 : zt->exp[lr];
      out.push_back({T->one(), y, T->unrank(zr)});
    }
  }
  // x0 = 0 line
  TPoly g;
  g.deg = d;
  for (unsigned m = 0; m <= d; m++) g.c[m] = TF::LZ;
  for (auto& t : terms) {
    if (t.e0) continue;
    g.c[t.e2] = tf.add(g.c[t.e2], zt->log[T->rank(t.c)]);
  }
  bool gz = true;
  for (unsigned m = 0; m <= d; m++)
    if (g.c[m] != TF::LZ) gz = false;
  if (gz) {
    for (uint64_t zi = 0; zi < q; zi++) out.push_back({T->zero(), T->one(), T->unrank(zi)});
  } else {
    g.trim();
    if (g.deg > 0) {
      roots.clear();
      tp_roots(tf, g, rng, roots);
      for (uint32_t lr : roots) {
        uint64_t zr = lr == TF::LZ ? 0 : zt->exp[lr];
        out.push_back({T->zero(), T->one(), T->unrank(zr)});
      }
    }
  }
  bool zd_zero = true;
  for (auto& t : terms) {
    if (t.e0 == 0 && t.e1 == 0) zd_zero = false;
  }
  if (zd_zero) out.push_back({T->zero(), T->zero(), T->one()});
  return out;
}

// ---- singular locus ----

namespace {

// keep only the listed variables, in order, as a smaller-arity polynomial
MPoly select_vars(const Field& F, const MPoly& g, const std::vector<unsigned>& vars) {
  MPoly r{(unsigned)vars.size(), {}};
  for (auto& [e, c] : g.t) {
    std::vector<uint16_t> e2(vars.size(), 0);
    for (size_t i = 0; i < vars.size(); i++) e2[i] = e[vars[i]];
    mp_addto(F, r, e2, c);
  }
  return r;
}

}  // namespace

std::vector<CurvePoint> singular_points(const Curve& C, const Budget& bu) {
  (void)bu;
  const Field& F = C.F;
  MPoly F0 = mp_derivative(F, C.form, 0);
  MPoly F1 = mp_derivative(F, C.form, 1);
  MPoly F2 = mp_derivative(F, C.form, 2);
  std::vector<CurvePoint> out;

  // chart x0 = 1
  {
    std::vector<MPoly> sys;
    std::array<const MPoly*, 4> gs{&C.form, &F0, &F1, &F2};
    for (const MPoly* g : gs) {
      MPoly h = mp_subst_const(F, *g, 0, F->one());
      sys.push_back(select_vars(F, h, {1, 2}));
    }
    for (auto& orb : solve0dim(F, sys, 2)) {
      Field K = field_make(F->p, F->k * orb.e);
      out.push_back(make_point(C, K, {K->one(), orb.x[0], orb.x[1]}));
    }
  }
  // chart x0 = 0, x1 = 1
  {
    std::vector<MPoly> sys;
    std::array<const MPoly*, 4> gs{&C.form, &F0, &F1, &F2};
    for (const MPoly* g : gs) {
      MPoly h = mp_subst_const(F, *g, 0, F->zero());
      h = mp_subst_const(F, h, 1, F->one());
      sys.push_back(select_vars(F, h, {2}));
    }
    for (auto& orb : solve0dim(F, sys, 1)) {
      Field K = field_make(F->p, F->k * orb.e);
      out.push_back(make_point(C, K, {K->zero(), K->one(), orb.x[0]}));
    }
  }
  // the point (0:0:1)
  {
    std::vector<FElem> P{F->zero(), F->zero(), F->one()};
    bool sing = true;
    std::array<const MPoly*, 4> gs{&C.form, &F0, &F1, &F2};
    for (const MPoly* g : gs) {
      if (!F->is_zero(mp_eval(F, *g, P))) sing = false;
    }
    if (sing) out.push_back(make_point(C, F, {F->zero(), F->zero(), F->one()}));
  }
  std::sort(out.begin(), out.end(), point_less);
  return out;
}

bool is_smooth(const Curve& C, const Budget& bu) {
  try {
    return singular_points(C, bu).empty();
  } catch (const ZfError& e) {
    if (e.code == Err::Degenerate) return false;  // positive-dimensional singular locus
    throw;
  }
}

unsigned genus(const Curve& C, const Budget& bu) {
  if (!is_smooth(C, bu)) fail(Err::NotSmooth, "genus formula needs a smooth curve");
  return (C.degree - 1) * (C.degree - 2) / 2;
}

}  // namespace zetafn
