#include "core/jacobian.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

#include "core/ellcurve.hpp"
#include "core/err.hpp"
#include "core/fieldpoly.hpp"
#include "core/nt.hpp"
#include "core/zeta.hpp"

namespace zetafn {

ReducedDivisor rd_zero(const CurvePoint& base) { return {dv_zero(), 0, base}; }

bool rd_is_zero(const ReducedDivisor& a) { return a.m == 0; }

bool rd_eq(const ReducedDivisor& a, const ReducedDivisor& b) {
  return a.m == b.m && point_eq(a.base, b.base) && dv_eq(a.E, b.E);
}

std::string rd_key(const ReducedDivisor& a) {
  std::string s = dv_key(a.E);
  for (int i = 0; i < 4; i++) s.push_back(char((a.m >> (8 * i)) & 0xff));
  s += point_key(a.base);
  return s;
}

Divisor rd_divisor(const ReducedDivisor& a) {
  return dv_add(a.E, dv_of_point(a.base, -(long long)a.m));
}

ReducedDivisor reduce(const Curve& C, const Divisor& D, const CurvePoint& base, const Budget& bu) {
  if (base.e != 1) fail(Err::BadArg, "base point must be rational");
  if (dv_degree(D) != 0) fail(Err::BadDivisor, "reduction needs a degree-0 divisor");
  unsigned g = smooth_genus(C, bu);
  for (unsigned m = 0; m <= g; m++) {
    Divisor Dm = dv_add(D, dv_of_point(base, (long long)m));
    RRBasis rb = rr_space(C, Dm, bu);
    if (rb.dim == 0) continue;
    if (rb.dim != 1) fail(Err::Internal, "reduction skipped a dimension");
    Divisor E;
    if (mp_total_deg(rb.eaux) == 0) {
      E = Dm;
    } else {
      E = dv_add(dv_sub(form_section_divisor(C, rb.fs[0]), rb.eauxdiv), Dm);
    }
    if (!dv_effective(E) || dv_degree(E) != (long long)m)
      fail(Err::Internal, "reduced representative is off");
    return {E, m, base};
  }
  fail(Err::Internal, "no reduced representative within the genus bound");
}

ReducedDivisor rd_add(const Curve& C, const ReducedDivisor& a, const ReducedDivisor& b,
                      const Budget& bu) {
  if (!point_eq(a.base, b.base)) fail(Err::BadArg, "mismatched base points");
  Divisor D = dv_add(dv_add(a.E, b.E), dv_of_point(a.base, -(long long)(a.m + b.m)));
  return reduce(C, D, a.base, bu);
}

ReducedDivisor rd_neg(const Curve& C, const ReducedDivisor& a, const Budget& bu) {
  return reduce(C, dv_neg(rd_divisor(a)), a.base, bu);
}

ReducedDivisor rd_scalar(const Curve& C, const mpz_class& n, const ReducedDivisor& a,
                         const Budget& bu) {
  if (n == 0 || rd_is_zero(a)) return rd_zero(a.base);
  mpz_class ab = abs(n);
  ReducedDivisor acc = rd_zero(a.base);
  for (long i = (long)mpz_sizeinbase(ab.get_mpz_t(), 2) - 1; i >= 0; i--) {
    acc = rd_add(C, acc, acc, bu);
    if (mpz_tstbit(ab.get_mpz_t(), i)) acc = rd_add(C, acc, a, bu);
  }
  if (n < 0) acc = rd_neg(C, acc, bu);
  return acc;
}

bool jac_is_zero(const Curve& C, const Divisor& D, const Budget& bu) {
  if (dv_degree(D) != 0) fail(Err::BadDivisor, "zero test needs a degree-0 divisor");
  return rr_space(C, D, bu).dim == 1;
}

namespace {

bool triple_less(const std::array<FElem, 3>& a, const std::array<FElem, 3>& b) {
  for (int i = 0; i < 3; i++) {
    if (felem_less(a[i], b[i])) return true;
    if (felem_less(b[i], a[i])) return false;
  }
  return false;
}

}  // namespace

ReducedDivisor jac_ops_scalar(const JacOps& en, const mpz_class& n, const ReducedDivisor& x) {
  if (n == 0) return en.zero;
  mpz_class a = abs(n);
  ReducedDivisor acc = en.zero;
  for (long i = (long)mpz_sizeinbase(a.get_mpz_t(), 2) - 1; i >= 0; i--) {
    acc = en.add(acc, acc);
    if (mpz_tstbit(a.get_mpz_t(), i)) acc = en.add(acc, x);
  }
  if (n < 0) acc = en.neg(acc);
  return acc;
}

JacOps jac_ops(const Curve& C, const CurvePoint& base, const Budget& bu) {
  if (base.e != 1) fail(Err::BadArg, "anchor point must be rational");
  JacOps en;
  en.zero = rd_zero(base);
  if (smooth_genus(C, bu) == 1) {
    EllGroup EG = ell_make(C, base.P, bu);
    auto unwrap = [EG](const ReducedDivisor& a) { return a.m == 0 ? EG.O : a.E.t[0].first.P; };
    Curve Cc = C;
    CurvePoint bc = base;
    auto wrap = [EG, Cc, bc](const std::array<FElem, 3>& P) {
      if (P == EG.O) return rd_zero(bc);
      return ReducedDivisor{dv_of_point(make_point(Cc, Cc.F, P), 1), 1, bc};
    };
    en.add = [EG, wrap, unwrap](const ReducedDivisor& a, const ReducedDivisor& b) {
      return wrap(ell_add(EG, unwrap(a), unwrap(b)));
    };
    en.neg = [EG, wrap, unwrap](const ReducedDivisor& a) { return wrap(ell_neg(EG, unwrap(a))); };
  } else {
    Curve Cc = C;
    Budget bc = bu;
    en.add = [Cc, bc](const ReducedDivisor& a, const ReducedDivisor& b) {
      return rd_add(Cc, a, b, bc);
    };
    en.neg = [Cc, bc](const ReducedDivisor& a) { return rd_neg(Cc, a, bc); };
  }
  return en;
}

GroupStructure class_group_bruteforce(const Curve& C, const Budget& bu) {
  const Field& F = C.F;
  unsigned g = smooth_genus(C, bu);
  auto rat = enumerate_points(C, 1, bu);
  if (rat.empty()) fail(Err::NoSolution, "no rational point to anchor reduced divisors");
  std::sort(rat.begin(), rat.end(), triple_less);
  CurvePoint base = make_point(C, F, rat[0]);
  if (g == 0) return {1, {}, {}, base};

  std::vector<mpz_class> counts;
  for (unsigned j = 1; j <= g; j++) counts.push_back(count_points(C, j, bu));
  ZetaNumerator Z = p1_from_counts(counts, F->q, g);
  mpz_class n = ip_eval(Z.poly, 1);
  if (n > mpz_class((unsigned long)bu.group_order))
    fail(Err::BudgetExceeded, "class group order exceeds the enumeration budget");

  JacOps en = jac_ops(C, base, bu);
  std::vector<ReducedDivisor> elems;
  if (g == 1) {
    elems.push_back(en.zero);
    for (auto& t : rat) {
      if (t == rat[0]) continue;
      elems.push_back({dv_of_point(make_point(C, F, t), 1), 1, base});
    }
  } else {
    std::vector<CurvePoint> cps;
    std::set<std::string> seen;
    for (unsigned e = 1; e <= g; e++) {
      Field K = ext_field(F, e);
      for (auto& t : enumerate_points(C, e, bu)) {
        CurvePoint cp = make_point(C, K, t);
        if (cp.e != e) continue;
        if (seen.insert(point_key(cp)).second) cps.push_back(cp);
      }
    }
    std::sort(cps.begin(), cps.end(), point_less);
    std::set<std::string> got;
    std::vector<std::pair<CurvePoint, long long>> cur;
    std::function<void(size_t, long long)> walk = [&](size_t i, long long rem) {
      Divisor E = dv_make(cur);
      ReducedDivisor rd = reduce(C, dv_add(E, dv_of_point(base, -dv_degree(E))), base, bu);
      if (got.insert(rd_key(rd)).second) elems.push_back(rd);
      for (size_t j = i; j < cps.size(); j++) {
        if ((long long)cps[j].e > rem) continue;
        cur.emplace_back(cps[j], 1);
        walk(j, rem - cps[j].e);
        cur.pop_back();
      }
    };
    walk(0, (long long)g);
  }
  if (mpz_class((unsigned long)elems.size()) != n)
    fail(Err::Internal, "class enumeration disagrees with the zeta order");

  GroupStructure out{n, {}, {}, base};
  if (n == 1) return out;

  struct PB {
    mpz_class p;
    std::vector<std::pair<ReducedDivisor, mpz_class>> basis;  // order descending
  };
  std::vector<PB> pbs;
  for (auto& [p, a] : factor(n)) {
    mpz_class pa;
    mpz_pow_ui(pa.get_mpz_t(), p.get_mpz_t(), (unsigned long)a);
    mpz_class cof = n / pa;
    std::map<std::string, ReducedDivisor> syl;
    for (auto& x : elems) {
      ReducedDivisor y = jac_ops_scalar(en, cof, x);
      syl.emplace(rd_key(y), y);
    }
    if (mpz_class((unsigned long)syl.size()) != pa)
      fail(Err::Internal, "sylow subgroup has the wrong size");
    std::map<std::string, ReducedDivisor> span;
    std::vector<ReducedDivisor> spanlist;
    span.emplace(rd_key(en.zero), en.zero);
    spanlist.push_back(en.zero);
    std::vector<std::pair<ReducedDivisor, mpz_class>> basis;
    while (spanlist.size() < syl.size()) {
      const ReducedDivisor* best = nullptr;
      unsigned bestj = 0;
      for (auto& [k, x] : syl) {
        if (span.count(k)) continue;
        unsigned j = 0;
        ReducedDivisor z = x;
        while (!span.count(rd_key(z))) {
          z = jac_ops_scalar(en, p, z);
          j++;
        }
        if (j > bestj) {
          bestj = j;
          best = &x;
        }
      }
      if (!best) fail(Err::Internal, "span stalled below the sylow subgroup");
      mpz_class qord;
      mpz_pow_ui(qord.get_mpz_t(), p.get_mpz_t(), bestj);
      // lift: shift by a span element so the group order drops to the
      // quotient order, which forces trivial intersection with the span
      ReducedDivisor chosen = en.zero;
      bool found = false;
      for (auto& c : spanlist) {
        ReducedDivisor y = en.add(*best, en.neg(c));
        unsigned t = 0;
        ReducedDivisor z = y;
        while (!rd_eq(z, en.zero)) {
          z = jac_ops_scalar(en, p, z);
          t++;
        }
        if (t == bestj) {
          chosen = y;
          found = true;
          break;
        }
      }
      if (!found) fail(Err::Internal, "no independent lift in the coset");
      basis.emplace_back(chosen, qord);
      std::vector<ReducedDivisor> old = spanlist;
      ReducedDivisor step = en.zero;
      for (mpz_class tt = 1; tt < qord; tt++) {
        step = en.add(step, chosen);
        for (auto& s : old) {
          ReducedDivisor z = en.add(s, step);
          auto [it2, fresh] = span.emplace(rd_key(z), z);
          if (!fresh) fail(Err::Internal, "span extension collided");
          spanlist.push_back(z);
        }
      }
    }
    std::sort(basis.begin(), basis.end(),
              [](const auto& x, const auto& y) { return x.second > y.second; });
    pbs.push_back({p, std::move(basis)});
  }

  size_t r = 0;
  for (auto& pb : pbs) r = std::max(r, pb.basis.size());
  if (r > 2 * (size_t)g) fail(Err::Internal, "class group rank exceeds twice the genus");
  std::vector<mpz_class> inv(r, mpz_class(1));
  std::vector<ReducedDivisor> gens(r, en.zero);
  for (auto& pb : pbs)
    for (size_t t = 0; t < pb.basis.size(); t++) {
      inv[t] *= pb.basis[t].second;
      gens[t] = en.add(gens[t], pb.basis[t].first);
    }
  std::reverse(inv.begin(), inv.end());
  std::reverse(gens.begin(), gens.end());
  mpz_class prod = 1;
  for (size_t i = 0; i < r; i++) {
    prod *= inv[i];
    if (i + 1 < r && !mpz_divisible_p(inv[i + 1].get_mpz_t(), inv[i].get_mpz_t()))
      fail(Err::Internal, "invariant factors fail the divisibility chain");
  }
  if (prod != n) fail(Err::Internal, "invariant factors miss the group order");
  for (size_t i = 0; i < r; i++) {
    if (!rd_is_zero(jac_ops_scalar(en, inv[i], gens[i])))
      fail(Err::Internal, "generator order too large");
    for (auto& [p, a] : factor(inv[i]))
      if (rd_is_zero(jac_ops_scalar(en, inv[i] / p, gens[i])))
        fail(Err::Internal, "generator order too small");
  }
  out.invariants = std::move(inv);
  out.generators = std::move(gens);
  return out;
}

}  // namespace zetafn
