#include "core/solve0dim.hpp"

#include <algorithm>
#include <set>

#include "core/err.hpp"
#include "core/fieldpoly.hpp"

namespace zetafn {

bool orbit_less(const AffineOrbit& a, const AffineOrbit& b) {
  if (a.e != b.e) return a.e < b.e;
  if (a.x.size() != b.x.size()) return a.x.size() < b.x.size();
  for (size_t i = 0; i < a.x.size(); i++) {
    if (a.x[i] != b.x[i]) return felem_less(a.x[i], b.x[i]);
  }
  return false;
}

namespace {

struct NeedShear {};

constexpr size_t CANDIDATE_CAP = 1 << 16;

// minimal conjugate representative of a tuple over the base field
AffineOrbit canonical_orbit(const Field& F, const Field& K, std::vector<FElem> x) {
  unsigned n = K->k / F->k;
  unsigned e = n;
  for (unsigned t = 1; t <= n; t++) {
    if (n % t) continue;
    bool fixed = true;
    for (auto& c : x) {
      if (frob_over(F, K, c, t) != c) {
        fixed = false;
        break;
      }
    }
    if (fixed) {
      e = t;
      break;
    }
  }
  Field Ke = field_make(F->p, F->k * e);
  std::vector<FElem> small(x.size());
  for (size_t i = 0; i < x.size(); i++) small[i] = project_down(Ke, K, x[i]);
  // minimise over the e conjugates
  std::vector<FElem> best = small;
  std::vector<FElem> cur = small;
  for (unsigned t = 1; t < e; t++) {
    for (auto& c : cur) c = frob_over(F, Ke, c, 1);
    if (std::lexicographical_compare(cur.begin(), cur.end(), best.begin(), best.end(), felem_less))
      best = cur;
  }
  return AffineOrbit{e, best};
}

FPoly to_univariate(const Field& K, const MPoly& g, unsigned v) {
  FPoly c(std::max(mp_deg_in(g, v) + 1, 0), K->zero());
  for (auto& [e, coef] : g.t) {
    c[e[v]] = K->add(c[e[v]], coef);
  }
  return fp_trim(K, std::move(c));
}

void solve_rec(const Field& F, std::vector<MPoly> sys, unsigned nv,
               std::vector<AffineOrbit>& out, Rng& rng) {
  // drop zero polynomials; constant nonzero kills the system
  std::vector<MPoly> live;
  for (auto& g : sys) {
    if (mp_is_zero(g)) continue;
    if (mp_total_deg(g) == 0) return;  // nonzero constant, no solutions
    live.push_back(g);
  }
  if (live.empty()) fail(Err::Degenerate, "system is not zero-dimensional");

  if (nv == 1) {
    FPoly g;
    bool first = true;
    for (auto& mp : live) {
      FPoly u = to_univariate(F, mp, 0);
      g = first ? u : fp_gcd(F, g, u);
      first = false;
    }
    if (fp_is_zero(g)) fail(Err::Degenerate, "system is not zero-dimensional");
    if (fp_deg(g) == 0) return;
    for (auto& [u, mult] : fp_factor(F, g, rng)) {
      unsigned e = fp_deg(u);
      Field K = field_make(F->p, F->k * e);
      FPoly ub(u.size());
      for (size_t i = 0; i < u.size(); i++) ub[i] = embed_up(F, K, u[i]);
      Rng r2 = rng.fork("roots");
      auto roots = fp_roots(K, ub, r2);
      if (roots.empty()) fail(Err::Internal, "irreducible factor lost its roots");
      out.push_back(canonical_orbit(F, K, {roots.front().first}));
      if (out.size() > CANDIDATE_CAP) fail(Err::Degenerate, "candidate set too large");
    }
    return;
  }

  unsigned v = nv - 1;
  int best = -1;
  for (size_t i = 0; i < live.size(); i++) {
    int d = mp_deg_in(live[i], v);
    if (d >= 1 && (best < 0 || d < mp_deg_in(live[best], v))) best = (int)i;
  }
  if (best < 0) fail(Err::Degenerate, "variable unconstrained");

  // Eliminate v against the pivot.  A vanishing resultant only means the
  // pivot shares a v-factor with that particular polynomial; combinations
  // g_i + m * g_j stay in the ideal (so the eliminated variety still
  // contains the projection we are after) and generically break the shared
  // factor.  Only a factor common to the whole system survives every
  // combination, and that really is a positive-dimensional system.
  auto eliminate = [&](size_t i) -> MPoly {
    MPoly R = mp_resultant(F, live[best], live[i], v);
    if (!mp_is_zero(R)) return R;
    if (live.size() == 2) fail(Err::Degenerate, "system has a common factor");
    unsigned amb = live[i].nvars;
    for (int attempt = 0; attempt < 40; attempt++) {
      size_t j = rng.below(live.size());
      if (j == i || (int)j == best) continue;
      MPoly m = mp_const(F, amb, F->unrank(1 + rng.below(F->q_u64 - 1)));
      unsigned mexp = (unsigned)rng.below(3);
      if (mexp) m = mp_mul(F, m, mp_pow(F, mp_var(F, amb, (unsigned)rng.below(nv)), mexp));
      MPoly h = mp_add(F, live[i], mp_mul(F, m, live[j]));
      if (mp_is_zero(h)) continue;
      if (mp_deg_in(h, v) < 1) return h;
      R = mp_resultant(F, live[best], h, v);
      if (!mp_is_zero(R)) return R;
    }
    throw NeedShear{};
  };

  std::vector<MPoly> reduced;
  for (size_t i = 0; i < live.size(); i++) {
    if ((int)i == best) continue;
    if (mp_deg_in(live[i], v) < 1) {
      reduced.push_back(live[i]);
      continue;
    }
    reduced.push_back(eliminate(i));
  }
  if (reduced.empty()) fail(Err::Degenerate, "system is not zero-dimensional");

  std::vector<AffineOrbit> partial;
  solve_rec(F, reduced, nv - 1, partial, rng);

  for (auto& po : partial) {
    Field K = field_make(F->p, F->k * po.e);
    // specialise every polynomial at the partial point
    FPoly g;
    bool first = true;
    for (auto& mp : live) {
      MPoly gK = mp_embed(F, K, mp);
      for (unsigned w = 0; w < v; w++) gK = mp_subst_const(K, gK, w, po.x[w]);
      FPoly u = to_univariate(K, gK, v);
      g = first ? u : fp_gcd(K, g, u);
      first = false;
      if (!first && fp_deg(g) == 0 && !fp_is_zero(g)) break;
    }
    if (fp_is_zero(g)) fail(Err::Degenerate, "fibre is not finite");
    if (fp_deg(g) == 0) continue;
    Rng r2 = rng.fork("fibre");
    for (auto& [u, mult] : fp_factor(K, g, r2)) {
      unsigned ee = fp_deg(u);
      Field K2 = field_make(F->p, K->k * ee);
      FPoly ub(u.size());
      for (size_t i = 0; i < u.size(); i++) ub[i] = embed_up(K, K2, u[i]);
      Rng r3 = rng.fork("fibre-roots");
      auto roots = fp_roots(K2, ub, r3);
      if (roots.empty()) fail(Err::Internal, "irreducible factor lost its roots");
      std::vector<FElem> tuple(nv);
      for (unsigned w = 0; w < v; w++) tuple[w] = embed_up(K, K2, po.x[w]);
      tuple[v] = roots.front().first;
      // verify against the full system before keeping the candidate
      bool ok = true;
      for (auto& mp : live) {
        MPoly gK2 = mp_embed(F, K2, mp);
        std::vector<FElem> pad = tuple;
        pad.resize(mp.nvars, K2->zero());
        if (!K2->is_zero(mp_eval(K2, gK2, pad))) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      out.push_back(canonical_orbit(F, K2, tuple));
      if (out.size() > CANDIDATE_CAP) fail(Err::Degenerate, "candidate set too large");
    }
  }
}

}  // namespace

std::vector<AffineOrbit> solve0dim(const Field& F, const std::vector<MPoly>& sys, unsigned nvars) {
  if (nvars < 1 || nvars > 4) fail(Err::BadArg, "solve0dim supports 1 to 4 variables");
  unsigned amb = nvars;
  for (auto& g : sys) {
    if (g.nvars < nvars) fail(Err::BadArg, "polynomial has too few variables");
    amb = std::max(amb, g.nvars);
  }
  for (auto& g : sys) {
    if (g.nvars != amb) fail(Err::BadArg, "system polynomials disagree on variable count");
  }
  Rng rng(fnv1a64("solve0dim"));
  for (int attempt = 0; attempt < 8; attempt++) {
    std::vector<MPoly> cur = sys;
    bool sheared = attempt > 0;
    std::vector<std::vector<FElem>> M;
    if (sheared) {
      // unit triangular mixes keep the map invertible; we only ever need the
      // forward matrix to map solutions back
      M.assign(amb, std::vector<FElem>(amb, F->zero()));
      for (unsigned i = 0; i < amb; i++) M[i][i] = F->one();
      for (unsigned i = 0; i < nvars; i++)
        for (unsigned j = i + 1; j < nvars; j++)
          M[i][j] = F->q_u64 ? F->unrank(rng.below(F->q_u64)) : F->from_int(rng.below(F->p));
      for (auto& g : cur) g = mp_subst_linear(F, g, M);
    }
    try {
      std::vector<AffineOrbit> raw;
      solve_rec(F, cur, nvars, raw, rng);
      std::vector<AffineOrbit> out;
      std::set<std::pair<unsigned, std::vector<FElem>>> seen;
      for (auto& o : raw) {
        AffineOrbit fin = o;
        if (sheared) {
          Field K = field_make(F->p, F->k * o.e);
          std::vector<FElem> mapped(o.x.size(), K->zero());
          for (unsigned i = 0; i < nvars; i++) {
            FElem acc = K->zero();
            for (unsigned j = 0; j < nvars; j++) {
              if (F->is_zero(M[i][j])) continue;
              acc = K->add(acc, K->mul(embed_up(F, K, M[i][j]), o.x[j]));
            }
            mapped[i] = acc;
          }
          fin = canonical_orbit(F, K, mapped);
        }
        if (seen.insert({fin.e, fin.x}).second) out.push_back(fin);
      }
      std::sort(out.begin(), out.end(), orbit_less);
      return out;
    } catch (const NeedShear&) {
      continue;
    }
  }
  fail(Err::Degenerate, "persistent resultant degeneracy");
}

}  // namespace zetafn
