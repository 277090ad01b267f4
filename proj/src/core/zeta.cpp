#include "core/zeta.hpp"

#include <algorithm>
#include <complex>

#include "core/err.hpp"
#include "core/nt.hpp"

namespace zetafn {

namespace {

mpz_class binom(unsigned n, unsigned k) {
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

// Newton step: recover a_1..a_deg from the power sums s_1..s_deg of the
// reciprocal roots.  The divisions are exact for power sums of any integer
// polynomial; a remainder means the input sums are corrupted.
IntPoly newton_from_sums(const std::vector<mpz_class>& s, unsigned deg, Err ecode) {
  IntPoly a(deg + 1);
  a[0] = 1;
  for (unsigned k = 1; k <= deg; k++) {
    mpz_class num = s[k - 1];
    for (unsigned i = 1; i < k; i++) num += a[i] * s[k - i - 1];
    if (num % k != 0) fail(ecode, "power sums do not come from an integer polynomial");
    a[k] = -num / k;
  }
  return a;
}

// s_1..s_jmax from the coefficients: Newton for j <= 2g, then the linear
// recurrence s_j = -sum a_i s_{j-i}.
std::vector<mpz_class> sums_from_coeffs(const IntPoly& a, unsigned n, unsigned jmax) {
  std::vector<mpz_class> s(jmax);
  for (unsigned k = 1; k <= jmax; k++) {
    mpz_class acc = 0;
    if (k <= n) acc = mpz_class(k) * a[k];
    unsigned top = std::min<unsigned>(n, k - 1);
    for (unsigned i = 1; i <= top; i++) acc += a[i] * s[k - i - 1];
    s[k - 1] = -acc;
  }
  return s;
}

bool divides_bigger_than(uint64_t m, unsigned bound) {
  if (m < 2) return false;
  for (uint64_t d : prime_divisors_u64(m)) {
    if (d > bound) return true;
  }
  return false;
}

}  // namespace

HasseWeilInterval hasse_weil_interval(const mpz_class& q, unsigned g) {
  if (q < 2) fail(Err::BadArg, "field order must be at least 2");
  // (sqrt(q) +- 1)^{2g} = A +- B sqrt(q) with A, B >= 0
  mpz_class A = 0, B = 0, qp = 1;
  for (unsigned j = 0; 2 * j <= 2 * g; j++) {
    A += binom(2 * g, 2 * j) * qp;
    if (2 * j + 1 <= 2 * g) B += binom(2 * g, 2 * j + 1) * qp;
    qp *= q;
  }
  mpz_class r = isqrt(B * B * q);
  return HasseWeilInterval{A - r, A + r, q, g};
}

bool gap_ok(const mpz_class& q, unsigned g) {
  mpz_class t = 8 * mpz_class(g) + 1;
  return q > t * t;
}

bool functional_symmetry(const IntPoly& poly, const mpz_class& q, unsigned g) {
  if (ip_deg(poly) != (int)(2 * g)) return false;
  for (unsigned i = 0; i <= g; i++) {
    if (poly[2 * g - i] != pow_mpz(q, g - i) * poly[i]) return false;
  }
  return true;
}

ZetaNumerator zeta_make(const mpz_class& q, unsigned g, IntPoly poly) {
  poly = ip_trim(std::move(poly));
  if (ip_deg(poly) != (int)(2 * g)) fail(Err::Inconsistent, "numerator degree is not 2g");
  if (poly[0] != 1) fail(Err::Inconsistent, "numerator constant term is not 1");
  if (!functional_symmetry(poly, q, g))
    fail(Err::Inconsistent, "functional-equation symmetry fails");
  HasseWeilInterval hw = hasse_weil_interval(q, g);
  mpz_class v = ip_eval(poly, 1);
  if (v < hw.lo || v > hw.hi)
    fail(Err::Inconsistent, "value at 1 escapes the Hasse-Weil interval");
  return ZetaNumerator{q, g, std::move(poly)};
}

std::vector<mpz_class> power_sums(const ZetaNumerator& P, unsigned jmax) {
  return sums_from_coeffs(P.poly, 2 * P.g, jmax);
}

ZetaNumerator p1_from_counts(const std::vector<mpz_class>& counts, const mpz_class& q, unsigned g) {
  if (counts.size() != g) fail(Err::BadArg, "need exactly g counts");
  std::vector<mpz_class> s(g);
  mpz_class qj = 1;
  for (unsigned j = 1; j <= g; j++) {
    qj *= q;
    mpz_class dev = counts[j - 1] - qj - 1;
    if (dev * dev > 4 * mpz_class(g) * g * qj)
      fail(Err::Inconsistent, "count escapes the Weil bound");
    s[j - 1] = qj + 1 - counts[j - 1];
  }
  IntPoly low = newton_from_sums(s, g, Err::Inconsistent);
  IntPoly a(2 * g + 1);
  for (unsigned i = 0; i <= g; i++) a[i] = low[i];
  for (unsigned i = 0; i < g; i++) a[2 * g - i] = pow_mpz(q, g - i) * a[i];
  return zeta_make(q, g, std::move(a));
}

std::vector<mpz_class> expected_counts(const ZetaNumerator& P, unsigned jmax) {
  std::vector<mpz_class> s = power_sums(P, jmax);
  std::vector<mpz_class> N(jmax);
  mpz_class qj = 1;
  for (unsigned j = 1; j <= jmax; j++) {
    qj *= P.q;
    N[j - 1] = qj + 1 - s[j - 1];
  }
  return N;
}

ZetaNumerator extension_power(const ZetaNumerator& P, unsigned r) {
  if (r < 1) fail(Err::BadArg, "extension degree must be at least 1");
  unsigned n = 2 * P.g;
  std::vector<mpz_class> s = power_sums(P, n * r);
  std::vector<mpz_class> sr(n);
  for (unsigned k = 1; k <= n; k++) sr[k - 1] = n ? s[r * k - 1] : 0;
  IntPoly a = newton_from_sums(sr, n, Err::Internal);
  return zeta_make(pow_mpz(P.q, r), P.g, std::move(a));
}

std::vector<mpz_class> extension_orders(const ZetaNumerator& P, unsigned jmax) {
  unsigned n = 2 * P.g;
  std::vector<mpz_class> out(jmax);
  if (n == 0) {
    for (auto& o : out) o = 1;
    return out;
  }
  std::vector<mpz_class> s = power_sums(P, n * jmax);
  for (unsigned j = 1; j <= jmax; j++) {
    std::vector<mpz_class> sr(n);
    for (unsigned k = 1; k <= n; k++) sr[k - 1] = s[j * k - 1];
    IntPoly a = newton_from_sums(sr, n, Err::Internal);
    mpz_class v = 0;
    for (auto& c : a) v += c;
    out[j - 1] = v;
  }
  return out;
}

ZetaNumerator descend(const ZetaNumerator& P1m, unsigned m1, const ZetaNumerator& P2m, unsigned m2,
                      const mpz_class& q, unsigned g) {
  if (m1 >= m2) fail(Err::NotAdmissible, "extensions must satisfy m1 < m2");
  if (!is_prime_u64(m1) || !is_prime_u64(m2))
    fail(Err::NotAdmissible, "extension degrees must be prime");
  if (!divides_bigger_than(m1 - 1, 2 * g) || !divides_bigger_than(m2 - 1, 2 * g))
    fail(Err::NotAdmissible, "m-1 needs a prime factor above 2g");
  mpz_class t = 8 * mpz_class(g) + 1;
  if (pow_mpz(q, m1) <= t * t) fail(Err::NotAdmissible, "q^m1 is below the gap threshold");
  if (P1m.g != g || P2m.g != g) fail(Err::BadArg, "genus mismatch");
  if (P1m.q != pow_mpz(q, m1) || P2m.q != pow_mpz(q, m2))
    fail(Err::BadArg, "input numerators live over the wrong fields");

  IntPoly A = ip_compose_power(P1m.poly, m1);
  IntPoly B = ip_compose_power(P2m.poly, m2);
  IntPoly G = ip_gcd(A, B);
  if (ip_deg(G) != (int)(2 * g)) fail(Err::DescentFailed, "gcd degree is not 2g");
  ZetaNumerator Z;
  try {
    Z = zeta_make(q, g, std::move(G));
  } catch (const ZfError&) {
    fail(Err::DescentFailed, "gcd is not a valid numerator over the base field");
  }
  if (extension_power(Z, m1).poly != P1m.poly || extension_power(Z, m2).poly != P2m.poly)
    fail(Err::DescentFailed, "descended numerator does not reproduce the inputs");
  return Z;
}

std::pair<unsigned, unsigned> admissible_extensions(const mpz_class& q, unsigned g) {
  mpz_class t = 8 * mpz_class(g) + 1;
  mpz_class thr = t * t;
  unsigned m1 = 0, m2 = 0;
  uint64_t m = 2;
  while (!m2) {
    if (divides_bigger_than(m - 1, 2 * g)) {
      if (!m1) {
        if (pow_mpz(q, (unsigned)m) > thr) m1 = (unsigned)m;
      } else {
        m2 = (unsigned)m;
      }
    }
    m = next_prime_u64(m);
  }
  return {m1, m2};
}

ZetaNumerator p1_from_jacobian_orders(const std::vector<mpz_class>& orders, const mpz_class& q,
                                      unsigned g, const Budget& bu) {
  if (orders.empty()) fail(Err::BadArg, "need at least one order");
  for (auto& o : orders) {
    if (o < 1) fail(Err::BadArg, "group orders are positive");
  }
  if (g == 0) {
    for (auto& o : orders) {
      if (o != 1) fail(Err::NoSolution, "genus zero admits only trivial orders");
    }
    return ZetaNumerator{q, 0, {mpz_class(1)}};
  }
  unsigned J = (unsigned)orders.size();
  unsigned n = 2 * g;

  std::vector<mpz_class> box(g + 1);
  mpz_class total = 1;
  for (unsigned i = 1; i <= g; i++) {
    mpz_class c = binom(n, i);
    box[i] = isqrt(c * c * pow_mpz(q, i));
    total *= 2 * box[i] + 1;
  }
  if (total > mpz_class((unsigned long)bu.coeff_box))
    fail(Err::BudgetExceeded, "coefficient box exceeds the search budget");

  std::vector<mpz_class> v(g + 1);
  for (unsigned i = 1; i <= g; i++) v[i] = -box[i];
  std::vector<IntPoly> survivors;

  while (true) {
    IntPoly a(n + 1);
    a[0] = 1;
    for (unsigned i = 1; i <= g; i++) a[i] = v[i];
    for (unsigned i = 0; i < g; i++) a[n - i] = pow_mpz(q, g - i) * a[i];

    bool ok = true;
    {
      mpz_class v1 = 0;
      for (auto& c : a) v1 += c;
      ok = (v1 == orders[0]);
    }
    if (ok && J > 1) {
      std::vector<mpz_class> s = sums_from_coeffs(a, n, n * J);
      for (unsigned j = 2; j <= J && ok; j++) {
        std::vector<mpz_class> sr(n);
        for (unsigned k = 1; k <= n; k++) sr[k - 1] = s[j * k - 1];
        try {
          IntPoly aj = newton_from_sums(sr, n, Err::Inconsistent);
          mpz_class val = 0;
          for (auto& c : aj) val += c;
          ok = (val == orders[j - 1]);
        } catch (const ZfError&) {
          ok = false;
        }
      }
    }
    if (ok) {
      try {
        zeta_make(q, g, a);
        survivors.push_back(a);
        if (survivors.size() > 1) break;
      } catch (const ZfError&) {
        // candidate matches the orders but is not a valid numerator
      }
    }

    unsigned i = 1;
    for (; i <= g; i++) {
      if (v[i] < box[i]) {
        v[i] += 1;
        for (unsigned l = 1; l < i; l++) v[l] = -box[l];
        break;
      }
    }
    if (i > g) break;
  }

  if (survivors.empty()) fail(Err::NoSolution, "no coefficient vector matches the orders");
  if (survivors.size() > 1) fail(Err::Ambiguous, "several coefficient vectors match the orders");
  return zeta_make(q, g, survivors.front());
}

double root_modulus_residual(const ZetaNumerator& P) {
  if (P.g == 0) return 0.0;
  // multiple roots stall the iteration, so deflate to the squarefree part
  // first; the modulus set is unchanged and the deflation is exact
  IntPoly sf = P.poly;
  IntPoly der = ip_derivative(sf);
  IntPoly com = ip_gcd(sf, der);
  if (ip_deg(com) > 0) sf = ip_divexact(sf, com);
  unsigned n = (unsigned)ip_deg(sf);
  if (n == 0) return 0.0;
  std::vector<std::complex<double>> c(n + 1);
  for (unsigned i = 0; i <= n; i++) c[i] = sf[i].get_d();
  std::vector<std::complex<double>> z(n);
  std::complex<double> seed(0.4, 0.9);
  std::complex<double> acc(1.0, 0.0);
  for (unsigned i = 0; i < n; i++) {
    acc *= seed;
    z[i] = acc;
  }
  for (int iter = 0; iter < 500; iter++) {
    for (unsigned i = 0; i < n; i++) {
      std::complex<double> num = 0.0;
      for (int k = (int)n; k >= 0; k--) num = num * z[i] + c[k];
      std::complex<double> den = c[n];
      for (unsigned j = 0; j < n; j++) {
        if (j != i) den *= (z[i] - z[j]);
      }
      if (std::abs(den) < 1e-300) den = 1e-300;
      z[i] -= num / den;
    }
  }
  double rq = std::sqrt(P.q.get_d());
  double worst = 0.0;
  for (auto& zi : z) worst = std::max(worst, std::abs(std::abs(zi) * rq - 1.0));
  return worst;
}

}  // namespace zetafn
