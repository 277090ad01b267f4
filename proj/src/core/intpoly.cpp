#include "core/intpoly.hpp"

#include <algorithm>

#include "core/err.hpp"

namespace zetafn {

IntPoly ip_trim(IntPoly a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
  return a;
}

IntPoly ip_from(std::vector<long> coeffs) {
  IntPoly a;
  a.reserve(coeffs.size());
  for (long c : coeffs) a.emplace_back(c);
  return ip_trim(std::move(a));
}

int ip_deg(const IntPoly& a) { return (int)a.size() - 1; }

bool ip_is_zero(const IntPoly& a) { return a.empty(); }

mpz_class ip_lead(const IntPoly& a) {
  if (a.empty()) fail(Err::BadArg, "lead of zero polynomial");
  return a.back();
}

IntPoly ip_add(const IntPoly& a, const IntPoly& b) {
  IntPoly r(std::max(a.size(), b.size()), mpz_class(0));
  for (size_t i = 0; i < a.size(); i++) r[i] += a[i];
  for (size_t i = 0; i < b.size(); i++) r[i] += b[i];
  return ip_trim(std::move(r));
}

IntPoly ip_sub(const IntPoly& a, const IntPoly& b) {
  IntPoly r(std::max(a.size(), b.size()), mpz_class(0));
  for (size_t i = 0; i < a.size(); i++) r[i] += a[i];
  for (size_t i = 0; i < b.size(); i++) r[i] -= b[i];
  return ip_trim(std::move(r));
}

IntPoly ip_neg(const IntPoly& a) {
  IntPoly r = a;
  for (auto& c : r) c = -c;
  return r;
}

IntPoly ip_mul(const IntPoly& a, const IntPoly& b) {
  if (a.empty() || b.empty()) return {};
  IntPoly r(a.size() + b.size() - 1, mpz_class(0));
  for (size_t i = 0; i < a.size(); i++)
    for (size_t j = 0; j < b.size(); j++) r[i + j] += a[i] * b[j];
  return ip_trim(std::move(r));
}

IntPoly ip_scale(const IntPoly& a, const mpz_class& c) {
  if (c == 0) return {};
  IntPoly r = a;
  for (auto& x : r) x *= c;
  return r;
}

IntPoly ip_divexact(const IntPoly& a, const IntPoly& b) {
  if (b.empty()) fail(Err::BadArg, "division by zero polynomial");
  if (a.empty()) return {};
  if (a.size() < b.size()) fail(Err::Inconsistent, "inexact polynomial division");
  IntPoly rem = a;
  IntPoly q(a.size() - b.size() + 1, mpz_class(0));
  for (int i = (int)q.size() - 1; i >= 0; i--) {
    mpz_class& top = rem[i + b.size() - 1];
    if (top == 0) continue;
    mpz_class qi, r;
    mpz_tdiv_qr(qi.get_mpz_t(), r.get_mpz_t(), top.get_mpz_t(), b.back().get_mpz_t());
    if (r != 0) fail(Err::Inconsistent, "inexact polynomial division");
    q[i] = qi;
    for (size_t j = 0; j < b.size(); j++) rem[i + j] -= qi * b[j];
  }
  for (auto& c : rem)
    if (c != 0) fail(Err::Inconsistent, "inexact polynomial division");
  return ip_trim(std::move(q));
}

IntPoly ip_derivative(const IntPoly& a) {
  if (a.size() <= 1) return {};
  IntPoly r(a.size() - 1);
  for (size_t i = 1; i < a.size(); i++) r[i - 1] = a[i] * (long)i;
  return ip_trim(std::move(r));
}

mpz_class ip_eval(const IntPoly& a, const mpz_class& x) {
  mpz_class r = 0;
  for (size_t i = a.size(); i-- > 0;) r = r * x + a[i];
  return r;
}

IntPoly ip_compose_power(const IntPoly& a, unsigned m) {
  if (m == 0) fail(Err::BadArg, "compose with T^0");
  if (a.empty()) return {};
  IntPoly r((a.size() - 1) * m + 1, mpz_class(0));
  for (size_t i = 0; i < a.size(); i++) r[i * m] = a[i];
  return ip_trim(std::move(r));
}

mpz_class ip_content(const IntPoly& a) {
  mpz_class g = 0;
  for (const auto& c : a) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  return g;
}

IntPoly ip_primitive(const IntPoly& a) {
  if (a.empty()) return {};
  mpz_class g = ip_content(a);
  IntPoly r = a;
  for (auto& c : r) c /= g;
  return r;
}

// lc(b)^(deg a - deg b + 1) * a = q*b + rem
static IntPoly pseudo_rem(const IntPoly& a, const IntPoly& b) {
  IntPoly rem = a;
  int db = ip_deg(b);
  mpz_class lb = ip_lead(b);
  int steps = ip_deg(a) - db + 1;
  for (int s = 0; s < steps; s++) {
    int dr = ip_deg(rem);
    if (dr < db) {
      mpz_class f;
      mpz_pow_ui(f.get_mpz_t(), lb.get_mpz_t(), steps - s);
      return ip_trim(ip_scale(rem, f));
    }
    mpz_class top = rem.back();
    for (auto& c : rem) c *= lb;
    for (int j = 0; j <= db; j++) rem[dr - db + j] -= top * b[j];
    rem = ip_trim(std::move(rem));
  }
  return rem;
}

static IntPoly normalize_sign(IntPoly a) {
  if (a.empty()) return a;
  bool flip;
  if (a[0] != 0)
    flip = a[0] < 0;
  else
    flip = a.back() < 0;
  if (flip)
    for (auto& c : a) c = -c;
  return a;
}

IntPoly ip_gcd(const IntPoly& a0, const IntPoly& b0) {
  IntPoly a = a0, b = b0;
  if (a.empty()) return normalize_sign(b);
  if (b.empty()) return normalize_sign(a);
  mpz_class cont;
  mpz_gcd(cont.get_mpz_t(), ip_content(a).get_mpz_t(), ip_content(b).get_mpz_t());
  a = ip_primitive(a);
  b = ip_primitive(b);
  if (ip_deg(a) < ip_deg(b)) std::swap(a, b);
  while (!b.empty()) {
    IntPoly r = pseudo_rem(a, b);
    a = std::move(b);
    b = r.empty() ? IntPoly{} : ip_primitive(r);
    if (!b.empty() && ip_deg(a) < ip_deg(b)) std::swap(a, b);
  }
  return normalize_sign(ip_scale(ip_primitive(a), cont));
}

mpz_class ip_resultant(const IntPoly& a, const IntPoly& b) {
  int m = ip_deg(a), n = ip_deg(b);
  if (m < 0 || n < 0) return 0;
  if (m == 0 && n == 0) return 1;
  size_t dim = m + n;
  // Sylvester matrix, then Bareiss fraction-free Gaussian elimination.
  std::vector<std::vector<mpz_class>> M(dim, std::vector<mpz_class>(dim, mpz_class(0)));
  for (int i = 0; i < n; i++)
    for (int j = 0; j <= m; j++) M[i][i + j] = a[m - j];
  for (int i = 0; i < m; i++)
    for (int j = 0; j <= n; j++) M[n + i][i + j] = b[n - j];
  mpz_class prev = 1;
  int sign = 1;
  for (size_t k = 0; k + 1 < dim; k++) {
    if (M[k][k] == 0) {
      size_t piv = k + 1;
      while (piv < dim && M[piv][k] == 0) piv++;
      if (piv == dim) return 0;
      std::swap(M[k], M[piv]);
      sign = -sign;
    }
    for (size_t i = k + 1; i < dim; i++) {
      for (size_t j = k + 1; j < dim; j++) {
        M[i][j] = (M[k][k] * M[i][j] - M[i][k] * M[k][j]) / prev;
      }
      M[i][k] = 0;
    }
    prev = M[k][k];
  }
  return sign * M[dim - 1][dim - 1];
}

}  // namespace zetafn
