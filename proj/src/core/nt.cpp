#include "core/nt.hpp"

#include <algorithm>

#include "core/err.hpp"

namespace zetafn {

uint64_t mulmod_u64(uint64_t a, uint64_t b, uint64_t m) {
  return (uint64_t)((__uint128_t)a * b % m);
}

uint64_t powmod_u64(uint64_t a, uint64_t e, uint64_t m) {
  uint64_t r = 1 % m;
  a %= m;
  while (e) {
    if (e & 1) r = mulmod_u64(r, a, m);
    a = mulmod_u64(a, a, m);
    e >>= 1;
  }
  return r;
}

bool is_prime_u64(uint64_t n) {
  if (n < 2) return false;
  for (uint64_t p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % p == 0) return n == p;
  }
  uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) d >>= 1, s++;
  // Deterministic Miller-Rabin base set for 64-bit inputs.
  for (uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    uint64_t x = powmod_u64(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool witness = true;
    for (int i = 1; i < s; i++) {
      x = mulmod_u64(x, x, n);
      if (x == n - 1) {
        witness = false;
        break;
      }
    }
    if (witness) return false;
  }
  return true;
}

uint64_t next_prime_u64(uint64_t n) {
  uint64_t c = n + 1;
  if (c <= 2) return 2;
  if ((c & 1) == 0) c++;
  while (!is_prime_u64(c)) c += 2;
  return c;
}

static uint64_t pollard_rho(uint64_t n, uint64_t c0) {
  // Brent's cycle variant; n odd composite, not a prime power obstacle.
  uint64_t y = 2, c = c0, m = 128, g = 1, r = 1, q = 1, x = 0, ys = 0;
  while (g == 1) {
    x = y;
    for (uint64_t i = 0; i < r; i++) y = (mulmod_u64(y, y, n) + c) % n;
    uint64_t k = 0;
    while (k < r && g == 1) {
      ys = y;
      uint64_t lim = std::min(m, r - k);
      for (uint64_t i = 0; i < lim; i++) {
        y = (mulmod_u64(y, y, n) + c) % n;
        q = mulmod_u64(q, x > y ? x - y : y - x, n);
      }
      g = std::__gcd(q, n);
      k += m;
    }
    r <<= 1;
  }
  if (g == n) {
    do {
      ys = (mulmod_u64(ys, ys, n) + c) % n;
      g = std::__gcd(x > ys ? x - ys : ys - x, n);
    } while (g == 1);
  }
  return g;
}

static void factor_rec(uint64_t n, std::map<uint64_t, int>& out) {
  if (n == 1) return;
  if (is_prime_u64(n)) {
    out[n]++;
    return;
  }
  uint64_t d = n;
  for (uint64_t c = 1; d == n; c++) d = pollard_rho(n, c);
  factor_rec(d, out);
  factor_rec(n / d, out);
}

std::map<uint64_t, int> factor_u64(uint64_t n) {
  if (n == 0) fail(Err::BadArg, "factor of 0");
  std::map<uint64_t, int> out;
  for (uint64_t p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL}) {
    while (n % p == 0) n /= p, out[p]++;
  }
  factor_rec(n, out);
  return out;
}

std::vector<uint64_t> prime_divisors_u64(uint64_t n) {
  std::vector<uint64_t> v;
  for (auto& [p, e] : factor_u64(n)) v.push_back(p);
  return v;
}

bool is_prime(const mpz_class& n) {
  if (n < 2) return false;
  if (n.fits_ulong_p() && n.get_ui() <= UINT32_MAX) return is_prime_u64(n.get_ui());
  if (mpz_fits_ulong_p(n.get_mpz_t())) return is_prime_u64(mpz_get_ui(n.get_mpz_t()));
  return mpz_probab_prime_p(n.get_mpz_t(), 40) > 0;
}

std::map<mpz_class, int> factor(const mpz_class& n) {
  if (n <= 0) fail(Err::BadArg, "factor of nonpositive");
  std::map<mpz_class, int> out;
  if (mpz_fits_ulong_p(n.get_mpz_t()) && sizeof(unsigned long) == 8) {
    for (auto& [p, e] : factor_u64(mpz_get_ui(n.get_mpz_t()))) out[mpz_class((unsigned long)p)] = e;
    return out;
  }
  mpz_class m = n;
  for (uint64_t p = 2; p < 100000; p = next_prime_u64(p)) {
    while (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
      m /= (unsigned long)p;
      out[mpz_class((unsigned long)p)]++;
    }
    if (m == 1) return out;
  }
  // Remaining cofactor: recurse with GMP rho on mpz values.
  struct Rec {
    static void go(const mpz_class& v, std::map<mpz_class, int>& acc) {
      if (v == 1) return;
      if (is_prime(v)) {
        acc[v]++;
        return;
      }
      gmp_randclass rs(gmp_randinit_default);
      rs.seed(2463534242UL);
      for (unsigned long c = 1;; c++) {
        mpz_class x = 2, y = 2, d = 1;
        while (d == 1) {
          x = (x * x + c) % v;
          y = (y * y + c) % v;
          y = (y * y + c) % v;
          mpz_class diff = x > y ? x - y : y - x;
          mpz_gcd(d.get_mpz_t(), diff.get_mpz_t(), v.get_mpz_t());
        }
        if (d != v) {
          go(d, acc);
          go(v / d, acc);
          return;
        }
      }
    }
  };
  Rec::go(m, out);
  return out;
}

mpz_class isqrt(const mpz_class& n) {
  if (n < 0) fail(Err::BadArg, "isqrt of negative");
  mpz_class r;
  mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
  return r;
}

mpz_class pow_mpz(const mpz_class& b, unsigned long e) {
  mpz_class r;
  mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), e);
  return r;
}

uint64_t u64_of(const mpz_class& n) {
  if (n < 0 || !mpz_fits_ulong_p(n.get_mpz_t())) fail(Err::BadArg, "value out of u64 range");
  return mpz_get_ui(n.get_mpz_t());
}

unsigned bit_length(const mpz_class& n) {
  if (n < 1) fail(Err::BadArg, "bit_length needs n >= 1");
  return (unsigned)mpz_sizeinbase(n.get_mpz_t(), 2);
}

}  // namespace zetafn
