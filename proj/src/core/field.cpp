#include "core/field.hpp"

#include <algorithm>

#include "core/err.hpp"
#include "core/nt.hpp"

namespace zetafn {

// ---- F_p[T] helpers on raw coefficient vectors (ascending, trimmed) ----

using PV = std::vector<uint32_t>;

static PV pv_trim(PV a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
  return a;
}

static PV pv_mulmod(const PV& a, const PV& b, const PV& f, uint32_t p) {
  if (a.empty() || b.empty()) return {};
  std::vector<uint64_t> t(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); i++)
    for (size_t j = 0; j < b.size(); j++) t[i + j] = (t[i + j] + (uint64_t)a[i] * b[j]) % p;
  size_t df = f.size() - 1;
  for (size_t i = t.size(); i-- > df;) {
    uint64_t c = t[i] % p;
    if (!c) continue;
    t[i] = 0;
    for (size_t j = 0; j < df; j++) {
      uint64_t sub = c * f[j] % p;
      t[i - df + j] = (t[i - df + j] + p - sub) % p;
    }
  }
  PV r(std::min(t.size(), df));
  for (size_t i = 0; i < r.size(); i++) r[i] = (uint32_t)(t[i] % p);
  return pv_trim(std::move(r));
}

static PV pv_powmod(PV base, const mpz_class& e, const PV& f, uint32_t p) {
  PV r{1};
  for (long i = (long)mpz_sizeinbase(e.get_mpz_t(), 2) - 1; i >= 0; i--) {
    r = pv_mulmod(r, r, f, p);
    if (mpz_tstbit(e.get_mpz_t(), i)) r = pv_mulmod(r, base, f, p);
  }
  return r;
}

static PV pv_gcd(PV a, PV b, uint32_t p) {
  a = pv_trim(std::move(a));
  b = pv_trim(std::move(b));
  while (!b.empty()) {
    // a mod b
    uint64_t ilead = powmod_u64(b.back(), p - 2, p);
    while (a.size() >= b.size()) {
      uint64_t c = (uint64_t)a.back() * ilead % p;
      size_t off = a.size() - b.size();
      for (size_t j = 0; j < b.size(); j++) {
        uint64_t sub = c * b[j] % p;
        a[off + j] = (uint32_t)((a[off + j] + p - sub) % p);
      }
      a = pv_trim(std::move(a));
      if (a.empty()) break;
    }
    std::swap(a, b);
  }
  return a;
}

static bool pv_irreducible(const PV& f, uint32_t p) {
  // Monic f of degree k: irreducible iff T^(p^k) = T mod f and
  // gcd(T^(p^(k/t)) - T, f) = 1 for every prime t | k.
  unsigned k = f.size() - 1;
  if (k == 1) return true;
  mpz_class pk;
  mpz_ui_pow_ui(pk.get_mpz_t(), p, k);
  PV x{0, 1};
  PV xq = pv_powmod(x, pk, f, p);
  if (pv_trim(xq) != pv_trim(x)) return false;
  for (uint64_t t : prime_divisors_u64(k)) {
    mpz_class e;
    mpz_ui_pow_ui(e.get_mpz_t(), p, k / t);
    PV y = pv_powmod(x, e, f, p);
    // y - x
    PV d = y;
    d.resize(std::max(d.size(), x.size()), 0);
    d[1] = (d[1] + p - 1) % p;
    d = pv_trim(std::move(d));
    PV g = pv_gcd(d, f, p);
    if (!(g.size() == 1)) return false;
  }
  return true;
}

// ---- field object ----

FElem FieldDesc::one() const {
  FElem a(k, 0);
  a[0] = 1;
  return a;
}

FElem FieldDesc::from_int(uint64_t n) const {
  FElem a(k, 0);
  a[0] = (uint32_t)(n % p);
  return a;
}

FElem FieldDesc::gen() const {
  FElem a(k, 0);
  if (k == 1)
    a[0] = 1;
  else
    a[1] = 1;
  return a;
}

bool FieldDesc::is_zero(const FElem& a) const {
  for (uint32_t c : a)
    if (c) return false;
  return true;
}

FElem FieldDesc::add(const FElem& a, const FElem& b) const {
  FElem r(k);
  for (uint32_t i = 0; i < k; i++) {
    uint32_t s = a[i] + b[i];
    r[i] = s >= p ? s - p : s;
  }
  return r;
}

FElem FieldDesc::sub(const FElem& a, const FElem& b) const {
  FElem r(k);
  for (uint32_t i = 0; i < k; i++) {
    uint32_t s = a[i] + p - b[i];
    r[i] = s >= p ? s - p : s;
  }
  return r;
}

FElem FieldDesc::neg(const FElem& a) const {
  FElem r(k);
  for (uint32_t i = 0; i < k; i++) r[i] = a[i] ? p - a[i] : 0;
  return r;
}

FElem FieldDesc::mul(const FElem& a, const FElem& b) const {
  std::vector<uint64_t> t(2 * k - 1, 0);
  for (uint32_t i = 0; i < k; i++) {
    if (!a[i]) continue;
    for (uint32_t j = 0; j < k; j++) t[i + j] = (t[i + j] + (uint64_t)a[i] * b[j]) % p;
  }
  for (size_t i = t.size(); i-- > k;) {
    uint64_t c = t[i];
    if (!c) continue;
    t[i] = 0;
    for (uint32_t j = 0; j < k; j++) {
      uint64_t sub = c * modulus[j] % p;
      t[i - k + j] = (t[i - k + j] + p - sub) % p;
    }
  }
  FElem r(k);
  for (uint32_t i = 0; i < k; i++) r[i] = (uint32_t)t[i];
  return r;
}

FElem FieldDesc::pow(const FElem& a, const mpz_class& e) const {
  if (e < 0) return pow(inv(a), -e);
  if (e == 0) return one();
  FElem r = one();
  for (long i = (long)mpz_sizeinbase(e.get_mpz_t(), 2) - 1; i >= 0; i--) {
    r = mul(r, r);
    if (mpz_tstbit(e.get_mpz_t(), i)) r = mul(r, a);
  }
  return r;
}

FElem FieldDesc::pow_u64(const FElem& a, uint64_t e) const {
  FElem r = one();
  FElem b = a;
  while (e) {
    if (e & 1) r = mul(r, b);
    b = mul(b, b);
    e >>= 1;
  }
  return r;
}

FElem FieldDesc::inv(const FElem& a) const {
  if (is_zero(a)) fail(Err::BadArg, "inverse of zero");
  return pow(a, q - 2);
}

FElem FieldDesc::frob(const FElem& a, unsigned e) const {
  FElem r = a;
  for (unsigned i = 0; i < e; i++) r = pow_u64(r, p);
  return r;
}

uint64_t FieldDesc::rank(const FElem& a) const {
  if (!q_u64) fail(Err::BudgetExceeded, "field too large for element ranks");
  uint64_t r = 0;
  for (uint32_t i = k; i-- > 0;) r = r * p + a[i];
  return r;
}

FElem FieldDesc::unrank(uint64_t r) const {
  FElem a(k);
  for (uint32_t i = 0; i < k; i++) {
    a[i] = (uint32_t)(r % p);
    r /= p;
  }
  return a;
}

void FieldDesc::build_tables() const {
  uint64_t qq = q_u64;
  auto zt = std::make_unique<ZechTables>();
  auto ord = factor_u64(qq - 1);
  FElem g;
  for (uint64_t cand = 1; cand < qq; cand++) {
    g = unrank(cand);
    bool ok = true;
    for (auto& [r, e] : ord) {
      if (eq(pow(g, mpz_class((unsigned long)((qq - 1) / r))), one())) {
        ok = false;
        break;
      }
    }
    if (ok) {
      zt->gen_rank = (uint32_t)cand;
      break;
    }
  }
  zt->exp.resize(qq - 1);
  zt->log.assign(qq, ZechTables::LOGZERO);
  FElem w = one();
  for (uint64_t i = 0; i < qq - 1; i++) {
    uint64_t r = rank(w);
    zt->exp[i] = (uint32_t)r;
    zt->log[r] = (uint32_t)i;
    w = mul(w, g);
  }
  zt->zech.resize(qq - 1);
  for (uint64_t d = 0; d < qq - 1; d++) {
    uint64_t v = zt->exp[d];
    uint64_t low = v % p;
    uint64_t r1 = v - low + (low + 1) % p;  // rank of 1 + g^d
    zt->zech[d] = r1 ? zt->log[r1] : ZechTables::LOGZERO;
  }
  zech_ = std::move(zt);
}

const ZechTables* FieldDesc::tables(uint64_t cap) const {
  if (!q_u64 || q_u64 > cap) return nullptr;
  if (!zech_) build_tables();
  return zech_.get();
}

// ---- registry ----

static std::map<std::pair<uint32_t, uint32_t>, Field>& field_cache() {
  static std::map<std::pair<uint32_t, uint32_t>, Field> m;
  return m;
}

Field field_make(uint32_t p, uint32_t k) {
  if (!is_prime_u64(p)) fail(Err::NotPrime, "field characteristic must be prime");
  if (k < 1 || k > 64) fail(Err::BadArg, "extension degree out of range");
  auto key = std::make_pair(p, k);
  auto& cache = field_cache();
  if (auto it = cache.find(key); it != cache.end()) return it->second;

  auto F = std::make_shared<FieldDesc>();
  F->p = p;
  F->k = k;
  mpz_ui_pow_ui(F->q.get_mpz_t(), p, k);
  F->q_u64 = mpz_fits_ulong_p(F->q.get_mpz_t()) ? mpz_get_ui(F->q.get_mpz_t()) : 0;

  // Deterministic modulus: T^k plus the base-p digits of the first counter
  // value that yields an irreducible polynomial.
  for (uint64_t m = 0;; m++) {
    PV f(k + 1, 0);
    f[k] = 1;
    uint64_t v = m;
    for (uint32_t i = 0; i < k && v; i++) {
      f[i] = (uint32_t)(v % p);
      v /= p;
    }
    if (v) fail(Err::Internal, "modulus scan exhausted");
    if (pv_irreducible(f, p)) {
      F->modulus.assign(f.begin(), f.end());
      break;
    }
  }
  cache.emplace(key, F);
  return F;
}

Field ext_field(const Field& F, unsigned e) {
  if (e == 0) fail(Err::BadArg, "extension degree 0");
  return field_make(F->p, F->k * e);
}

FElem frob_over(const Field& base, const Field& big, const FElem& x, unsigned e) {
  if (big->k % base->k) fail(Err::WrongField, "not an extension of the base");
  return big->frob(x, (base->k * (uint64_t)e) % big->k);
}

}  // namespace zetafn
