#pragma once
#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <vector>

namespace zetafn {

// Element of F_{p^k}: coefficient vector over F_p of length k, ascending
// powers of the generator.  Always full length; context comes from the field
// object that produced it.
using FElem = std::vector<uint32_t>;

struct ZechTables {
  uint32_t gen_rank = 0;           // rank of the chosen multiplicative generator
  std::vector<uint32_t> exp;       // log -> rank, size q-1
  std::vector<uint32_t> log;       // rank -> log, log[0] = LOGZERO
  std::vector<uint32_t> zech;      // log d -> log(1 + g^d), LOGZERO if zero
  static constexpr uint32_t LOGZERO = UINT32_MAX;
};

class FieldDesc;
using Field = std::shared_ptr<const FieldDesc>;

// Immutable description of F_{p^k} = F_p[T]/(modulus).  Create through
// field_make / registry helpers only; those guarantee one object per (p, k)
// within a process, so pointer identity doubles as field identity.
class FieldDesc {
 public:
  uint32_t p;
  uint32_t k;
  std::vector<uint32_t> modulus;  // length k+1, monic
  mpz_class q;                    // p^k
  uint64_t q_u64 = 0;             // 0 when p^k does not fit

  FElem zero() const { return FElem(k, 0); }
  FElem one() const;
  FElem from_int(uint64_t n) const;           // image of n mod p
  FElem gen() const;                          // class of T (k >= 2), else 1
  bool is_zero(const FElem& a) const;
  bool eq(const FElem& a, const FElem& b) const { return a == b; }

  FElem add(const FElem& a, const FElem& b) const;
  FElem sub(const FElem& a, const FElem& b) const;
  FElem neg(const FElem& a) const;
  FElem mul(const FElem& a, const FElem& b) const;
  FElem inv(const FElem& a) const;
  FElem div(const FElem& a, const FElem& b) const { return mul(a, inv(b)); }
  FElem pow(const FElem& a, const mpz_class& e) const;
  FElem pow_u64(const FElem& a, uint64_t e) const;
  // e-fold p-power Frobenius x -> x^(p^e)
  FElem frob(const FElem& a, unsigned e) const;

  uint64_t rank(const FElem& a) const;
  FElem unrank(uint64_t r) const;

  // Discrete-log tables; built on first call when q <= cap.  Returns nullptr
  // if the field is too large for the cap.
  const ZechTables* tables(uint64_t cap) const;

  mutable std::unique_ptr<ZechTables> zech_;

 private:
  void build_tables() const;
};

// Canonical field of order p^k: modulus found by the deterministic counter
// scan (T^k plus digits of the counter, base p).  One shared object per
// process and (p, k).
Field field_make(uint32_t p, uint32_t k);

// F_{p^(k*e)} together with the cached embedding data for F into it.
Field ext_field(const Field& F, unsigned e);

// Ring maps between F_{p^a} and F_{p^(a*e)}.  Embeddings are chosen once per
// process per pair (minimal-rank root of the small modulus) and cached.
FElem embed_up(const Field& from, const Field& to, const FElem& x);
// Preimage under embed_up; throws WrongField if x is not in the image.
FElem project_down(const Field& from, const Field& to, const FElem& x);
// Smallest e >= 1 with x^(q_base^e) = x, where x lives in `big` and
// base = F_{p^kb}; e divides [big : base].
unsigned exact_degree(const Field& base, const Field& big, const FElem& x);
// Coordinates of x in the F_Q-basis {1, B, ..., B^(e-1)} of F_{Q^e} where B
// is the class of T in `big`; entries are elements of `base`.
std::vector<FElem> rel_coords(const Field& base, const Field& big, const FElem& x);

// q-power Frobenius of `big` over `base` applied e times: x -> x^(q^e).
FElem frob_over(const Field& base, const Field& big, const FElem& x, unsigned e = 1);

}  // namespace zetafn
