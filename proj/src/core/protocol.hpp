#pragma once
#include <gmpxx.h>

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "core/jacobian.hpp"
#include "core/rng.hpp"
#include "core/zeta.hpp"

namespace zetafn {

// Packed bit string, LSB first inside each 64-bit word.
struct Bits {
  unsigned n = 0;
  std::vector<uint64_t> w;
};

Bits bits_make(unsigned n);
bool bit_get(const Bits& b, unsigned i);
void bit_set(Bits& b, unsigned i, bool v);
bool bits_eq(const Bits& a, const Bits& b);
// Hex encoding of the underlying bytes, low byte first, two digits per byte.
std::string bits_hex(const Bits& b);
Bits bits_from_hex(unsigned n, const std::string& hex);

// Affine hash x -> Ax + b over the two-element field.  For fixed x and y the
// probability over uniform (A, b) that h(x) = y is exactly 2^-k.
struct HashSpec {
  unsigned n = 0, k = 0;
  std::vector<Bits> A;
  Bits b;
};

HashSpec hash_sample(unsigned n, unsigned k, Rng& rng);
Bits hash_apply(const HashSpec& h, const Bits& x);

// ceil(log2 m) for m >= 1
unsigned ceil_log2(const mpz_class& m);
// L with 2^(L-1) < N <= 2^L
unsigned order_bits(const mpz_class& N);

struct ChallengePair {
  HashSpec h;
  Bits y;
};

struct Challenge {
  mpz_class N;  // candidate group order
  mpz_class Q;
  unsigned g = 0, L = 0, k = 0, n = 0, t = 0;
  std::vector<ChallengePair> pairs;
};

// t independent (h, y) pairs sized for the candidate order: k = L+1 output
// bits over inputs of n = 2g ceil(log2 Q) bits.  Requires the gap condition
// Q > (8g+1)^2 and N inside the Hasse-Weil interval.
Challenge arthur_challenge(const mpz_class& N, unsigned g, const mpz_class& Q, unsigned t,
                           Rng& rng);

struct Quad {
  ReducedDivisor D;
  mpz_class order;
  std::vector<std::pair<mpz_class, unsigned>> fac;  // prime, exponent
};

struct Response {
  mpz_class N;
  std::vector<Quad> quads;
  // one claimed coefficient tuple per challenge pair, or none when the
  // prover found no preimage
  std::vector<std::optional<std::vector<mpz_class>>> claims;
  bool sampled = false;
};

struct Verdict {
  bool accepted = false;
  std::vector<std::string> reasons;
  unsigned t = 0, hits = 0;
  std::vector<uint8_t> pair_hits;
};

// Deterministic injective encoding of reduced divisors into n bits: rank by
// (degree m, partition of the support by residue degree, per-degree multiset
// of canonical points), mixed radix with exact totals.  Shared by prover and
// verifier; the capacity check total <= 2^n runs at construction.
struct SessionData;
using Session = std::shared_ptr<const SessionData>;

Session session_make(const Curve& C, const Budget& bu);
Bits encode_element(const Session& S, const ReducedDivisor& x);
const CurvePoint& session_base(const Session& S);
unsigned session_bits(const Session& S);

// Honest prover: brute-forces the class group, answers with its true
// invariant factorization, and searches coefficient tuples for each pair's
// preimage (exhaustively, or by bounded sampling past 2^20 elements).
Response merlin_honest(const Curve& C, const Challenge& ch, const Budget& bu, Rng& rng);

enum class Cheat { Subgroup, WrongOrder, ForgedPoint };

// Syntactically valid responses implementing one deception each: generators
// spanning a proper subgroup, a misreported order, or an off-curve point.
Response merlin_cheating(Cheat strategy, const Curve& C, const Challenge& ch, const Budget& bu,
                         Rng& rng);

// The verifier: divisor rationality, factorization validity, exact orders,
// product = N, then the hash condition per pair; accepts when the hit count
// clears the midpoint threshold hits/t >= (5/8) N / 2^(L+1).  All failures
// are verdicts with reasons, never errors.
Verdict arthur_verify(const Curve& C, const mpz_class& N, const Challenge& ch, const Response& r,
                      const Budget& bu);

struct SessionRecord {
  unsigned m = 0, i = 0;
  mpz_class Q;
  mpz_class candidate;
  Challenge ch;
  Response resp;
  Verdict vd;
};

struct CertifyResult {
  bool accepted = false;
  std::vector<std::string> reasons;
  std::vector<SessionRecord> sessions;
  std::vector<std::string> warnings;
  IntPoly reconstructed;
};

// End-to-end curve certification: sessions over the two admissible prime
// extensions (bu.orders sizes each), reconstruction from the certified
// orders, descent, and exact comparison with the claimed numerator.
// pairs_override = 0 means the default t = 12 (L+1) per session.
CertifyResult certify_zeta(const Curve& C, const IntPoly& claimed, unsigned pairs_override,
                           const Budget& bu, Rng& rng);

// Certifies #Jac via certify_zeta on the honestly computed numerator, then
// checks the claimed generators (rationality, exact orders, product equal to
// the pinned count) and their span by a hash session over the base field.
CertifyResult certify_group_structure(const Curve& C, const GroupStructure& claimed,
                                      unsigned pairs_override, const Budget& bu, Rng& rng);

}  // namespace zetafn
