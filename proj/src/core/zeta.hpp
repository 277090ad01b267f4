#pragma once
#include <utility>
#include <vector>

#include "core/config.hpp"
#include "core/intpoly.hpp"

namespace zetafn {

// Numerator of the zeta function of a genus-g curve over F_q, under the
// convention P(T) = prod (1 - a_i T): integer coefficients, constant term 1,
// degree exactly 2g, reciprocal roots of modulus sqrt(q).
struct ZetaNumerator {
  mpz_class q;
  unsigned g = 0;
  IntPoly poly;
};

// Exact endpoints ceil((sqrt(q)-1)^{2g}) and floor((sqrt(q)+1)^{2g}).
struct HasseWeilInterval {
  mpz_class lo, hi;
  mpz_class q;
  unsigned g = 0;
};

HasseWeilInterval hasse_weil_interval(const mpz_class& q, unsigned g);

// true iff q > (8g+1)^2; then the interval is shorter than its left endpoint,
// so it contains at most one multiple of any candidate order inside it.
bool gap_ok(const mpz_class& q, unsigned g);

bool functional_symmetry(const IntPoly& poly, const mpz_class& q, unsigned g);

// Validates all blocking invariants (degree, constant term, symmetry,
// poly(1) inside the interval); throws Inconsistent otherwise.
ZetaNumerator zeta_make(const mpz_class& q, unsigned g, IntPoly poly);

// s_j = sum of j-th powers of the reciprocal roots, j = 1..jmax.
std::vector<mpz_class> power_sums(const ZetaNumerator& P, unsigned jmax);

// Reconstruction from the counts N_1..N_g over F_q..F_{q^g}.
ZetaNumerator p1_from_counts(const std::vector<mpz_class>& counts, const mpz_class& q, unsigned g);

// N_j = q^j + 1 - s_j for j = 1..jmax; inverse of p1_from_counts.
std::vector<mpz_class> expected_counts(const ZetaNumerator& P, unsigned jmax);

// The numerator of the same curve over F_{q^r}: reciprocal roots a_i^r.
ZetaNumerator extension_power(const ZetaNumerator& P, unsigned r);

// Jacobian orders over F_{q^j}: extension_power(P, j)(1) for j = 1..jmax.
std::vector<mpz_class> extension_orders(const ZetaNumerator& P, unsigned jmax);

// Recover the base numerator from the numerators over two admissible prime
// extensions via gcd of P1m(T^{m1}) and P2m(T^{m2}).
ZetaNumerator descend(const ZetaNumerator& P1m, unsigned m1, const ZetaNumerator& P2m, unsigned m2,
                      const mpz_class& q, unsigned g);

// Smallest two distinct primes m such that m-1 has a prime factor > 2g,
// with q^{m1} above the gap threshold (8g+1)^2.
std::pair<unsigned, unsigned> admissible_extensions(const mpz_class& q, unsigned g);

// Reconstruction from Jacobian orders over F_{q^j}, j = 1..orders.size(),
// by exhaustive search over the coefficient box |a_i| <= C(2g,i) q^{i/2}.
ZetaNumerator p1_from_jacobian_orders(const std::vector<mpz_class>& orders, const mpz_class& q,
                                      unsigned g, const Budget& bu);

// Diagnostic only (the one floating-point corner): max relative deviation of
// the complex root moduli from q^{-1/2}.  Blocking checks never use this.
double root_modulus_residual(const ZetaNumerator& P);

}  // namespace zetafn
