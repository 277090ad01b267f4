#pragma once
#include <gmpxx.h>

#include <vector>

namespace zetafn {

// Dense univariate polynomial over Z, coefficients ascending, no trailing
// zeros (zero polynomial = empty vector).
using IntPoly = std::vector<mpz_class>;

IntPoly ip_trim(IntPoly a);
IntPoly ip_from(std::vector<long> coeffs);
int ip_deg(const IntPoly& a);  // -1 for zero
bool ip_is_zero(const IntPoly& a);
mpz_class ip_lead(const IntPoly& a);

IntPoly ip_add(const IntPoly& a, const IntPoly& b);
IntPoly ip_sub(const IntPoly& a, const IntPoly& b);
IntPoly ip_neg(const IntPoly& a);
IntPoly ip_mul(const IntPoly& a, const IntPoly& b);
IntPoly ip_scale(const IntPoly& a, const mpz_class& c);
// Exact division; throws Inconsistent if it does not divide.
IntPoly ip_divexact(const IntPoly& a, const IntPoly& b);
IntPoly ip_derivative(const IntPoly& a);
mpz_class ip_eval(const IntPoly& a, const mpz_class& x);
// a(T^m)
IntPoly ip_compose_power(const IntPoly& a, unsigned m);

mpz_class ip_content(const IntPoly& a);
IntPoly ip_primitive(const IntPoly& a);

// Greatest common divisor via primitive pseudo-remainder sequence.
// Normalisation: constant term positive when nonzero, else leading positive.
IntPoly ip_gcd(const IntPoly& a, const IntPoly& b);

// Resultant via fraction-free elimination on the Sylvester matrix.
mpz_class ip_resultant(const IntPoly& a, const IntPoly& b);

}  // namespace zetafn
