#pragma once
#include "core/field.hpp"
#include "core/rng.hpp"

namespace zetafn {

// Dense univariate polynomial over a finite field, coefficients ascending and
// trimmed.  All operations take the coefficient field explicitly.
using FPoly = std::vector<FElem>;

// rank order without needing the rank to fit a word
bool felem_less(const FElem& a, const FElem& b);

FPoly fp_trim(const Field& F, FPoly a);
int fp_deg(const FPoly& a);
bool fp_is_zero(const FPoly& a);
FPoly fp_x(const Field& F);
FPoly fp_const(const Field& F, const FElem& c);

FPoly fp_add(const Field& F, const FPoly& a, const FPoly& b);
FPoly fp_sub(const Field& F, const FPoly& a, const FPoly& b);
FPoly fp_neg(const Field& F, const FPoly& a);
FPoly fp_mul(const Field& F, const FPoly& a, const FPoly& b);
FPoly fp_scale(const Field& F, const FPoly& a, const FElem& c);
// quotient and remainder, b != 0
std::pair<FPoly, FPoly> fp_divmod(const Field& F, const FPoly& a, const FPoly& b);
FPoly fp_mod(const Field& F, const FPoly& a, const FPoly& b);
FPoly fp_monic(const Field& F, const FPoly& a);
FPoly fp_gcd(const Field& F, FPoly a, FPoly b);  // monic (or zero)
FPoly fp_powmod(const Field& F, const FPoly& base, const mpz_class& e, const FPoly& mod);
FElem fp_eval(const Field& F, const FPoly& a, const FElem& x);
FPoly fp_derivative(const Field& F, const FPoly& a);

// Squarefree decomposition: pairwise coprime squarefree factors with their
// multiplicities, product = monic part of a.  Handles the char-p collapse
// (zero derivative) by p-th roots of coefficients.
std::vector<std::pair<FPoly, int>> fp_squarefree(const Field& F, const FPoly& a);

// Roots in F with multiplicities, sorted.
std::vector<std::pair<FElem, int>> fp_roots(const Field& F, const FPoly& a, Rng& rng);

// Monic irreducible factors with multiplicities, sorted by degree then
// coefficients.  Distinct-degree plus equal-degree splitting.
std::vector<std::pair<FPoly, int>> fp_factor(const Field& F, const FPoly& a, Rng& rng);

bool fp_irreducible(const Field& F, const FPoly& a);

}  // namespace zetafn
