#pragma once
#include <cstdint>
#include <map>
#include <vector>

#include "core/field.hpp"

namespace zetafn {

// Sparse multivariate polynomial over a finite field.  Exponent vectors all
// have length nvars; zero polynomial has an empty term map.
struct MPoly {
  unsigned nvars = 0;
  std::map<std::vector<uint16_t>, FElem> t;
};

MPoly mp_zero(unsigned nvars);
MPoly mp_const(const Field& F, unsigned nvars, const FElem& c);
MPoly mp_var(const Field& F, unsigned nvars, unsigned i);
void mp_set(const Field& F, MPoly& a, const std::vector<uint16_t>& exps, const FElem& c);
void mp_addto(const Field& F, MPoly& a, const std::vector<uint16_t>& exps, const FElem& c);
bool mp_is_zero(const MPoly& a);
int mp_total_deg(const MPoly& a);
int mp_deg_in(const MPoly& a, unsigned v);
bool mp_is_homogeneous(const MPoly& a);

MPoly mp_add(const Field& F, const MPoly& a, const MPoly& b);
MPoly mp_sub(const Field& F, const MPoly& a, const MPoly& b);
MPoly mp_neg(const Field& F, const MPoly& a);
MPoly mp_mul(const Field& F, const MPoly& a, const MPoly& b);
MPoly mp_scale(const Field& F, const MPoly& a, const FElem& c);
MPoly mp_pow(const Field& F, const MPoly& a, unsigned e);
MPoly mp_derivative(const Field& F, const MPoly& a, unsigned v);

FElem mp_eval(const Field& F, const MPoly& a, const std::vector<FElem>& x);
// Substitute x_v = c, dropping the variable's exponent to 0 (nvars unchanged).
MPoly mp_subst_const(const Field& F, const MPoly& a, unsigned v, const FElem& c);
// Substitute x_i = sum_j M[i][j] x_j simultaneously.
MPoly mp_subst_linear(const Field& F, const MPoly& a, const std::vector<std::vector<FElem>>& M);
// Substitute x_v by an arbitrary polynomial in the same variable set.
MPoly mp_subst_poly(const Field& F, const MPoly& a, unsigned v, const MPoly& val);

// Map coefficients through an extension embedding.
MPoly mp_embed(const Field& from, const Field& to, const MPoly& a);
MPoly mp_project(const Field& from, const Field& to, const MPoly& a);

// Coefficients of a as a univariate in x_v; entries keep nvars with
// exponent 0 in v.  Index = power of x_v.
std::vector<MPoly> mp_coeffs_in(const Field& F, const MPoly& a, unsigned v);
MPoly mp_from_coeffs_in(const Field& F, const std::vector<MPoly>& cs, unsigned v);

// Resultant of a and b with respect to x_v, computed by specialisation of
// the remaining variables and interpolation.  Lifts to an extension field
// internally when the base field is too small for the sample grid; the
// result always has coefficients in F.  Both inputs must have positive
// degree in x_v.
MPoly mp_resultant(const Field& F, const MPoly& a, const MPoly& b, unsigned v);

}  // namespace zetafn
