#include "core/ellcurve.hpp"

#include "core/err.hpp"
#include "core/rr.hpp"

namespace zetafn {

namespace {

std::array<FElem, 3> norm3(const Field& F, std::array<FElem, 3> P) {
  int i = 0;
  while (i < 3 && F->is_zero(P[i])) i++;
  if (i == 3) fail(Err::Internal, "zero projective triple");
  FElem inv = F->inv(P[i]);
  for (auto& c : P) c = F->mul(c, inv);
  return P;
}

std::array<FElem, 3> cross(const Field& F, const std::array<FElem, 3>& a,
                           const std::array<FElem, 3>& b) {
  return {F->sub(F->mul(a[1], b[2]), F->mul(a[2], b[1])),
          F->sub(F->mul(a[2], b[0]), F->mul(a[0], b[2])),
          F->sub(F->mul(a[0], b[1]), F->mul(a[1], b[0]))};
}

bool zero3(const Field& F, const std::array<FElem, 3>& a) {
  return F->is_zero(a[0]) && F->is_zero(a[1]) && F->is_zero(a[2]);
}

// Coefficients of F(s*A + t*B) as a binary cubic, index = power of t.
std::array<FElem, 4> pencil_cubic(const Field& F, const MPoly& form, const std::array<FElem, 3>& A,
                                  const std::array<FElem, 3>& B) {
  MPoly acc = mp_zero(2);
  for (auto& [ex, c] : form.t) {
    MPoly term = mp_const(F, 2, c);
    for (int i = 0; i < 3; i++) {
      if (ex[i] == 0) continue;
      MPoly lin = mp_zero(2);
      if (!F->is_zero(A[i])) mp_set(F, lin, {1, 0}, A[i]);
      if (!F->is_zero(B[i])) mp_addto(F, lin, {0, 1}, B[i]);
      term = mp_mul(F, term, mp_pow(F, lin, ex[i]));
    }
    acc = mp_add(F, acc, term);
  }
  std::array<FElem, 4> out = {F->zero(), F->zero(), F->zero(), F->zero()};
  for (auto& [ex, c] : acc.t) {
    if (ex[0] + ex[1] != 3) fail(Err::Internal, "pencil restriction is not cubic");
    out[ex[1]] = c;
  }
  return out;
}

}  // namespace

EllGroup ell_make(const Curve& C, const std::array<FElem, 3>& O, const Budget& bu) {
  if (C.degree != 3) fail(Err::BadArg, "chord-tangent arithmetic needs a cubic");
  if (smooth_genus(C, bu) != 1) fail(Err::NotSmooth, "cubic is singular");
  if (!on_curve(C, C.F, O)) fail(Err::NotOnCurve, "identity point is off the curve");
  EllGroup E;
  E.C = C;
  E.O = norm3(C.F, O);
  E.OO = ell_third(E, E.O, E.O);
  return E;
}

std::array<FElem, 3> ell_third(const EllGroup& E, const std::array<FElem, 3>& P,
                               const std::array<FElem, 3>& Q) {
  const Field& F = E.C.F;
  if (P != Q) {
    auto c = pencil_cubic(F, E.C.form, P, Q);
    if (!F->is_zero(c[0]) || !F->is_zero(c[3])) fail(Err::NotOnCurve, "point off the cubic");
    if (F->is_zero(c[1]) && F->is_zero(c[2])) fail(Err::Internal, "secant line inside the cubic");
    std::array<FElem, 3> R;
    for (int i = 0; i < 3; i++)
      R[i] = F->add(F->mul(F->neg(c[2]), P[i]), F->mul(c[1], Q[i]));
    return norm3(F, R);
  }
  std::array<FElem, 3> grad;
  std::vector<FElem> at = {P[0], P[1], P[2]};
  for (unsigned i = 0; i < 3; i++) grad[i] = mp_eval(F, mp_derivative(F, E.C.form, i), at);
  if (zero3(F, grad)) fail(Err::NotSmooth, "singular point in tangent computation");
  std::array<FElem, 3> U = {F->zero(), F->zero(), F->zero()};
  for (int i = 0; i < 3; i++) {
    std::array<FElem, 3> ei = {F->zero(), F->zero(), F->zero()};
    ei[i] = F->one();
    std::array<FElem, 3> cand = cross(F, ei, grad);
    if (zero3(F, cand) || zero3(F, cross(F, cand, P))) continue;
    U = cand;
    break;
  }
  if (zero3(F, U)) fail(Err::Internal, "no second point on the tangent line");
  auto c = pencil_cubic(F, E.C.form, P, U);
  if (!F->is_zero(c[0]) || !F->is_zero(c[1]))
    fail(Err::Internal, "tangent line fails its contact condition");
  if (F->is_zero(c[2]) && F->is_zero(c[3])) fail(Err::Internal, "tangent line inside the cubic");
  std::array<FElem, 3> R;
  for (int i = 0; i < 3; i++)
    R[i] = F->add(F->mul(F->neg(c[3]), P[i]), F->mul(c[2], U[i]));
  return norm3(F, R);
}

std::array<FElem, 3> ell_add(const EllGroup& E, const std::array<FElem, 3>& P,
                             const std::array<FElem, 3>& Q) {
  return ell_third(E, E.O, ell_third(E, P, Q));
}

std::array<FElem, 3> ell_neg(const EllGroup& E, const std::array<FElem, 3>& P) {
  return ell_third(E, P, E.OO);
}

std::array<FElem, 3> ell_scalar(const EllGroup& E, const mpz_class& n,
                                const std::array<FElem, 3>& P) {
  if (n == 0) return E.O;
  mpz_class a = abs(n);
  std::array<FElem, 3> acc = E.O;
  for (long i = (long)mpz_sizeinbase(a.get_mpz_t(), 2) - 1; i >= 0; i--) {
    acc = ell_add(E, acc, acc);
    if (mpz_tstbit(a.get_mpz_t(), i)) acc = ell_add(E, acc, P);
  }
  if (n < 0) acc = ell_neg(E, acc);
  return acc;
}

}  // namespace zetafn
