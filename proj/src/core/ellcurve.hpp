#pragma once
#include <gmpxx.h>

#include "core/curve.hpp"

namespace zetafn {

// Chord-and-tangent arithmetic on a smooth plane cubic with an arbitrary
// rational point as identity.  Elements are projective triples over the
// curve's field, normalised so the first nonzero coordinate is 1.
struct EllGroup {
  Curve C;
  std::array<FElem, 3> O;
  std::array<FElem, 3> OO;  // third intersection of the tangent at O
};

EllGroup ell_make(const Curve& C, const std::array<FElem, 3>& O, const Budget& bu);

// Third intersection of the line through P and Q with the cubic (tangent
// line when P = Q), counted so that div(line) = P + Q + result.
std::array<FElem, 3> ell_third(const EllGroup& E, const std::array<FElem, 3>& P,
                               const std::array<FElem, 3>& Q);
std::array<FElem, 3> ell_add(const EllGroup& E, const std::array<FElem, 3>& P,
                             const std::array<FElem, 3>& Q);
std::array<FElem, 3> ell_neg(const EllGroup& E, const std::array<FElem, 3>& P);
std::array<FElem, 3> ell_scalar(const EllGroup& E, const mpz_class& n,
                                const std::array<FElem, 3>& P);

}  // namespace zetafn
