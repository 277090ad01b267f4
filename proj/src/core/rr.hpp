#pragma once
#include "core/divisor.hpp"

namespace zetafn {

// Genus of a smooth curve, memoised per (field, form).  Throws NotSmooth on
// singular input like genus() does.
unsigned smooth_genus(const Curve& C, const Budget& bu);

// Intersection divisor of a homogeneous form with the curve: every closed
// point where the form vanishes on C, with intersection multiplicities.
// Total degree is deg(C) * deg(G).  The form must have positive degree and
// must not vanish identically on the curve.
Divisor form_section_divisor(const Curve& C, const MPoly& G);

// div(num) - div(den) on C for two forms of equal degree.
Divisor principal_divisor(const Curve& C, const MPoly& num, const MPoly& den);

// Basis of L(D) = { f : div(f) + D >= 0 }.  Every basis function is fs[i] /
// eaux for a common denominator form eaux; eauxdiv caches div(eaux) on C.
struct RRBasis {
  MPoly eaux;
  Divisor eauxdiv;
  std::vector<MPoly> fs;
  unsigned dim = 0;
};

RRBasis rr_space(const Curve& C, const Divisor& D, const Budget& bu);

}  // namespace zetafn
