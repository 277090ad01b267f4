#pragma once
#include <array>
#include <gmpxx.h>

#include "core/config.hpp"
#include "core/multipoly.hpp"
#include "core/solve0dim.hpp"

namespace zetafn {

// Plane projective curve over a finite field: a nonzero homogeneous form in
// (x0 : x1 : x2).  Smoothness is not required at construction; the ops that
// need it check for themselves.
struct Curve {
  Field F;
  unsigned degree;
  MPoly form;  // 3 variables
};

// Closed point of the curve: Frobenius orbit of a projective point.  e is
// the exact degree, coordinates live in F_{q^e}, scaled so the first nonzero
// coordinate is 1, and the stored triple is the minimal conjugate.
struct CurvePoint {
  unsigned e;
  std::array<FElem, 3> P;
};

bool point_less(const CurvePoint& a, const CurvePoint& b);
bool point_eq(const CurvePoint& a, const CurvePoint& b);

Curve curve_make(const Field& F, const MPoly& form);

// Normalise a projective triple over F_{q^e} into a canonical closed point.
// K must be the degree-e extension the coordinates live in; the exact degree
// is recomputed, so passing coordinates that really live in a subfield is
// fine.
CurvePoint make_point(const Curve& C, const Field& K, const std::array<FElem, 3>& P);
// Triple equality test against the curve equation (membership).
bool on_curve(const Curve& C, const Field& K, const std::array<FElem, 3>& P);

// #C(F_{q^j}), exact.
mpz_class count_points(const Curve& C, unsigned j, const Budget& bu);

// All points of C(F_{q^j}) as normalised projective triples over F_{q^j}
// (not grouped into orbits).  Needs the tabled kernel; meant for fields
// within the table budget.
std::vector<std::array<FElem, 3>> enumerate_points(const Curve& C, unsigned j, const Budget& bu);

// Singular closed points of the projective curve.
std::vector<CurvePoint> singular_points(const Curve& C, const Budget& bu);
bool is_smooth(const Curve& C, const Budget& bu);
// (d-1)(d-2)/2 for a smooth plane curve; NotSmooth otherwise.
unsigned genus(const Curve& C, const Budget& bu);

// Dehomogenised form on chart `c` (that variable set to 1).  Variables keep
// their indices; the chart variable's exponents collapse to 0.
MPoly chart_form(const Curve& C, unsigned c);

// The q-power Frobenius image of a closed point (same orbit, for checks) and
// the orbit of an explicit triple under frob_q listed out.
std::array<FElem, 3> frob_point(const Curve& C, const Field& K, const std::array<FElem, 3>& P);

}  // namespace zetafn
