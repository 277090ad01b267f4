#pragma once
#include <string>
#include <utility>
#include <vector>

#include "core/curve.hpp"

namespace zetafn {

// Formal Z-linear combination of closed points of a curve.  Terms are kept
// sorted by point_less with nonzero multiplicities.  A closed point of
// ext_degree e stands for its whole Frobenius orbit, so it contributes
// e * multiplicity to the degree.
struct Divisor {
  std::vector<std::pair<CurvePoint, long long>> t;
};

Divisor dv_zero();
// Canonicalise: merge duplicate points, drop zero multiplicities, sort.
Divisor dv_make(std::vector<std::pair<CurvePoint, long long>> terms);
Divisor dv_of_point(const CurvePoint& P, long long n = 1);

long long dv_degree(const Divisor& D);
long long dv_mult(const Divisor& D, const CurvePoint& P);
bool dv_eq(const Divisor& a, const Divisor& b);
bool dv_is_zero(const Divisor& D);
bool dv_effective(const Divisor& D);

Divisor dv_add(const Divisor& a, const Divisor& b);
Divisor dv_sub(const Divisor& a, const Divisor& b);
Divisor dv_neg(const Divisor& a);
Divisor dv_scale(long long n, const Divisor& a);
// Positive and negative parts, both effective: D = pos - neg.
Divisor dv_pos(const Divisor& a);
Divisor dv_negpart(const Divisor& a);

// Deterministic byte keys for hashing and dedup.
std::string point_key(const CurvePoint& P);
std::string dv_key(const Divisor& D);

// True iff the q0-power Frobenius (q0 = order of sub) permutes the terms of
// D with multiplicities intact.  sub must be a subfield of the curve's field
// that fixes every coefficient of the curve form; otherwise WrongField.
bool frobenius_invariant(const Curve& C, const Divisor& D, const Field& sub);

}  // namespace zetafn
