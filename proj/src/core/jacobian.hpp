#pragma once
#include <gmpxx.h>

#include <functional>

#include "core/rr.hpp"

namespace zetafn {

// Canonical representative of a degree-0 divisor class: E - m*base with E
// effective of degree m <= genus.  Uniqueness comes from the minimality of m.
struct ReducedDivisor {
  Divisor E;
  unsigned m = 0;
  CurvePoint base;
};

ReducedDivisor rd_zero(const CurvePoint& base);
bool rd_is_zero(const ReducedDivisor& a);
bool rd_eq(const ReducedDivisor& a, const ReducedDivisor& b);
std::string rd_key(const ReducedDivisor& a);
Divisor rd_divisor(const ReducedDivisor& a);

// Canonical reduced representative of a degree-0 divisor class: the first
// m with dim L(D + m*base) = 1 gives the unique effective E ~ D + m*base.
ReducedDivisor reduce(const Curve& C, const Divisor& D, const CurvePoint& base, const Budget& bu);

ReducedDivisor rd_add(const Curve& C, const ReducedDivisor& a, const ReducedDivisor& b,
                      const Budget& bu);
ReducedDivisor rd_neg(const Curve& C, const ReducedDivisor& a, const Budget& bu);
ReducedDivisor rd_scalar(const Curve& C, const mpz_class& n, const ReducedDivisor& a,
                         const Budget& bu);

// Class-group zero test for a degree-0 divisor: dim L(D) = 1 iff principal.
bool jac_is_zero(const Curve& C, const Divisor& D, const Budget& bu);

// Group operations with a fixed rational anchor.  Generic curves go through
// reduce; a genus-1 curve gets the chord-tangent shortcut.  Meant for bulk
// enumeration on the prover side; verification sticks to rd_add/rd_scalar.
struct JacOps {
  std::function<ReducedDivisor(const ReducedDivisor&, const ReducedDivisor&)> add;
  std::function<ReducedDivisor(const ReducedDivisor&)> neg;
  ReducedDivisor zero;
};

JacOps jac_ops(const Curve& C, const CurvePoint& base, const Budget& bu);
ReducedDivisor jac_ops_scalar(const JacOps& ops, const mpz_class& n, const ReducedDivisor& x);

struct GroupStructure {
  mpz_class order;
  std::vector<mpz_class> invariants;       // ascending, n1 | n2 | ... | nr
  std::vector<ReducedDivisor> generators;  // generators[i] has order invariants[i]
  CurvePoint base;
};

// Enumerates the whole degree-0 class group over the base field and extracts
// the invariant-factor decomposition.  Meant for small groups: every class
// is listed explicitly.
GroupStructure class_group_bruteforce(const Curve& C, const Budget& bu);

}  // namespace zetafn
