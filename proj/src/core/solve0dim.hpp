#pragma once
#include <vector>

#include "core/multipoly.hpp"
#include "core/rng.hpp"

namespace zetafn {

// Frobenius orbit of an affine point with coordinates in F_{q^e}; e is the
// exact degree of the point over the coefficient field and the stored tuple
// is the lexicographically minimal conjugate.
struct AffineOrbit {
  unsigned e;
  std::vector<FElem> x;
};

bool orbit_less(const AffineOrbit& a, const AffineOrbit& b);

// All solutions of a zero-dimensional system in `nvars` affine variables,
// as orbits over F.  Elimination by iterated resultants, then verification
// of every candidate against the original system, so the output is exact.
// Positive-dimensional input raises Degenerate (after trying a few shears
// for systems that merely start resultant-degenerate).
std::vector<AffineOrbit> solve0dim(const Field& F, const std::vector<MPoly>& sys, unsigned nvars);

}  // namespace zetafn
