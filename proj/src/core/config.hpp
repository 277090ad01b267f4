#pragma once
#include <cstdint>

namespace zetafn {

// Resource ceilings.  Defaults are sized for interactive use on one core;
// callers raise them explicitly when they mean to wait.
struct Budget {
  // Largest ambient point count q^{2j}+q^j+1 allowed in a point-count pass.
  uint64_t ambient_points = uint64_t(1) << 30;
  // Largest group order class_group_bruteforce will enumerate.
  uint64_t group_order = uint64_t(1) << 22;
  // Largest candidate box p1_from_jacobian_orders will search.
  uint64_t coeff_box = uint64_t(1) << 26;
  // Largest field order for which discrete-log tables are built.
  uint64_t table_field = uint64_t(1) << 23;
  // Largest matrix group order enumerated exactly.
  uint64_t matrix_group = 10'000'000;
  // Largest divisor positive-part degree a Riemann-Roch setup will accept.
  uint64_t rr_degree = 48;
  // Extension orders cap used by certify_zeta (number of traces matched).
  uint32_t orders = 18;
};

}  // namespace zetafn
