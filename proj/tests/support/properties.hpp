#pragma once

#include <cstdint>

#include "jchains/numerics.hpp"
#include "outcome.hpp"

namespace support {

/// bezout_minimal(b, c) equals the first N found by scanning N = 1, 2, ...,
/// for all coprime 1 <= b, c <= bound.
Outcome bezout_minimality(jchains::Int bound);

/// omega(m n) = omega(m) + omega(n) for all 1 <= m, n <= bound.
Outcome omega_additivity(jchains::Int bound);

/// dir(q v) = dir(v) for q > 0, and dir(v) annihilates v, on random rationals.
Outcome dir_scale_invariance(int trials, std::uint64_t seed);

/// cmp_dir is irreflexive, total and transitive on the primitive directions
/// (rho, sigma) with 0 <= rho <= bound, |sigma| <= bound of the closed half
/// plane rho >= 0 minus (0, 1).
Outcome cmp_dir_total_order(jchains::Int bound);

}  // namespace support
