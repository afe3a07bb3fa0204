#pragma once

#include <vector>

#include "jchains/geometry.hpp"

namespace jchains {

/// Arithmetic progression (m0 + t*step_m, n0 + t*step_n), t >= 0, of
/// exponent pairs attached to a final corner and a choice (k, i).
struct MnFamily {
  Int k;
  Int i;
  Int m0;
  Int n0;
  Int step_m;
  Int step_n;
  friend bool operator==(const MnFamily&, const MnFamily&) = default;
};

/// Families for a final corner, ordered by k then i. Throws DomainError when
/// the corner is not final.
std::vector<MnFamily> mn_families(const Corner& final);

/// (m + n) b k - n (b l - a) == k.
bool satisfies_identity(const Corner& final, Int k, Int m, Int n);

}  // namespace jchains
