#pragma once

#include <vector>

#include "jchains/chain_builder.hpp"

namespace jchains {

/// p/q = (rho + sigma) / v_{rho,sigma}(A) in lowest terms.
struct EdgeArithmetic {
  Int p;
  Int q;
  friend bool operator==(const EdgeArithmetic&, const EdgeArithmetic&) = default;
};

EdgeArithmetic edge_arithmetic(const ValidEdge& e);
inline Int q_of(const ValidEdge& e) { return edge_arithmetic(e).q; }

/// gcd((b_h - b'_h)/gap(rho_h, l_h), b_h, b_{h+1}, a_h l_i/l_h, a'_h l_i/l_h)
/// for 0 <= h < i <= j.
Int d_value(const Chain& chain, std::size_t h, std::size_t i);

/// Outcome of the divisibility test for one pair (h, i).
struct PairCheck {
  std::size_t h;
  std::size_t i;
  Int D;
  Int q_h;
  Int q_i;
  Int omega_D;
  bool passed;
  friend bool operator==(const PairCheck&, const PairCheck&) = default;
};

/// Every pair h < i in lexicographic order.
std::vector<PairCheck> admissibility_diagnostics(const Chain& chain);

/// Omega(D) >= i - h, q_i | D and q_h does not divide q_i, for all h < i.
bool is_admissible(const Chain& chain);

}  // namespace jchains
