#pragma once

#include <vector>

#include "jchains/geometry.hpp"

namespace jchains {

/// An integer point (a, b) with the witness direction that admitted it.
struct FinalPair {
  Int a;
  Int b;
  Direction dir;
  friend bool operator==(const FinalPair&, const FinalPair&) = default;
};

/// Superset of the possible last lower corners with a <= x_max, in insertion
/// order (a ascending, then b ascending), with O(1) point membership.
class PllcTable {
 public:
  PllcTable(Int x_max, std::vector<FinalPair> pairs);

  [[nodiscard]] Int x_max() const { return x_max_; }
  [[nodiscard]] const std::vector<FinalPair>& pairs() const { return pairs_; }

  /// Membership of (a, b). Throws DomainError for a > x_max, since the table
  /// cannot answer for points it never examined.
  [[nodiscard]] bool contains(Int a, Int b) const;

  /// Witness direction for a member point; throws DomainError otherwise.
  [[nodiscard]] const Direction& witness(Int a, Int b) const;

 private:
  Int x_max_;
  std::vector<FinalPair> pairs_;
  // index_[a][b] = position in pairs_ + 1, or 0 when absent (b < a always).
  std::vector<std::vector<std::size_t>> index_;
};

/// Builds the table for 1 <= a <= x_max by the corner-by-corner witness
/// search: b = 0 rows get (0,-1), rows with a > 2b > 0 get (1,-2), and the
/// remaining rows lower (1,-1) through earlier pairs until a witness below
/// (1,-1) is found.
PllcTable possible_last_lower_corners(Int x_max);

}  // namespace jchains
