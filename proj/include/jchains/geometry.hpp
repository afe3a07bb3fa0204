#pragma once

#include <compare>
#include <iosfwd>
#include <string>

#include "jchains/numerics.hpp"

namespace jchains {

/// A point of the plane with exact rational coordinates.
struct Point {
  Rational x;
  Rational y;
  friend bool operator==(const Point&, const Point&) = default;
};

/// A corner (a⊛l, b): the element a of the level-l lattice together with a
/// height b. Its geometric realization is (a/l, b). The level is carried
/// unreduced, so (14⊛4, 6) and (7⊛2, 6) are different corners.
struct Corner {
  Int a = 1;
  Int l = 1;
  Int b = 0;

  /// Validating factory: a >= 1, l >= 1, b >= 0.
  static Corner make(Int a, Int l, Int b);
  static Corner integral(Int a, Int b) { return make(a, 1, b); }

  [[nodiscard]] Rational x() const { return {a, l}; }
  [[nodiscard]] Point realize() const { return {x(), Rational(b)}; }

  /// v_{1,-1} of the realization, scaled by l (so the sign is exact): a - b*l.
  [[nodiscard]] Int v1m1_scaled() const { return sub_checked(a, mul_checked(b, l)); }
  [[nodiscard]] Int v11_scaled() const { return add_checked(a, mul_checked(b, l)); }

  /// Canonical text rendering "a⊛l:b", or "a:b" when l = 1.
  [[nodiscard]] std::string to_string() const;

  friend bool operator==(const Corner&, const Corner&) = default;
  friend auto operator<=>(const Corner&, const Corner&) = default;
};

std::ostream& operator<<(std::ostream& os, const Corner& c);

/// True when both corners realize the same plane point.
bool same_realization(const Corner& lhs, const Corner& rhs);

/// Primitive nonzero integer direction (rho, sigma), defining the valuation
/// v_{rho,sigma}(x, y) = rho*x + sigma*y.
class Direction {
 public:
  /// Throws DomainError unless (rho, sigma) is nonzero and primitive.
  Direction(Int rho, Int sigma);

  [[nodiscard]] Int rho() const { return rho_; }
  [[nodiscard]] Int sigma() const { return sigma_; }
  [[nodiscard]] std::string to_string() const;

  friend bool operator==(const Direction&, const Direction&) = default;

 private:
  Int rho_;
  Int sigma_;
};

std::ostream& operator<<(std::ostream& os, const Direction& d);

Rational val(const Direction& d, const Point& p);

/// rho*a + sigma*b*l, i.e. l * v_{rho,sigma}(realize(c)).
Int val_scaled(const Direction& d, const Corner& c);

/// The primitive direction orthogonal to (vx, vy) obtained by clearing the
/// denominators of (vy, -vx); satisfies rho*vx + sigma*vy = 0.
Direction dir(const Rational& vx, const Rational& vy);

/// dir(p - q).
Direction dir_between(const Point& p, const Point& q);

/// Angular (counterclockwise) order of two directions of the lower-right
/// half plane: lhs < rhs iff rho_l*sigma_r - sigma_l*rho_r > 0.
std::strong_ordering compare_directions(const Direction& lhs, const Direction& rhs);

inline bool dir_less(const Direction& lhs, const Direction& rhs) {
  return compare_directions(lhs, rhs) == std::strong_ordering::less;
}

/// Membership in the half-open sector I = ](1,-1), (1,0)].
bool in_sector_I(const Direction& d);

/// Membership in the sector [(0,-1), (1,-1)[ of final-pair witnesses.
bool in_final_pair_sector(const Direction& d);

/// rho / gcd(rho, l).
Int gap(Int rho, Int l);

}  // namespace jchains
