#pragma once

#include <optional>
#include <vector>

#include "jchains/geometry.hpp"
#include "jchains/pllc.hpp"

namespace jchains {

/// An ordered pair of same-level corners (A, A') forming a valid edge, with
/// its derived data: the direction of A - A', d = gcd(a, b), the multiplier
/// mu and the point F = (mu/d) A on the line v_{rho,sigma} = rho + sigma.
///
/// Instances exist only through make(), which checks every validity
/// condition and throws InvariantViolation on failure.
class ValidEdge {
 public:
  /// `pllc` is required when A has level 1 and v_{1,-1}(A') > 0.
  static ValidEdge make(const Corner& A, const Corner& Aprime, const PllcTable* pllc);

  [[nodiscard]] const Corner& A() const { return A_; }
  [[nodiscard]] const Corner& Aprime() const { return Aprime_; }
  [[nodiscard]] const Direction& dir() const { return dir_; }
  [[nodiscard]] Int level() const { return A_.l; }
  [[nodiscard]] Int d() const { return d_; }
  [[nodiscard]] Int mu() const { return mu_; }
  [[nodiscard]] const Corner& F() const { return F_; }
  [[nodiscard]] bool simple() const { return simple_; }

  friend bool operator==(const ValidEdge& x, const ValidEdge& y) {
    return x.A_ == y.A_ && x.Aprime_ == y.Aprime_;
  }

 private:
  ValidEdge(Corner A, Corner Aprime, Direction dir, Int d, Int mu, Corner F, bool simple)
      : A_(A), Aprime_(Aprime), dir_(dir), d_(d), mu_(mu), F_(F), simple_(simple) {}

  Corner A_;
  Corner Aprime_;
  Direction dir_;
  Int d_;
  Int mu_;
  Corner F_;
  bool simple_;
};

/// mu = d (rho + sigma) / v_{rho,sigma}(A) when that is a positive integer.
/// Requires v_{rho,sigma}(A) > 0.
std::optional<Int> mu_of(const Corner& A, const Direction& d);

bool is_simple(const ValidEdge& e);

/// All valid edges starting at the integer corner (a, b), a < b, in
/// (mu, i) loop order.
std::vector<ValidEdge> starting_edges(Int a, Int b, const PllcTable& pllc);

}  // namespace jchains
