#include "jchains/edges.hpp"

#include <string>

namespace jchains {

namespace {

[[noreturn]] void invalid(const Corner& A, const Corner& Aprime, const std::string& why) {
  throw InvariantViolation("invalid edge (" + A.to_string() + ", " + Aprime.to_string() + "): " +
                           why);
}

}  // namespace

std::optional<Int> mu_of(const Corner& A, const Direction& d) {
  const Int scaled = val_scaled(d, A);
  if (scaled <= 0) throw DomainError("mu_of: v_{rho,sigma}(A) must be positive");
  const Int numer = mul_checked(mul_checked(gcd(A.a, A.b), d.rho() + d.sigma()), A.l);
  if (numer <= 0 || numer % scaled != 0) return std::nullopt;
  return numer / scaled;
}

ValidEdge ValidEdge::make(const Corner& A, const Corner& Aprime, const PllcTable* pllc) {
  if (A.l != Aprime.l) invalid(A, Aprime, "levels differ");
  if (A == Aprime) invalid(A, Aprime, "corners coincide");
  const Direction direction = dir_between(A.realize(), Aprime.realize());
  if (!in_sector_I(direction)) invalid(A, Aprime, "direction " + direction.to_string() + " not in I");

  const Int vA = A.v1m1_scaled();
  const Int vAp = Aprime.v1m1_scaled();
  if (!(vA < 0 && vAp != 0 && vA < vAp)) invalid(A, Aprime, "v_{1,-1} conditions fail");

  if (val_scaled(direction, A) <= 0) invalid(A, Aprime, "v_{rho,sigma}(A) <= 0");
  const auto mu = mu_of(A, direction);
  if (!mu) invalid(A, Aprime, "(rho+sigma)/v(A) is not of the form mu/d");
  const Int d = gcd(A.a, A.b);
  const Int l = A.l;
  if (*mu % d == 0) invalid(A, Aprime, "d divides mu");
  // mu <= l(bl - a) + d/b
  const Rational bound = Rational(mul_checked(l, sub_checked(mul_checked(A.b, l), A.a))) +
                         Rational(d, A.b);
  if (Rational(*mu) > bound) invalid(A, Aprime, "mu exceeds l(bl-a) + d/b");
  if (l == 1 && *mu >= d) invalid(A, Aprime, "level 1 requires mu < d");

  const Corner F = Corner::make(mul_checked(*mu, A.a) / d, l, mul_checked(*mu, A.b) / d);
  if (F.b < 1) invalid(A, Aprime, "F has zero height");
  if (val_scaled(direction, F) != mul_checked(direction.rho() + direction.sigma(), l)) {
    invalid(A, Aprime, "v_{rho,sigma}(F) != rho + sigma");
  }

  if (l == 1 && vAp > 0) {
    if (pllc == nullptr) invalid(A, Aprime, "PLLC table required");
    if (!pllc->contains(Aprime.a, Aprime.b)) invalid(A, Aprime, "A' not a possible last lower corner");
  }

  const Int g = gap(direction.rho(), l);
  const bool simple = (F.b - 1 == g) && (g > 1 || Aprime.b > 0);
  return ValidEdge(A, Aprime, direction, d, *mu, F, simple);
}

bool is_simple(const ValidEdge& e) { return e.simple(); }

std::vector<ValidEdge> starting_edges(Int a, Int b, const PllcTable& pllc) {
  if (a < 1 || b <= a) throw DomainError("starting_edges: need 1 <= a < b");
  if (pllc.x_max() < a) throw DomainError("starting_edges: PLLC table too small for a");
  const Corner A = Corner::integral(a, b);
  const Int d = gcd(a, b);
  std::vector<ValidEdge> out;
  for (Int mu = 1; mu < d; ++mu) {
    const Int f1 = mu * (a / d);
    const Int f2 = mu * (b / d);
    const Direction direction = dir(Rational(f1 - 1), Rational(f2 - 1));
    const Int steps = b / direction.rho();
    for (Int i = 1; i <= steps; ++i) {
      const Int ap = add_checked(a, mul_checked(i, direction.sigma()));
      const Int bp = sub_checked(b, mul_checked(i, direction.rho()));
      const Int v = ap - bp;
      if (v < 0 || (v > 0 && pllc.contains(ap, bp))) {
        out.push_back(ValidEdge::make(A, Corner::integral(ap, bp), &pllc));
      }
    }
  }
  return out;
}

}  // namespace jchains
