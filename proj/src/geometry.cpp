#include "jchains/geometry.hpp"

#include <ostream>

namespace jchains {

Corner Corner::make(Int a, Int l, Int b) {
  if (a < 1 || l < 1 || b < 0) {
    throw DomainError("Corner: need a >= 1, l >= 1, b >= 0; got (" + std::to_string(a) + "⊛" +
                      std::to_string(l) + "," + std::to_string(b) + ")");
  }
  return Corner{a, l, b};
}

std::string Corner::to_string() const {
  if (l == 1) return std::to_string(a) + ":" + std::to_string(b);
  return std::to_string(a) + "⊛" + std::to_string(l) + ":" + std::to_string(b);
}

std::ostream& operator<<(std::ostream& os, const Corner& c) { return os << c.to_string(); }

bool same_realization(const Corner& lhs, const Corner& rhs) {
  return lhs.b == rhs.b && lhs.x() == rhs.x();
}

Direction::Direction(Int rho, Int sigma) : rho_(rho), sigma_(sigma) {
  if (rho == 0 && sigma == 0) throw DomainError("Direction: zero vector");
  if (gcd(rho, sigma) != 1) {
    throw DomainError("Direction: (" + std::to_string(rho) + "," + std::to_string(sigma) +
                      ") is not primitive");
  }
}

std::string Direction::to_string() const {
  return "(" + std::to_string(rho_) + "," + std::to_string(sigma_) + ")";
}

std::ostream& operator<<(std::ostream& os, const Direction& d) { return os << d.to_string(); }

Rational val(const Direction& d, const Point& p) {
  return Rational(d.rho()) * p.x + Rational(d.sigma()) * p.y;
}

Int val_scaled(const Direction& d, const Corner& c) {
  return add_checked(mul_checked(d.rho(), c.a), mul_checked(mul_checked(d.sigma(), c.b), c.l));
}

Direction dir(const Rational& vx, const Rational& vy) {
  if (vx.num() == 0 && vy.num() == 0) throw DomainError("dir: zero vector");
  Int common = lcm(vx.den(), vy.den());
  Int rho = mul_checked(vy.num(), common / vy.den());
  Int sigma = neg_checked(mul_checked(vx.num(), common / vx.den()));
  Int g = gcd(rho, sigma);
  return {rho / g, sigma / g};
}

Direction dir_between(const Point& p, const Point& q) { return dir(p.x - q.x, p.y - q.y); }

std::strong_ordering compare_directions(const Direction& lhs, const Direction& rhs) {
  Int cross = sub_checked(mul_checked(lhs.rho(), rhs.sigma()), mul_checked(lhs.sigma(), rhs.rho()));
  if (cross > 0) return std::strong_ordering::less;
  if (cross < 0) return std::strong_ordering::greater;
  if (lhs == rhs) return std::strong_ordering::equal;
  throw DomainError("compare_directions: antipodal directions " + lhs.to_string() + " and " +
                    rhs.to_string());
}

bool in_sector_I(const Direction& d) {
  return add_checked(d.rho(), d.sigma()) > 0 && d.sigma() <= 0;
}

bool in_final_pair_sector(const Direction& d) {
  return d.rho() >= 0 && add_checked(d.rho(), d.sigma()) < 0;
}

Int gap(Int rho, Int l) {
  if (rho < 1 || l < 1) throw DomainError("gap: arguments must be positive");
  return rho / gcd(rho, l);
}

}  // namespace jchains
