#include "jchains/pllc.hpp"

#include <string>
#include <utility>

namespace jchains {

PllcTable::PllcTable(Int x_max, std::vector<FinalPair> pairs)
    : x_max_(x_max), pairs_(std::move(pairs)) {
  if (x_max < 1) throw DomainError("PllcTable: x_max must be >= 1");
  index_.resize(static_cast<std::size_t>(x_max) + 1);
  for (Int a = 1; a <= x_max; ++a) index_[a].assign(static_cast<std::size_t>(a), 0);
  for (std::size_t k = 0; k < pairs_.size(); ++k) {
    const auto& p = pairs_[k];
    if (p.a < 1 || p.a > x_max || p.b < 0 || p.b >= p.a) {
      throw InvariantViolation("PllcTable: pair (" + std::to_string(p.a) + "," +
                               std::to_string(p.b) + ") outside 0 <= b < a <= x_max");
    }
    index_[p.a][p.b] = k + 1;
  }
}

bool PllcTable::contains(Int a, Int b) const {
  if (a > x_max_) {
    throw DomainError("PllcTable: query (" + std::to_string(a) + "," + std::to_string(b) +
                      ") beyond x_max = " + std::to_string(x_max_));
  }
  if (a < 1 || b < 0 || b >= a) return false;
  return index_[a][b] != 0;
}

const Direction& PllcTable::witness(Int a, Int b) const {
  if (!contains(a, b)) throw DomainError("PllcTable: point not in table");
  return pairs_[index_[a][b] - 1].dir;
}

PllcTable possible_last_lower_corners(Int x_max) {
  if (x_max < 1) throw DomainError("possible_last_lower_corners: x_max must be >= 1");
  const Direction down(0, -1);
  const Direction half(1, -2);
  const Direction diagonal(1, -1);

  std::vector<FinalPair> pfl;
  for (Int a = 1; a <= x_max; ++a) {
    for (Int b = 0; b < a; ++b) {
      Int slack = a - b - 1;
      if (b > mul_checked(slack, slack)) break;

      if (b == 0) {
        pfl.push_back({a, b, down});
        continue;
      }
      if (a > 2 * b) {
        pfl.push_back({a, b, half});
        continue;
      }

      Direction best = diagonal;
      for (const auto& prev : pfl) {
        const Int r = prev.a, s = prev.b;
        if (!(r < a && s < b && r - s < a - b)) continue;
        const Int n1 = gcd(a - r, b - s);
        const Int n2 = gcd(r, s);
        const Direction cand((b - s) / n1, (r - a) / n1);
        if (!dir_less(prev.dir, cand) || !dir_less(cand, best)) continue;
        const Int v = add_checked(mul_checked(cand.rho(), a), mul_checked(cand.sigma(), b));
        if (v < cand.rho()) continue;
        const Int theta = v / gcd(cand.rho() + cand.sigma(), v);
        if (theta <= n1 || n2 % theta == 0) best = cand;
      }
      if (dir_less(best, diagonal)) pfl.push_back({a, b, best});
    }
  }
  return PllcTable(x_max, std::move(pfl));
}

}  // namespace jchains
