#include "jchains/mn_families.hpp"

#include "jchains/chain_builder.hpp"

namespace jchains {

std::vector<MnFamily> mn_families(const Corner& final) {
  if (!is_final(final)) throw DomainError("mn_families: " + final.to_string() + " is not final");
  const Int a = final.a;
  const Int b = final.b;
  const Int s = sub_checked(mul_checked(b, final.l), a);  // > b for a final corner
  const Int k_max = ceil_div(s, b) - 1;

  std::vector<MnFamily> out;
  for (Int k = 1; k <= k_max; ++k) {
    const Int e = gcd(k, s);
    if (gcd(b, s / e) != 1) continue;
    const auto [M, N] = bezout_minimal(b, s / e);
    Int n = mul_checked(N, k / e);
    Int m = M - n;
    const Int dm = (s - mul_checked(b, k)) / e;
    const Int dn = mul_checked(b, k) / e;
    if (m == 1 || n == 1) {
      m = add_checked(m, dm);
      n = add_checked(n, dn);
    }
    if (m < 2 || n < 2) {
      throw InvariantViolation("mn_families: base pair (" + std::to_string(m) + ", " +
                               std::to_string(n) + ") below 2");
    }
    const Int k_bar = k / e;
    if (k_bar == 1) {
      out.push_back({k, 0, m, n, dm, dn});
      continue;
    }
    for (Int i = 0; i < k_bar; ++i) {
      const Int mi = add_checked(m, mul_checked(i, dm));
      const Int ni = add_checked(n, mul_checked(i, dn));
      if (gcd(mi, ni) == 1) out.push_back({k, i, mi, ni, mul_checked(k_bar, dm), mul_checked(k_bar, dn)});
    }
  }
  return out;
}

bool satisfies_identity(const Corner& final, Int k, Int m, Int n) {
  const Int s = sub_checked(mul_checked(final.b, final.l), final.a);
  const Int lhs = sub_checked(mul_checked(mul_checked(add_checked(m, n), final.b), k), mul_checked(n, s));
  return lhs == k;
}

}  // namespace jchains
