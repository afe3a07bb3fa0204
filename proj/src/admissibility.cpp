#include "jchains/admissibility.hpp"

namespace jchains {

EdgeArithmetic edge_arithmetic(const ValidEdge& e) {
  const Int u = val_scaled(e.dir(), e.A());
  if (u <= 0) throw DomainError("edge_arithmetic: v_{rho,sigma}(A) must be positive");
  const Int s = mul_checked(e.dir().rho() + e.dir().sigma(), e.level());
  const Int g = gcd(s, u);
  return {s / g, u / g};
}

Int d_value(const Chain& chain, std::size_t h, std::size_t i) {
  const auto& edges = chain.edges();
  if (!(h < i && i < edges.size())) throw DomainError("d_value: need h < i <= j");
  const ValidEdge& eh = edges[h];
  const Corner& A = eh.A();
  const Corner& Ap = eh.Aprime();
  const Int lh = A.l;
  const Int li = edges[i].level();
  if (li % lh != 0) throw InvariantViolation("levels along a chain must divide each other");
  const Int g = gap(eh.dir().rho(), lh);
  if ((A.b - Ap.b) % g != 0) throw InvariantViolation("edge height drop not a multiple of gap");
  Int D = gcd((A.b - Ap.b) / g, A.b);
  D = gcd(D, edges[h + 1].A().b);
  D = gcd(D, mul_checked(A.a, li / lh));
  D = gcd(D, mul_checked(Ap.a, li / lh));
  return D;
}

std::vector<PairCheck> admissibility_diagnostics(const Chain& chain) {
  const auto& edges = chain.edges();
  std::vector<Int> q;
  q.reserve(edges.size());
  for (const auto& e : edges) q.push_back(q_of(e));
  std::vector<PairCheck> out;
  for (std::size_t h = 0; h < edges.size(); ++h) {
    for (std::size_t i = h + 1; i < edges.size(); ++i) {
      const Int D = d_value(chain, h, i);
      const Int w = omega(D);
      const bool ok = w >= static_cast<Int>(i - h) && D % q[i] == 0 && q[i] % q[h] != 0;
      out.push_back({h, i, D, q[h], q[i], w, ok});
    }
  }
  return out;
}

bool is_admissible(const Chain& chain) {
  for (const auto& c : admissibility_diagnostics(chain)) {
    if (!c.passed) return false;
  }
  return true;
}

}  // namespace jchains
