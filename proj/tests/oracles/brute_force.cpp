#include "brute_force.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <stdexcept>

namespace oracle {

namespace {

Rational x_of(const Corner& c) { return {c.a, c.l}; }
Rational y_of(const Corner& c) { return Rational(c.b); }
Rational v_dir(Int rho, Int sigma, const Corner& c) { return Rational(rho) * x_of(c) + Rational(sigma) * y_of(c); }
Rational v1m1(const Corner& c) { return x_of(c) - y_of(c); }

// Primitive (rho, sigma) orthogonal to A - A' for two corners of level l.
std::pair<Int, Int> direction(const Corner& A, const Corner& Ap) {
  const Int rho = (A.b - Ap.b) * A.l;
  const Int sigma = -(A.a - Ap.a);
  const Int g = std::gcd(rho, sigma);
  return {rho / g, sigma / g};
}

bool in_I(Int rho, Int sigma) { return sigma <= 0 && rho + sigma > 0; }

// (r1, s1) < (r2, s2) counterclockwise.
bool below(Int r1, Int s1, Int r2, Int s2) { return r1 * s2 - s1 * r2 > 0; }

Int gap(Int rho, Int l) { return rho / std::gcd(rho, l); }

// mu with mu/d = (rho+sigma)/v(A), if it is a natural number.
std::optional<Int> mu_for(const Corner& A, Int rho, Int sigma) {
  const Rational v = v_dir(rho, sigma, A);
  if (v <= Rational(0)) return std::nullopt;
  const Rational mu = Rational(std::gcd(A.a, A.b) * (rho + sigma)) / v;
  if (!mu.is_integer() || mu.num() < 1) return std::nullopt;
  return mu.num();
}

void extend(std::vector<Edge>& path, const PointSet& pllc, std::vector<Chain>& out) {
  const Edge e = path.back();
  for (const Corner& g : generated_corners(e)) {
    if (is_final(g)) out.push_back({path, g});
    for (const Edge& child : children(e, g, pllc)) {
      path.push_back(child);
      extend(path, pllc, out);
      path.pop_back();
    }
  }
}

}  // namespace

Int omega(Int n) {
  Int count = 0;
  for (Int p = 2; n > 1; ++p) {
    while (n % p == 0) {
      n /= p;
      ++count;
    }
  }
  return count;
}

bool is_valid_edge(const Corner& A, const Corner& Ap, const PointSet& pllc) {
  if (A.l != Ap.l || A == Ap) return false;
  const auto [rho, sigma] = direction(A, Ap);
  if (!in_I(rho, sigma)) return false;
  if (!(v1m1(A) < Rational(0) && v1m1(Ap) != Rational(0) && v1m1(A) < v1m1(Ap))) return false;

  const Int l = A.l;
  const Int d = std::gcd(A.a, A.b);
  const auto mu = mu_for(A, rho, sigma);
  if (!mu) return false;
  if (*mu % d == 0) return false;
  if (Rational(*mu) > Rational(l * (A.b * l - A.a)) + Rational(d, A.b)) return false;
  if (l == 1 && *mu >= d) return false;
  const Corner F{*mu * A.a / d, l, *mu * A.b / d};
  if (F.b < 1 || v_dir(rho, sigma, F) != Rational(rho + sigma)) return false;

  if (l == 1 && v1m1(Ap) > Rational(0) && !pllc.contains({Ap.a, Ap.b})) return false;
  return true;
}

std::vector<Edge> valid_edges_from(const Corner& A, const PointSet& pllc) {
  std::vector<Edge> out;
  for (Int a = 1; a <= A.a; ++a) {
    for (Int b = 0; b < A.b; ++b) {
      const Corner Ap{a, A.l, b};
      if (is_valid_edge(A, Ap, pllc)) {
        const auto [rho, sigma] = direction(A, Ap);
        out.push_back({A, Ap, rho, sigma});
      }
    }
  }
  return out;
}

bool is_simple(const Edge& e) {
  const Int d = std::gcd(e.A.a, e.A.b);
  const Int f2 = *mu_for(e.A, e.rho, e.sigma) * e.A.b / d;
  const Int g = gap(e.rho, e.A.l);
  return f2 - 1 == g && (g > 1 || e.Ap.b > 0);
}

bool is_final(const Corner& c) {
  return c.b >= 1 && Rational(c.l) - Rational(c.a, c.b) > Rational(1);
}

std::vector<Corner> generated_corners(const Edge& e) {
  if (v1m1(e.Ap) < Rational(0)) return {e.Ap};
  if (v1m1(e.Ap) == Rational(0)) return {};
  const Int g = gap(e.rho, e.A.l);
  const Rational gmax = std::min(Rational(e.A.b - e.Ap.b, g), Rational(e.A.b - 1));
  if (!gmax.is_integer()) throw std::logic_error("oracle: gamma_max not integral");
  const Int lo = is_simple(e) ? gmax.num() : e.Ap.b;
  const Int l1 = std::lcm(e.A.l, e.rho);
  std::vector<Corner> out;
  for (Int gamma = lo; gamma <= gmax.num(); ++gamma) {
    if (gamma < 1) continue;
    // point of the line through A and A' at height gamma
    const Rational x = x_of(e.A) + Rational(gamma - e.A.b) * (x_of(e.A) - x_of(e.Ap)) /
                                       Rational(e.A.b - e.Ap.b);
    const Rational a1 = x * Rational(l1);
    if (!a1.is_integer()) throw std::logic_error("oracle: generated point off the lattice");
    const Corner c{a1.num(), l1, gamma};
    const bool admissible = v1m1(c) < Rational(0) &&
                            (is_final(c) || std::gcd(c.a, c.b) > 1);
    if (admissible) out.push_back(c);
  }
  return out;
}

std::vector<Edge> children(const Edge& e, const Corner& A1, const PointSet& pllc) {
  std::vector<Edge> out;
  for (const Edge& c : valid_edges_from(A1, pllc)) {
    if (below(c.rho, c.sigma, e.rho, e.sigma)) out.push_back(c);
  }
  return out;
}

std::vector<Chain> complete_chains(const Edge& e0, const PointSet& pllc) {
  std::vector<Chain> out;
  if (e0.A.l != 1) return out;
  std::vector<Edge> path{e0};
  extend(path, pllc, out);
  return out;
}

bool is_admissible(const Chain& c) {
  const auto& E = c.edges;
  auto q = [](const Edge& e) {
    // (rho+sigma)/v(A) = p/q in lowest terms
    return (Rational(e.rho + e.sigma) / v_dir(e.rho, e.sigma, e.A)).den();
  };
  for (std::size_t h = 0; h < E.size(); ++h) {
    for (std::size_t i = h + 1; i < E.size(); ++i) {
      const Edge& eh = E[h];
      const Int lh = eh.A.l;
      const Int li = E[i].A.l;
      const Rational t1 = Rational(eh.A.b - eh.Ap.b, gap(eh.rho, lh));
      const Rational t4 = Rational(eh.A.a * li, lh);
      const Rational t5 = Rational(eh.Ap.a * li, lh);
      if (!t1.is_integer() || !t4.is_integer() || !t5.is_integer()) {
        throw std::logic_error("oracle: non-integral D argument");
      }
      Int D = std::gcd(t1.num(), eh.A.b);
      D = std::gcd(D, E[h + 1].A.b);
      D = std::gcd(D, t4.num());
      D = std::gcd(D, t5.num());
      const Int qh = q(eh);
      const Int qi = q(E[i]);
      if (!(D % qi == 0 && qi % qh != 0 && omega(D) >= static_cast<Int>(i - h))) return false;
    }
  }
  return true;
}

std::set<std::tuple<Int, Int, Int>> mn_pairs(const Corner& A, Int n_bound) {
  std::set<std::tuple<Int, Int, Int>> out;
  const Int s = A.b * A.l - A.a;
  for (Int k = 1; Rational(k) < Rational(A.l) - Rational(A.a, A.b); ++k) {
    if (std::gcd(A.b, s / std::gcd(k, s)) != 1) continue;
    for (Int n = 2; n <= n_bound; ++n) {
      // (m + n) b k = k + n s
      const Int rhs = k + n * s;
      if (rhs % (A.b * k) != 0) continue;
      const Int m = rhs / (A.b * k) - n;
      if (m >= 2 && std::gcd(m, n) == 1) out.insert({k, m, n});
    }
  }
  return out;
}

}  // namespace oracle
