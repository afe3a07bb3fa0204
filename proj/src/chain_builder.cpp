#include "jchains/chain_builder.hpp"

#include <algorithm>
#include <sstream>

namespace jchains {

std::string to_string(Provenance p) {
  return p == Provenance::kFromAprime ? "from_a_prime" : "from_gamma";
}

std::string to_string(FinalRouting r) {
  return r == FinalRouting::kFinalAlsoExpanded ? "final_also_expanded" : "final_exclusive";
}

FinalRouting final_routing_from_string(const std::string& s) {
  if (s == "final_also_expanded") return FinalRouting::kFinalAlsoExpanded;
  if (s == "final_exclusive") return FinalRouting::kFinalExclusive;
  throw DomainError("unknown final routing: " + s);
}

bool is_final(const Corner& c) {
  if (c.b < 1) return false;
  return mul_checked(c.l - 1, c.b) > c.a;
}

bool is_generated_by(const ValidEdge& e, const Corner& c) {
  const Corner& A = e.A();
  const Corner& Ap = e.Aprime();
  if (Ap.v1m1_scaled() < 0) return c == Ap;
  if (c.l != lcm(e.dir().rho(), A.l)) return false;
  if (!(Ap.b < c.b && c.b < A.b)) return false;
  // same line: l * v(c) == c.l * v(A) after scaling both by their levels
  return mul_checked(val_scaled(e.dir(), c), A.l) == mul_checked(val_scaled(e.dir(), A), c.l);
}

std::vector<GeneratedCorner> generated_corners(const ValidEdge& e) {
  const Corner& A = e.A();
  const Corner& Ap = e.Aprime();
  if (Ap.v1m1_scaled() < 0) return {{Ap, Provenance::kFromAprime, Ap.b}};

  const Int rho = e.dir().rho();
  const Int sigma = e.dir().sigma();
  const Int l1 = lcm(rho, A.l);
  const Int g = gap(rho, A.l);
  if ((A.b - Ap.b) % g != 0) throw InvariantViolation("edge height drop not a multiple of gap");
  const Int gamma_max = std::min((A.b - Ap.b) / g, A.b - 1);
  const Int x_step = neg_checked(sigma) * (l1 / rho);  // lattice units per unit drop in height

  auto corner_at = [&](Int b1) {
    const Int a1 = add_checked(mul_checked(A.a, l1 / A.l), mul_checked(b1 - A.b, x_step));
    return Corner::make(a1, l1, b1);
  };
  auto worth_keeping = [](const Corner& c) { return is_final(c) || gcd(c.a, c.b) > 1; };

  std::vector<GeneratedCorner> out;
  if (e.simple()) {
    const Corner c = corner_at(gamma_max);
    if (worth_keeping(c)) {
      if (c.v1m1_scaled() >= 0) {
        throw InvariantViolation("simple edge generated " + c.to_string() + " above the diagonal");
      }
      out.push_back({c, Provenance::kFromGamma, gamma_max});
    }
    return out;
  }
  for (Int b1 = Ap.b + 1; b1 <= gamma_max; ++b1) {
    const Corner c = corner_at(b1);
    if (c.v1m1_scaled() < 0 && worth_keeping(c)) out.push_back({c, Provenance::kFromGamma, b1});
  }
  return out;
}

std::vector<ValidEdge> corner_children(const ValidEdge& e, const Corner& A1,
                                       const PllcTable& pllc) {
  const Direction& parent = e.dir();
  const Int a1 = A1.a;
  const Int l1 = A1.l;
  const Int b1 = A1.b;
  if (b1 < 1) return {};
  const Int d1 = gcd(a1, b1);
  const Rational v(val_scaled(parent, A1), l1);
  if (v.sign() <= 0) throw InvariantViolation("generated corner with v_{rho,sigma} <= 0");

  const Int lo = (Rational(1) + Rational(d1 * (parent.rho() + parent.sigma())) / v).floor();
  const Int hi = l1 == 1
                     ? d1
                     : (Rational(mul_checked(l1, sub_checked(mul_checked(b1, l1), a1))) +
                        Rational(d1, b1))
                           .floor();

  std::vector<ValidEdge> out;
  for (Int mu = std::max<Int>(lo, 1); mu <= hi; ++mu) {
    if (mu % d1 == 0) continue;
    const Rational fx(mul_checked(mu, a1), mul_checked(d1, l1));
    const Rational fy(mul_checked(mu, b1), d1);
    if (fx == Rational(1) && fy == Rational(1)) continue;
    const Direction child = dir(fx - Rational(1), fy - Rational(1));
    if (!in_sector_I(child)) continue;
    const Int g = gap(child.rho(), l1);
    if (g > b1) continue;
    const Int x_step = mul_checked(child.sigma(), l1 / gcd(child.rho(), l1));
    for (Int j = 1; j <= b1 / g; ++j) {
      const Int ap = add_checked(a1, mul_checked(j, x_step));
      const Int bp = b1 - j * g;
      if (ap < 1) break;
      const Corner Ap = Corner::make(ap, l1, bp);
      const Int vp = Ap.v1m1_scaled();
      const bool keep = (l1 > 1 && vp != 0) || (l1 == 1 && vp < 0) ||
                        (l1 == 1 && vp > 0 && pllc.contains(ap, bp));
      if (!keep) continue;
      ValidEdge edge = ValidEdge::make(A1, Ap, &pllc);
      if (!dir_less(edge.dir(), parent)) {
        throw InvariantViolation("child direction " + edge.dir().to_string() +
                                 " not below parent " + parent.to_string());
      }
      out.push_back(std::move(edge));
    }
  }
  return out;
}

Expansion children_and_finals(const ValidEdge& e, const PllcTable& pllc, FinalRouting routing) {
  Expansion out;
  for (const auto& g : generated_corners(e)) {
    if (is_final(g.corner)) {
      out.finals.push_back(g.corner);
      if (routing == FinalRouting::kFinalExclusive) continue;
    }
    auto kids = corner_children(e, g.corner, pllc);
    out.children.insert(out.children.end(), kids.begin(), kids.end());
  }
  return out;
}

Chain Chain::make(std::vector<ValidEdge> edges, Corner final) {
  auto fail = [](const std::string& why) { throw InvariantViolation("invalid chain: " + why); };
  if (edges.empty()) fail("no edges");
  if (edges.front().A().l != 1) fail("first corner not integral");
  for (std::size_t i = 0; i + 1 < edges.size(); ++i) {
    const auto& cur = edges[i];
    const auto& next = edges[i + 1];
    if (!dir_less(next.dir(), cur.dir())) fail("directions not strictly decreasing");
    if (!is_generated_by(cur, next.A())) fail(next.A().to_string() + " not generated");
    if (next.A().v1m1_scaled() >= 0) fail("corner above the diagonal");
    if (!(next.A().b < cur.A().b)) fail("heights not strictly decreasing");
  }
  if (!is_generated_by(edges.back(), final)) fail("final corner not generated");
  if (!is_final(final)) fail(final.to_string() + " is not final");
  if (!(final.b < edges.back().A().b)) fail("final corner not below last corner");
  return Chain(std::move(edges), final);
}

std::vector<Corner> Chain::corner_sequence() const {
  std::vector<Corner> seq;
  seq.reserve(edges_.size() + 1);
  for (const auto& e : edges_) seq.push_back(e.A());
  seq.push_back(final_);
  return seq;
}

std::string Chain::to_string() const {
  std::ostringstream os;
  const auto seq = corner_sequence();
  for (std::size_t i = 0; i < seq.size(); ++i) os << (i ? " -> " : "") << seq[i];
  return os.str();
}

Int max_chain_length(const ValidEdge& e0) {
  const Int drop = e0.A().b - e0.Aprime().b;
  if (drop % e0.dir().rho() != 0) throw InvariantViolation("starting edge drop not a multiple of rho");
  return omega(gcd(e0.A().b, drop / e0.dir().rho())) + 1;
}

std::vector<Chain> complete_chains(const ValidEdge& e0, const PllcTable& pllc,
                                   FinalRouting routing) {
  if (e0.level() != 1) throw DomainError("complete_chains: starting edge must have level 1");
  const Int rounds = max_chain_length(e0);
  std::vector<Chain> out;
  std::vector<std::vector<ValidEdge>> frontier{{e0}};
  for (Int round = 0; round < rounds && !frontier.empty(); ++round) {
    std::vector<std::vector<ValidEdge>> next;
    for (auto& path : frontier) {
      auto ex = children_and_finals(path.back(), pllc, routing);
      for (const auto& f : ex.finals) out.push_back(Chain::make(path, f));
      for (auto& child : ex.children) {
        auto longer = path;
        longer.push_back(std::move(child));
        next.push_back(std::move(longer));
      }
    }
    frontier = std::move(next);
  }
  return out;
}

}  // namespace jchains
