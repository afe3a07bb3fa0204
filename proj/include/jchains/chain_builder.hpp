#pragma once

#include <string>
#include <vector>

#include "jchains/edges.hpp"

namespace jchains {

/// How a generated corner was obtained from its edge: A' itself (when
/// v_{1,-1}(A') < 0) or a lattice point of height gamma on the segment.
enum class Provenance { kFromAprime, kFromGamma };

std::string to_string(Provenance p);

struct GeneratedCorner {
  Corner corner;
  Provenance provenance = Provenance::kFromAprime;
  Int gamma = 0;  // height b1 for kFromGamma, b' for kFromAprime
  friend bool operator==(const GeneratedCorner&, const GeneratedCorner&) = default;
};

/// l - a/b > 1. Corners of height 0 are never final.
bool is_final(const Corner& c);

/// Structural check that `c` is a corner the edge can generate: A' itself
/// when v_{1,-1}(A') < 0, otherwise a point of level lcm(rho, l) strictly
/// between A' and A on the edge line.
bool is_generated_by(const ValidEdge& e, const Corner& c);

/// Generated corners of an edge in ascending height (single element when
/// A' lies below the diagonal).
std::vector<GeneratedCorner> generated_corners(const ValidEdge& e);

/// Valid edges starting at the generated corner `A1` of `e`, each with a
/// direction strictly below e.dir(). `pllc` is consulted for level-1
/// children whose end lies above the diagonal.
std::vector<ValidEdge> corner_children(const ValidEdge& e, const Corner& A1,
                                       const PllcTable& pllc);

/// kFinalAlsoExpanded: a final generated corner both closes a chain and is
/// expanded further. kFinalExclusive: final corners are only recorded.
enum class FinalRouting { kFinalAlsoExpanded, kFinalExclusive };

std::string to_string(FinalRouting r);
FinalRouting final_routing_from_string(const std::string& s);

struct Expansion {
  std::vector<ValidEdge> children;
  std::vector<Corner> finals;
};

Expansion children_and_finals(const ValidEdge& e, const PllcTable& pllc,
                              FinalRouting routing = FinalRouting::kFinalAlsoExpanded);

/// A complete chain: edges e_0..e_j with a final corner generated by e_j.
class Chain {
 public:
  /// Validates level 1 at the start, strictly decreasing directions, the
  /// generated-corner relation between consecutive edges, strict descent in
  /// height and finality of `final`. Throws InvariantViolation.
  static Chain make(std::vector<ValidEdge> edges, Corner final);

  [[nodiscard]] const std::vector<ValidEdge>& edges() const { return edges_; }
  [[nodiscard]] const Corner& final_corner() const { return final_; }
  /// Number of edges (j + 1).
  [[nodiscard]] std::size_t length() const { return edges_.size(); }
  [[nodiscard]] const Corner& start() const { return edges_.front().A(); }

  /// The corner sequence A_0, ..., A_j, final that identifies the chain.
  [[nodiscard]] std::vector<Corner> corner_sequence() const;
  [[nodiscard]] std::string to_string() const;

  friend bool operator==(const Chain& x, const Chain& y) {
    return x.edges_ == y.edges_ && x.final_ == y.final_;
  }

 private:
  Chain(std::vector<ValidEdge> edges, Corner final) : edges_(std::move(edges)), final_(final) {}

  std::vector<ValidEdge> edges_;
  Corner final_;
};

/// Round bound for chains starting with e0: Omega(gcd(b, (b - b')/rho)) + 1.
Int max_chain_length(const ValidEdge& e0);

/// All complete chains starting with the level-1 edge e0, shortest first.
std::vector<Chain> complete_chains(const ValidEdge& e0, const PllcTable& pllc,
                                   FinalRouting routing = FinalRouting::kFinalAlsoExpanded);

}  // namespace jchains
