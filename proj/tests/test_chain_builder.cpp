#include <algorithm>

#include "doctest.h"
#include "jchains/chain_builder.hpp"

using namespace jchains;

namespace {

const PllcTable& table() {
  static const PllcTable t = possible_last_lower_corners(40);
  return t;
}

ValidEdge start_edge(Int a, Int b, Int ap, Int bp) {
  return ValidEdge::make(Corner::integral(a, b), Corner::integral(ap, bp), &table());
}

template <typename Range, typename T>
bool contains(const Range& r, const T& x) {
  return std::find(r.begin(), r.end(), x) != r.end();
}

std::vector<Corner> aprimes(const std::vector<ValidEdge>& edges) {
  std::vector<Corner> out;
  for (const auto& e : edges) out.push_back(e.Aprime());
  return out;
}

bool has_chain(const std::vector<Chain>& chains, const std::vector<Corner>& seq) {
  return std::any_of(chains.begin(), chains.end(),
                     [&](const Chain& c) { return c.corner_sequence() == seq; });
}

}  // namespace

TEST_CASE("is_final") {
  CHECK(is_final(Corner::make(7, 4, 3)));
  CHECK_FALSE(is_final(Corner::make(6, 4, 2)));
  CHECK(is_final(Corner::make(14, 4, 6)));
  CHECK(is_final(Corner::make(16, 3, 10)));
  CHECK_FALSE(is_final(Corner::make(5, 4, 0)));
}

TEST_CASE("F1 edge generates (6⊛4,2) and (7⊛4,3)") {
  const ValidEdge e = start_edge(4, 12, 1, 0);
  const auto gen = generated_corners(e);
  REQUIRE(gen.size() == 2);
  CHECK(gen[0] == GeneratedCorner{Corner::make(6, 4, 2), Provenance::kFromGamma, 2});
  CHECK(gen[1] == GeneratedCorner{Corner::make(7, 4, 3), Provenance::kFromGamma, 3});
  for (const auto& g : gen) CHECK(is_generated_by(e, g.corner));
  // on the edge line but above the diagonal: structurally generated, not emitted
  CHECK(is_generated_by(e, Corner::make(5, 4, 1)));
  CHECK_FALSE(is_generated_by(e, Corner::make(5, 4, 2)));
  CHECK_FALSE(is_generated_by(e, Corner::make(6, 2, 2)));
}

TEST_CASE("an edge ending below the diagonal generates exactly A'") {
  const ValidEdge e = start_edge(6, 18, 6, 15);
  const auto gen = generated_corners(e);
  REQUIRE(gen.size() == 1);
  CHECK(gen[0].corner == Corner::integral(6, 15));
  CHECK(gen[0].provenance == Provenance::kFromAprime);
}

TEST_CASE("F22: generated corner (14⊛4,6) and its children") {
  const ValidEdge e = start_edge(8, 24, 2, 0);
  const auto gen = generated_corners(e);
  const auto it = std::find_if(gen.begin(), gen.end(),
                               [](const auto& g) { return g.corner == Corner::make(14, 4, 6); });
  REQUIRE(it != gen.end());
  const auto kids = corner_children(e, it->corner, table());
  const auto ends = aprimes(kids);
  CHECK(contains(ends, Corner::make(5, 4, 2)));
  CHECK(contains(ends, Corner::make(11, 4, 4)));
  CHECK(contains(ends, Corner::make(5, 4, 0)));
  for (const auto& k : kids) {
    CHECK(dir_less(k.dir(), e.dir()));
    CHECK(k.A() == it->corner);
  }
  const auto c1 = std::find_if(kids.begin(), kids.end(),
                               [](const auto& k) { return k.Aprime() == Corner::make(5, 4, 2); });
  CHECK(c1->dir() == Direction(16, -9));
}

TEST_CASE("final routing") {
  const ValidEdge f1 = start_edge(4, 12, 1, 0);
  const auto ex = children_and_finals(f1, table());
  CHECK(ex.finals == std::vector<Corner>{Corner::make(7, 4, 3)});

  const ValidEdge f22 = start_edge(8, 24, 2, 0);
  const auto both = children_and_finals(f22, table(), FinalRouting::kFinalAlsoExpanded);
  const auto excl = children_and_finals(f22, table(), FinalRouting::kFinalExclusive);
  CHECK(contains(both.finals, Corner::make(14, 4, 6)));
  CHECK(both.finals == excl.finals);
  auto from_14 = [](const ValidEdge& k) { return k.A() == Corner::make(14, 4, 6); };
  CHECK(std::any_of(both.children.begin(), both.children.end(), from_14));
  CHECK(std::none_of(excl.children.begin(), excl.children.end(), from_14));
}

TEST_CASE("routing strings round-trip") {
  for (auto r : {FinalRouting::kFinalAlsoExpanded, FinalRouting::kFinalExclusive}) {
    CHECK(final_routing_from_string(to_string(r)) == r);
  }
  CHECK_THROWS_AS(final_routing_from_string("both"), DomainError);
}

TEST_CASE("complete chains of the F1 edge") {
  const ValidEdge e = start_edge(4, 12, 1, 0);
  CHECK(max_chain_length(e) == 2);
  const auto chains = complete_chains(e, table());
  CHECK(has_chain(chains, {Corner::integral(4, 12), Corner::make(7, 4, 3)}));
}

TEST_CASE("F22-F24 need final corners to be expanded") {
  const ValidEdge e = start_edge(8, 24, 2, 0);
  const auto both = complete_chains(e, table(), FinalRouting::kFinalAlsoExpanded);
  const auto excl = complete_chains(e, table(), FinalRouting::kFinalExclusive);
  const Corner A0 = Corner::integral(8, 24), A1 = Corner::make(14, 4, 6);
  for (const auto& fin : {Corner::make(5, 4, 2), Corner::make(11, 4, 4), Corner::make(19, 8, 3)}) {
    CHECK(has_chain(both, {A0, A1, fin}));
    CHECK_FALSE(has_chain(excl, {A0, A1, fin}));
  }
  CHECK(has_chain(excl, {A0, A1}));
}

TEST_CASE("Chain::make rejects malformed chains") {
  const ValidEdge e = start_edge(4, 12, 1, 0);
  CHECK_NOTHROW(Chain::make({e}, Corner::make(7, 4, 3)));
  CHECK_THROWS_AS(Chain::make({}, Corner::make(7, 4, 3)), InvariantViolation);
  CHECK_THROWS_AS(Chain::make({e}, Corner::make(6, 4, 2)), InvariantViolation);  // not final
  CHECK_THROWS_AS(Chain::make({e}, Corner::make(5, 4, 1)), InvariantViolation);  // not generated
  const ValidEdge e2 = start_edge(8, 24, 2, 0);
  CHECK_THROWS_AS(Chain::make({e, e2}, Corner::make(7, 4, 3)), InvariantViolation);
}

TEST_CASE("chain invariants over the v11 <= 50 domain") {
  const PllcTable t = possible_last_lower_corners(25);
  std::size_t count = 0;
  for (Int a = 2; a <= 25; ++a) {
    for (Int b = a + 1; b <= 50 - a; ++b) {
      for (const auto& e0 : starting_edges(a, b, t)) {
        for (const auto& chain : complete_chains(e0, t)) {
          ++count;
          const auto& E = chain.edges();
          REQUIRE(static_cast<Int>(E.size()) <= max_chain_length(e0));
          REQUIRE(E.front().level() == 1);
          for (std::size_t i = 0; i + 1 < E.size(); ++i) {
            REQUIRE(dir_less(E[i + 1].dir(), E[i].dir()));
            REQUIRE(E[i + 1].A().b < E[i].A().b);
            REQUIRE(E[i + 1].level() % E[i].level() == 0);
            REQUIRE(E[i + 1].A().v1m1_scaled() < 0);
          }
          REQUIRE(chain.final_corner().b < E.back().A().b);
          REQUIRE(is_final(chain.final_corner()));
          REQUIRE(chain.final_corner().l % E.back().level() == 0);
        }
      }
    }
  }
  CHECK(count > 100);
}
