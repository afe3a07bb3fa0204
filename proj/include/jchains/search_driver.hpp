#pragma once

#include <optional>
#include <vector>

#include "jchains/admissibility.hpp"
#include "jchains/mn_families.hpp"
#include "jchains/pllc.hpp"

namespace jchains {

struct SearchOptions {
  /// Worker threads for the (a, b) loop; 0 selects hardware concurrency.
  unsigned threads = 0;
  FinalRouting routing = FinalRouting::kFinalAlsoExpanded;
  /// Also keep complete chains that fail the admissibility filter.
  bool keep_rejected = false;
};

/// One complete chain of the search. Several chains may share the same corner
/// sequence A_0, ..., A_j, final (they differ only in some A'_h); the first
/// one discovered is the representative and the others point at it through
/// variant_of. Families are attached to admissible representatives only.
struct ChainRecord {
  Chain chain;
  bool admissible = false;
  std::vector<MnFamily> families;
  std::optional<std::size_t> variant_of;
  friend bool operator==(const ChainRecord&, const ChainRecord&) = default;
};

struct SearchResult {
  Int max_v11;
  FinalRouting routing;
  PllcTable pllc;
  /// Sorted by A_0 (a, then b), then discovery order.
  std::vector<ChainRecord> chains;

  [[nodiscard]] std::size_t admissible_count() const;
  /// Admissible representatives, as indices into `chains`.
  [[nodiscard]] std::vector<std::size_t> representatives() const;
};

/// All complete chains with v_11(A_0) <= max_v11, filtered by admissibility.
/// Requires max_v11 >= 4.
SearchResult admissible_complete_chains(Int max_v11, const SearchOptions& opts = {});

struct CandidateRow {
  std::size_t chain;  // index into SearchResult::chains
  Int m;
  Int n;
  Int k;
  Int i;
  Int j;
  Int max_degree;
  bool swapped = false;
  friend bool operator==(const CandidateRow&, const CandidateRow&) = default;
};

struct CandidateSet {
  Int max_degree;
  bool include_swapped;
  SearchResult search;
  std::vector<CandidateRow> rows;
};

/// Every (chain, (m, n)) with max(m, n) * v_11(A_0) <= max_degree, for the
/// admissible representatives of the search with bound floor(max_degree / 3).
/// Requires max_degree >= 9.
CandidateSet enumerate_counterexamples(Int max_degree, const SearchOptions& opts = {},
                                       bool include_swapped = false);

}  // namespace jchains
