#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

#include "jchains/search_driver.hpp"

namespace jchains {

class ExportError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct DatasetMeta {
  int schema_version = 0;
  std::string tool_version;
  std::string command;      // "pllc", "chains" or "counterexamples"
  std::string bound_name;   // "x_max", "max_v11" or "max_degree"
  Int bound = 0;
  Int search_max_v11 = 0;   // 0 for a bare PLLC export
  std::string final_routing;
  std::string chain_identity;
  bool include_swapped = false;
  bool diagnostics = false;
  friend bool operator==(const DatasetMeta&, const DatasetMeta&) = default;
};

struct PllcRow {
  Int a;
  Int b;
  Int rho;
  Int sigma;
  friend bool operator==(const PllcRow&, const PllcRow&) = default;
};

struct EdgeRow {
  Int id;
  Corner A;
  Corner Aprime;
  Int rho;
  Int sigma;
  Int d;
  Int mu;
  Corner F;
  bool simple;
  friend bool operator==(const EdgeRow&, const EdgeRow&) = default;
};

struct FamilyRow {
  Int k;
  Int i;
  Int m0;
  Int n0;
  Int dm;
  Int dn;
  std::optional<std::string> annotation;
  friend bool operator==(const FamilyRow&, const FamilyRow&) = default;
};

struct DiagnosticRow {
  Int h;
  Int i;
  Int D;
  Int q_h;
  Int q_i;
  Int omega_D;
  bool passed;
  friend bool operator==(const DiagnosticRow&, const DiagnosticRow&) = default;
};

struct ChainRow {
  Int id;
  Int a0;
  Int b0;
  Int length;
  std::vector<Int> edge_ids;
  std::vector<Corner> corners;  // A_0, ..., A_j
  Corner final;
  bool admissible;
  std::optional<Int> variant_of;
  std::vector<FamilyRow> families;
  std::vector<DiagnosticRow> diagnostics;
  friend bool operator==(const ChainRow&, const ChainRow&) = default;
};

struct CandidateOut {
  Int chain_id;
  Int m;
  Int n;
  Int k;
  Int i;
  Int j;
  Int max_degree;
  bool swapped;
  friend bool operator==(const CandidateOut&, const CandidateOut&) = default;
};

/// Corner produced by an expanded edge, as the explorer displays it.
struct GraphCorner {
  Corner corner;
  std::string provenance;
  Int gamma;
  bool final;
  std::vector<Int> child_edge_ids;
  friend bool operator==(const GraphCorner&, const GraphCorner&) = default;
};

struct GraphExpansion {
  Int edge_id;
  std::vector<GraphCorner> generated;
  friend bool operator==(const GraphExpansion&, const GraphExpansion&) = default;
};

struct GraphRoot {
  Corner corner;
  std::vector<Int> edge_ids;
  friend bool operator==(const GraphRoot&, const GraphRoot&) = default;
};

/// Click-by-click expansion data: every starting corner of the search domain
/// with its starting edges, and for every reachable edge its generated corners
/// and their children, within each chain's round bound.
struct Graph {
  std::vector<GraphRoot> roots;
  std::vector<GraphExpansion> expansions;
  friend bool operator==(const Graph&, const Graph&) = default;
};

struct Dataset {
  DatasetMeta meta;
  std::vector<PllcRow> pllc;
  std::vector<EdgeRow> edges;
  std::vector<ChainRow> chains;
  std::vector<CandidateOut> candidates;
  std::optional<Graph> graph;
  friend bool operator==(const Dataset&, const Dataset&) = default;
};

/// Informational notes keyed by (corner sequence, k, i); the engine never
/// drops a family because of one.
class Annotations {
 public:
  Annotations() = default;
  static Annotations load(const std::filesystem::path& path);
  static Annotations parse(const std::string& json_text);

  void add(const std::string& chain_key, Int k, Int i, std::string note);
  [[nodiscard]] std::optional<std::string> find(const std::string& chain_key, Int k, Int i) const;
  [[nodiscard]] std::size_t size() const { return notes_.size(); }

 private:
  std::map<std::tuple<std::string, Int, Int>, std::string> notes_;
};

/// Corner displays joined by single spaces: "8:24 14⊛4:6 5⊛4:2".
std::string chain_key(const Chain& chain);

struct ExportOptions {
  bool diagnostics = false;
  bool graph = false;
  const Annotations* annotations = nullptr;
};

Dataset make_dataset(const PllcTable& pllc);
Dataset make_dataset(const SearchResult& result, const ExportOptions& opts = {});
Dataset make_dataset(const CandidateSet& candidates, const ExportOptions& opts = {});

/// Deterministic UTF-8 JSON with sorted keys and a trailing newline.
std::string to_json(const Dataset& ds);
Dataset from_json(const std::string& text);

void export_json(const Dataset& ds, const std::filesystem::path& path);
Dataset import_json(const std::filesystem::path& path);

/// File name -> RFC 4180 content for every table the dataset carries.
std::map<std::string, std::string> to_csv_tables(const Dataset& ds);
/// Writes to_csv_tables(ds) into `dir`, creating it if needed.
void export_csv(const Dataset& ds, const std::filesystem::path& dir);

std::string csv_field(const std::string& raw);

}  // namespace jchains
