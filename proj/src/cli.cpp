#include "jchains/cli.hpp"

#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "jchains/dataset_export.hpp"
#include "jchains/version.hpp"

namespace jchains {

namespace {

struct Config {
  Int x_max = 0;
  Int max_v11 = 0;
  Int max_degree = 0;
  std::string format = "json";
  std::optional<std::filesystem::path> out;
  unsigned threads = 0;
  bool include_swapped = false;
  bool diagnostics = false;
  bool graph = false;
  std::string routing = "final_also_expanded";
  std::optional<std::filesystem::path> annotations;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::filesystem::path default_out(const std::string& command, const std::string& format) {
  if (format == "json") return command + ".json";
  return command == "pllc" ? std::filesystem::path("pllc.csv") : std::filesystem::path(command + "_csv");
}

void write_dataset(const Dataset& ds, const Config& cfg, std::ostream& out) {
  const auto path = cfg.out.value_or(default_out(ds.meta.command, cfg.format));
  if (cfg.format == "json") {
    export_json(ds, path);
  } else if (ds.meta.command == "pllc") {
    const auto tables = to_csv_tables(ds);
    std::ofstream f(path, std::ios::binary | std::ios::trunc);
    if (!f) throw ExportError("cannot open " + path.string() + " for writing");
    f << tables.at("pllc.csv");
    if (!f) throw ExportError("write failed for " + path.string());
  } else {
    export_csv(ds, path);
  }
  out << "wrote " << path.string() << "\n";
}

void print_chain_summary(const SearchResult& r, std::ostream& out) {
  std::map<std::size_t, std::size_t> per_length;
  std::size_t families = 0;
  for (const std::size_t idx : r.representatives()) {
    ++per_length[r.chains[idx].chain.length()];
    families += r.chains[idx].families.size();
  }
  out << "admissible complete chains with v11(A0) <= " << r.max_v11 << ": "
      << r.representatives().size() << " (" << r.admissible_count() << " before merging"
      << " chains with equal corner sequences)\n";
  for (const auto& [len, n] : per_length) out << "  length " << len << ": " << n << "\n";
  out << "(m,n)-families: " << families << "\n";
}

SearchOptions search_options(const Config& cfg) {
  SearchOptions opts;
  opts.threads = cfg.threads;
  opts.routing = final_routing_from_string(cfg.routing);
  opts.keep_rejected = cfg.diagnostics;
  return opts;
}

int cmd_pllc(const Config& cfg, std::ostream& out) {
  if (cfg.x_max < 1) throw UsageError("--xmax must be at least 1");
  const PllcTable table = possible_last_lower_corners(cfg.x_max);
  out << "possible last lower corners with a <= " << cfg.x_max << ": " << table.pairs().size() << "\n";
  write_dataset(make_dataset(table), cfg, out);
  return kExitOk;
}

int cmd_chains(const Config& cfg, std::ostream& out) {
  if (cfg.max_v11 < 4) throw UsageError("--max-v11 must be at least 4");
  const Annotations notes = cfg.annotations ? Annotations::load(*cfg.annotations) : Annotations();
  const SearchResult r = admissible_complete_chains(cfg.max_v11, search_options(cfg));
  print_chain_summary(r, out);
  write_dataset(make_dataset(r, {cfg.diagnostics, cfg.graph, &notes}), cfg, out);
  return kExitOk;
}

int cmd_counterexamples(const Config& cfg, std::ostream& out) {
  if (cfg.max_degree < 9) throw UsageError("--max-degree must be at least 9");
  const Annotations notes = cfg.annotations ? Annotations::load(*cfg.annotations) : Annotations();
  const CandidateSet set =
      enumerate_counterexamples(cfg.max_degree, search_options(cfg), cfg.include_swapped);
  print_chain_summary(set.search, out);
  std::map<std::size_t, std::size_t> per_length;
  for (const auto& row : set.rows) ++per_length[set.search.chains[row.chain].chain.length()];
  out << "candidates with max(deg P, deg Q) <= " << cfg.max_degree << ": " << set.rows.size() << "\n";
  for (const auto& [len, n] : per_length) out << "  chain length " << len << ": " << n << "\n";
  write_dataset(make_dataset(set, {cfg.diagnostics, cfg.graph, &notes}), cfg, out);
  return kExitOk;
}

void add_output_options(CLI::App* sub, Config& cfg) {
  sub->add_option("--format", cfg.format, "Output format")
      ->check(CLI::IsMember({"json", "csv"}))
      ->capture_default_str();
  sub->add_option("--out", cfg.out, "Output file (json, pllc csv) or directory (csv tables)");
}

void add_search_options(CLI::App* sub, Config& cfg) {
  add_output_options(sub, cfg);
  sub->add_option("--threads", cfg.threads, "Worker threads (default: hardware concurrency)")
      ->check(CLI::PositiveNumber);
  sub->add_flag("--diagnostics", cfg.diagnostics,
                "Keep rejected chains and export per-(h,i) admissibility checks");
  sub->add_flag("--graph", cfg.graph, "Export the corner/edge expansion graph for the explorer");
  sub->add_option("--annotations", cfg.annotations, "JSON file of (chain, family) notes")
      ->check(CLI::ExistingFile);
  sub->add_option("--routing", cfg.routing, "Treatment of final corners that admit children")
      ->check(CLI::IsMember({"final_also_expanded", "final_exclusive"}))
      ->capture_default_str();
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Config cfg;
  CLI::App app{"Enumerates admissible complete chains and (m,n)-families."};
  app.set_version_flag("--version", std::string(kToolVersion));
  app.require_subcommand(1, 1);

  auto* pllc = app.add_subcommand("pllc", "Table of possible last lower corners");
  pllc->add_option("--xmax", cfg.x_max, "Largest abscissa a")->required();
  add_output_options(pllc, cfg);

  auto* chains = app.add_subcommand("chains", "Admissible complete chains with v11(A0) <= M");
  chains->add_option("--max-v11", cfg.max_v11, "Bound M on v11(A0)")->required();
  add_search_options(chains, cfg);

  auto* cex = app.add_subcommand("counterexamples", "Candidates with max degree <= D");
  cex->add_option("--max-degree", cfg.max_degree, "Bound D on max(deg P, deg Q)")->required();
  cex->add_flag("--include-swapped", cfg.include_swapped, "Also emit the (n,m) orientation");
  add_search_options(cex, cfg);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*pllc) return cmd_pllc(cfg, out);
    if (*chains) return cmd_chains(cfg, out);
    return cmd_counterexamples(cfg, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
}

}  // namespace jchains
