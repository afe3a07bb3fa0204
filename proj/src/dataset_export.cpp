#include "jchains/dataset_export.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "jchains/version.hpp"

namespace jchains {

using nlohmann::json;

namespace {

constexpr Int kMaxSafeJsonInt = Int{1} << 53;

json jint(Int v) {
  if (v > kMaxSafeJsonInt || v < -kMaxSafeJsonInt) return std::to_string(v);
  return v;
}

Int get_int(const json& j) {
  if (j.is_string()) return std::stoll(j.get<std::string>());
  return j.get<Int>();
}

Int get_int(const json& obj, const char* key) { return get_int(obj.at(key)); }

json corner_json(const Corner& c) {
  return {{"a", jint(c.a)}, {"l", jint(c.l)}, {"b", jint(c.b)}, {"display", c.to_string()}};
}

Corner corner_from(const json& j) {
  return Corner::make(get_int(j, "a"), get_int(j, "l"), get_int(j, "b"));
}

json int_array(const std::vector<Int>& v) {
  json arr = json::array();
  for (Int x : v) arr.push_back(jint(x));
  return arr;
}

std::vector<Int> int_vector(const json& arr) {
  std::vector<Int> out;
  for (const auto& x : arr) out.push_back(get_int(x));
  return out;
}

/// Assigns dense ids to edges in order of first registration.
class EdgeRegistry {
 public:
  Int id(const ValidEdge& e) {
    auto [it, fresh] = ids_.try_emplace({e.A(), e.Aprime()}, static_cast<Int>(rows_.size()));
    if (fresh) {
      rows_.push_back({it->second, e.A(), e.Aprime(), e.dir().rho(), e.dir().sigma(), e.d(),
                       e.mu(), e.F(), e.simple()});
    }
    return it->second;
  }
  std::vector<EdgeRow> take() { return std::move(rows_); }

 private:
  std::map<std::pair<Corner, Corner>, Int> ids_;
  std::vector<EdgeRow> rows_;
};

std::vector<PllcRow> pllc_rows(const PllcTable& t) {
  std::vector<PllcRow> out;
  out.reserve(t.pairs().size());
  for (const auto& p : t.pairs()) out.push_back({p.a, p.b, p.dir.rho(), p.dir.sigma()});
  return out;
}

Graph build_graph(const SearchResult& result, EdgeRegistry& registry) {
  Graph g;
  const Int M = result.max_v11;
  std::map<Int, bool> expanded;
  for (Int a = 2; a <= M / 2; ++a) {
    for (Int b = a + 1; b <= M - a; ++b) {
      GraphRoot root{Corner::integral(a, b), {}};
      for (const auto& e0 : starting_edges(a, b, result.pllc)) {
        root.edge_ids.push_back(registry.id(e0));
        std::vector<ValidEdge> frontier{e0};
        const Int rounds = max_chain_length(e0);
        for (Int round = 0; round < rounds && !frontier.empty(); ++round) {
          std::vector<ValidEdge> next;
          for (const auto& e : frontier) {
            const Int id = registry.id(e);
            if (expanded[id]) continue;
            expanded[id] = true;
            GraphExpansion ex{id, {}};
            for (const auto& gc : generated_corners(e)) {
              GraphCorner node{gc.corner, to_string(gc.provenance), gc.gamma, is_final(gc.corner), {}};
              if (!(node.final && result.routing == FinalRouting::kFinalExclusive)) {
                for (auto& child : corner_children(e, gc.corner, result.pllc)) {
                  node.child_edge_ids.push_back(registry.id(child));
                  next.push_back(std::move(child));
                }
              }
              ex.generated.push_back(std::move(node));
            }
            g.expansions.push_back(std::move(ex));
          }
          frontier = std::move(next);
        }
      }
      g.roots.push_back(std::move(root));
    }
  }
  std::sort(g.expansions.begin(), g.expansions.end(),
            [](const auto& x, const auto& y) { return x.edge_id < y.edge_id; });
  return g;
}

Dataset dataset_core(const SearchResult& result, const ExportOptions& opts, EdgeRegistry& registry) {
  Dataset ds;
  ds.meta.schema_version = kSchemaVersion;
  ds.meta.tool_version = kToolVersion;
  ds.meta.command = "chains";
  ds.meta.bound_name = "max_v11";
  ds.meta.bound = result.max_v11;
  ds.meta.search_max_v11 = result.max_v11;
  ds.meta.final_routing = to_string(result.routing);
  ds.meta.chain_identity = "corner_sequence";
  ds.meta.diagnostics = opts.diagnostics;
  ds.pllc = pllc_rows(result.pllc);

  for (std::size_t idx = 0; idx < result.chains.size(); ++idx) {
    const ChainRecord& rec = result.chains[idx];
    const Chain& chain = rec.chain;
    ChainRow row{static_cast<Int>(idx), chain.start().a, chain.start().b,
                 static_cast<Int>(chain.length()), {}, {}, chain.final_corner(), rec.admissible,
                 std::nullopt, {}, {}};
    for (const auto& e : chain.edges()) {
      row.edge_ids.push_back(registry.id(e));
      row.corners.push_back(e.A());
    }
    if (rec.variant_of) row.variant_of = static_cast<Int>(*rec.variant_of);
    const std::string key = chain_key(chain);
    for (const auto& f : rec.families) {
      FamilyRow fr{f.k, f.i, f.m0, f.n0, f.step_m, f.step_n, std::nullopt};
      if (opts.annotations) fr.annotation = opts.annotations->find(key, f.k, f.i);
      row.families.push_back(std::move(fr));
    }
    if (opts.diagnostics) {
      for (const auto& c : admissibility_diagnostics(chain)) {
        row.diagnostics.push_back({static_cast<Int>(c.h), static_cast<Int>(c.i), c.D, c.q_h, c.q_i,
                                   c.omega_D, c.passed});
      }
    }
    ds.chains.push_back(std::move(row));
  }
  return ds;
}

json meta_json(const DatasetMeta& m) {
  return {{"schema_version", m.schema_version},
          {"tool_version", m.tool_version},
          {"command", m.command},
          {"bound_name", m.bound_name},
          {"bound", jint(m.bound)},
          {"search_max_v11", jint(m.search_max_v11)},
          {"final_routing", m.final_routing},
          {"chain_identity", m.chain_identity},
          {"include_swapped", m.include_swapped},
          {"diagnostics", m.diagnostics}};
}

DatasetMeta meta_from(const json& j) {
  DatasetMeta m;
  m.schema_version = j.at("schema_version").get<int>();
  m.tool_version = j.at("tool_version").get<std::string>();
  m.command = j.at("command").get<std::string>();
  m.bound_name = j.at("bound_name").get<std::string>();
  m.bound = get_int(j, "bound");
  m.search_max_v11 = get_int(j, "search_max_v11");
  m.final_routing = j.at("final_routing").get<std::string>();
  m.chain_identity = j.at("chain_identity").get<std::string>();
  m.include_swapped = j.at("include_swapped").get<bool>();
  m.diagnostics = j.at("diagnostics").get<bool>();
  return m;
}

json chain_json(const ChainRow& c) {
  json corners = json::array();
  for (const auto& x : c.corners) corners.push_back(corner_json(x));
  json families = json::array();
  for (const auto& f : c.families) {
    json fj = {{"k", jint(f.k)},   {"i", jint(f.i)},   {"m0", jint(f.m0)},
               {"n0", jint(f.n0)}, {"dm", jint(f.dm)}, {"dn", jint(f.dn)}};
    if (f.annotation) fj["annotation"] = *f.annotation;
    families.push_back(std::move(fj));
  }
  json diags = json::array();
  for (const auto& d : c.diagnostics) {
    diags.push_back({{"h", jint(d.h)},     {"i", jint(d.i)},         {"D", jint(d.D)},
                     {"q_h", jint(d.q_h)}, {"q_i", jint(d.q_i)},     {"omega_D", jint(d.omega_D)},
                     {"passed", d.passed}});
  }
  return {{"id", jint(c.id)},
          {"a0", jint(c.a0)},
          {"b0", jint(c.b0)},
          {"length", jint(c.length)},
          {"edge_ids", int_array(c.edge_ids)},
          {"corners", std::move(corners)},
          {"final", corner_json(c.final)},
          {"admissible", c.admissible},
          {"variant_of", c.variant_of ? jint(*c.variant_of) : json(nullptr)},
          {"families", std::move(families)},
          {"diagnostics", std::move(diags)}};
}

ChainRow chain_from(const json& j) {
  ChainRow c{get_int(j, "id"), get_int(j, "a0"), get_int(j, "b0"), get_int(j, "length"),
             int_vector(j.at("edge_ids")), {}, corner_from(j.at("final")),
             j.at("admissible").get<bool>(), std::nullopt, {}, {}};
  for (const auto& x : j.at("corners")) c.corners.push_back(corner_from(x));
  if (!j.at("variant_of").is_null()) c.variant_of = get_int(j, "variant_of");
  for (const auto& f : j.at("families")) {
    FamilyRow fr{get_int(f, "k"),  get_int(f, "i"),  get_int(f, "m0"), get_int(f, "n0"),
                 get_int(f, "dm"), get_int(f, "dn"), std::nullopt};
    if (f.contains("annotation")) fr.annotation = f.at("annotation").get<std::string>();
    c.families.push_back(std::move(fr));
  }
  for (const auto& d : j.at("diagnostics")) {
    c.diagnostics.push_back({get_int(d, "h"), get_int(d, "i"), get_int(d, "D"), get_int(d, "q_h"),
                             get_int(d, "q_i"), get_int(d, "omega_D"), d.at("passed").get<bool>()});
  }
  return c;
}

json graph_json(const Graph& g) {
  json roots = json::array();
  for (const auto& r : g.roots) {
    roots.push_back({{"corner", corner_json(r.corner)}, {"edge_ids", int_array(r.edge_ids)}});
  }
  json expansions = json::array();
  for (const auto& ex : g.expansions) {
    json generated = json::array();
    for (const auto& gc : ex.generated) {
      generated.push_back({{"corner", corner_json(gc.corner)},
                           {"provenance", gc.provenance},
                           {"gamma", jint(gc.gamma)},
                           {"final", gc.final},
                           {"child_edge_ids", int_array(gc.child_edge_ids)}});
    }
    expansions.push_back({{"edge_id", jint(ex.edge_id)}, {"generated", std::move(generated)}});
  }
  return {{"roots", std::move(roots)}, {"expansions", std::move(expansions)}};
}

Graph graph_from(const json& j) {
  Graph g;
  for (const auto& r : j.at("roots")) {
    g.roots.push_back({corner_from(r.at("corner")), int_vector(r.at("edge_ids"))});
  }
  for (const auto& ex : j.at("expansions")) {
    GraphExpansion out{get_int(ex, "edge_id"), {}};
    for (const auto& gc : ex.at("generated")) {
      out.generated.push_back({corner_from(gc.at("corner")), gc.at("provenance").get<std::string>(),
                               get_int(gc, "gamma"), gc.at("final").get<bool>(),
                               int_vector(gc.at("child_edge_ids"))});
    }
    g.expansions.push_back(std::move(out));
  }
  return g;
}

std::string bool_text(bool b) { return b ? "true" : "false"; }

std::string join_ints(const std::vector<Int>& v, char sep) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += sep;
    out += std::to_string(v[i]);
  }
  return out;
}

class CsvTable {
 public:
  explicit CsvTable(const std::vector<std::string>& header) { row(header); }

  void row(const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (i) text_ += ',';
      text_ += csv_field(cells[i]);
    }
    text_ += "\r\n";
  }
  [[nodiscard]] const std::string& text() const { return text_; }

 private:
  std::string text_;
};

template <typename... Ts>
std::vector<std::string> cells(const Ts&... xs) {
  std::vector<std::string> out;
  auto put = [&](const auto& x) {
    using T = std::decay_t<decltype(x)>;
    if constexpr (std::is_same_v<T, std::string>) {
      out.push_back(x);
    } else if constexpr (std::is_same_v<T, bool>) {
      out.push_back(bool_text(x));
    } else {
      out.push_back(std::to_string(x));
    }
  };
  (put(xs), ...);
  return out;
}

}  // namespace

std::string chain_key(const Chain& chain) {
  std::string out;
  for (const auto& c : chain.corner_sequence()) {
    if (!out.empty()) out += ' ';
    out += c.to_string();
  }
  return out;
}

Annotations Annotations::parse(const std::string& json_text) {
  Annotations out;
  try {
    const json j = json::parse(json_text);
    for (const auto& a : j.at("annotations")) {
      std::string note = a.at("note").get<std::string>();
      if (a.contains("label")) note = a.at("label").get<std::string>() + ": " + note;
      out.add(a.at("chain").get<std::string>(), get_int(a, "k"), get_int(a, "i"), std::move(note));
    }
  } catch (const json::exception& e) {
    throw ExportError(std::string("malformed annotations: ") + e.what());
  }
  return out;
}

Annotations Annotations::load(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ExportError("cannot read annotations file " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse(buf.str());
}

void Annotations::add(const std::string& chain_key, Int k, Int i, std::string note) {
  notes_[{chain_key, k, i}] = std::move(note);
}

std::optional<std::string> Annotations::find(const std::string& chain_key, Int k, Int i) const {
  const auto it = notes_.find({chain_key, k, i});
  if (it == notes_.end()) return std::nullopt;
  return it->second;
}

Dataset make_dataset(const PllcTable& pllc) {
  Dataset ds;
  ds.meta.schema_version = kSchemaVersion;
  ds.meta.tool_version = kToolVersion;
  ds.meta.command = "pllc";
  ds.meta.bound_name = "x_max";
  ds.meta.bound = pllc.x_max();
  ds.meta.final_routing = to_string(FinalRouting::kFinalAlsoExpanded);
  ds.meta.chain_identity = "corner_sequence";
  ds.pllc = pllc_rows(pllc);
  return ds;
}

Dataset make_dataset(const SearchResult& result, const ExportOptions& opts) {
  EdgeRegistry registry;
  Dataset ds = dataset_core(result, opts, registry);
  if (opts.graph) ds.graph = build_graph(result, registry);
  ds.edges = registry.take();
  return ds;
}

Dataset make_dataset(const CandidateSet& set, const ExportOptions& opts) {
  EdgeRegistry registry;
  Dataset ds = dataset_core(set.search, opts, registry);
  ds.meta.command = "counterexamples";
  ds.meta.bound_name = "max_degree";
  ds.meta.bound = set.max_degree;
  ds.meta.include_swapped = set.include_swapped;
  for (const auto& r : set.rows) {
    ds.candidates.push_back({static_cast<Int>(r.chain), r.m, r.n, r.k, r.i, r.j, r.max_degree,
                             r.swapped});
  }
  if (opts.graph) ds.graph = build_graph(set.search, registry);
  ds.edges = registry.take();
  return ds;
}

std::string to_json(const Dataset& ds) {
  json pllc = json::array();
  for (const auto& p : ds.pllc) {
    pllc.push_back({{"a", jint(p.a)}, {"b", jint(p.b)}, {"rho", jint(p.rho)}, {"sigma", jint(p.sigma)}});
  }
  json edges = json::array();
  for (const auto& e : ds.edges) {
    edges.push_back({{"id", jint(e.id)},
                     {"A", corner_json(e.A)},
                     {"A_prime", corner_json(e.Aprime)},
                     {"rho", jint(e.rho)},
                     {"sigma", jint(e.sigma)},
                     {"d", jint(e.d)},
                     {"mu", jint(e.mu)},
                     {"F", corner_json(e.F)},
                     {"simple", e.simple}});
  }
  json chains = json::array();
  for (const auto& c : ds.chains) chains.push_back(chain_json(c));
  json candidates = json::array();
  for (const auto& r : ds.candidates) {
    candidates.push_back({{"chain_id", jint(r.chain_id)},
                          {"m", jint(r.m)},
                          {"n", jint(r.n)},
                          {"k", jint(r.k)},
                          {"i", jint(r.i)},
                          {"j", jint(r.j)},
                          {"max_degree", jint(r.max_degree)},
                          {"swapped", r.swapped}});
  }
  json root = {{"meta", meta_json(ds.meta)},
               {"pllc", std::move(pllc)},
               {"edges", std::move(edges)},
               {"chains", std::move(chains)},
               {"candidates", std::move(candidates)}};
  if (ds.graph) root["graph"] = graph_json(*ds.graph);
  return root.dump(1, ' ', false, json::error_handler_t::strict) + "\n";
}

Dataset from_json(const std::string& text) {
  try {
    const json root = json::parse(text);
    Dataset ds;
    ds.meta = meta_from(root.at("meta"));
    if (ds.meta.schema_version != kSchemaVersion) {
      throw ExportError("unsupported schema_version " + std::to_string(ds.meta.schema_version));
    }
    for (const auto& p : root.at("pllc")) {
      ds.pllc.push_back({get_int(p, "a"), get_int(p, "b"), get_int(p, "rho"), get_int(p, "sigma")});
    }
    for (const auto& e : root.at("edges")) {
      ds.edges.push_back({get_int(e, "id"), corner_from(e.at("A")), corner_from(e.at("A_prime")),
                          get_int(e, "rho"), get_int(e, "sigma"), get_int(e, "d"), get_int(e, "mu"),
                          corner_from(e.at("F")), e.at("simple").get<bool>()});
    }
    for (const auto& c : root.at("chains")) ds.chains.push_back(chain_from(c));
    for (const auto& r : root.at("candidates")) {
      ds.candidates.push_back({get_int(r, "chain_id"), get_int(r, "m"), get_int(r, "n"),
                               get_int(r, "k"), get_int(r, "i"), get_int(r, "j"),
                               get_int(r, "max_degree"), r.at("swapped").get<bool>()});
    }
    if (root.contains("graph")) ds.graph = graph_from(root.at("graph"));
    return ds;
  } catch (const json::exception& e) {
    throw ExportError(std::string("malformed dataset: ") + e.what());
  }
}

void export_json(const Dataset& ds, const std::filesystem::path& path) {
  const std::string text = to_json(ds);
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw ExportError("cannot open " + path.string() + " for writing");
  out << text;
  out.flush();
  if (!out) throw ExportError("write failed for " + path.string());
}

Dataset import_json(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ExportError("cannot read " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return from_json(buf.str());
}

std::string csv_field(const std::string& raw) {
  if (raw.find_first_of(",\"\r\n") == std::string::npos) return raw;
  std::string out = "\"";
  for (char c : raw) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

std::map<std::string, std::string> to_csv_tables(const Dataset& ds) {
  std::map<std::string, std::string> files;

  CsvTable pllc({"a", "b", "rho", "sigma"});
  for (const auto& p : ds.pllc) pllc.row(cells(p.a, p.b, p.rho, p.sigma));
  files["pllc.csv"] = pllc.text();
  if (ds.meta.command == "pllc") return files;

  CsvTable edges({"id", "a", "l", "b", "a_prime", "b_prime", "rho", "sigma", "d", "mu", "f1", "f2",
                  "simple"});
  for (const auto& e : ds.edges) {
    edges.row(cells(e.id, e.A.a, e.A.l, e.A.b, e.Aprime.a, e.Aprime.b, e.rho, e.sigma, e.d, e.mu,
                    e.F.a, e.F.b, e.simple));
  }
  files["edges.csv"] = edges.text();

  std::map<Int, const ChainRow*> by_id;
  for (const auto& c : ds.chains) by_id[c.id] = &c;

  CsvTable chains({"id", "a0", "b0", "length", "edge_ids", "corners", "final_a", "final_l",
                   "final_b", "admissible", "variant_of"});
  CsvTable families({"a0", "b0", "final_a", "final_l", "final_b", "k", "i", "m0", "n0", "dm", "dn",
                     "chain_id", "annotation"});
  CsvTable diagnostics({"chain_id", "h", "i", "D", "q_h", "q_i", "omega_D", "passed"});
  for (const auto& c : ds.chains) {
    std::string corners;
    for (const auto& x : c.corners) corners += (corners.empty() ? "" : " ") + x.to_string();
    chains.row(cells(c.id, c.a0, c.b0, c.length, join_ints(c.edge_ids, ';'), corners, c.final.a,
                     c.final.l, c.final.b, c.admissible,
                     c.variant_of ? std::to_string(*c.variant_of) : std::string()));
    for (const auto& f : c.families) {
      families.row(cells(c.a0, c.b0, c.final.a, c.final.l, c.final.b, f.k, f.i, f.m0, f.n0, f.dm,
                         f.dn, c.id, f.annotation.value_or("")));
    }
    for (const auto& d : c.diagnostics) {
      diagnostics.row(cells(c.id, d.h, d.i, d.D, d.q_h, d.q_i, d.omega_D, d.passed));
    }
  }
  files["chains.csv"] = chains.text();
  files["families.csv"] = families.text();
  if (ds.meta.diagnostics) files["diagnostics.csv"] = diagnostics.text();

  if (ds.meta.command == "counterexamples") {
    CsvTable candidates({"chain_id", "a0", "b0", "length", "final_a", "final_l", "final_b", "k", "i",
                         "j", "m", "n", "max_degree", "swapped"});
    for (const auto& r : ds.candidates) {
      const auto it = by_id.find(r.chain_id);
      if (it == by_id.end()) throw ExportError("candidate references unknown chain");
      const ChainRow& c = *it->second;
      candidates.row(cells(r.chain_id, c.a0, c.b0, c.length, c.final.a, c.final.l, c.final.b, r.k,
                           r.i, r.j, r.m, r.n, r.max_degree, r.swapped));
    }
    files["candidates.csv"] = candidates.text();
  }
  return files;
}

void export_csv(const Dataset& ds, const std::filesystem::path& dir) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw ExportError("cannot create " + dir.string() + ": " + ec.message());
  for (const auto& [name, text] : to_csv_tables(ds)) {
    const auto path = dir / name;
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw ExportError("cannot open " + path.string() + " for writing");
    out << text;
    if (!out) throw ExportError("write failed for " + path.string());
  }
}

}  // namespace jchains
