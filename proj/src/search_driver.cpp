#include "jchains/search_driver.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <map>
#include <mutex>
#include <thread>
#include <tuple>
#include <utility>

namespace jchains {

namespace {

struct Task {
  Int a;
  Int b;
};

std::vector<ChainRecord> run_task(const Task& t, const PllcTable& pllc, const SearchOptions& opts) {
  std::vector<ChainRecord> out;
  std::map<std::vector<Corner>, std::size_t> first_seen;
  for (const auto& e0 : starting_edges(t.a, t.b, pllc)) {
    for (auto& chain : complete_chains(e0, pllc, opts.routing)) {
      const bool ok = is_admissible(chain);
      if (!ok && !opts.keep_rejected) continue;
      ChainRecord rec{std::move(chain), ok, {}, std::nullopt};
      if (ok) {
        auto [it, fresh] = first_seen.try_emplace(rec.chain.corner_sequence(), out.size());
        if (fresh) {
          rec.families = mn_families(rec.chain.final_corner());
        } else {
          rec.variant_of = it->second;
        }
      }
      out.push_back(std::move(rec));
    }
  }
  return out;
}

unsigned worker_count(unsigned requested, std::size_t tasks) {
  unsigned n = requested ? requested : std::max(1u, std::thread::hardware_concurrency());
  return static_cast<unsigned>(std::min<std::size_t>(n, std::max<std::size_t>(tasks, 1)));
}

}  // namespace

std::size_t SearchResult::admissible_count() const {
  return static_cast<std::size_t>(
      std::count_if(chains.begin(), chains.end(), [](const auto& r) { return r.admissible; }));
}

std::vector<std::size_t> SearchResult::representatives() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < chains.size(); ++i) {
    if (chains[i].admissible && !chains[i].variant_of) out.push_back(i);
  }
  return out;
}

SearchResult admissible_complete_chains(Int max_v11, const SearchOptions& opts) {
  if (max_v11 < 4) throw DomainError("admissible_complete_chains: bound must be at least 4");
  PllcTable pllc = possible_last_lower_corners(max_v11 / 2);

  std::vector<Task> tasks;
  for (Int a = 2; a <= max_v11 / 2; ++a) {
    for (Int b = a + 1; b <= max_v11 - a; ++b) tasks.push_back({a, b});
  }

  std::vector<std::vector<ChainRecord>> results(tasks.size());
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    for (std::size_t idx = next++; idx < tasks.size(); idx = next++) {
      try {
        results[idx] = run_task(tasks[idx], pllc, opts);
      } catch (...) {
        const std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next = tasks.size();
      }
    }
  };
  {
    std::vector<std::jthread> pool;
    const unsigned n = worker_count(opts.threads, tasks.size());
    for (unsigned i = 1; i < n; ++i) pool.emplace_back(worker);
    worker();
  }
  if (failure) std::rethrow_exception(failure);

  // Tasks are already in (a, b) order, so concatenation is the sorted merge.
  SearchResult out{max_v11, opts.routing, std::move(pllc), {}};
  for (auto& part : results) {
    const std::size_t offset = out.chains.size();
    for (auto& rec : part) {
      if (rec.variant_of) *rec.variant_of += offset;
      out.chains.push_back(std::move(rec));
    }
  }
  return out;
}

CandidateSet enumerate_counterexamples(Int max_degree, const SearchOptions& opts,
                                       bool include_swapped) {
  if (max_degree < 9) throw DomainError("enumerate_counterexamples: bound must be at least 9");
  // max(m, n) >= 3 for coprime m, n >= 2, so v_11(A_0) <= max_degree / 3.
  CandidateSet out{max_degree, include_swapped,
                   admissible_complete_chains(std::max<Int>(max_degree / 3, 4), opts), {}};

  for (const std::size_t idx : out.search.representatives()) {
    const ChainRecord& rec = out.search.chains[idx];
    const Int v11 = rec.chain.start().v11_scaled();
    for (const auto& f : rec.families) {
      for (Int j = 0;; ++j) {
        const Int m = add_checked(f.m0, mul_checked(j, f.step_m));
        const Int n = add_checked(f.n0, mul_checked(j, f.step_n));
        const Int degree = mul_checked(std::max(m, n), v11);
        if (degree > max_degree) break;
        out.rows.push_back({idx, m, n, f.k, f.i, j, degree, false});
        if (include_swapped) out.rows.push_back({idx, n, m, f.k, f.i, j, degree, true});
      }
    }
  }

  const auto& chains = out.search.chains;
  auto key = [&](const CandidateRow& r) {
    const Corner& A0 = chains[r.chain].chain.start();
    return std::make_tuple(A0.v11_scaled(), A0.a, A0.b, r.chain, r.k, r.i, r.j, r.swapped);
  };
  std::stable_sort(out.rows.begin(), out.rows.end(),
                   [&](const auto& x, const auto& y) { return key(x) < key(y); });
  return out;
}

}  // namespace jchains
