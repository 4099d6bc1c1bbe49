#pragma once

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstddef>
#include <cstdint>
#include <mutex>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include <json.hpp>

#include "kcon/bounds.hpp"
#include "kcon/connectivity.hpp"
#include "kcon/constructions.hpp"
#include "kcon/graph_io.hpp"

namespace kcon::search {

inline constexpr std::uint64_t kDefaultBudget = 100'000'000;
inline constexpr std::uint64_t kDefaultGreedyBudget = 10'000;

class BudgetExceeded : public std::runtime_error {
public:
  BudgetExceeded(const BigInt& estimate, std::uint64_t budget)
      : std::runtime_error("work estimate " + estimate.str() + " exceeds budget " + std::to_string(budget)),
        estimate_(estimate) {}
  const BigInt& estimate() const { return estimate_; }

private:
  BigInt estimate_;
};

class DomainViolation : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

enum class Mode { VerifyForcing, MaximizeExhaustive, MaximizeGreedy };

inline std::string_view to_string(Mode m) {
  switch (m) {
    case Mode::VerifyForcing: return "verify-forcing";
    case Mode::MaximizeExhaustive: return "exhaustive";
    case Mode::MaximizeGreedy: return "greedy";
  }
  return "?";
}

struct SearchOptions {
  std::optional<std::uint64_t> budget;  // decision-procedure calls
  unsigned jobs = 1;
  bool override_domain = false;
  std::uint64_t seed = 1;
};

struct SearchReport {
  std::size_t n = 0;
  std::size_t k = 0;
  Mode mode = Mode::VerifyForcing;
  std::optional<BoundKind> kind;
  std::optional<Rational> threshold;
  std::size_t edge_count_tested = 0;
  std::uint64_t graphs_examined = 0;
  BigInt estimated_work = 0;
  std::vector<Graph> counterexamples;  // sorted by graph6
  std::optional<Graph> best_graph;
  std::size_t best_edge_count = 0;
  bool verified = false;
  bool exhaustive = true;
  bool exploratory = false;
  double wall_time_ms = 0;
};

// Labeled edge slots (u,v), u < v, in lexicographic order.
inline std::vector<Edge> edge_slots(std::size_t n) {
  std::vector<Edge> slots;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) slots.emplace_back(u, v);
  return slots;
}

inline std::uint64_t binomial_u64(std::uint64_t n, std::uint64_t r) {
  if (r > n) return 0;
  r = std::min(r, n - r);
  std::uint64_t out = 1;
  for (std::uint64_t i = 1; i <= r; ++i) out = out * (n - r + i) / i;
  return out;
}

// Exact number of labeled graphs (forcing mode) with the forcing edge count.
inline BigInt estimate_work(BoundKind kind, std::size_t n, std::size_t k) {
  const auto slots = static_cast<long long>(n * (n - 1) / 2);
  const auto m = min_forcing_edge_count(kind, static_cast<long long>(n), static_cast<long long>(k));
  return binomial(slots, m).num();
}

// DFS node bound for maximisation: every labeled graph on n vertices.
inline BigInt estimate_work(Mode mode, std::size_t n) {
  if (mode == Mode::VerifyForcing) throw std::invalid_argument("forcing work needs a bound kind");
  BigInt out = 1;
  for (std::size_t i = 0; i < n * (n == 0 ? 0 : n - 1) / 2; ++i) out *= 2;
  return out;
}

namespace detail {

// Lexicographic r-subset of {0..n-1} with the given rank.
inline std::vector<std::size_t> unrank_combination(std::size_t n, std::size_t r, std::uint64_t rank) {
  std::vector<std::size_t> out;
  std::size_t next = 0;
  for (std::size_t i = 0; i < r; ++i) {
    while (true) {
      const auto with_next = binomial_u64(n - next - 1, r - i - 1);
      if (rank < with_next) break;
      rank -= with_next;
      ++next;
    }
    out.push_back(next++);
  }
  return out;
}

inline bool next_combination(std::vector<std::size_t>& c, std::size_t n) {
  const std::size_t r = c.size();
  std::size_t i = r;
  while (i > 0 && c[i - 1] == n - r + i - 1) --i;
  if (i == 0) return false;
  ++c[i - 1];
  for (std::size_t j = i; j < r; ++j) c[j] = c[j - 1] + 1;
  return true;
}

inline Graph graph_from_slots(std::size_t n, const std::vector<Edge>& slots, const std::vector<std::size_t>& chosen) {
  std::vector<Edge> edges;
  edges.reserve(chosen.size());
  for (auto i : chosen) edges.push_back(slots[i]);
  return Graph::from_edge_list(n, edges);
}

inline double elapsed_ms(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
}

}  // namespace detail

// Enumerates every labeled graph with exactly min_forcing_edge_count edges; supergraphs inherit the
// subgraph, so this level decides the whole statement.
inline SearchReport verify_forcing(BoundKind kind, std::size_t n, std::size_t k, const SearchOptions& options = {}) {
  const auto start = std::chrono::steady_clock::now();
  if (!is_forcing(kind))
    throw std::invalid_argument("bound kind '" + std::string(to_string(kind)) + "' is not a forcing bound");
  const auto t = threshold(kind, static_cast<long long>(n), static_cast<long long>(k));
  const bool in_domain = t.domain == DomainStatus::Inside;
  if (!in_domain && !options.override_domain)
    throw DomainViolation("(n,k)=(" + std::to_string(n) + "," + std::to_string(k) + ") outside the domain " +
                          t.domain_text + " of '" + std::string(to_string(kind)) + "'");

  SearchReport report;
  report.n = n;
  report.k = k;
  report.mode = Mode::VerifyForcing;
  report.kind = kind;
  report.threshold = t.value;
  report.exploratory = !in_domain;
  report.edge_count_tested = static_cast<std::size_t>(min_forcing_edge_count(kind, static_cast<long long>(n),
                                                                             static_cast<long long>(k)));
  report.estimated_work = estimate_work(kind, n, k);
  const auto budget = options.budget.value_or(kDefaultBudget);
  if (report.estimated_work > budget) throw BudgetExceeded(report.estimated_work, budget);

  const auto total = static_cast<std::uint64_t>(report.estimated_work);
  const auto slots = edge_slots(n);
  const std::size_t m = report.edge_count_tested;
  const unsigned jobs = std::max(1u, options.jobs);

  std::mutex merge;
  std::atomic<std::uint64_t> examined{0};
  auto work_range = [&](std::uint64_t begin, std::uint64_t end) {
    std::vector<Graph> found;
    std::uint64_t local = 0;
    if (begin < end) {
      auto combo = detail::unrank_combination(slots.size(), m, begin);
      for (std::uint64_t rank = begin; rank < end; ++rank) {
        auto g = detail::graph_from_slots(n, slots, combo);
        ++local;
        if (!has_k_plus_1_connected_subgraph(g, k).found) found.push_back(std::move(g));
        if (rank + 1 < end) detail::next_combination(combo, slots.size());
      }
    }
    examined += local;
    std::lock_guard lock(merge);
    for (auto& g : found) report.counterexamples.push_back(std::move(g));
  };

  if (jobs == 1 || total < jobs) {
    work_range(0, total);
  } else {
    std::vector<std::jthread> workers;
    for (unsigned j = 0; j < jobs; ++j)
      workers.emplace_back(work_range, total * j / jobs, total * (j + 1) / jobs);
  }

  std::sort(report.counterexamples.begin(), report.counterexamples.end(),
            [](const Graph& a, const Graph& b) { return to_graph6(a) < to_graph6(b); });
  report.graphs_examined = examined.load();
  report.verified = report.counterexamples.empty();
  report.wall_time_ms = detail::elapsed_ms(start);
  return report;
}

namespace detail {

struct ExhaustiveState {
  std::size_t n;
  std::size_t k;
  std::vector<Edge> slots;
  std::uint64_t budget;
  std::uint64_t calls = 0;
  bool truncated = false;
  std::size_t best = 0;
  std::optional<Graph> best_graph;
};

inline void exhaustive_dfs(ExhaustiveState& st, const Graph& g, std::size_t from) {
  if (!st.best_graph || g.m() > st.best) {
    st.best = g.m();
    st.best_graph = g;
  }
  for (std::size_t j = from; j < st.slots.size(); ++j) {
    // Not even every remaining slot could beat the incumbent.
    if (g.m() + (st.slots.size() - j) <= st.best) return;
    if (st.calls >= st.budget) {
      st.truncated = true;
      return;
    }
    auto next = g.with_edge(st.slots[j].first, st.slots[j].second);
    ++st.calls;
    if (has_k_plus_1_connected_subgraph(next, st.k).found) continue;
    exhaustive_dfs(st, next, j + 1);
    if (st.truncated) return;
  }
}

}  // namespace detail

// Largest edge count of an n-vertex graph with no (k+1)-connected subgraph: exact (exhaustive) or a
// lower bound witness (greedy).
inline SearchReport max_edges_without(std::size_t n, std::size_t k, Mode mode, const SearchOptions& options = {}) {
  const auto start = std::chrono::steady_clock::now();
  if (k < 1) throw std::invalid_argument("connectivity level k must be >= 1");
  if (mode == Mode::VerifyForcing) throw std::invalid_argument("max_edges_without needs a maximisation mode");
  SearchReport report;
  report.n = n;
  report.k = k;
  report.mode = mode;
  report.estimated_work = estimate_work(mode, n);

  if (mode == Mode::MaximizeExhaustive) {
    detail::ExhaustiveState st;
    st.n = n;
    st.k = k;
    st.slots = edge_slots(n);
    st.budget = options.budget.value_or(kDefaultBudget);
    detail::exhaustive_dfs(st, Graph::from_edge_list(n, {}), 0);
    report.graphs_examined = st.calls;
    report.exhaustive = !st.truncated;
    report.best_edge_count = st.best;
    report.best_graph = std::move(st.best_graph);
  } else {
    const auto budget = options.budget.value_or(kDefaultGreedyBudget);
    std::mt19937_64 rng(options.seed);
    Graph g = (k >= 2 && n >= k + 1) ? mader_graph(n, k).graph : Graph::from_edge_list(n, {});
    if (has_k_plus_1_connected_subgraph(g, k).found) throw std::logic_error("greedy seed graph is not admissible");
    Graph best = g;
    std::uint64_t calls = 0;
    const auto slots = edge_slots(n);
    while (calls < budget && g.m() < slots.size()) {
      std::vector<Edge> missing;
      for (const auto& [u, v] : slots)
        if (!g.adjacent(u, v)) missing.emplace_back(u, v);
      const auto add = missing[std::uniform_int_distribution<std::size_t>(0, missing.size() - 1)(rng)];
      auto grown = g.with_edge(add.first, add.second);
      ++calls;
      if (!has_k_plus_1_connected_subgraph(grown, k).found) {
        g = std::move(grown);
        if (g.m() > best.m()) best = g;
        continue;
      }
      // Swap: drop a random present edge and keep the new one if still admissible.
      if (g.m() == 0 || calls >= budget) continue;
      auto present = g.edges();
      const auto drop = present[std::uniform_int_distribution<std::size_t>(0, present.size() - 1)(rng)];
      auto swapped = grown.without_edge(drop.first, drop.second);
      ++calls;
      if (!has_k_plus_1_connected_subgraph(swapped, k).found) g = std::move(swapped);
    }
    report.graphs_examined = calls;
    report.exhaustive = false;
    report.best_edge_count = best.m();
    report.best_graph = std::move(best);
  }
  report.edge_count_tested = report.best_edge_count;
  report.verified = true;
  report.wall_time_ms = detail::elapsed_ms(start);
  return report;
}

// An exhaustive maximum M and a forcing run at edge count m must agree: verified iff M < m.
inline bool consistent(const SearchReport& maximum, const SearchReport& forcing) {
  if (maximum.mode != Mode::MaximizeExhaustive || !maximum.exhaustive) return true;
  if (forcing.mode != Mode::VerifyForcing || maximum.n != forcing.n || maximum.k != forcing.k) return true;
  return forcing.verified == (maximum.best_edge_count < forcing.edge_count_tested);
}

// Re-validates the report's graphs against its own claims.
inline bool revalidate(const SearchReport& r) {
  if (r.verified != r.counterexamples.empty() && r.mode == Mode::VerifyForcing) return false;
  for (const auto& g : r.counterexamples)
    if (g.n() != r.n || g.m() != r.edge_count_tested || has_k_plus_1_connected_subgraph(g, r.k).found) return false;
  if (r.best_graph) {
    if (r.best_graph->m() != r.best_edge_count || has_k_plus_1_connected_subgraph(*r.best_graph, r.k).found) return false;
  }
  return true;
}

inline std::string to_text(const SearchReport& r) {
  std::string out;
  out += "mode: " + std::string(to_string(r.mode)) + "\n";
  out += "n: " + std::to_string(r.n) + "  k: " + std::to_string(r.k) + "\n";
  if (r.kind) out += "kind: " + std::string(to_string(*r.kind)) + "\n";
  if (r.threshold) out += "threshold: " + r.threshold->to_string() + " (~" + r.threshold->to_decimal() + ")\n";
  if (r.exploratory) out += "exploratory: outside the bound's validity domain\n";
  if (r.mode == Mode::VerifyForcing) {
    out += "edges tested: " + std::to_string(r.edge_count_tested) + "\n";
    out += "graphs examined: " + std::to_string(r.graphs_examined) + " of " + r.estimated_work.str() + "\n";
    out += "counterexamples: " + std::to_string(r.counterexamples.size()) + "\n";
    for (const auto& g : r.counterexamples) out += "  " + to_graph6(g);
    out += std::string("verified: ") + (r.verified ? "true" : "false") + "\n";
  } else {
    out += "decision calls: " + std::to_string(r.graphs_examined) + "\n";
    out += std::string(r.mode == Mode::MaximizeExhaustive && r.exhaustive ? "maximum" : "lower bound") + ": " +
           std::to_string(r.best_edge_count) + "\n";
    if (!r.exhaustive && r.mode == Mode::MaximizeExhaustive) out += "budget exhausted: result is partial\n";
    if (r.best_graph) out += "witness: " + to_graph6(*r.best_graph);
  }
  return out;
}

// Deterministic JSON; wall time is included only on request.
inline nlohmann::ordered_json to_json(const SearchReport& r, bool include_timing = false) {
  nlohmann::ordered_json j;
  j["n"] = r.n;
  j["k"] = r.k;
  j["mode"] = to_string(r.mode);
  j["kind"] = r.kind ? nlohmann::ordered_json(std::string(to_string(*r.kind))) : nlohmann::ordered_json(nullptr);
  j["threshold"] = r.threshold ? nlohmann::ordered_json(r.threshold->to_string()) : nlohmann::ordered_json(nullptr);
  j["edge_count_tested"] = r.edge_count_tested;
  j["graphs_examined"] = r.graphs_examined;
  j["estimated_work"] = r.estimated_work.str();
  auto strip = [](std::string s) {
    if (!s.empty() && s.back() == '\n') s.pop_back();
    return s;
  };
  auto& ce = j["counterexamples"] = nlohmann::ordered_json::array();
  for (const auto& g : r.counterexamples) ce.push_back(strip(to_graph6(g)));
  j["best_graph"] = r.best_graph ? nlohmann::ordered_json(strip(to_graph6(*r.best_graph))) : nlohmann::ordered_json(nullptr);
  j["best_edge_count"] = r.best_edge_count;
  j["verified"] = r.verified;
  j["exhaustive"] = r.exhaustive;
  j["exploratory"] = r.exploratory;
  if (include_timing) j["wall_time_ms"] = r.wall_time_ms;
  return j;
}

}  // namespace kcon::search
