#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <deque>
#include <limits>
#include <optional>
#include <tuple>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "kcon/graph.hpp"

namespace kcon {

// A vertex separator together with the two sides it separates.
struct CutCertificate {
  VertexSet separator;
  VertexSet side_a;  // smallest component of G - separator
  VertexSet side_b;  // everything else outside the separator

  friend bool operator==(const CutCertificate&, const CutCertificate&) = default;
};

// A vertex set claimed to induce a (k+1)-connected subgraph.
struct KSubgraphWitness {
  VertexSet vertices;
  std::size_t k = 0;

  friend bool operator==(const KSubgraphWitness&, const KSubgraphWitness&) = default;
};

struct ConnectivityResult {
  std::size_t kappa = 0;
  std::optional<CutCertificate> cut;  // empty only for complete graphs
};

struct KSubgraphResult {
  bool found = false;
  std::optional<KSubgraphWitness> witness;
};

enum class SeparatorPolicy {
  Minimum,     // smallest separator; ties broken by lexicographically smallest member list
  FirstFound,  // first separator of admissible size in scan order
};

namespace detail {

// Unit-capacity flow network on the vertex-split digraph: vertex v becomes in(v)=2v -> out(v)=2v+1
// with capacity 1, each undirected edge uv becomes out(u)->in(v) and out(v)->in(u) with capacity oo.
class SplitFlowNetwork {
public:
  explicit SplitFlowNetwork(const Graph& g) : n_(g.n()), head_(2 * g.n(), -1) {
    const int inf = static_cast<int>(g.n()) + 1;
    for (Vertex v = 0; v < n_; ++v) add_arc(in(v), out(v), 1);
    for (const auto& [u, v] : g.edges()) {
      add_arc(out(u), in(v), inf);
      add_arc(out(v), in(u), inf);
    }
    base_cap_ = cap_;
  }

  // Max number of internally disjoint s-t paths, stopping once `limit` is reached.
  std::size_t max_flow(Vertex s, Vertex t, std::size_t limit) {
    cap_ = base_cap_;
    source_ = out(s);
    sink_ = in(t);
    std::size_t flow = 0;
    std::vector<int> parent_arc(2 * n_);
    while (flow < limit && augment(parent_arc)) ++flow;
    return flow;
  }

  // Vertices whose split arc crosses the residual cut nearest the source of the last max_flow.
  VertexSet source_side_cut() const {
    std::vector<char> seen(2 * n_, 0);
    std::deque<std::size_t> queue{source_};
    seen[source_] = 1;
    while (!queue.empty()) {
      auto x = queue.front();
      queue.pop_front();
      for (int a = head_[x]; a != -1; a = next_[a])
        if (cap_[a] > 0 && !seen[to_[a]]) {
          seen[to_[a]] = 1;
          queue.push_back(to_[a]);
        }
    }
    VertexSet cut(n_);
    for (Vertex v = 0; v < n_; ++v)
      if (seen[in(v)] && !seen[out(v)]) cut.insert(v);
    return cut;
  }

private:
  static std::size_t in(Vertex v) { return 2 * static_cast<std::size_t>(v); }
  static std::size_t out(Vertex v) { return 2 * static_cast<std::size_t>(v) + 1; }

  void add_arc(std::size_t from, std::size_t to, int cap) {
    for (auto [a, b, c] : {std::tuple{from, to, cap}, std::tuple{to, from, 0}}) {
      to_.push_back(b);
      cap_.push_back(c);
      next_.push_back(head_[a]);
      head_[a] = static_cast<int>(to_.size()) - 1;
    }
  }

  bool augment(std::vector<int>& parent_arc) {
    std::fill(parent_arc.begin(), parent_arc.end(), -1);
    std::deque<std::size_t> queue{source_};
    parent_arc[source_] = -2;
    while (!queue.empty()) {
      auto x = queue.front();
      queue.pop_front();
      for (int a = head_[x]; a != -1; a = next_[a]) {
        auto y = to_[a];
        if (cap_[a] <= 0 || parent_arc[y] != -1) continue;
        parent_arc[y] = a;
        if (y == sink_) {
          for (auto z = sink_; z != source_;) {
            int e = parent_arc[z];
            cap_[e] -= 1;
            cap_[e ^ 1] += 1;
            z = to_[e ^ 1];
          }
          return true;
        }
        queue.push_back(y);
      }
    }
    return false;
  }

  std::size_t n_;
  std::vector<int> head_;
  std::vector<std::size_t> to_;
  std::vector<int> cap_;
  std::vector<int> base_cap_;
  std::vector<int> next_;
  std::size_t source_ = 0;
  std::size_t sink_ = 0;
};

inline CutCertificate certificate_for(const Graph& g, VertexSet separator) {
  auto rest = induced(g, separator.complement());
  auto comps = components(rest.graph);
  CutCertificate cert{std::move(separator), rest.lift(comps.front(), g.n()), VertexSet(g.n())};
  cert.side_b = (cert.separator | cert.side_a).complement();
  return cert;
}

inline Vertex min_degree_vertex(const Graph& g) {
  Vertex best = 0;
  for (Vertex v = 1; v < g.n(); ++v)
    if (g.degree(v) < g.degree(best)) best = v;
  return best;
}

// Pairs whose local connectivities determine kappa: a minimum-degree vertex v against every
// non-neighbour, then every non-adjacent pair of neighbours of v.
inline std::vector<Edge> connectivity_pairs(const Graph& g) {
  std::vector<Edge> pairs;
  const Vertex v = min_degree_vertex(g);
  const auto& nv = g.neighbors(v);
  for (Vertex w = 0; w < g.n(); ++w)
    if (w != v && !nv.contains(w)) pairs.emplace_back(v, w);
  auto nbrs = nv.to_vector();
  for (std::size_t i = 0; i < nbrs.size(); ++i)
    for (std::size_t j = i + 1; j < nbrs.size(); ++j)
      if (!g.adjacent(nbrs[i], nbrs[j])) pairs.emplace_back(nbrs[i], nbrs[j]);
  return pairs;
}

// Smallest separator of size <= max_size found by the pair scan, or nullopt.
inline std::optional<VertexSet> scan_separator(const Graph& g, std::size_t max_size, SeparatorPolicy policy) {
  if (g.is_complete()) return std::nullopt;
  auto comps = components(g);
  if (comps.size() > 1) return VertexSet(g.n());
  SplitFlowNetwork net(g);
  std::optional<VertexSet> best;
  std::size_t bound = max_size;
  for (const auto& [s, t] : connectivity_pairs(g)) {
    const auto flow = net.max_flow(s, t, bound + 1);
    if (flow > bound) continue;
    auto cut = net.source_side_cut();
    if (policy == SeparatorPolicy::FirstFound) return cut;
    if (!best || cut.size() < best->size() || (cut.size() == best->size() && lex_less(cut, *best))) {
      best = std::move(cut);
      bound = flow;
    }
  }
  return best;
}

}  // namespace detail

// Maximum number of internally vertex-disjoint s-t paths (= minimum s-t vertex cut).
inline std::size_t local_vertex_connectivity(const Graph& g, Vertex s, Vertex t) {
  if (s >= g.n() || t >= g.n()) throw std::out_of_range("vertex out of range");
  if (s == t) throw std::invalid_argument("local connectivity needs distinct vertices");
  if (g.adjacent(s, t)) throw std::invalid_argument("local connectivity undefined for adjacent vertices");
  detail::SplitFlowNetwork net(g);
  return net.max_flow(s, t, g.n());
}

// kappa(G), with a minimum separator unless G is complete. kappa of a disconnected graph and of K1 is 0.
inline ConnectivityResult vertex_connectivity(const Graph& g) {
  if (g.n() == 0) throw std::invalid_argument("vertex connectivity undefined for the empty graph");
  auto sep = detail::scan_separator(g, g.n(), SeparatorPolicy::Minimum);
  if (!sep) return {g.n() - 1, std::nullopt};
  const auto size = sep->size();
  return {size, detail::certificate_for(g, std::move(*sep))};
}

inline std::optional<CutCertificate> find_separator_at_most(const Graph& g, std::size_t k,
                                                            SeparatorPolicy policy = SeparatorPolicy::Minimum) {
  auto sep = detail::scan_separator(g, k, policy);
  if (!sep) return std::nullopt;
  return detail::certificate_for(g, std::move(*sep));
}

inline bool is_k_plus_1_connected(const Graph& g, std::size_t k) {
  if (g.n() < k + 2) return false;
  return !detail::scan_separator(g, k, SeparatorPolicy::FirstFound).has_value();
}

inline bool is_valid_certificate(const Graph& g, const CutCertificate& c) {
  const auto n = g.n();
  if (c.separator.universe() != n || c.side_a.universe() != n || c.side_b.universe() != n) return false;
  if (c.side_a.empty() || c.side_b.empty()) return false;
  if (c.separator.intersects(c.side_a) || c.separator.intersects(c.side_b) || c.side_a.intersects(c.side_b))
    return false;
  if ((c.separator | c.side_a | c.side_b) != g.all_vertices()) return false;
  bool crossing = false;
  c.side_a.for_each([&](Vertex v) { crossing = crossing || g.neighbors(v).intersects(c.side_b); });
  return !crossing;
}

inline bool is_valid_witness(const Graph& g, const KSubgraphWitness& w) {
  if (w.vertices.universe() != g.n() || w.vertices.size() < w.k + 2) return false;
  return is_k_plus_1_connected(induced(g, w.vertices).graph, w.k);
}

namespace detail {

// Recursive separator decomposition over host vertex sets. `on_leaf` receives every visited set
// that induces a (k+1)-connected graph and returns true to stop the traversal.
template <class OnLeaf>
bool decompose(const Graph& host, std::size_t k, OnLeaf&& on_leaf) {
  std::unordered_set<VertexSet, VertexSetHash> visited;
  std::vector<VertexSet> stack{host.all_vertices()};
  while (!stack.empty()) {
    auto current = std::move(stack.back());
    stack.pop_back();
    if (current.size() <= k + 1 || !visited.insert(current).second) continue;
    auto sub = induced(host, current);
    auto cut = find_separator_at_most(sub.graph, k, SeparatorPolicy::FirstFound);
    if (!cut) {
      if (on_leaf(current)) return true;
      continue;
    }
    // Push the larger side first so the smaller side (A) is expanded first.
    auto small_side = sub.lift(cut->side_a | cut->separator, host.n());
    auto large_side = sub.lift(cut->side_b | cut->separator, host.n());
    stack.push_back(std::move(large_side));
    stack.push_back(std::move(small_side));
  }
  return false;
}

}  // namespace detail

// Sound and complete: a (k+1)-connected H never meets both sides of a separator S of size <= k,
// since S n V(H) would then separate H.
inline KSubgraphResult has_k_plus_1_connected_subgraph(const Graph& g, std::size_t k) {
  if (k < 1) throw std::invalid_argument("connectivity level k must be >= 1");
  KSubgraphResult result;
  detail::decompose(g, k, [&](const VertexSet& leaf) {
    result.found = true;
    result.witness = KSubgraphWitness{leaf, k};
    return true;
  });
  return result;
}

// Inclusion-maximal vertex sets inducing (k+1)-connected subgraphs, by size descending then
// lexicographically.
inline std::vector<KSubgraphWitness> max_k_connected_pieces(const Graph& g, std::size_t k) {
  if (k < 1) throw std::invalid_argument("connectivity level k must be >= 1");
  std::vector<VertexSet> leaves;
  detail::decompose(g, k, [&](const VertexSet& leaf) {
    leaves.push_back(leaf);
    return false;
  });
  std::sort(leaves.begin(), leaves.end(), [](const VertexSet& a, const VertexSet& b) {
    if (a.size() != b.size()) return a.size() > b.size();
    return lex_less(a, b);
  });
  std::vector<KSubgraphWitness> out;
  for (const auto& leaf : leaves) {
    bool dominated = std::any_of(out.begin(), out.end(), [&](const auto& w) { return leaf.subset_of(w.vertices); });
    if (!dominated) out.push_back({leaf, k});
  }
  return out;
}

}  // namespace kcon
