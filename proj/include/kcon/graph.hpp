#pragma once

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "kcon/vertex_set.hpp"

namespace kcon {

using Edge = std::pair<Vertex, Vertex>;

// Immutable simple undirected graph on vertices 0..n-1 stored as adjacency bitrows.
class Graph {
public:
  Graph() = default;

  // Duplicate edges (in either orientation) collapse to one.
  static Graph from_edge_list(std::size_t n, const std::vector<Edge>& edges) {
    Graph g(n);
    for (const auto& [u, v] : edges) {
      if (u >= n || v >= n)
        throw std::invalid_argument("edge (" + std::to_string(u) + "," + std::to_string(v) +
                                    ") out of range for n=" + std::to_string(n));
      if (u == v) throw std::invalid_argument("self-loop (" + std::to_string(u) + "," + std::to_string(v) + ")");
      if (!g.adj_[u].contains(v)) {
        g.adj_[u].insert(v);
        g.adj_[v].insert(u);
        ++g.m_;
      }
    }
    return g;
  }

  std::size_t n() const noexcept { return adj_.size(); }
  std::size_t m() const noexcept { return m_; }

  bool adjacent(Vertex u, Vertex v) const { return adj_.at(u).contains(v); }
  const VertexSet& neighbors(Vertex v) const { return adj_.at(v); }
  std::size_t degree(Vertex v) const { return adj_.at(v).size(); }

  VertexSet all_vertices() const { return VertexSet::full(n()); }

  bool is_complete() const noexcept { return m_ * 2 == n() * (n() == 0 ? 0 : n() - 1); }

  // Edges (u,v) with u < v in ascending lexicographic order.
  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    out.reserve(m_);
    for (Vertex u = 0; u < n(); ++u)
      adj_[u].for_each([&](Vertex v) {
        if (u < v) out.emplace_back(u, v);
      });
    return out;
  }

  Graph with_edge(Vertex u, Vertex v) const {
    check_pair(u, v);
    Graph g = *this;
    if (!g.adj_[u].contains(v)) {
      g.adj_[u].insert(v);
      g.adj_[v].insert(u);
      ++g.m_;
    }
    return g;
  }

  Graph without_edge(Vertex u, Vertex v) const {
    check_pair(u, v);
    Graph g = *this;
    if (g.adj_[u].contains(v)) {
      g.adj_[u].erase(v);
      g.adj_[v].erase(u);
      --g.m_;
    }
    return g;
  }

  friend bool operator==(const Graph& a, const Graph& b) { return a.adj_ == b.adj_; }

private:
  explicit Graph(std::size_t n) {
    if (n > kMaxVertices)
      throw std::invalid_argument("vertex count " + std::to_string(n) + " exceeds cap " +
                                  std::to_string(kMaxVertices));
    adj_.assign(n, VertexSet(n));
  }

  void check_pair(Vertex u, Vertex v) const {
    if (u >= n() || v >= n() || u == v)
      throw std::invalid_argument("invalid vertex pair (" + std::to_string(u) + "," + std::to_string(v) + ")");
  }

  std::vector<VertexSet> adj_;
  std::size_t m_ = 0;
};

struct InducedSubgraph {
  Graph graph;
  // to_host[i] is the host vertex behind local vertex i (ascending).
  std::vector<Vertex> to_host;

  VertexSet lift(const VertexSet& local, std::size_t host_n) const {
    VertexSet out(host_n);
    local.for_each([&](Vertex v) { out.insert(to_host[v]); });
    return out;
  }
};

inline InducedSubgraph induced(const Graph& g, const VertexSet& s) {
  if (s.universe() != g.n()) throw std::invalid_argument("vertex set universe does not match graph");
  InducedSubgraph out;
  out.to_host = s.to_vector();
  std::vector<Vertex> local(g.n(), 0);
  for (Vertex i = 0; i < out.to_host.size(); ++i) local[out.to_host[i]] = i;
  std::vector<Edge> edges;
  for (Vertex i = 0; i < out.to_host.size(); ++i) {
    auto row = g.neighbors(out.to_host[i]) & s;
    row.for_each([&](Vertex w) {
      if (local[w] > i) edges.emplace_back(i, local[w]);
    });
  }
  out.graph = Graph::from_edge_list(out.to_host.size(), edges);
  return out;
}

// Connected components ordered by ascending size, then ascending minimum vertex.
inline std::vector<VertexSet> components(const Graph& g) {
  std::vector<VertexSet> out;
  auto unvisited = g.all_vertices();
  while (!unvisited.empty()) {
    VertexSet comp(g.n());
    VertexSet frontier(g.n());
    frontier.insert(unvisited.first());
    while (!frontier.empty()) {
      comp |= frontier;
      VertexSet grown(g.n());
      frontier.for_each([&](Vertex v) { grown |= g.neighbors(v); });
      frontier = grown - comp;
    }
    unvisited -= comp;
    out.push_back(std::move(comp));
  }
  std::stable_sort(out.begin(), out.end(), [](const VertexSet& a, const VertexSet& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a.first() < b.first();
  });
  return out;
}

inline bool is_connected(const Graph& g) { return components(g).size() <= 1; }

inline Graph complete_graph(std::size_t n) {
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  return Graph::from_edge_list(n, edges);
}

inline Graph cycle_graph(std::size_t n) {
  if (n < 3) throw std::invalid_argument("cycle needs at least 3 vertices, got " + std::to_string(n));
  std::vector<Edge> edges;
  for (Vertex v = 0; v < n; ++v) edges.emplace_back(v, static_cast<Vertex>((v + 1) % n));
  return Graph::from_edge_list(n, edges);
}

}  // namespace kcon
