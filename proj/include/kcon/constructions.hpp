#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "kcon/graph.hpp"

namespace kcon {

// n = k*q + r with 1 <= r <= k; when k divides n this forces r = k.
struct MaderParams {
  std::size_t n = 0;
  std::size_t k = 0;
  std::size_t q = 0;
  std::size_t r = 0;

  static MaderParams make(std::size_t n, std::size_t k) {
    if (k < 2) throw std::invalid_argument("construction needs k >= 2, got k=" + std::to_string(k));
    if (n < k + 1)
      throw std::invalid_argument("construction needs n >= k+1, got n=" + std::to_string(n) +
                                  " k=" + std::to_string(k));
    std::size_t r = n % k == 0 ? k : n % k;
    return {n, k, (n - r) / k, r};
  }
};

struct MaderGraph {
  MaderParams params;
  Graph graph;
  // parts[0] is the independent set V0; parts[i], i >= 1, are cliques joined completely to V0.
  std::vector<VertexSet> parts;
};

inline MaderGraph mader_graph(std::size_t n, std::size_t k) {
  const auto p = MaderParams::make(n, k);
  std::vector<VertexSet> parts;
  Vertex next = 0;
  for (std::size_t i = 0; i <= p.q; ++i) {
    VertexSet part(n);
    const std::size_t size = i < p.q ? k : p.r;
    for (std::size_t j = 0; j < size; ++j) part.insert(next++);
    parts.push_back(std::move(part));
  }
  std::vector<Edge> edges;
  for (std::size_t i = 1; i <= p.q; ++i) {
    auto members = parts[i].to_vector();
    for (std::size_t a = 0; a < members.size(); ++a) {
      parts[0].for_each([&](Vertex z) { edges.emplace_back(z, members[a]); });
      for (std::size_t b = a + 1; b < members.size(); ++b) edges.emplace_back(members[a], members[b]);
    }
  }
  return {p, Graph::from_edge_list(n, edges), std::move(parts)};
}

// k(n-k) join edges, q-1 full k-cliques and one r-clique.
inline std::size_t mader_edge_count(std::size_t n, std::size_t k) {
  const auto p = MaderParams::make(n, k);
  return k * (n - k) + (p.q - 1) * k * (k - 1) / 2 + p.r * (p.r - 1) / 2;
}

}  // namespace kcon
