#pragma once

#include <cstddef>
#include <istream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "kcon/graph.hpp"

namespace kcon {

class FormatError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// graph6: size header, then the upper triangle x(0,1), x(0,2), x(1,2), x(0,3), ...
// packed six bits per byte, each byte offset by 63.
inline std::string to_graph6(const Graph& g) {
  const std::size_t n = g.n();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else {
    out.push_back(static_cast<char>(126));
    for (int shift = 12; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
  }
  int bits = 0;
  int acc = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++bits == 6) {
        out.push_back(static_cast<char>(acc + 63));
        bits = acc = 0;
      }
    }
  }
  if (bits > 0) out.push_back(static_cast<char>((acc << (6 - bits)) + 63));
  out.push_back('\n');
  return out;
}

inline Graph from_graph6(std::string_view text) {
  constexpr std::string_view header = ">>graph6<<";
  if (text.substr(0, header.size()) == header) text.remove_prefix(header.size());
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r' || text.back() == ' ')) text.remove_suffix(1);
  if (text.empty()) throw FormatError("graph6: empty input");
  for (char c : text)
    if (c < 63 || c > 126) throw FormatError("graph6: byte out of range");

  std::size_t pos = 0;
  std::size_t n = 0;
  if (text[0] != 126) {
    n = static_cast<std::size_t>(text[0] - 63);
    pos = 1;
  } else {
    if (text.size() < 4 || text[1] == 126) throw FormatError("graph6: unsupported size header");
    for (std::size_t i = 1; i <= 3; ++i) n = (n << 6) | static_cast<std::size_t>(text[i] - 63);
    pos = 4;
  }
  if (n > kMaxVertices) throw FormatError("graph6: vertex count " + std::to_string(n) + " exceeds cap");
  const std::size_t nbits = n * (n == 0 ? 0 : n - 1) / 2;
  const std::size_t nbytes = (nbits + 5) / 6;
  if (text.size() - pos != nbytes)
    throw FormatError("graph6: expected " + std::to_string(nbytes) + " data bytes, got " +
                      std::to_string(text.size() - pos));

  std::vector<Edge> edges;
  std::size_t bit = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i, ++bit) {
      const int byte = text[pos + bit / 6] - 63;
      if ((byte >> (5 - bit % 6)) & 1) edges.emplace_back(i, j);
    }
  }
  if (nbits % 6 != 0) {
    const int last = text.back() - 63;
    if (last & ((1 << (6 - nbits % 6)) - 1)) throw FormatError("graph6: nonzero padding bits");
  }
  return Graph::from_edge_list(n, edges);
}

// Plain edge list: "p edge <n> <m>" then "e <u> <v>" lines with 1-based indices.
inline std::string to_edge_list(const Graph& g) {
  std::ostringstream os;
  os << "p edge " << g.n() << ' ' << g.m() << '\n';
  for (const auto& [u, v] : g.edges()) os << "e " << u + 1 << ' ' << v + 1 << '\n';
  return os.str();
}

inline Graph from_edge_list_text(std::istream& in) {
  std::string line;
  std::size_t n = 0;
  std::size_t declared_m = 0;
  bool have_header = false;
  std::vector<Edge> edges;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ls(line);
    std::string tag;
    if (!(ls >> tag) || tag == "c") continue;
    auto fail = [&](const std::string& why) {
      return FormatError("edge list line " + std::to_string(lineno) + ": " + why);
    };
    if (tag == "p") {
      std::string kind;
      if (have_header) throw fail("duplicate header");
      if (!(ls >> kind >> n >> declared_m) || kind != "edge") throw fail("malformed header");
      have_header = true;
    } else if (tag == "e") {
      if (!have_header) throw fail("edge before header");
      long long u = 0, v = 0;
      if (!(ls >> u >> v)) throw fail("malformed edge");
      if (u < 1 || v < 1 || static_cast<std::size_t>(u) > n || static_cast<std::size_t>(v) > n)
        throw fail("vertex index out of range");
      edges.emplace_back(static_cast<Vertex>(u - 1), static_cast<Vertex>(v - 1));
    } else {
      throw fail("unknown line tag '" + tag + "'");
    }
  }
  if (!have_header) throw FormatError("edge list: missing 'p edge' header");
  Graph g;
  try {
    g = Graph::from_edge_list(n, edges);
  } catch (const std::invalid_argument& e) {
    throw FormatError(std::string("edge list: ") + e.what());
  }
  if (edges.size() != declared_m)
    throw FormatError("edge list: header declares " + std::to_string(declared_m) + " edges, found " +
                      std::to_string(edges.size()));
  return g;
}

inline Graph from_edge_list_text(const std::string& text) {
  std::istringstream in(text);
  return from_edge_list_text(in);
}

}  // namespace kcon
