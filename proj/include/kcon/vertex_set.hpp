#pragma once

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace kcon {

using Vertex = std::uint32_t;

inline constexpr std::size_t kMaxVertices = 1024;

// Fixed-universe bitset over vertex indices 0..universe-1.
class VertexSet {
public:
  VertexSet() = default;

  explicit VertexSet(std::size_t universe)
      : universe_(check_universe(universe)), words_((universe + 63) / 64, 0) {}

  VertexSet(std::size_t universe, std::initializer_list<Vertex> members)
      : VertexSet(universe) {
    for (auto v : members) insert(v);
  }

  static VertexSet full(std::size_t universe) {
    VertexSet s(universe);
    for (std::size_t w = 0; w < s.words_.size(); ++w) s.words_[w] = ~std::uint64_t{0};
    s.trim();
    return s;
  }

  template <class Range>
  static VertexSet from_range(std::size_t universe, const Range& members) {
    VertexSet s(universe);
    for (auto v : members) s.insert(static_cast<Vertex>(v));
    return s;
  }

  std::size_t universe() const noexcept { return universe_; }

  bool contains(Vertex v) const noexcept {
    return v < universe_ && (words_[v >> 6] >> (v & 63) & 1u);
  }

  void insert(Vertex v) {
    check_member(v);
    words_[v >> 6] |= std::uint64_t{1} << (v & 63);
  }

  void erase(Vertex v) {
    check_member(v);
    words_[v >> 6] &= ~(std::uint64_t{1} << (v & 63));
  }

  std::size_t size() const noexcept {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }

  bool empty() const noexcept {
    return std::all_of(words_.begin(), words_.end(), [](auto w) { return w == 0; });
  }

  // Smallest member, or universe() when empty.
  Vertex first() const noexcept { return next(0); }

  // Smallest member >= from, or universe() when none.
  Vertex next(Vertex from) const noexcept {
    if (from >= universe_) return static_cast<Vertex>(universe_);
    std::size_t w = from >> 6;
    std::uint64_t bits = words_[w] & (~std::uint64_t{0} << (from & 63));
    while (true) {
      if (bits != 0) return static_cast<Vertex>(w * 64 + std::countr_zero(bits));
      if (++w == words_.size()) return static_cast<Vertex>(universe_);
      bits = words_[w];
    }
  }

  template <class F>
  void for_each(F&& f) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t bits = words_[w];
      while (bits != 0) {
        f(static_cast<Vertex>(w * 64 + std::countr_zero(bits)));
        bits &= bits - 1;
      }
    }
  }

  std::vector<Vertex> to_vector() const {
    std::vector<Vertex> out;
    out.reserve(size());
    for_each([&](Vertex v) { out.push_back(v); });
    return out;
  }

  VertexSet& operator|=(const VertexSet& o) { return combine(o, [](auto a, auto b) { return a | b; }); }
  VertexSet& operator&=(const VertexSet& o) { return combine(o, [](auto a, auto b) { return a & b; }); }
  VertexSet& operator-=(const VertexSet& o) { return combine(o, [](auto a, auto b) { return a & ~b; }); }

  friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
  friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
  friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

  VertexSet complement() const { return full(universe_) - *this; }

  bool intersects(const VertexSet& o) const {
    same_universe(o);
    for (std::size_t w = 0; w < words_.size(); ++w)
      if (words_[w] & o.words_[w]) return true;
    return false;
  }

  bool subset_of(const VertexSet& o) const {
    same_universe(o);
    for (std::size_t w = 0; w < words_.size(); ++w)
      if (words_[w] & ~o.words_[w]) return false;
    return true;
  }

  friend bool operator==(const VertexSet&, const VertexSet&) = default;

  // Lexicographic order on the ascending member lists.
  friend bool lex_less(const VertexSet& a, const VertexSet& b) {
    auto va = a.to_vector();
    auto vb = b.to_vector();
    return std::lexicographical_compare(va.begin(), va.end(), vb.begin(), vb.end());
  }

  // Total order for ordered containers (not the lexicographic order above).
  friend bool operator<(const VertexSet& a, const VertexSet& b) {
    if (a.universe_ != b.universe_) return a.universe_ < b.universe_;
    return a.words_ < b.words_;
  }

  std::size_t hash() const noexcept {
    std::size_t h = universe_;
    for (auto w : words_) h ^= std::hash<std::uint64_t>{}(w) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
  }

  std::string to_string() const {
    std::string s = "{";
    bool first_item = true;
    for_each([&](Vertex v) {
      if (!first_item) s += ",";
      s += std::to_string(v);
      first_item = false;
    });
    return s + "}";
  }

private:
  static std::size_t check_universe(std::size_t universe) {
    if (universe > kMaxVertices)
      throw std::invalid_argument("vertex universe " + std::to_string(universe) + " exceeds cap " +
                                  std::to_string(kMaxVertices));
    return universe;
  }

  void check_member(Vertex v) const {
    if (v >= universe_)
      throw std::out_of_range("vertex " + std::to_string(v) + " outside universe of size " +
                              std::to_string(universe_));
  }

  void same_universe(const VertexSet& o) const {
    if (o.universe_ != universe_) throw std::invalid_argument("vertex sets over different universes");
  }

  template <class Op>
  VertexSet& combine(const VertexSet& o, Op op) {
    same_universe(o);
    for (std::size_t w = 0; w < words_.size(); ++w) words_[w] = op(words_[w], o.words_[w]);
    return *this;
  }

  void trim() {
    if (universe_ % 64 != 0 && !words_.empty())
      words_.back() &= (std::uint64_t{1} << (universe_ % 64)) - 1;
  }

  std::size_t universe_ = 0;
  std::vector<std::uint64_t> words_;
};

struct VertexSetHash {
  std::size_t operator()(const VertexSet& s) const noexcept { return s.hash(); }
};

}  // namespace kcon
