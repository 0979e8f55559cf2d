#include "qramsey/graph.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "qramsey/errors.hpp"

namespace qramsey {

const char* to_string(Side side) noexcept {
  return side == Side::graph ? "graph" : "complement";
}

Side opposite(Side side) noexcept {
  return side == Side::graph ? Side::complement : Side::graph;
}

VertexSet::VertexSet(std::vector<Vertex> members) : members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  if (std::adjacent_find(members_.begin(), members_.end()) != members_.end()) {
    throw InvalidVertex("vertex set contains a duplicate index");
  }
}

VertexSet::VertexSet(std::initializer_list<Vertex> members) : VertexSet(std::vector<Vertex>(members)) {}

VertexSet VertexSet::range(std::size_t n) {
  std::vector<Vertex> all(n);
  for (std::size_t i = 0; i < n; ++i) all[i] = static_cast<Vertex>(i);
  return VertexSet(std::move(all));
}

bool VertexSet::contains(Vertex v) const {
  return std::binary_search(members_.begin(), members_.end(), v);
}

VertexSet VertexSet::without(Vertex v) const {
  VertexSet out;
  out.members_.reserve(members_.size());
  for (Vertex u : members_) {
    if (u != v) out.members_.push_back(u);
  }
  return out;
}

Graph::Graph(std::size_t n) : n_(n), words_((n + 63) / 64), bits_(n * ((n + 63) / 64), 0) {
  if (n > std::numeric_limits<Vertex>::max()) throw DomainError("graph order exceeds vertex index range");
}

Graph Graph::complete(std::size_t n) {
  return complement(Graph(n));
}

Graph Graph::from_edges(std::size_t n, std::span<const std::pair<Vertex, Vertex>> edges) {
  Graph g(n);
  for (auto [u, v] : edges) g.add_edge(u, v);
  return g;
}

Graph Graph::from_edges(std::size_t n, std::initializer_list<std::pair<Vertex, Vertex>> edges) {
  return from_edges(n, std::span<const std::pair<Vertex, Vertex>>(edges.begin(), edges.size()));
}

void Graph::check(Vertex v) const {
  if (v >= n_) throw InvalidVertex("vertex " + std::to_string(v) + " out of range for order " + std::to_string(n_));
}

bool Graph::adjacent(Vertex u, Vertex v) const {
  check(u);
  check(v);
  return (row(u)[v / 64] >> (v % 64)) & 1U;
}

void Graph::set_edge(Vertex u, Vertex v, bool present) {
  check(u);
  check(v);
  if (u == v) {
    if (present) throw InvalidVertex("loops are not allowed");
    return;
  }
  const std::uint64_t bu = std::uint64_t{1} << (u % 64);
  const std::uint64_t bv = std::uint64_t{1} << (v % 64);
  if (present) {
    mutable_row(u)[v / 64] |= bv;
    mutable_row(v)[u / 64] |= bu;
  } else {
    mutable_row(u)[v / 64] &= ~bv;
    mutable_row(v)[u / 64] &= ~bu;
  }
}

void Graph::add_edge(Vertex u, Vertex v) { set_edge(u, v, true); }
void Graph::remove_edge(Vertex u, Vertex v) { set_edge(u, v, false); }

std::size_t Graph::degree(Vertex v) const {
  check(v);
  std::size_t d = 0;
  for (std::uint64_t w : row(v)) d += static_cast<std::size_t>(__builtin_popcountll(w));
  return d;
}

std::size_t Graph::edge_count() const {
  std::size_t total = 0;
  for (std::uint64_t w : bits_) total += static_cast<std::size_t>(__builtin_popcountll(w));
  return total / 2;
}

VertexMask make_mask(std::size_t n, const VertexSet& s) {
  VertexMask mask((n + 63) / 64, 0);
  for (Vertex v : s) mask[v / 64] |= std::uint64_t{1} << (v % 64);
  return mask;
}

void ensure_valid(const Graph& g, const VertexSet& s) {
  if (!s.empty() && s.members().back() >= g.order()) {
    throw InvalidVertex("vertex " + std::to_string(s.members().back()) + " out of range for order " +
                        std::to_string(g.order()));
  }
}

Graph complement(const Graph& g) {
  Graph out = g;
  const std::size_t n = g.order();
  const std::size_t tail = n % 64;
  for (Vertex v = 0; v < n; ++v) {
    std::uint64_t* row = out.mutable_row(v);
    for (std::size_t w = 0; w < out.words_; ++w) row[w] = ~row[w];
    if (tail != 0) row[out.words_ - 1] &= (std::uint64_t{1} << tail) - 1;
    row[v / 64] &= ~(std::uint64_t{1} << (v % 64));
  }
  return out;
}

Graph induced(const Graph& g, const VertexSet& s) {
  ensure_valid(g, s);
  Graph out(s.size());
  for (std::size_t a = 0; a < s.size(); ++a) {
    const auto row = g.row(s[a]);
    for (std::size_t b = a + 1; b < s.size(); ++b) {
      const Vertex v = s[b];
      if ((row[v / 64] >> (v % 64)) & 1U) out.add_edge(static_cast<Vertex>(a), static_cast<Vertex>(b));
    }
  }
  return out;
}

std::size_t edge_count(const Graph& g, const VertexSet& s) {
  ensure_valid(g, s);
  const VertexMask mask = make_mask(g.order(), s);
  std::size_t twice = 0;
  for (Vertex v : s) twice += popcount_and(g.row(v), mask);
  return twice / 2;
}

std::size_t deg_in(const Graph& g, Vertex v, const VertexSet& s) {
  ensure_valid(g, s);
  if (v >= g.order()) throw InvalidVertex("vertex " + std::to_string(v) + " out of range");
  return popcount_and(g.row(v), make_mask(g.order(), s));
}

std::vector<std::size_t> degree_profile(const Graph& g, const VertexSet& s) {
  ensure_valid(g, s);
  const VertexMask mask = make_mask(g.order(), s);
  std::vector<std::size_t> degrees;
  degrees.reserve(s.size());
  for (Vertex v : s) degrees.push_back(popcount_and(g.row(v), mask));
  return degrees;
}

std::size_t min_degree(const Graph& g, const VertexSet& s, Side side) {
  if (s.empty()) return 0;
  const auto degrees = degree_profile(g, s);
  const std::size_t lo = *std::min_element(degrees.begin(), degrees.end());
  const std::size_t hi = *std::max_element(degrees.begin(), degrees.end());
  return side == Side::graph ? lo : s.size() - 1 - hi;
}

std::size_t min_degree(const Graph& g) {
  if (g.order() == 0) return 0;
  std::size_t lo = g.order();
  for (Vertex v = 0; v < g.order(); ++v) lo = std::min(lo, g.degree(v));
  return lo;
}

}  // namespace qramsey
