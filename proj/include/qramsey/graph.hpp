#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <utility>
#include <vector>

namespace qramsey {

using Vertex = std::uint32_t;

// Which graph a homogeneity statement refers to: the graph itself or its
// complement.
enum class Side { graph, complement };

const char* to_string(Side side) noexcept;
Side opposite(Side side) noexcept;

// Sorted list of distinct vertex indices. Validity against a particular
// graph is checked where the set is used.
class VertexSet {
 public:
  VertexSet() = default;
  // Sorts the input; throws InvalidVertex on duplicates.
  explicit VertexSet(std::vector<Vertex> members);
  VertexSet(std::initializer_list<Vertex> members);

  static VertexSet range(std::size_t n);

  std::size_t size() const noexcept { return members_.size(); }
  bool empty() const noexcept { return members_.empty(); }
  auto begin() const noexcept { return members_.begin(); }
  auto end() const noexcept { return members_.end(); }
  Vertex operator[](std::size_t i) const { return members_[i]; }
  const std::vector<Vertex>& members() const noexcept { return members_; }

  bool contains(Vertex v) const;
  VertexSet without(Vertex v) const;

  bool operator==(const VertexSet&) const = default;

 private:
  std::vector<Vertex> members_;
};

// Undirected simple graph stored as n adjacency bit-rows of
// ceil(n/64) words each. Row i has bit j set iff ij is an edge.
// Mutators exist for construction; once built, a Graph is treated as a value.
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::size_t n);

  static Graph complete(std::size_t n);
  static Graph from_edges(std::size_t n, std::span<const std::pair<Vertex, Vertex>> edges);
  static Graph from_edges(std::size_t n, std::initializer_list<std::pair<Vertex, Vertex>> edges);

  std::size_t order() const noexcept { return n_; }
  std::size_t words_per_row() const noexcept { return words_; }

  bool adjacent(Vertex u, Vertex v) const;
  void add_edge(Vertex u, Vertex v);
  void remove_edge(Vertex u, Vertex v);
  void set_edge(Vertex u, Vertex v, bool present);

  std::span<const std::uint64_t> row(Vertex v) const {
    return {bits_.data() + static_cast<std::size_t>(v) * words_, words_};
  }

  std::size_t degree(Vertex v) const;
  std::size_t edge_count() const;

  bool operator==(const Graph&) const = default;

 private:
  friend Graph complement(const Graph& g);

  void check(Vertex v) const;
  std::uint64_t* mutable_row(Vertex v) { return bits_.data() + static_cast<std::size_t>(v) * words_; }

  std::size_t n_ = 0;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> bits_;
};

// Bit mask over the vertices of a graph, same word layout as a row.
using VertexMask = std::vector<std::uint64_t>;

VertexMask make_mask(std::size_t n, const VertexSet& s);

inline std::size_t popcount_and(std::span<const std::uint64_t> a, std::span<const std::uint64_t> b) {
  std::size_t count = 0;
  for (std::size_t w = 0; w < a.size(); ++w) count += static_cast<std::size_t>(__builtin_popcountll(a[w] & b[w]));
  return count;
}

// Throws InvalidVertex unless every member of s is below g.order().
void ensure_valid(const Graph& g, const VertexSet& s);

Graph complement(const Graph& g);

// Induced subgraph on s, relabelled to [0, |s|) in the sort order of s.
Graph induced(const Graph& g, const VertexSet& s);

// e(S): number of edges of g with both ends in s.
std::size_t edge_count(const Graph& g, const VertexSet& s);

// e(v, S): number of neighbours of v inside s. v need not belong to s.
std::size_t deg_in(const Graph& g, Vertex v, const VertexSet& s);

// Degree of each member of s inside g[s], in the order of s.
std::vector<std::size_t> degree_profile(const Graph& g, const VertexSet& s);

// Minimum degree of g[s] (or of the complement of g restricted to s).
// The empty set has minimum degree 0.
std::size_t min_degree(const Graph& g, const VertexSet& s, Side side = Side::graph);
std::size_t min_degree(const Graph& g);

}  // namespace qramsey
