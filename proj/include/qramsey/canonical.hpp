#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

#include "qramsey/graph.hpp"

namespace qramsey::exact {

inline constexpr std::size_t kMaxSmallOrder = 16;
// Largest order whose adjacency triangle fits a 64-bit canonical code
// alongside the order tag.
inline constexpr std::size_t kMaxCanonicalOrder = 11;

// Fixed-capacity graph for the enumeration hot path.
struct SmallGraph {
  std::uint8_t n = 0;
  std::array<std::uint16_t, kMaxSmallOrder> rows{};

  static SmallGraph from_graph(const Graph& g);
  Graph to_graph() const;

  bool adjacent(std::size_t u, std::size_t v) const { return (rows[u] >> v) & 1U; }
  void add_edge(std::size_t u, std::size_t v) {
    rows[u] |= static_cast<std::uint16_t>(1U << v);
    rows[v] |= static_cast<std::uint16_t>(1U << u);
  }
  int degree(std::size_t v) const { return __builtin_popcount(rows[v]); }
  SmallGraph complement() const;

  bool operator==(const SmallGraph&) const = default;
};

using Labeling = std::array<std::uint8_t, kMaxSmallOrder>;  // position -> vertex

// Code of g read in the vertex order `order`: the order in the top byte,
// then the upper triangle in graph6 column order, most significant first.
// Lexicographic order of the triangles equals integer order of the codes.
std::uint64_t labeling_code(const SmallGraph& g, const Labeling& order);

// g relabelled so that order[i] becomes vertex i.
SmallGraph relabel(const SmallGraph& g, const Labeling& order);

struct CanonicalLabeling {
  std::uint64_t code = 0;
  Labeling order{};
};

// Canonical labeling by individualization-refinement: leaves of the search
// tree over equitable ordered partitions, minimum code wins. Subtrees are
// pruned with automorphisms discovered at equivalent leaves. Two graphs
// get the same code iff they are isomorphic. Requires n <= 11.
CanonicalLabeling canonical_labeling(const SmallGraph& g);
std::uint64_t canonical_code(const SmallGraph& g);
std::uint64_t canonical_code(const Graph& g);
Graph canonical_graph(const Graph& g);

// One canonical representative per isomorphism class of graphs on n
// vertices, generated by canonical augmentation from the classes on n-1
// vertices. Throws CeilingExceeded for n > ceiling (hard limit 11).
std::vector<SmallGraph> enumerate_small(std::size_t n, std::size_t ceiling = 10, unsigned threads = 1);

// Classes on parents.front().n + 1 vertices from the full class list on
// one vertex fewer.
std::vector<SmallGraph> augment(const std::vector<SmallGraph>& parents, unsigned threads = 1);

void enumerate_graphs(std::size_t n, const std::function<void(const Graph&)>& sink, std::size_t ceiling = 10);
std::vector<Graph> enumerate_graphs(std::size_t n, std::size_t ceiling = 10);

}  // namespace qramsey::exact
