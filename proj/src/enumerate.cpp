#include <algorithm>
#include <string>
#include <thread>
#include <unordered_set>

#include "qramsey/canonical.hpp"
#include "qramsey/errors.hpp"

namespace qramsey::exact {

namespace {

// Children of one canonical parent whose canonical deletion leads back to
// that parent. The deleted vertex is the maximum-degree vertex with the
// largest canonical position, an isomorphism invariant up to automorphism.
std::vector<SmallGraph> children_of(const SmallGraph& parent) {
  const std::size_t m = parent.n;
  const std::size_t n = m + 1;
  const std::uint64_t parent_code = labeling_code(parent, [&] {
    Labeling id{};
    for (std::size_t i = 0; i < kMaxSmallOrder; ++i) id[i] = static_cast<std::uint8_t>(i);
    return id;
  }());

  std::vector<SmallGraph> out;
  std::unordered_set<std::uint64_t> seen;
  for (std::uint32_t nbrs = 0; nbrs < (1U << m); ++nbrs) {
    SmallGraph child = parent;
    child.n = static_cast<std::uint8_t>(n);
    child.rows[m] = static_cast<std::uint16_t>(nbrs);
    for (std::size_t v = 0; v < m; ++v) {
      if ((nbrs >> v) & 1U) child.rows[v] = static_cast<std::uint16_t>(child.rows[v] | (1U << m));
    }
    // Some maximum-degree vertex is always deleted, so a child whose new
    // vertex is not of maximum degree is reached again from another subset.
    const int new_degree = child.degree(m);
    bool top = true;
    for (std::size_t v = 0; v < m && top; ++v) top = child.degree(v) <= new_degree;
    if (!top) continue;

    const CanonicalLabeling canon = canonical_labeling(child);
    std::size_t pos = n;
    while (pos-- > 0) {
      if (child.degree(canon.order[pos]) == new_degree) break;
    }
    const std::uint8_t deleted = canon.order[pos];

    Labeling keep{};
    for (std::size_t v = 0, i = 0; v < n; ++v) {
      if (v != deleted) keep[i++] = static_cast<std::uint8_t>(v);
    }
    SmallGraph rest;
    rest.n = static_cast<std::uint8_t>(m);
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = i + 1; j < m; ++j) {
        if (child.adjacent(keep[i], keep[j])) rest.add_edge(i, j);
      }
    }
    if (canonical_code(rest) != parent_code) continue;
    if (seen.insert(canon.code).second) out.push_back(relabel(child, canon.order));
  }
  return out;
}

}  // namespace

std::vector<SmallGraph> augment(const std::vector<SmallGraph>& parents, unsigned threads) {
  std::vector<std::vector<SmallGraph>> per_parent(parents.size());
  threads = std::max(1U, threads);
  if (threads == 1 || parents.size() < 2) {
    for (std::size_t i = 0; i < parents.size(); ++i) per_parent[i] = children_of(parents[i]);
  } else {
    std::vector<std::jthread> workers;
    for (unsigned w = 0; w < threads; ++w) {
      workers.emplace_back([&, w] {
        for (std::size_t i = w; i < parents.size(); i += threads) per_parent[i] = children_of(parents[i]);
      });
    }
  }
  std::vector<SmallGraph> out;
  for (auto& batch : per_parent) out.insert(out.end(), batch.begin(), batch.end());
  return out;
}

std::vector<SmallGraph> enumerate_small(std::size_t n, std::size_t ceiling, unsigned threads) {
  ceiling = std::min(ceiling, kMaxCanonicalOrder);
  if (n > ceiling) {
    throw CeilingExceeded("enumeration ceiling is " + std::to_string(ceiling) + " vertices", n);
  }
  std::vector<SmallGraph> level(1);  // the graph on 0 vertices
  for (std::size_t order = 1; order <= n; ++order) level = augment(level, threads);
  return level;
}

void enumerate_graphs(std::size_t n, const std::function<void(const Graph&)>& sink, std::size_t ceiling) {
  for (const SmallGraph& g : enumerate_small(n, ceiling)) sink(g.to_graph());
}

std::vector<Graph> enumerate_graphs(std::size_t n, std::size_t ceiling) {
  std::vector<Graph> out;
  enumerate_graphs(n, [&](const Graph& g) { out.push_back(g); }, ceiling);
  return out;
}

}  // namespace qramsey::exact
