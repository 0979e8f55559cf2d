#include "qramsey/canonical.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "qramsey/errors.hpp"

namespace qramsey::exact {

SmallGraph SmallGraph::from_graph(const Graph& g) {
  if (g.order() > kMaxSmallOrder) throw DomainError("graph too large for the small representation");
  SmallGraph s;
  s.n = static_cast<std::uint8_t>(g.order());
  for (std::size_t v = 0; v < g.order(); ++v) s.rows[v] = static_cast<std::uint16_t>(g.row(static_cast<Vertex>(v))[0]);
  return s;
}

Graph SmallGraph::to_graph() const {
  Graph g(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (adjacent(i, j)) g.add_edge(static_cast<Vertex>(i), static_cast<Vertex>(j));
    }
  }
  return g;
}

SmallGraph SmallGraph::complement() const {
  SmallGraph c;
  c.n = n;
  const auto all = static_cast<std::uint16_t>((1U << n) - 1U);
  for (std::size_t v = 0; v < n; ++v) c.rows[v] = static_cast<std::uint16_t>(~rows[v] & all & ~(1U << v));
  return c;
}

std::uint64_t labeling_code(const SmallGraph& g, const Labeling& order) {
  std::uint64_t code = 0;
  for (std::size_t j = 1; j < g.n; ++j) {
    const std::uint16_t row = g.rows[order[j]];
    for (std::size_t i = 0; i < j; ++i) code = (code << 1) | ((row >> order[i]) & 1U);
  }
  return (static_cast<std::uint64_t>(g.n) << 56) | code;
}

SmallGraph relabel(const SmallGraph& g, const Labeling& order) {
  SmallGraph out;
  out.n = g.n;
  for (std::size_t i = 0; i < g.n; ++i) {
    for (std::size_t j = i + 1; j < g.n; ++j) {
      if (g.adjacent(order[i], order[j])) out.add_edge(i, j);
    }
  }
  return out;
}

namespace {

// Ordered partition: lab holds vertices by position, bit i of `ends` marks
// the last position of a cell.
struct Partition {
  Labeling lab{};
  std::uint32_t ends = 0;
};

bool is_discrete(const Partition& p, std::size_t n) {
  return n == 0 || p.ends == (n >= 32 ? ~0U : ((1U << n) - 1U));
}

// Equitable refinement: split cells by the vector of neighbour counts into
// every cell until stable. Keys list counts cell by cell, so the order of
// the split cells depends only on the structure.
void refine(const SmallGraph& g, Partition& p) {
  const std::size_t n = g.n;
  for (;;) {
    std::array<std::uint16_t, kMaxSmallOrder> cell_mask{};
    std::size_t cells = 0;
    for (std::size_t i = 0; i < n; ++i) {
      cell_mask[cells] = static_cast<std::uint16_t>(cell_mask[cells] | (1U << p.lab[i]));
      if ((p.ends >> i) & 1U) ++cells;
    }
    std::array<std::uint64_t, kMaxSmallOrder> key{};
    for (std::size_t v = 0; v < n; ++v) {
      std::uint64_t k = 0;
      for (std::size_t c = 0; c < cells; ++c) {
        k = (k << 4) | static_cast<std::uint64_t>(__builtin_popcount(g.rows[v] & cell_mask[c]));
      }
      key[v] = k;
    }
    bool changed = false;
    std::size_t start = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (!((p.ends >> i) & 1U)) continue;
      if (i > start) {
        std::sort(p.lab.begin() + start, p.lab.begin() + i + 1,
                  [&](std::uint8_t a, std::uint8_t b) { return key[a] < key[b]; });
        for (std::size_t j = start; j < i; ++j) {
          if (key[p.lab[j]] != key[p.lab[j + 1]]) {
            p.ends |= 1U << j;
            changed = true;
          }
        }
      }
      start = i + 1;
    }
    if (!changed) return;
  }
}

class CanonSearch {
 public:
  explicit CanonSearch(const SmallGraph& g) : g_(g), n_(g.n) {}

  CanonicalLabeling run() {
    Partition root;
    for (std::size_t i = 0; i < n_; ++i) root.lab[i] = static_cast<std::uint8_t>(i);
    root.ends = n_ == 0 ? 0 : 1U << (n_ - 1);
    visit(root, 0, -1);
    return {best_code_, best_lab_};
  }

 private:
  // Returns the depth to unwind to, or -1 to carry on normally.
  int visit(Partition p, int depth, int diverge) {
    refine(g_, p);
    if (is_discrete(p, n_)) return leaf(p.lab, diverge);

    std::size_t start = 0;
    std::size_t stop = 0;
    for (std::size_t i = 0, s = 0; i < n_; ++i) {
      if (!((p.ends >> i) & 1U)) continue;
      if (i > s) {
        start = s;
        stop = i;
        break;
      }
      s = i + 1;
    }
    std::array<std::uint8_t, kMaxSmallOrder> candidates{};
    const std::size_t count = stop - start + 1;
    std::copy(p.lab.begin() + start, p.lab.begin() + stop + 1, candidates.begin());
    std::sort(candidates.begin(), candidates.begin() + count);

    std::uint16_t explored = 0;
    for (std::size_t c = 0; c < count; ++c) {
      const std::uint8_t v = candidates[c];
      if (explored != 0 && in_explored_orbit(v, explored, depth)) continue;

      Partition child = p;
      auto it = std::find(child.lab.begin() + start, child.lab.begin() + stop + 1, v);
      std::iter_swap(child.lab.begin() + start, it);
      child.ends |= 1U << start;
      path_[depth] = v;

      const int child_diverge = diverge != -1 ? diverge : (explored == 0 ? -1 : depth);
      const int jump = visit(child, depth + 1, child_diverge);
      explored = static_cast<std::uint16_t>(explored | (1U << v));
      if (jump != -1 && jump < depth) return jump;
    }
    return -1;
  }

  int leaf(const Labeling& lab, int diverge) {
    const std::uint64_t code = labeling_code(g_, lab);
    if (!have_first_) {
      have_first_ = true;
      first_code_ = best_code_ = code;
      first_lab_ = best_lab_ = lab;
      return -1;
    }
    if (code == first_code_) {
      record(first_lab_, lab);
      return diverge;
    }
    if (code < best_code_) {
      best_code_ = code;
      best_lab_ = lab;
    } else if (code == best_code_) {
      record(best_lab_, lab);
    }
    return -1;
  }

  // from[i] -> to[i] maps one labeling onto an equivalent one.
  void record(const Labeling& from, const Labeling& to) {
    if (automorphisms_.size() >= kMaxStored) return;
    Labeling perm{};
    for (std::size_t i = 0; i < n_; ++i) perm[from[i]] = to[i];
    automorphisms_.push_back(perm);
  }

  // Orbits of the stored automorphisms that fix path_[0..depth) pointwise.
  bool in_explored_orbit(std::uint8_t v, std::uint16_t explored, int depth) const {
    std::array<std::uint8_t, kMaxSmallOrder> parent{};
    std::iota(parent.begin(), parent.begin() + n_, std::uint8_t{0});
    auto find = [&](std::uint8_t x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    for (const Labeling& perm : automorphisms_) {
      bool fixes = true;
      for (int d = 0; d < depth && fixes; ++d) fixes = perm[path_[d]] == path_[d];
      if (!fixes) continue;
      for (std::size_t x = 0; x < n_; ++x) {
        const auto a = find(static_cast<std::uint8_t>(x));
        const auto b = find(perm[x]);
        if (a != b) parent[a] = b;
      }
    }
    const auto root = find(v);
    for (std::size_t u = 0; u < n_; ++u) {
      if (((explored >> u) & 1U) && find(static_cast<std::uint8_t>(u)) == root) return true;
    }
    return false;
  }

  static constexpr std::size_t kMaxStored = 256;

  const SmallGraph& g_;
  std::size_t n_;
  bool have_first_ = false;
  std::uint64_t first_code_ = 0;
  std::uint64_t best_code_ = 0;
  Labeling first_lab_{};
  Labeling best_lab_{};
  Labeling path_{};
  std::vector<Labeling> automorphisms_;
};

}  // namespace

CanonicalLabeling canonical_labeling(const SmallGraph& g) {
  if (g.n > kMaxCanonicalOrder) {
    throw DomainError("canonical labeling supports at most " + std::to_string(kMaxCanonicalOrder) + " vertices");
  }
  return CanonSearch(g).run();
}

std::uint64_t canonical_code(const SmallGraph& g) {
  return canonical_labeling(g).code;
}

std::uint64_t canonical_code(const Graph& g) {
  return canonical_code(SmallGraph::from_graph(g));
}

Graph canonical_graph(const Graph& g) {
  const SmallGraph s = SmallGraph::from_graph(g);
  return relabel(s, canonical_labeling(s).order).to_graph();
}

}  // namespace qramsey::exact
