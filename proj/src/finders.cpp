#include "qramsey/finders.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <thread>
#include <vector>

#include "qramsey/bounds.hpp"
#include "qramsey/errors.hpp"
#include "qramsey/measures.hpp"
#include "qramsey/random.hpp"

namespace qramsey::finders {

namespace {

// Side with at least half of all pairs as edges; ties go to the graph.
Side denser_side(const Graph& g) {
  const std::size_t n = g.order();
  const std::size_t pairs = n < 2 ? 0 : n * (n - 1) / 2;
  return 2 * g.edge_count() >= pairs ? Side::graph : Side::complement;
}

// delta(h[S]) for S given as a sorted index list.
std::size_t subset_min_degree(const Graph& h, const std::vector<Vertex>& members) {
  VertexMask mask(h.words_per_row(), 0);
  for (Vertex v : members) mask[v / 64] |= std::uint64_t{1} << (v % 64);
  std::size_t lo = std::numeric_limits<std::size_t>::max();
  for (Vertex v : members) lo = std::min(lo, popcount_and(h.row(v), mask));
  return members.empty() ? 0 : lo;
}

}  // namespace

HomogeneityWitness make_witness(const Graph& g, VertexSet set, Side side, double threshold,
                                std::optional<std::uint64_t> seed) {
  ensure_valid(g, set);
  const std::size_t achieved = min_degree(g, set, side);
  if (static_cast<double>(achieved) < threshold) {
    throw NoWitness("set reaches minimum degree " + std::to_string(achieved) + " below threshold " +
                    std::to_string(threshold));
  }
  return {std::move(set), side, achieved, threshold, seed};
}

bool verify_witness(const Graph& g, const HomogeneityWitness& w) {
  if (!w.set.empty() && w.set.members().back() >= g.order()) return false;
  const std::size_t achieved = min_degree(g, w.set, w.side);
  return achieved == w.min_degree && static_cast<double>(achieved) >= w.threshold;
}

VertexSet greedy_peel(const Graph& g, double alpha) {
  if (!(alpha >= 0.0 && alpha < 1.0)) throw DomainError("greedy_peel requires 0 <= alpha < 1");
  const std::size_t n = g.order();
  std::vector<char> alive(n, 1);
  std::vector<std::size_t> degree(n);
  for (Vertex v = 0; v < n; ++v) degree[v] = g.degree(v);
  std::size_t order = n;

  while (order > 0) {
    const double cutoff = alpha * static_cast<double>(order);
    Vertex victim = static_cast<Vertex>(n);
    for (Vertex v = 0; v < n; ++v) {
      if (alive[v] && static_cast<double>(degree[v]) < cutoff) {
        victim = v;
        break;
      }
    }
    if (victim == n) break;
    alive[victim] = 0;
    --order;
    const auto row = g.row(victim);
    for (std::size_t w = 0; w < row.size(); ++w) {
      for (std::uint64_t bits = row[w]; bits != 0; bits &= bits - 1) {
        const std::size_t u = w * 64 + static_cast<std::size_t>(__builtin_ctzll(bits));
        if (alive[u]) --degree[u];
      }
    }
  }

  std::vector<Vertex> survivors;
  survivors.reserve(order);
  for (Vertex v = 0; v < n; ++v) {
    if (alive[v]) survivors.push_back(v);
  }
  VertexSet result(std::move(survivors));
  if (!result.empty() && static_cast<double>(min_degree(g, result)) < alpha * static_cast<double>(result.size())) {
    throw Error("greedy_peel invariant violated");
  }
  return result;
}

std::size_t peel_guarantee_order(std::size_t k, double alpha) {
  if (k < 2) throw DomainError("peel_guarantee_order requires k >= 2");
  if (!(alpha >= 0.0 && alpha < 0.5)) throw DomainError("peel_guarantee_order requires 0 <= alpha < 1/2");
  const double kd = static_cast<double>(k);
  const double gap = std::sqrt(0.5 - alpha);
  const double value = std::sqrt(1.0 - alpha) / gap * kd * std::sqrt(1.0 + 1.0 / (kd * (1.0 - alpha) * gap));
  return static_cast<std::size_t>(std::ceil(value));
}

SkewSearchResult skew_local_search(const Graph& g, double nu, std::uint64_t seed, std::size_t max_restarts) {
  if (!(nu >= 0.0)) throw DomainError("skew weight nu must be nonnegative");
  const std::size_t n = g.order();
  SkewSearchResult best;
  if (n < 2) return best;

  bool have_best = false;
  std::vector<char> inside(n);
  std::vector<std::size_t> inner_degree(n);

  for (std::size_t restart = 0; restart < max_restarts; ++restart) {
    Rng rng(derive_seed(seed, restart));
    const std::size_t start_size = rng.between(2, n);
    const auto start = rng.subset(n, start_size);

    std::fill(inside.begin(), inside.end(), 0);
    for (Vertex v : start) inside[v] = 1;
    VertexMask mask(g.words_per_row(), 0);
    for (Vertex v : start) mask[v / 64] |= std::uint64_t{1} << (v % 64);
    std::size_t twice_edges = 0;
    for (Vertex v = 0; v < n; ++v) {
      inner_degree[v] = popcount_and(g.row(v), mask);
      if (inside[v]) twice_edges += inner_degree[v];
    }
    std::size_t edges = twice_edges / 2;
    std::size_t order = start_size;
    double current = skew_from_counts(edges, order, nu);

    for (bool improved = true; improved;) {
      improved = false;
      for (Vertex v = 0; v < n; ++v) {
        const bool removing = inside[v] != 0;
        const std::size_t next_edges = removing ? edges - inner_degree[v] : edges + inner_degree[v];
        const std::size_t next_order = removing ? order - 1 : order + 1;
        const double candidate = skew_from_counts(next_edges, next_order, nu);
        if (candidate <= current + 1e-9 * std::max(1.0, std::fabs(current))) continue;

        inside[v] = removing ? 0 : 1;
        const auto row = g.row(v);
        for (std::size_t w = 0; w < row.size(); ++w) {
          for (std::uint64_t bits = row[w]; bits != 0; bits &= bits - 1) {
            const std::size_t u = w * 64 + static_cast<std::size_t>(__builtin_ctzll(bits));
            if (removing) {
              --inner_degree[u];
            } else {
              ++inner_degree[u];
            }
          }
        }
        edges = next_edges;
        order = next_order;
        current = candidate;
        improved = true;
        break;
      }
    }

    if (!have_best || current > best.skew) {
      std::vector<Vertex> members;
      members.reserve(order);
      for (Vertex v = 0; v < n; ++v) {
        if (inside[v]) members.push_back(v);
      }
      best.set = VertexSet(std::move(members));
      best.discrepancy = discrepancy_from_counts(edges, order);
      best.skew = current;
      have_best = true;
    }
  }
  best.restarts = max_restarts;
  return best;
}

SkewWitness skew_stable_search(const Graph& g, double nu, std::uint64_t seed, std::size_t max_restarts) {
  const SkewSearchResult found = skew_local_search(g, nu, seed, max_restarts);
  if (found.discrepancy == 0.0) throw NoWitness("every restart ended at a set with zero discrepancy");
  return {found.set, found.discrepancy > 0.0 ? Side::graph : Side::complement, found.discrepancy, found.skew};
}

bool removal_stability_holds(const Graph& g, const VertexSet& x, double nu) {
  const std::size_t m = x.size();
  if (m < 2) return true;
  const std::size_t edges = edge_count(g, x);
  const double d = discrepancy_from_counts(edges, m);
  if (d == 0.0) return true;
  const double bound = removal_stable_degree_bound(m, nu);
  const double here = skew_from_counts(edges, m, nu);
  const VertexMask mask = make_mask(g.order(), x);
  for (Vertex v : x) {
    const std::size_t inner = popcount_and(g.row(v), mask);
    const std::size_t side_degree = d > 0.0 ? inner : m - 1 - inner;
    const bool removal_improves = skew_from_counts(edges - inner, m - 1, nu) > here;
    if (static_cast<double>(side_degree) < bound && !removal_improves) return false;
  }
  return true;
}

ThinResult thin(const Graph& h, std::size_t k, double eps, std::uint64_t seed, std::size_t max_samples,
                unsigned threads) {
  const std::size_t n = h.order();
  if (k < 1 || n < k) throw PreconditionFailed("thin requires 1 <= k <= |V(h)|");
  if (!(eps > 0.0)) throw PreconditionFailed("thin requires eps > 0");
  if (!bounds::thinning_condition(k, eps)) {
    throw PreconditionFailed("exp(eps^2 (k-1)/2) > k does not hold for k = " + std::to_string(k));
  }
  const double c = static_cast<double>(min_degree(h)) / static_cast<double>(n);
  const double threshold = (c - eps) * static_cast<double>(k - 1);
  threads = std::max(1U, threads);

  auto draw = [&](std::size_t index) {
    Rng rng(derive_seed(seed, index));
    return rng.subset(n, k);
  };
  auto accepted = [&](const std::vector<Vertex>& s) {
    return static_cast<double>(subset_min_degree(h, s)) >= threshold;
  };

  for (std::size_t base = 0; base < max_samples; base += threads) {
    const std::size_t batch = std::min<std::size_t>(threads, max_samples - base);
    std::vector<std::vector<Vertex>> drawn(batch);
    std::vector<char> ok(batch, 0);
    if (batch == 1) {
      drawn[0] = draw(base);
      ok[0] = accepted(drawn[0]);
    } else {
      std::vector<std::jthread> workers;
      for (std::size_t i = 0; i < batch; ++i) {
        workers.emplace_back([&, i] {
          drawn[i] = draw(base + i);
          ok[i] = accepted(drawn[i]);
        });
      }
    }
    for (std::size_t i = 0; i < batch; ++i) {
      if (!ok[i]) continue;
      VertexSet set(std::move(drawn[i]));
      if (static_cast<double>(min_degree(h, set)) < threshold) throw Error("thin produced a set below its threshold");
      return {std::move(set), base + i + 1};
    }
  }
  throw SamplesExhausted("no accepted sample among " + std::to_string(max_samples) + " draws");
}

bool good_pair(const Graph& h, Vertex v, const VertexSet& t_set, double c, double eps, std::size_t k) {
  if (k < 1 || t_set.size() != k - 1) throw DomainError("good_pair requires |T| = k - 1");
  if (t_set.contains(v)) throw DomainError("good_pair requires v outside T");
  return static_cast<double>(deg_in(h, v, t_set)) >= (c - eps) * static_cast<double>(k - 1);
}

double fixed_pipeline_threshold(std::size_t k) {
  if (k < 2) throw DomainError("fixed pipeline requires k >= 2");
  const double km1 = static_cast<double>(k - 1);
  return 0.5 * km1 - 2.0 * std::sqrt(km1 * std::log(static_cast<double>(k)));
}

double fixed_pipeline_eps(std::size_t k) {
  if (k < 2) throw DomainError("fixed pipeline requires k >= 2");
  return std::sqrt(2.0 * std::log(static_cast<double>(k + 1)) / static_cast<double>(k - 1));
}

HomogeneityWitness fixed_pipeline(const Graph& g, std::size_t k, std::uint64_t seed, std::size_t max_samples,
                                  unsigned threads) {
  const double threshold = fixed_pipeline_threshold(k);
  const Side side = denser_side(g);
  const Graph dense = side == Side::graph ? g : complement(g);
  const VertexSet core = greedy_peel(dense, 0.5);
  if (core.size() < k) {
    throw NoWitness("peeling left " + std::to_string(core.size()) + " vertices, fewer than k = " + std::to_string(k));
  }
  const ThinResult thinned = thin(induced(dense, core), k, fixed_pipeline_eps(k), seed, max_samples, threads);
  std::vector<Vertex> members;
  members.reserve(k);
  for (Vertex local : thinned.set) members.push_back(core[local]);
  return make_witness(g, VertexSet(std::move(members)), side, threshold, seed);
}

double variable_threshold(std::size_t order, double nu) {
  const double l = static_cast<double>(order);
  const double slack = order <= 1 ? 0.0 : nu * std::sqrt((l - 1.0) * std::log(l));
  return 0.5 * (l - 1.0) + slack;
}

HomogeneityWitness variable_finder(const Graph& g, std::size_t k, double nu, std::uint64_t seed,
                                   std::size_t max_restarts) {
  if (g.order() < k) throw NoWitness("graph has fewer than k vertices");
  const SkewWitness found = skew_stable_search(g, nu, seed, max_restarts);
  if (found.set.size() < k) {
    throw NoWitness("best skew-stable set has order " + std::to_string(found.set.size()) + " < k");
  }
  return make_witness(g, found.set, found.side, variable_threshold(found.set.size(), nu), seed);
}

const char* to_string(Mode mode) noexcept {
  switch (mode) {
    case Mode::peel:
      return "peel";
    case Mode::skew:
      return "skew";
    case Mode::thin:
      return "thin";
    case Mode::fixed:
      return "fixed";
    case Mode::variable:
      return "variable";
  }
  return "unknown";
}

std::optional<Mode> parse_mode(const std::string& name) {
  for (Mode m : {Mode::peel, Mode::skew, Mode::thin, Mode::fixed, Mode::variable}) {
    if (name == to_string(m)) return m;
  }
  return std::nullopt;
}

HomogeneityWitness find(const Graph& g, Mode mode, const FinderConfig& config) {
  switch (mode) {
    case Mode::peel: {
      const Side side = denser_side(g);
      const VertexSet core = greedy_peel(side == Side::graph ? g : complement(g), config.alpha);
      if (core.empty()) throw NoWitness("peeling removed every vertex");
      return make_witness(g, core, side, config.alpha * static_cast<double>(core.size()));
    }
    case Mode::skew: {
      const SkewWitness found = skew_stable_search(g, config.nu, config.seed, config.max_restarts);
      return make_witness(g, found.set, found.side, removal_stable_degree_bound(found.set.size(), config.nu),
                          config.seed);
    }
    case Mode::thin: {
      const ThinResult thinned = thin(g, config.k, config.eps, config.seed, config.max_samples, config.threads);
      const double c = static_cast<double>(min_degree(g)) / static_cast<double>(g.order());
      return make_witness(g, thinned.set, Side::graph, (c - config.eps) * static_cast<double>(config.k - 1),
                          config.seed);
    }
    case Mode::fixed:
      return fixed_pipeline(g, config.k, config.seed, config.max_samples, config.threads);
    case Mode::variable:
      return variable_finder(g, config.k, config.nu, config.seed, config.max_restarts);
  }
  throw DomainError("unknown finder mode");
}

}  // namespace qramsey::finders
