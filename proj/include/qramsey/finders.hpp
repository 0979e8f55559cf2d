#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>

#include "qramsey/graph.hpp"

namespace qramsey::finders {

// Positive certificate: `set` induces minimum degree `min_degree` on
// `side`, and min_degree >= threshold.
struct HomogeneityWitness {
  VertexSet set;
  Side side = Side::graph;
  std::size_t min_degree = 0;
  double threshold = 0.0;
  std::optional<std::uint64_t> seed;
};

// Recomputes the minimum degree of `side` on `set` and packages a witness.
// Throws NoWitness if it falls below `threshold`.
HomogeneityWitness make_witness(const Graph& g, VertexSet set, Side side, double threshold,
                                std::optional<std::uint64_t> seed = std::nullopt);

// True iff the recorded min_degree matches a fresh recomputation and
// reaches the threshold.
bool verify_witness(const Graph& g, const HomogeneityWitness& w);

// Repeatedly removes the lowest-indexed vertex whose degree is below
// alpha * (current order). The survivor H satisfies delta(g[H]) >= alpha|H|
// or is empty. Requires 0 <= alpha < 1.
VertexSet greedy_peel(const Graph& g, double alpha);

// Smallest n satisfying
//   n >= sqrt(1-a) / sqrt(1/2-a) * k * sqrt(1 + 1/(k (1-a) sqrt(1/2-a))),
// the order from which peeling a graph of density >= 1/2 leaves at least
// k vertices. Requires 0 <= alpha < 1/2.
std::size_t peel_guarantee_order(std::size_t k, double alpha);

// Best set reached by hill-climbing D_nu over single-vertex additions and
// removals. `discrepancy` is D(set) and `skew` is D_nu(set).
struct SkewSearchResult {
  VertexSet set;
  double discrepancy = 0.0;
  double skew = 0.0;
  std::size_t restarts = 0;
};

SkewSearchResult skew_local_search(const Graph& g, double nu, std::uint64_t seed, std::size_t max_restarts);

struct SkewWitness {
  VertexSet set;
  Side side = Side::graph;
  double discrepancy = 0.0;
  double skew = 0.0;
};

// skew_local_search plus the side selection: graph when D > 0, complement
// when D < 0. Throws NoWitness when the best set has D = 0.
SkewWitness skew_stable_search(const Graph& g, double nu, std::uint64_t seed, std::size_t max_restarts);

// Checks the one-step degree bound vertexwise: every v in x whose removal
// does not increase D_nu has degree at least
// removal_stable_degree_bound(|x|, nu) on the winning side of x. On a
// removal-stable set this covers every vertex. Sets with D(x) = 0 or
// |x| < 2 pass vacuously.
bool removal_stability_holds(const Graph& g, const VertexSet& x, double nu);

struct ThinResult {
  VertexSet set;
  std::size_t samples = 0;  // samples drawn, including the accepted one
};

// Las Vegas thinning: draws uniform k-subsets S of h and returns the first
// with delta(h[S]) >= (c - eps)(k-1), c = delta(h)/|V(h)|. Sample i uses
// derive_seed(seed, i), so `threads` never changes the result.
ThinResult thin(const Graph& h, std::size_t k, double eps, std::uint64_t seed, std::size_t max_samples,
                unsigned threads = 1);

// (v, T) is good when v has at least (c - eps)(k - 1) neighbours in T.
bool good_pair(const Graph& h, Vertex v, const VertexSet& t_set, double c, double eps, std::size_t k);

// Threshold reached by the fixed-order pipeline: (k-1)/2 - 2 sqrt((k-1) ln k).
double fixed_pipeline_threshold(std::size_t k);
// eps = sqrt(2 ln(k+1) / (k-1)), for which exp(eps^2 (k-1)/2) = k + 1.
double fixed_pipeline_eps(std::size_t k);

// Densest side, greedy peel at alpha = 1/2, then thinning to exactly k
// vertices. Throws NoWitness if the peel leaves fewer than k vertices.
HomogeneityWitness fixed_pipeline(const Graph& g, std::size_t k, std::uint64_t seed, std::size_t max_samples = 1000,
                                  unsigned threads = 1);

// (l-1)/2 + nu sqrt((l-1) ln l).
double variable_threshold(std::size_t order, double nu);

// Skew search, accepted when the set has order l >= k and minimum degree
// at least variable_threshold(l, nu) on the winning side.
HomogeneityWitness variable_finder(const Graph& g, std::size_t k, double nu, std::uint64_t seed,
                                   std::size_t max_restarts = 200);

enum class Mode { peel, skew, thin, fixed, variable };

const char* to_string(Mode mode) noexcept;
std::optional<Mode> parse_mode(const std::string& name);

struct FinderConfig {
  double alpha = 0.5;
  double nu = 0.0;
  double eps = 0.5;
  std::size_t k = 2;
  std::uint64_t seed = 0;
  std::size_t max_restarts = 200;
  std::size_t max_samples = 1000;
  unsigned threads = 1;
};

// Dispatches to the finder for `mode` and returns a re-verified witness.
// peel works on the denser side and reports threshold alpha|H|; skew
// reports the removal-stable degree bound; thin reports (c - eps)(k-1).
HomogeneityWitness find(const Graph& g, Mode mode, const FinderConfig& config);

}  // namespace qramsey::finders
