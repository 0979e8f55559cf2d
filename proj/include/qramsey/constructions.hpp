#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "qramsey/graph.hpp"

namespace qramsey::constructions {

// Block layout of the Chappell-Gimbel graph: P is a clique and Q a
// coclique, each of order 2(t-1); R is a coclique of order k-2t+1.
// P-R is complete, Q-R empty, and p_i ~ q_{(i+j) mod 2(t-1)} for
// j = 0..t-2. Vertices are numbered P, then Q, then R.
Graph construct_chappell_gimbel(std::size_t k, std::size_t t);

// G(n, 1/2); edge ij is present iff pair_hash(seed, i, j) has its low bit set.
Graph sample_gnp_half(std::size_t n, std::uint64_t seed);

// g(x) = floor((nu'/8) ln x / ln ln x); 0 when ln ln x <= 0.
std::size_t block_count(double x, double nu_prime);

struct WeightedBlockParams {
  std::size_t k = 0;
  double nu = 0.0;
  double nu_prime = 0.0;  // nu/2 + 1/7
  std::size_t z = 0;      // number of blocks
  std::size_t block_size = 0;
  bool z_overridden = false;
  std::vector<double> p;  // z*z edge probabilities, row-major, 0-based blocks

  double probability(std::size_t i, std::size_t j) const { return p[i * z + j]; }
  std::size_t order() const { return z * block_size; }
};

// Diagonal p_ii = 1/2 + (2z)^{-8i}; off-diagonal p_ij = 1/2 - (2z)^{-4(i+j)-1},
// with 1-based block indices. Requires 0 < nu < 2/7. Throws
// DegenerateParameters when g(k) = 0 and no override is given; at any k
// that fits in memory this is the normal outcome.
WeightedBlockParams weighted_params(std::size_t k, double nu, std::optional<std::size_t> z_override = std::nullopt);

struct WeightedSample {
  Graph graph;
  std::vector<std::size_t> blocks;  // vertex -> 0-based block index
};

WeightedSample sample_weighted(const WeightedBlockParams& params, std::uint64_t seed);

// eps_hat(x) = (2 g(x))^{-8 g(x) - 2} with nu' = nu/2 + 1/7.
// Throws DegenerateParameters when g(x) = 0.
double eps_hat(double x, double nu);
// Same with g(x) supplied directly (g >= 1).
double eps_hat_for_blocks(std::size_t g);

// (1/2 - ell^{-nu}) (ell - 1). May be negative for small ell.
double homogeneity_threshold_weighted(std::size_t ell, double nu);

}  // namespace qramsey::constructions
