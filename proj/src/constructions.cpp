#include "qramsey/constructions.hpp"

#include <cmath>
#include <string>

#include "qramsey/errors.hpp"
#include "qramsey/random.hpp"

namespace qramsey::constructions {

Graph construct_chappell_gimbel(std::size_t k, std::size_t t) {
  if (t < 1 || k + 1 < 2 * t) throw DomainError("construct_chappell_gimbel requires t >= 1 and k >= 2t - 1");
  const std::size_t half = 2 * (t - 1);
  const std::size_t rest = k + 1 - 2 * t;
  const std::size_t n = 2 * half + rest;
  Graph g(n);
  auto p = [](std::size_t i) { return static_cast<Vertex>(i); };
  auto q = [half](std::size_t i) { return static_cast<Vertex>(half + i); };
  auto r = [half](std::size_t i) { return static_cast<Vertex>(2 * half + i); };

  for (std::size_t i = 0; i < half; ++i) {
    for (std::size_t j = i + 1; j < half; ++j) g.add_edge(p(i), p(j));
    for (std::size_t j = 0; j + 1 < t; ++j) g.add_edge(p(i), q((i + j) % half));
    for (std::size_t j = 0; j < rest; ++j) g.add_edge(p(i), r(j));
  }
  return g;
}

Graph sample_gnp_half(std::size_t n, std::uint64_t seed) {
  Graph g(n);
  for (Vertex i = 0; i < n; ++i) {
    for (Vertex j = i + 1; j < n; ++j) {
      if (pair_hash(seed, i, j) & 1U) g.add_edge(i, j);
    }
  }
  return g;
}

std::size_t block_count(double x, double nu_prime) {
  if (!(x > 1.0)) return 0;
  const double loglog = std::log(std::log(x));
  if (!(loglog > 0.0)) return 0;
  const double value = std::floor(nu_prime / 8.0 * std::log(x) / loglog);
  return value < 1.0 ? 0 : static_cast<std::size_t>(value);
}

WeightedBlockParams weighted_params(std::size_t k, double nu, std::optional<std::size_t> z_override) {
  if (!(nu > 0.0 && nu < 2.0 / 7.0)) throw DomainError("weighted construction requires 0 < nu < 2/7");
  if (k < 2) throw DomainError("weighted construction requires k >= 2");
  WeightedBlockParams params;
  params.k = k;
  params.nu = nu;
  params.nu_prime = 0.5 * nu + 1.0 / 7.0;
  if (z_override) {
    if (*z_override < 1) throw DomainError("z override must be at least 1");
    params.z = *z_override;
    params.z_overridden = true;
  } else {
    params.z = block_count(static_cast<double>(k), params.nu_prime);
    if (params.z == 0) {
      throw DegenerateParameters("g(k) = 0 for k = " + std::to_string(k) +
                                 ": the construction has no blocks at this scale; pass a z override");
    }
  }
  const std::size_t z = params.z;
  const double zd = static_cast<double>(z);
  params.block_size = static_cast<std::size_t>(std::floor((1.0 - 1.0 / (2.0 * zd)) * static_cast<double>(k)));
  params.p.resize(z * z);
  const double base = 2.0 * zd;
  for (std::size_t i = 1; i <= z; ++i) {
    for (std::size_t j = 1; j <= z; ++j) {
      const double value = i == j ? 0.5 + std::pow(base, -8.0 * static_cast<double>(i))
                                  : 0.5 - std::pow(base, -4.0 * static_cast<double>(i + j) - 1.0);
      if (!(value > 0.0 && value < 1.0)) throw DegenerateParameters("edge probability outside (0,1)");
      params.p[(i - 1) * z + (j - 1)] = value;
    }
  }
  return params;
}

WeightedSample sample_weighted(const WeightedBlockParams& params, std::uint64_t seed) {
  const std::size_t n = params.order();
  WeightedSample out{Graph(n), std::vector<std::size_t>(n)};
  for (std::size_t v = 0; v < n; ++v) out.blocks[v] = v / params.block_size;
  for (Vertex i = 0; i < n; ++i) {
    for (Vertex j = i + 1; j < n; ++j) {
      if (pair_uniform(seed, i, j) < params.probability(out.blocks[i], out.blocks[j])) out.graph.add_edge(i, j);
    }
  }
  return out;
}

double eps_hat_for_blocks(std::size_t g) {
  if (g < 1) throw DegenerateParameters("eps_hat needs g(x) >= 1");
  const double gd = static_cast<double>(g);
  return std::pow(2.0 * gd, -8.0 * gd - 2.0);
}

double eps_hat(double x, double nu) {
  return eps_hat_for_blocks(block_count(x, 0.5 * nu + 1.0 / 7.0));
}

double homogeneity_threshold_weighted(std::size_t ell, double nu) {
  if (ell < 2) throw DomainError("threshold needs ell >= 2");
  const double l = static_cast<double>(ell);
  return (0.5 - std::pow(l, -nu)) * (l - 1.0);
}

}  // namespace qramsey::constructions
