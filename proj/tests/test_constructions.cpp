#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "qramsey/constructions.hpp"
#include "qramsey/errors.hpp"

using namespace qramsey;
using namespace qramsey::constructions;

TEST_CASE("chappell-gimbel structure") {
  const Graph g = construct_chappell_gimbel(6, 2);
  REQUIRE(g.order() == 7);
  // P = {0,1}, Q = {2,3}, R = {4,5,6}.
  for (Vertex p : {0U, 1U}) CHECK(g.degree(p) == 5);
  for (Vertex q : {2U, 3U}) CHECK(g.degree(q) == 1);
  for (Vertex r : {4U, 5U, 6U}) CHECK(g.degree(r) == 2);

  CHECK(construct_chappell_gimbel(7, 1) == Graph(6));
  CHECK_THROWS_AS(construct_chappell_gimbel(4, 3), DomainError);
  CHECK_THROWS_AS(construct_chappell_gimbel(4, 0), DomainError);

  for (std::size_t t = 1; t <= 5; ++t) {
    for (std::size_t k = 2 * t - 1; k <= 2 * t + 6; ++k) {
      const Graph h = construct_chappell_gimbel(k, t);
      CHECK(h.order() == k + 2 * t - 3);
      const std::size_t side = 2 * (t - 1);
      for (Vertex v = 0; v < 2 * side; ++v) {
        std::size_t cross = 0;
        const Vertex lo = v < side ? static_cast<Vertex>(side) : 0;
        for (Vertex u = lo; u < lo + side; ++u) cross += h.adjacent(u, v) ? 1 : 0;
        CHECK(cross == t - 1);
      }
    }
  }
}

TEST_CASE("gnp sampler") {
  CHECK(sample_gnp_half(0, 3) == Graph(0));
  CHECK(sample_gnp_half(1, 3) == Graph(1));
  const Graph g = sample_gnp_half(1000, 42);
  const double pairs = 1000.0 * 999.0 / 2.0;
  CHECK(std::fabs(static_cast<double>(g.edge_count()) - pairs / 2.0) <= 4.0 * 0.5 * std::sqrt(pairs));
  CHECK(sample_gnp_half(50, 1) == sample_gnp_half(50, 1));
  for (std::uint64_t seed = 0; seed < 100; ++seed) CHECK_FALSE(sample_gnp_half(40, seed) == sample_gnp_half(40, seed + 1000));
}

TEST_CASE("block count and weighted parameters") {
  CHECK(block_count(1e6, 0.5 * 0.14 + 1.0 / 7.0) == 0);
  CHECK(block_count(2.0, 0.2) == 0);  // ln ln 2 < 0
  CHECK_THROWS_AS(weighted_params(1'000'000, 0.14), DegenerateParameters);
  CHECK_THROWS_AS(weighted_params(100, 0.3, 2), DomainError);

  const auto p = weighted_params(100, 0.14, 2);
  CHECK(p.nu_prime == doctest::Approx(0.212857).epsilon(1e-5));
  CHECK(p.z == 2);
  CHECK(p.z_overridden);
  CHECK(p.block_size == 75);
  CHECK(p.probability(0, 0) == doctest::Approx(0.5 + std::pow(4.0, -8.0)));
  CHECK(p.probability(0, 0) == doctest::Approx(0.5000152588).epsilon(1e-10));
  CHECK(p.probability(0, 1) == doctest::Approx(0.5 - std::pow(4.0, -13.0)));
  CHECK(p.probability(0, 1) == p.probability(1, 0));
  CHECK(p.probability(1, 1) == doctest::Approx(0.5 + std::pow(4.0, -16.0)));
  for (double x : p.p) CHECK((x > 0.0 && x < 1.0));
}

TEST_CASE("weighted sampler") {
  const auto params = weighted_params(100, 0.14, 1);
  CHECK(params.probability(0, 0) == doctest::Approx(0.5 + 1.0 / 256.0));
  const auto sample = sample_weighted(params, 5);
  CHECK(sample.graph.order() == 50);
  const double pairs = 50.0 * 49.0 / 2.0;
  const double p = params.probability(0, 0);
  CHECK(std::fabs(static_cast<double>(sample.graph.edge_count()) - p * pairs) <= 4.0 * std::sqrt(pairs * p * (1 - p)));
  const auto again = sample_weighted(params, 5);
  CHECK(again.graph == sample.graph);
  CHECK(again.blocks == sample.blocks);

  const auto two = sample_weighted(weighted_params(100, 0.14, 2), 1);
  CHECK(two.graph.order() == 150);
  for (Vertex v = 0; v < 150; ++v) CHECK(two.blocks[v] == v / 75);
}

TEST_CASE("eps_hat and the weighted threshold") {
  CHECK(eps_hat_for_blocks(1) == 0.0009765625);
  double prev = 1.0;
  for (std::size_t g = 1; g < 6; ++g) {
    CHECK(eps_hat_for_blocks(g) < prev);
    prev = eps_hat_for_blocks(g);
  }
  CHECK_THROWS_AS(eps_hat_for_blocks(0), DegenerateParameters);
  CHECK_THROWS_AS(eps_hat(1e6, 0.14), DegenerateParameters);
  CHECK(homogeneity_threshold_weighted(4, 0.2) == doctest::Approx((0.5 - std::pow(4.0, -0.2)) * 3.0));
  CHECK(homogeneity_threshold_weighted(4, 0.2) < 0.0);
  CHECK_THROWS_AS(homogeneity_threshold_weighted(1, 0.2), DomainError);
}
