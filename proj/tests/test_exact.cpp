#include <doctest.h>

#include <set>

#include "oracles.hpp"
#include "qramsey/canonical.hpp"
#include "qramsey/constructions.hpp"
#include "qramsey/errors.hpp"
#include "qramsey/exact.hpp"
#include "qramsey/random.hpp"

using namespace qramsey;
using namespace qramsey::exact;

namespace {

Graph cycle(std::size_t n) {
  Graph g(n);
  for (Vertex v = 0; v < n; ++v) g.add_edge(v, static_cast<Vertex>((v + 1) % n));
  return g;
}

}  // namespace

TEST_CASE("is_homogeneous") {
  CHECK(is_homogeneous(Graph::complete(5), VertexSet::range(5), 4) == Side::graph);
  const Graph p3 = Graph::from_edges(3, {{0, 1}, {1, 2}});
  CHECK_FALSE(is_homogeneous(p3, VertexSet::range(3), 2).has_value());
  CHECK(is_homogeneous(cycle(5), VertexSet::range(5), 2) == Side::graph);
  CHECK(is_homogeneous(Graph(4), VertexSet::range(4), 3) == Side::complement);
  CHECK_THROWS_AS(is_homogeneous(p3, VertexSet{4}, 0), InvalidVertex);
}

TEST_CASE("fixed verifier examples") {
  const auto vacuous = verify_no_homogeneous_fixed(Graph(4), 6, 1);
  CHECK(vacuous.verified);
  CHECK(vacuous.subsets_checked == 0);

  const auto k7 = verify_no_homogeneous_fixed(Graph::complete(7), 6, 5);
  CHECK_FALSE(k7.verified);
  REQUIRE(k7.violating_set.has_value());
  CHECK(k7.violating_set->size() == 6);
  CHECK(k7.violating_side == Side::graph);

  const auto cg = verify_no_homogeneous_fixed(constructions::construct_chappell_gimbel(6, 2), 6, 2);
  CHECK(cg.verified);
  CHECK(cg.subsets_checked == 7);
  CHECK(cg.subsets_checked == subsets_required(7, 6, ClaimType::fixed));

  CHECK_THROWS_AS(verify_no_homogeneous_fixed(Graph::complete(12), 6, 6, 100), BudgetExceeded);
  CHECK_THROWS_AS(verify_no_homogeneous_fixed(Graph(65), 2, 1), DomainError);
}

TEST_CASE("verifiers agree with the brute-force oracle and under complement") {
  Rng rng(7);
  for (int i = 0; i < 150; ++i) {
    const std::size_t n = 2 + rng.below(7);
    const Graph g = oracle::random_graph(n, rng.uniform(), rng.next());
    const std::size_t k = 2 + rng.below(n - 1);
    const double t = static_cast<double>(rng.below(k));
    const auto cert = verify_no_homogeneous_fixed(g, k, t);
    CHECK(cert.verified == !oracle::has_homogeneous_fixed(g, k, t));
    CHECK(verify_no_homogeneous_fixed(complement(g), k, t).verified == cert.verified);
    if (cert.verified) {
      CHECK(cert.subsets_checked == subsets_required(n, k, ClaimType::fixed));
    } else {
      CHECK(oracle::homogeneous(g, cert.violating_set->members(), t));
    }

    const ThresholdFunction f = parse_threshold("half-plus-nu:0.1");
    const auto var = verify_no_homogeneous_variable(g, k, f);
    bool expected = true;
    for (std::size_t l = k; l <= n; ++l) expected = expected && !oracle::has_homogeneous_fixed(g, l, f.value(l));
    CHECK(var.verified == expected);
    CHECK(verify_no_homogeneous_variable(complement(g), k, f).verified == var.verified);
    if (var.verified) CHECK(var.subsets_checked == subsets_required(n, k, ClaimType::variable));
  }
}

TEST_CASE("threshold functions") {
  CHECK(parse_threshold("const:2").value(9) == 2.0);
  CHECK(parse_threshold("ratio:0.25").value(8) == 2.0);
  CHECK(parse_threshold("half-plus-nu:0").value(9) == 4.0);
  CHECK(parse_threshold("weighted:0.2").value(4) == doctest::Approx((0.5 - std::pow(4.0, -0.2)) * 3.0));
  CHECK(parse_threshold("ratio:0.25").id == "ratio:0.25");
  CHECK_THROWS_AS(parse_threshold("ratio"), DomainError);
  CHECK_THROWS_AS(parse_threshold("ratio:x"), DomainError);
  CHECK_THROWS_AS(parse_threshold("cubic:1"), DomainError);
}

TEST_CASE("subsets_required") {
  CHECK(subsets_required(7, 6, ClaimType::fixed) == 7);
  CHECK(subsets_required(5, 3, ClaimType::variable) == 10 + 5 + 1);
  CHECK(subsets_required(3, 5, ClaimType::fixed) == 0);
}

TEST_CASE("enumeration counts") {
  const std::size_t expected[] = {1, 1, 2, 4, 11, 34, 156, 1044, 12346};
  for (std::size_t n = 0; n <= 8; ++n) CHECK(enumerate_small(n).size() == expected[n]);
  CHECK_THROWS_AS(enumerate_small(11, 10), CeilingExceeded);
}

TEST_CASE("enumeration matches brute-force classes") {
  for (std::size_t n = 1; n <= 5; ++n) {
    std::set<std::string> classes;
    const std::size_t pairs = n * (n - 1) / 2;
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << pairs); ++bits) {
      classes.insert(oracle::brute_canonical(oracle::labelled_graph(n, bits)));
    }
    std::set<std::string> emitted;
    for (const Graph& g : enumerate_graphs(n)) emitted.insert(oracle::brute_canonical(g));
    CHECK(emitted == classes);
    CHECK(enumerate_graphs(n).size() == classes.size());
  }
  std::set<std::string> seven;
  for (const Graph& g : enumerate_graphs(7)) seven.insert(oracle::brute_canonical(g));
  CHECK(seven.size() == 1044);
}

TEST_CASE("enumeration is isomorph-free") {
  std::set<std::uint64_t> codes;
  const auto level = enumerate_small(8);
  for (const auto& g : level) codes.insert(canonical_code(g));
  CHECK(codes.size() == level.size());
  CHECK(enumerate_small(7, 10, 4) == enumerate_small(7));
}

TEST_CASE("exact fixed values") {
  const auto r14 = exact_fixed(1, 4);
  CHECK(r14.value == 4);
  CHECK(r14.witness_graph.order() == 3);
  CHECK(exact_fixed(1, 2).value == 2);
  CHECK(exact_fixed(1, 3).value == 3);
  const auto r26 = exact_fixed(2, 6);
  CHECK(r26.value == 8);
  CHECK(r26.witness_graph.order() == 7);
  CHECK(verify_no_homogeneous_fixed(r26.witness_graph, 6, 2).verified);
  CHECK(r26.orders.back().all_contain);
  CHECK(r26.orders.back().graphs == 12346);

  ExactOptions threaded;
  threaded.threads = 4;
  const auto r26t = exact_fixed(2, 6, threaded);
  CHECK(r26t.value == r26.value);
  CHECK(r26t.witness_graph == r26.witness_graph);
  CHECK(r26t.subsets_examined == r26.subsets_examined);

  CHECK_THROWS_AS(exact_fixed(3, 3), DomainError);
  CHECK_THROWS_AS(exact_fixed(0, 1), DomainError);
}

TEST_CASE("exact fixed respects the construction's lower bound") {
  for (std::size_t k = 2; k <= 6; ++k) {
    for (std::size_t t = 1; 2 * t <= k + 1 && t < k; ++t) {
      ExactOptions opts;
      opts.ceiling = 9;
      try {
        const auto r = exact_fixed(t, k, opts);
        CHECK(r.value >= k + 2 * t - 2);
        CHECK(verify_no_homogeneous_fixed(r.witness_graph, k, static_cast<double>(t)).verified);
      } catch (const CeilingExceeded& e) {
        CHECK(e.lower() >= k + 2 * t - 2);
      }
    }
  }
}

TEST_CASE("monotonicity spot check above the exact value") {
  const auto r = exact_fixed(2, 6);
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const Graph g = oracle::random_graph(r.value + 1, 0.5, seed);
    CHECK_FALSE(verify_no_homogeneous_fixed(g, 6, 2).verified);
  }
}

TEST_CASE("budget and ceiling reporting") {
  ExactOptions tiny;
  tiny.budget = 50;
  try {
    exact_fixed(2, 6, tiny);
    FAIL("expected BudgetExceeded");
  } catch (const BudgetExceeded& e) {
    CHECK(e.lower() >= 6);
  }
  ExactOptions low;
  low.ceiling = 7;
  CHECK_THROWS_AS(exact_fixed(2, 6, low), CeilingExceeded);
}

TEST_CASE("exact variable values") {
  // With t(l) = 0 every set qualifies, so the value is k.
  CHECK(exact_variable(parse_threshold("const:0"), 3).value == 3);
  // A constant threshold of 1 on orders >= k reduces to R*_1(k) = k.
  const auto r = exact_variable(parse_threshold("const:1"), 4);
  CHECK(r.value == 4);
  CHECK(verify_no_homogeneous_variable(r.witness_graph, 4, parse_threshold("const:1")).verified);
}
