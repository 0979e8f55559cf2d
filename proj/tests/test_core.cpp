#include <doctest.h>

#include <map>

#include "oracles.hpp"
#include "qramsey/canonical.hpp"
#include "qramsey/errors.hpp"
#include "qramsey/graph.hpp"
#include "qramsey/graph6.hpp"
#include "qramsey/random.hpp"

using namespace qramsey;

namespace {

Graph cycle(std::size_t n) {
  Graph g(n);
  for (Vertex v = 0; v < n; ++v) g.add_edge(v, static_cast<Vertex>((v + 1) % n));
  return g;
}

Graph path(std::size_t n) {
  Graph g(n);
  for (Vertex v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
  return g;
}

}  // namespace

TEST_CASE("graph rejects loops and bad vertices") {
  Graph g(3);
  CHECK_THROWS_AS(g.add_edge(1, 1), InvalidVertex);
  CHECK_THROWS_AS(g.add_edge(0, 3), InvalidVertex);
  CHECK_THROWS_AS(VertexSet({1, 1}), InvalidVertex);
  CHECK_THROWS_AS(induced(g, VertexSet{0, 5}), InvalidVertex);
}

TEST_CASE("complement") {
  CHECK(complement(Graph::complete(4)) == Graph(4));
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const Graph g = oracle::random_graph(10 + seed * 7, 0.5, seed);
    const Graph c = complement(g);
    CHECK(complement(c) == g);
    for (Vertex u = 0; u < g.order(); ++u) {
      CHECK_FALSE(c.adjacent(u, u));
      for (Vertex v = u + 1; v < g.order(); ++v) CHECK(c.adjacent(u, v) != g.adjacent(u, v));
    }
  }
  // The 5-cycle is self-complementary.
  CHECK(oracle::brute_canonical(complement(cycle(5))) == oracle::brute_canonical(cycle(5)));
}

TEST_CASE("induced subgraphs") {
  CHECK(induced(Graph::complete(5), VertexSet{0, 1, 2}) == Graph::complete(3));
  const Graph g = oracle::random_graph(9, 0.5, 3);
  CHECK(induced(g, VertexSet::range(9)) == g);
  const Graph p = induced(path(4), VertexSet{0, 2, 3});
  CHECK(p.order() == 3);
  CHECK(p.edge_count() == 1);
  CHECK(p.adjacent(1, 2));
}

TEST_CASE("edge and degree counts") {
  CHECK(edge_count(Graph::complete(4), VertexSet::range(4)) == 6);
  CHECK(edge_count(cycle(5), VertexSet{0, 1, 2}) == 2);
  const Graph star = Graph::from_edges(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}});
  CHECK(deg_in(star, 0, VertexSet{1, 2, 3, 4}) == 4);

  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const Graph g = oracle::random_graph(70, 0.5, seed);
    const Graph c = complement(g);
    Rng rng(seed);
    const auto picked = rng.subset(70, 1 + rng.below(69));
    const VertexSet s(std::vector<Vertex>(picked.begin(), picked.end()));
    const std::size_t m = s.size();
    CHECK(edge_count(g, s) + edge_count(c, s) == m * (m - 1) / 2);
    CHECK(static_cast<long>(edge_count(g, s)) == oracle::edges_in(g, s.members()));
    std::size_t twice = 0;
    for (Vertex v : s) {
      twice += deg_in(g, v, s);
      CHECK(deg_in(g, v, s) + deg_in(c, v, s) == m - 1);
    }
    CHECK(twice == 2 * edge_count(g, s));
    const auto profile = degree_profile(g, s);
    for (std::size_t d : profile) CHECK(d <= m - 1);
    CHECK(static_cast<long>(min_degree(g, s)) == oracle::min_degree(g, s.members(), false));
    CHECK(static_cast<long>(min_degree(g, s, Side::complement)) == oracle::min_degree(g, s.members(), true));
  }
}

TEST_CASE("graph6 fixed vectors") {
  CHECK(encode_graph6(Graph(0)) == "?");
  CHECK(encode_graph6(Graph::complete(3)) == "Bw");
  CHECK(decode_graph6("Bw") == Graph::complete(3));
  // 5-cycle 0-1-2-3-4-0, bits 1,0,1,0,0,1,1,0,0,1 in column order.
  CHECK(encode_graph6(cycle(5)) == "Dhc");
  // Long header form for n = 63.
  const std::string big = encode_graph6(Graph(63));
  CHECK(big.substr(0, 4) == std::string("~??~"));
  CHECK(decode_graph6(big) == Graph(63));
}

TEST_CASE("graph6 rejects malformed input") {
  CHECK_THROWS_AS(decode_graph6(""), MalformedGraph6);
  CHECK_THROWS_AS(decode_graph6("B"), MalformedGraph6);    // body missing
  CHECK_THROWS_AS(decode_graph6("Bww"), MalformedGraph6);  // too long
  CHECK_THROWS_AS(decode_graph6("Bx"), MalformedGraph6);   // nonzero padding
  CHECK_THROWS_AS(decode_graph6("B\x1f"), MalformedGraph6);
  CHECK_THROWS_AS(decode_graph6("~??B"), MalformedGraph6);  // long header for a small order
}

TEST_CASE("graph6 round trip") {
  Rng rng(99);
  for (int i = 0; i < 300; ++i) {
    const std::size_t n = rng.below(33);
    const Graph g = oracle::random_graph(n, rng.uniform(), rng.next());
    CHECK(decode_graph6(encode_graph6(g)) == g);
  }
}

TEST_CASE("canonical labelling agrees with the brute-force form") {
  // Same class under the library iff same class under the oracle.
  for (std::size_t n = 1; n <= 6; ++n) {
    std::map<std::uint64_t, std::string> seen;
    std::map<std::string, std::uint64_t> back;
    const std::size_t pairs = n * (n - 1) / 2;
    const std::uint64_t step = n == 6 ? 7 : 1;  // every 7th labelled graph at n = 6
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << pairs); bits += step) {
      const Graph g = oracle::labelled_graph(n, bits);
      const std::uint64_t code = exact::canonical_code(g);
      const std::string form = oracle::brute_canonical(g);
      auto [it, fresh] = seen.emplace(code, form);
      CHECK(it->second == form);
      auto [jt, fresh2] = back.emplace(form, code);
      CHECK(jt->second == code);
    }
  }
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const std::size_t n = 7 + seed % 5;
    const Graph g = oracle::random_graph(n, 0.5, seed);
    Rng rng(seed);
    const auto perm = rng.subset(n, n);
    std::vector<Vertex> order(perm.begin(), perm.end());
    for (std::size_t i = n; i > 1; --i) std::swap(order[i - 1], order[rng.below(i)]);
    Graph h(n);
    for (Vertex u = 0; u < n; ++u) {
      for (Vertex v = u + 1; v < n; ++v) {
        if (g.adjacent(u, v)) h.add_edge(order[u], order[v]);
      }
    }
    CHECK(exact::canonical_code(g) == exact::canonical_code(h));
    CHECK(exact::canonical_graph(g) == exact::canonical_graph(h));
  }
}
