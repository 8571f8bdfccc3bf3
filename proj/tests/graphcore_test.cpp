#include <doctest.h>

#include <set>

#include "crochet/canonical.hpp"
#include "crochet/graph6.hpp"
#include "crochet/independence.hpp"
#include "crochet/verify.hpp"
#include "helpers.hpp"

using namespace crochet;
using testutil::h13;

TEST_CASE("graph basics") {
  Graph g(4);
  g.add_edge(0, 1);
  g.add_edge(2, 1);
  CHECK(g.size() == 2);
  CHECK(g.adjacent(1, 0));
  CHECK_THROWS_AS(g.add_edge(1, 1), GraphError);
  CHECK_THROWS_AS(g.add_edge(0, 1), GraphError);
  CHECK_THROWS_AS(g.add_edge(0, 4), GraphError);
  g.remove_edge(0, 1);
  CHECK(g.size() == 1);
  CHECK(g.components().size() == 3);
}

TEST_CASE("edge count is half the degree sum") {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 50; ++i) {
    const Graph g = testutil::random_graph(rng, 1 + i % 40, 0.2);
    int sum = 0;
    for (Vertex v = 0; v < g.order(); ++v) sum += g.degree(v);
    CHECK(sum == 2 * g.size());
  }
}

TEST_CASE("triangle detection") {
  CHECK(is_triangle_free(cycle_graph(5)));
  CHECK_FALSE(is_triangle_free(cycle_graph(3)));
  CHECK(is_triangle_free(h13()));
  CHECK(is_triangle_free(complete_bipartite(3, 4)));
}

TEST_CASE("independence number") {
  CHECK(independence_number(cycle_graph(5)) == 2);
  CHECK(independence_number(complete_bipartite(2, 3)) == 3);
  CHECK(independence_number(h13()) == 4);
  CHECK(brute_alpha(h13()) == 4);
  CHECK(independence_number(Graph(7)) == 7);
  CHECK(independence_number(Graph()) == 0);
}

TEST_CASE("branch and bound agrees with exhaustive search on random graphs") {
  std::mt19937_64 rng(2024);
  std::uniform_int_distribution<int> pick_n(1, 18);
  std::uniform_real_distribution<double> pick_p(0.05, 0.7);
  for (int i = 0; i < 200; ++i) {
    const Graph g = testutil::random_graph(rng, pick_n(rng), pick_p(rng));
    REQUIRE_MESSAGE(independence_number(g) == brute_alpha(g), graph6_encode(g));
  }
}

TEST_CASE("alpha on sparse triangle-free graphs up to 30 vertices") {
  std::mt19937_64 rng(8);
  for (int i = 0; i < 40; ++i) {
    Graph g(20 + i % 11);
    std::uniform_int_distribution<int> pick(0, g.order() - 1);
    for (int t = 0; t < 3 * g.order(); ++t) {
      const Vertex u = pick(rng), v = pick(rng);
      if (u == v || g.adjacent(u, v) || (g.neighbors(u) & g.neighbors(v)).size()) continue;
      g.add_edge(u, v);
    }
    REQUIRE(is_triangle_free(g));
    CHECK(independence_number(g) == brute_alpha(g));
  }
}

TEST_CASE("brute_alpha refuses large graphs") {
  CHECK_THROWS_AS(brute_alpha(Graph(kBruteAlphaLimit + 1)), GraphError);
  CHECK(brute_alpha(Graph(6)) == 6);
  CHECK(brute_alpha(cycle_graph(5)) == 2);
}

TEST_CASE("closed neighbourhood deletion") {
  const auto c5 = closed_neighborhood_deletion(cycle_graph(5), 2);
  CHECK(c5.graph.order() == 2);
  CHECK(c5.graph.size() == 1);
  CHECK(closed_neighborhood_deletion(path_graph(2), 0).graph.order() == 0);
  for (Vertex v = 0; v < 13; ++v) {
    const auto d = closed_neighborhood_deletion(h13(), v);
    CHECK(d.graph.order() == 8);
    CHECK(brute_alpha(d.graph) == 3);
  }
}

TEST_CASE("destabilisers") {
  const Graph c5 = cycle_graph(5);
  for (Vertex u = 0; u < 5; ++u) {
    CHECK(is_destabiliser(c5, c5.closed_neighborhood(u)));
    CHECK(is_minimal_destabiliser(c5, c5.closed_neighborhood(u)));
    CHECK_FALSE(is_destabiliser(c5, VertexSet::single(u)));
  }
  CHECK(is_destabiliser(c5, c5.vertices()));
  CHECK_FALSE(is_minimal_destabiliser(c5, c5.vertices()));
}

TEST_CASE("destabiliser agrees with enumeration of maximum independent sets") {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 60; ++i) {
    const Graph g = testutil::random_graph(rng, 4 + i % 8, 0.35);
    const int n = g.order();
    const int a = brute_alpha(g);
    std::vector<unsigned> maxsets;
    for (unsigned s = 0; s < (1u << n); ++s) {
      VertexSet vs;
      for (int v = 0; v < n; ++v)
        if (s >> v & 1) vs.insert(v);
      if (vs.size() == a && g.is_independent(vs)) maxsets.push_back(s);
    }
    for (unsigned m = 1; m < (1u << n); m += 7) {
      VertexSet ms;
      for (int v = 0; v < n; ++v)
        if (m >> v & 1) ms.insert(v);
      bool hits = true;
      for (unsigned s : maxsets) hits &= (s & m) != 0;
      CHECK(is_destabiliser(g, ms) == hits);
    }
  }
}

TEST_CASE("d-stitch classification") {
  CHECK(classify_d_stitch(path_graph(2), 0) == 1);
  CHECK(classify_d_stitch(path_graph(2), 1) == 1);
  for (Vertex v = 0; v < 5; ++v) CHECK(classify_d_stitch(cycle_graph(5), v) == 2);
  for (Vertex v = 0; v < 4; ++v) CHECK_FALSE(classify_d_stitch(cycle_graph(4), v).has_value());
}

TEST_CASE("edge criticality") {
  CHECK(is_edge_critical(cycle_graph(5)));
  CHECK_FALSE(is_edge_critical(path_graph(3)));
  CHECK(is_edge_critical(h13()));
  // Oracle: delete each edge and recompute exhaustively.
  const Graph g = h13();
  for (auto [u, v] : g.edges()) {
    Graph h = g;
    h.remove_edge(u, v);
    CHECK(brute_alpha(h) == 5);
  }
}

TEST_CASE("canonical forms") {
  std::mt19937_64 rng(9);
  const Graph c5 = cycle_graph(5);
  CHECK(canonical_form(testutil::random_relabel(c5, rng)) == canonical_form(testutil::random_relabel(c5, rng)));
  CHECK(canonical_form(c5) != canonical_form(path_graph(5)));
  CHECK(are_isomorphic(h13(), testutil::random_relabel(h13(), rng)));
  // C6 and two triangles share the degree sequence.
  CHECK_FALSE(are_isomorphic(cycle_graph(6), cycle_graph(3).disjoint_union(cycle_graph(3))));
}

TEST_CASE("canonical form is a complete invariant on random graphs") {
  std::mt19937_64 rng(17);
  for (int i = 0; i < 100; ++i) {
    const Graph g = testutil::random_graph(rng, 2 + i % 16, 0.3);
    const Graph h = testutil::random_relabel(g, rng);
    CHECK(canonical_form(g) == canonical_form(h));
    CHECK(canonical_graph(g) == canonical_graph(h));
    // One edge toggled changes the edge count, so the forms must differ.
    Graph k = h;
    if (k.adjacent(0, 1)) k.remove_edge(0, 1); else k.add_edge(0, 1);
    CHECK(canonical_form(g) != canonical_form(k));
  }
}

TEST_CASE("canonical forms separate all graphs on 5 vertices") {
  // 34 isomorphism classes of graphs on 5 vertices.
  std::set<CanonicalForm> forms;
  const std::vector<Edge> pairs = [] {
    std::vector<Edge> p;
    for (int u = 0; u < 5; ++u)
      for (int v = u + 1; v < 5; ++v) p.push_back({u, v});
    return p;
  }();
  for (unsigned s = 0; s < (1u << pairs.size()); ++s) {
    std::vector<Edge> es;
    for (std::size_t i = 0; i < pairs.size(); ++i)
      if (s >> i & 1) es.push_back(pairs[i]);
    forms.insert(canonical_form(Graph(5, es)));
  }
  CHECK(forms.size() == 34);
}

TEST_CASE("graph6 known strings") {
  CHECK(graph6_encode(Graph()) == "?");
  CHECK(graph6_encode(path_graph(2)) == "A_");
  CHECK(graph6_encode(cycle_graph(5)) == "Dhc");
  CHECK(graph6_decode(">>graph6<<A_\n") == path_graph(2));
  CHECK(graph6_decode("Dhc") == cycle_graph(5));
  CHECK_THROWS_AS(graph6_decode("A"), Graph6Error);
  CHECK_THROWS_AS(graph6_decode("A_x"), Graph6Error);
  CHECK_THROWS_AS(graph6_decode("\x7f"), Graph6Error);
}

TEST_CASE("graph6 round trip on 1000 random graphs") {
  CHECK(graph6_decode(graph6_encode(h13())) == h13());
  std::mt19937_64 rng(31);
  std::uniform_int_distribution<int> pick_n(0, Graph::kMaxVertices);
  std::uniform_real_distribution<double> pick_p(0.0, 1.0);
  for (int i = 0; i < 1000; ++i) {
    const Graph g = testutil::random_graph(rng, pick_n(rng), pick_p(rng));
    REQUIRE(graph6_decode(graph6_encode(g)) == g);
  }
}
