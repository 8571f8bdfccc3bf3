#include <doctest.h>

#include <set>

#include "checks.hpp"
#include "crochet/canonical.hpp"
#include "crochet/crochet.hpp"
#include "crochet/graph6.hpp"
#include "crochet/independence.hpp"
#include "crochet/verify.hpp"
#include "helpers.hpp"

using namespace crochet;

namespace {

const std::vector<Edge> kK23{{0, 1}, {0, 2}, {0, 3}, {4, 1}, {4, 2}, {4, 3}};

Pattern worked() { return Pattern(Graph(5, kK23), {{0, 1}, {0, 2}, {0, 3}, {4, 1}}); }

VertexSet set_of(std::initializer_list<Vertex> vs) {
  VertexSet s;
  for (Vertex v : vs) s.insert(v);
  return s;
}

int distance(const Graph& g, Vertex a, Vertex b) {
  VertexSet seen = VertexSet::single(a), frontier = seen;
  for (int d = 0; !frontier.empty(); ++d) {
    if (frontier.contains(b)) return d;
    VertexSet next;
    for (Vertex v : frontier) next |= g.neighbors(v);
    frontier = next - seen;
    seen |= next;
  }
  return -1;
}

}  // namespace

TEST_CASE("small builds") {
  const Graph k1 = build_ordinary(Pattern(Graph(1), {}));
  CHECK(k1 == path_graph(2));
  const Graph k2 = build_ordinary(Pattern(path_graph(2), {}));
  CHECK(are_isomorphic(k2, cycle_graph(5)));
  const Graph p3 = build_ordinary(Pattern(path_graph(3), {}));
  CHECK(p3.order() == 8);
  CHECK(p3.size() == 10);
  CHECK(independence_number(p3) == 3);
}

TEST_CASE("processing order") {
  CHECK(order_vertices(Pattern(Graph(1), {})) == std::vector<Vertex>{0});
  for (int m = 1; m <= 6; ++m) {
    for (const auto& hp : enumerate_h13_patterns(m)) {
      const auto order = order_vertices(hp.pattern());
      CHECK(is_valid_order(hp.pattern(), order));
    }
  }
  const Vertex printed[] = {0, 1, 2, 3, 4};
  CHECK(is_valid_order(worked(), printed));
  const Vertex scattered[] = {1, 2, 0, 3, 4};
  CHECK(is_valid_order(worked(), scattered));
  const Vertex repeated[] = {1, 2, 0, 3, 3};
  CHECK_FALSE(is_valid_order(worked(), repeated));
  const Vertex short_order[] = {0, 1, 2, 3};
  CHECK_FALSE(is_valid_order(worked(), short_order));
  CHECK_THROWS(build_state(worked(), std::vector<Vertex>{0, 1, 2, 3, 3}));
  // Two unlinked starts meet later: Case 1 twice, then Case 4.
  const auto s = build_state(worked(), std::vector<Vertex>{1, 2, 0, 3, 4});
  CHECK(s.trace[1].kind == StepCase::kCase1);
  CHECK(s.trace[2].kind == StepCase::kCase4);
  CHECK(are_isomorphic(s.graph, build_ordinary(worked())));
}

TEST_CASE("worked example bases") {
  CrochetBuilder b(worked());
  b.step(0);
  b.step(1);
  const auto c1 = b.resolve_base(0, 2);
  CHECK(c1.tag == BaseCase::kC1);
  CHECK(c1.base.all() == b.state().graph.closed_neighborhood(0));
  b.step(2);
  // p1 under (C2): the path u2 - v1 - v2 - w2.
  const auto c2 = b.resolve_base(0, 3);
  CHECK(c2.tag == BaseCase::kC2);
  CHECK(c2.base.all() == set_of({6, 0, 1, 3}));
  b.step(3);
  b.step(4);
  CHECK(b.state().trace.back().kind == StepCase::kCase6);
  CHECK(b.state().trace[0].kind == StepCase::kCase1);
  CHECK(b.state().trace[1].kind == StepCase::kCase2);
  CHECK(b.state().trace[2].kind == StepCase::kCase3);
}

TEST_CASE("worked example against fixtures") {
  for (const auto& c : checks::fixtures(checks::default_fixture_dir())) {
    CHECK_MESSAGE(c.pass, c.name << ": " << c.detail);
  }
}

TEST_CASE("state invariants at every step") {
  BuildOptions o;
  o.verify = true;
  for (int m = 1; m <= 6; ++m) {
    for (const auto& hp : enumerate_h13_patterns(m)) {
      const auto cm = contract_to_auxiliary(hp);
      CrochetBuilder b(cm.auxiliary, o);
      int k = 0;
      for (Vertex p : order_vertices(cm.auxiliary)) {
        b.step(p);
        ++k;
        const auto& s = b.state();
        CHECK(independence_number(s.graph) == k);
        CHECK(is_triangle_free(s.graph));
        for (const auto& pv : s.vertex) {
          if (pv.position < 0) continue;
          CHECK(pv.active.size() <= 2);
          for (const auto& a : pv.active) {
            CHECK(a.vertex < s.graph.order());
            if (a.faces) CHECK(s.vertex[*a.faces].position >= 0);
          }
        }
      }
    }
  }
}

TEST_CASE("case 2 closes a C5") {
  const auto s = build_state(Pattern(path_graph(2), {}));
  const auto& a = s.vertex[0];
  const auto& b = s.vertex[1];
  CHECK(distance(s.graph, a.apex, b.apex) == 2);
  CHECK(s.graph.adjacent(*a.coapex, *b.coapex));
  const auto fa = std::find_if(a.active.begin(), a.active.end(),
                               [&](const ActiveVertex& x) { return x.vertex == *a.coapex; });
  REQUIRE(fa != a.active.end());
  CHECK(fa->faces == 1);
}

TEST_CASE("P3 with the middle vertex last reaches Case 4") {
  const Pattern p3(path_graph(3), {});
  const auto s = build_state(p3, std::vector<Vertex>{0, 2, 1});
  CHECK(s.trace.back().kind == StepCase::kCase4);
  CHECK(are_isomorphic(s.graph, build_ordinary(p3)));
  CHECK(s.graph.order() == 8);
  CHECK(s.graph.size() == 10);
}

TEST_CASE("the four K23 patterns give four distinct (3,6;16,32)-graphs") {
  const auto ps = enumerate_orientations(complete_bipartite(2, 3));
  REQUIRE(ps.size() == 4);
  std::set<CanonicalForm> forms;
  for (const auto& p : ps) {
    const Graph g = build_ordinary(p);
    CHECK(g.order() == 16);
    CHECK(g.size() == 32);
    CHECK(brute_alpha(g) == 5);
    CHECK(is_triangle_free(g));
    forms.insert(canonical_form(g));
  }
  CHECK(forms.size() == 4);
  // The worked example is one of them.
  CHECK(forms.count(canonical_form(build_ordinary(worked()))));
}

TEST_CASE("the all-out K23 pattern uses the triangular stitch") {
  const Pattern p(Graph(5, kK23), {{0, 1}, {0, 2}, {0, 3}, {4, 1}, {4, 2}, {4, 3}});
  const auto s = build_state(p);
  CHECK(s.trace.back().kind == StepCase::kCase5);
  CHECK(brute_alpha(s.graph) == 5);
  CHECK(s.graph.size() == 32);
}

TEST_CASE("decorated builds") {
  const Graph c4 = cycle_graph(4);
  const Graph h = build(H13Pattern(Pattern(c4, {}), {Hyperedge{0, 1, 2, 3}}));
  CHECK(h.order() == 13);
  CHECK(h.size() == 26);
  CHECK(are_isomorphic(h, testutil::h13()));

  Graph minus = complete_bipartite(2, 3);
  minus.remove_edge(minus.edges().back().first, minus.edges().back().second);
  int seen = 0;
  for (const auto& p : enumerate_orientations(minus)) {
    for (const auto& hp : enumerate_decorations(p)) {
      if (hp.hyperedges().size() != 1) continue;
      ++seen;
      const Graph g = build(hp);
      CHECK(g.order() == 16);
      CHECK(g.size() == 33);
      CHECK(brute_alpha(g) == 5);
      CHECK(is_triangle_free(g));
    }
  }
  CHECK(seen == 2);
}

TEST_CASE("empty decoration leaves the build unchanged") {
  for (const auto& hp : enumerate_h13_patterns(5)) {
    if (!hp.hyperedges().empty()) continue;
    CHECK(build(hp) == build_ordinary(hp.pattern()));
  }
}

TEST_CASE("alternative choices give isomorphic graphs") {
  BuildOptions backward;
  backward.triangle_winding = TriangleWinding::kBackward;
  BuildOptions swapped;
  swapped.swap_cycle_parts = true;
  BuildOptions fallback;
  fallback.decoration_fallback = 1;
  for (int m = 1; m <= 6; ++m) {
    for (const auto& hp : enumerate_h13_patterns(m)) {
      const auto f = canonical_form(build(hp));
      CHECK(canonical_form(build(hp, backward)) == f);
      CHECK(canonical_form(build(hp, swapped)) == f);
      CHECK(canonical_form(build(hp, fallback)) == f);
    }
  }
}

TEST_CASE("every order of the worked example gives the same graph") {
  BuildOptions o;
  o.verify = true;
  const auto want = canonical_form(build_ordinary(worked()));
  std::vector<Vertex> order{0, 1, 2, 3, 4};
  do {
    CHECK(canonical_form(build_state(worked(), order, o).graph) == want);
  } while (std::next_permutation(order.begin(), order.end()));
}

TEST_CASE("every order of every pattern on at most 5 vertices") {
  BuildOptions o;
  o.verify = true;
  for (int m = 1; m <= 5; ++m) {
    for (const auto& hp : enumerate_h13_patterns(m)) {
      const auto cm = contract_to_auxiliary(hp);
      const auto want = canonical_form(build(hp));
      std::vector<Vertex> order(cm.auxiliary.order());
      for (Vertex v = 0; v < cm.auxiliary.order(); ++v) order[v] = v;
      do {
        CrochetBuilder b(cm.auxiliary, o);
        b.run(order);
        CHECK(canonical_form(decorate(b.state(), cm)) == want);
      } while (std::next_permutation(order.begin(), order.end()));
    }
  }
}
