#include <doctest.h>

#include "checks.hpp"
#include "crochet/crochet.hpp"
#include "crochet/verify.hpp"
#include "helpers.hpp"

using namespace crochet;

TEST_CASE("verify_build examples") {
  const Pattern k23 = enumerate_orientations(complete_bipartite(2, 3)).at(0);
  const auto good = verify_build(k23, build_ordinary(k23));
  CHECK(good.ok());
  CHECK(good.checks.size() == 5);
  for (const char* name : {"triangle_free", "alpha", "alpha_oracle", "order_formula", "size_formula"}) {
    REQUIRE(good.find(name));
    CHECK(good.find(name)->pass);
  }

  const Pattern k2(path_graph(2), {});
  CHECK(verify_build(k2, cycle_graph(5)).ok());

  const auto bad = verify_build(k23, cycle_graph(5));
  CHECK_FALSE(bad.ok());
  CHECK_FALSE(bad.find("order_formula")->pass);
  CHECK(bad.find("triangle_free")->pass);

  const auto tri = verify_build(Pattern(Graph(1), {}), cycle_graph(3));
  CHECK_FALSE(tri.find("triangle_free")->pass);
}

TEST_CASE("decorated reports skip the edge formula") {
  const H13Pattern hp(Pattern(cycle_graph(4), {}), {Hyperedge{0, 1, 2, 3}});
  const auto r = verify_build(hp, build(hp));
  CHECK(r.ok());
  CHECK(r.find("size_formula") == nullptr);
  CHECK(r.find("order_formula")->pass);
}

TEST_CASE("oracle limit") {
  const Pattern k23 = enumerate_orientations(complete_bipartite(2, 3)).at(0);
  CHECK(verify_build(k23, build_ordinary(k23), 10).find("alpha_oracle") == nullptr);
}

TEST_CASE("report serialisation") {
  const Pattern k2(path_graph(2), {});
  const auto r = verify_build(k2, cycle_graph(5));
  const std::string text = to_text(r);
  CHECK(text.find("PASS triangle_free") != std::string::npos);
  CHECK(std::count(text.begin(), text.end(), '\n') == static_cast<long>(r.checks.size()));
  const std::string csv = to_csv({r, r});
  CHECK(csv.starts_with("source,check,pass,detail\n"));
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 1 + 2 * static_cast<long>(r.checks.size()));
}

TEST_CASE("order invariance examples") {
  CHECK(order_invariance(Pattern(path_graph(2), {}), 10));
  const Pattern fig(Graph(5, std::vector<Edge>{{0, 1}, {0, 2}, {0, 3}, {4, 1}, {4, 2}, {4, 3}}),
                    {{0, 1}, {0, 2}, {0, 3}, {4, 1}});
  CHECK(order_invariance(fig, 20));
  for (const auto& p : enumerate_orientations(complete_bipartite(2, 3))) CHECK(order_invariance(p, 20));
}

TEST_CASE("random orders are valid") {
  std::mt19937_64 rng(6);
  for (const auto& hp : enumerate_h13_patterns(7)) {
    const auto& p = hp.pattern();
    const auto order = random_valid_order(p, rng);
    CHECK(order.size() == static_cast<std::size_t>(p.order()));
    CHECK(is_valid_order(p, order));
  }
  // Disconnected patterns too.
  const Pattern two(path_graph(2).disjoint_union(path_graph(3)), {});
  for (int i = 0; i < 10; ++i) CHECK(is_valid_order(two, random_valid_order(two, rng)));
}

TEST_CASE("order invariance for every pattern with at most 6 vertices") {
  const auto c = checks::order_invariance_all(6, 20, 99);
  CHECK_MESSAGE(c.pass, c.detail);
}

TEST_CASE("every build up to 7 pattern vertices verifies") {
  const auto c = checks::verify_all(7);
  CHECK_MESSAGE(c.pass, c.detail);
}
