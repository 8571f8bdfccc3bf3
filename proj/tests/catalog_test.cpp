#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <set>
#include <functional>
#include <sstream>

#include "checks.hpp"
#include "crochet/catalog.hpp"
#include "crochet/graph6.hpp"
#include "helpers.hpp"

using namespace crochet;
namespace fs = std::filesystem;

namespace {

// Shared catalog for j <= 8, built once with per-step checks.
const Catalog& catalog7() {
  static const Catalog c = [] {
    BuildOptions o;
    o.verify = true;
    Catalog cat;
    populate(cat, build_components(7, o), 7);
    return cat;
  }();
  return c;
}

H13Pattern disjoint(const std::vector<const H13Pattern*>& parts) {
  Graph g;
  std::vector<Arc> arcs;
  std::vector<Hyperedge> hs;
  for (const auto* hp : parts) {
    const int shift = g.order();
    g = g.disjoint_union(hp->pattern().underlying());
    for (auto a : hp->pattern().arcs()) arcs.push_back({a.tail + shift, a.head + shift});
    for (auto h : hp->hyperedges()) {
      for (auto& v : h) v += shift;
      hs.push_back(h);
    }
  }
  return H13Pattern(Pattern(g, arcs), hs);
}

fs::path temp_dir(const std::string& name) {
  const fs::path d = fs::temp_directory_path() / ("crochet_test_" + name);
  fs::remove_all(d);
  fs::create_directories(d);
  return d;
}

}  // namespace

TEST_CASE("insert deduplicates by isomorphism") {
  Catalog c;
  const Graph c5 = cycle_graph(5);
  std::mt19937_64 rng(1);
  CHECK(c.insert(make_entry(c5, 2, "a")));
  CHECK_FALSE(c.insert(make_entry(testutil::random_relabel(c5, rng), 2, "b")));
  CHECK(c.size() == 1);
  CHECK(c.entries()[0].pattern == "a");
  CHECK(c.entries()[0].j == 3);

  const Pattern p3(path_graph(3), {});
  CHECK(c.insert(make_entry(build_state(p3, std::vector<Vertex>{0, 1, 2}).graph, 3, "p")));
  CHECK_FALSE(c.insert(make_entry(build_state(p3, std::vector<Vertex>{0, 2, 1}).graph, 3, "q")));

  Catalog k;
  for (const auto& p : enumerate_orientations(complete_bipartite(2, 3)))
    k.insert(make_entry(build_ordinary(p), 5, serialize(p)));
  CHECK(k.size() == 4);
}

TEST_CASE("entries keep (j, n, e) consistent with the graph") {
  for (const auto& e : catalog7().entries()) {
    const Graph g = graph6_decode(e.graph6);
    REQUIRE(g.order() == e.n);
    REQUIRE(g.size() == e.e);
    REQUIRE(canonical_graph(g) == g);
  }
}

TEST_CASE("table examples") {
  const auto t3 = emit_table(catalog7(), 3);
  CHECK(t3.at(4, 2) == 1);
  CHECK(t3.at(5, 5) == 1);
  CHECK(t3.total() == 2);
  CHECK(emit_table(catalog7(), 5).at(13, 26) == 1);
  const auto t7 = emit_table(catalog7(), 7);
  CHECK(t7.at(19, 37) == 11);
  CHECK(t7.at(20, 44) == 15);
  CHECK(t7.at(21, 51) == 4);
}

TEST_CASE("tables for j = 3..8 match the expected counts") {
  const auto want = read_long_csv(checks::default_expected_csv());
  for (int j = 3; j <= 8; ++j) {
    const auto c = checks::table_matches(catalog7(), j, want);
    CHECK_MESSAGE(c.pass, c.name << " " << c.detail);
  }
}

TEST_CASE("unions of components equal builds of disconnected patterns") {
  // Independent route: build each multiset as one disconnected pattern.
  const int k = 5;
  std::vector<std::vector<H13Pattern>> by_size(k + 1);
  for (int m = 1; m <= k; ++m) by_size[m] = enumerate_h13_patterns(m);
  std::set<std::string> direct;
  std::vector<const H13Pattern*> chosen;
  std::function<void(int, int, std::size_t)> rec = [&](int used, int max_m, std::size_t min_i) {
    if (used > 0) direct.insert(graph6_encode(canonical_graph(build(disjoint(chosen)))));
    for (int m = std::min(k - used, max_m); m >= 1; --m) {
      for (std::size_t i = m == max_m ? min_i : 0; i < by_size[m].size(); ++i) {
        chosen.push_back(&by_size[m][i]);
        rec(used + m, m, i);
        chosen.pop_back();
      }
    }
  };
  rec(0, k, 0);
  Catalog c;
  populate(c, build_components(k, {}), k);
  std::set<std::string> via;
  for (const auto& e : c.entries()) via.insert(e.graph6);
  CHECK(via == direct);
}

TEST_CASE("merge of disjoint halves equals the whole") {
  const auto comps = build_components(5, {});
  Catalog even, odd, whole;
  for (std::size_t m = 0; m < comps.size(); ++m) {
    for (std::size_t i = 0; i < comps[m].size(); ++i) {
      const auto& cb = comps[m][i];
      auto entry = make_entry(cb.graph, static_cast<int>(m) + 1, cb.pattern);
      (i % 2 ? odd : even).insert(entry);
      whole.insert(entry);
    }
  }
  Catalog ab = even, ba = odd;
  ab.merge(odd);
  ba.merge(even);
  CHECK(ab.to_tsv() == ba.to_tsv());
  CHECK(ab.to_tsv() == whole.to_tsv());
  Catalog again = whole;
  again.merge(whole);
  CHECK(again.to_tsv() == whole.to_tsv());
}

TEST_CASE("worker count does not change the output") {
  Catalog one, three;
  populate(one, build_components(6, {}, 1), 6);
  populate(three, build_components(6, {}, 3), 6);
  CHECK(one.to_tsv() == three.to_tsv());
}

TEST_CASE("save and load round trip") {
  const fs::path dir = temp_dir("tsv");
  Catalog c;
  populate(c, build_components(4, {}), 4);
  c.save(dir / "c.tsv");
  const Catalog back = Catalog::load(dir / "c.tsv");
  CHECK(back.to_tsv() == c.to_tsv());

  // Non-canonical labels are re-canonicalised on load.
  std::mt19937_64 rng(2);
  const Graph g = testutil::random_relabel(build_ordinary(Pattern(path_graph(3), {})), rng);
  std::istringstream in(graph6_encode(g) + "\t4\t8\t10\tx\n");
  const Catalog one = Catalog::parse(in, "mem");
  CHECK(c.contains(one.entries()[0].graph6));

  std::istringstream bad_count("Dhc\t3\t5\t6\tx\n");
  CHECK_THROWS_AS(Catalog::parse(bad_count, "mem"), CatalogError);
  std::istringstream bad_fields("Dhc\t3\t5\n");
  CHECK_THROWS_AS(Catalog::parse(bad_fields, "mem"), CatalogError);
  CHECK_THROWS_AS(Catalog::load(dir / "missing.tsv"), CatalogError);
  fs::remove_all(dir);
}

TEST_CASE("renderings") {
  const auto t = emit_table(catalog7(), 3);
  CHECK(render_csv(t) == "e\\n,4,5\n2,1,\n5,,1\n");
  CHECK(render_long_csv(t) == "j,n,e,count\n3,4,2,1\n3,5,5,1\n");
  const std::string text = render_text(t);
  CHECK(text.find("j = 3") != std::string::npos);

  const fs::path dir = temp_dir("long");
  std::ofstream(dir / "t.csv") << render_long_csv(emit_table(catalog7(), 6));
  const auto back = read_long_csv(dir / "t.csv");
  CHECK(back.at({6, 16, 32}) == 4);
  fs::remove_all(dir);
}

TEST_CASE("reference comparison") {
  const Catalog& cat = catalog7();
  std::ostringstream ref;
  for (const auto& e : cat.entries(6)) ref << e.graph6 << "\n";
  // A valid (3,6)-graph the construction only reaches at j = 5 (alpha 4).
  const Graph extra = cycle_graph(5).disjoint_union(cycle_graph(5));
  ref << graph6_encode(extra) << "\n" << graph6_encode(extra) << "\n";

  std::istringstream in(ref.str());
  const auto r = compare_reference(cat, 6, in, "mem");
  long patterned = 0;
  for (const auto& [ne, row] : r.rows) {
    patterned += row.patterned;
    CHECK(row.catalog_only == 0);
  }
  CHECK(patterned == static_cast<long>(cat.entries(6).size()));
  CHECK(r.rows.at({10, 10}).unpatterned == 1);
  CHECK(r.rows.at({10, 10}).reference == 1);
  CHECK(r.rows.at({16, 32}).patterned == 4);
  CHECK(r.rows.at({16, 32}).unpatterned == 0);
  REQUIRE(cat.find(graph6_encode(canonical_graph(extra))));
  CHECK(cat.find(graph6_encode(canonical_graph(extra)))->j == 5);

  // Dropping one graph of a class shows up as catalog_only.
  std::istringstream partial(cat.entries(6).front().graph6 + "\n");
  const auto p = compare_reference(cat, 6, partial, "mem");
  const auto e0 = cat.entries(6).front();
  CHECK(p.rows.at({e0.n, e0.e}).catalog_only == emit_table(cat, 6).at(e0.n, e0.e) - 1);

  std::istringstream empty("");
  CHECK(compare_reference(cat, 6, empty, "mem").rows.empty());

  std::istringstream triangle(graph6_encode(cycle_graph(3)) + "\n");
  CHECK_THROWS_AS(compare_reference(cat, 6, triangle, "mem"), CatalogError);
  std::istringstream too_big(graph6_encode(Graph(6)) + "\n");
  CHECK_THROWS_AS(compare_reference(cat, 6, too_big, "mem"), CatalogError);
  std::istringstream junk("not graph6 ~~~\n");
  CHECK_THROWS_AS(compare_reference(cat, 6, junk, "mem"), CatalogError);

  CHECK(render_csv(r).starts_with("j,n,e,reference,patterned,unpatterned,catalog_only\n"));
}
