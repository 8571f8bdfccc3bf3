#include "checks.hpp"

#include <fstream>
#include <random>
#include <sstream>

#include "crochet/canonical.hpp"
#include "crochet/crochet.hpp"
#include "crochet/graph6.hpp"
#include "crochet/independence.hpp"

#ifndef CROCHET_DATA_DIR
#define CROCHET_DATA_DIR "data"
#endif

namespace crochet::checks {

namespace fs = std::filesystem;

fs::path default_fixture_dir() { return fs::path(CROCHET_DATA_DIR) / "fixtures"; }
fs::path default_expected_csv() { return fs::path(CROCHET_DATA_DIR) / "expected" / "patterned_counts.csv"; }

namespace {

Graph read_g6(const fs::path& path) {
  std::ifstream in(path);
  std::string line;
  if (!in || !std::getline(in, line)) throw CatalogError("cannot read " + path.string());
  return graph6_decode(line);
}

// The worked example: K_{2,3} with p1 -> p2, p3, p4 and p5 -> p2.
Pattern worked_pattern() {
  const std::vector<Edge> e{{0, 1}, {0, 2}, {0, 3}, {4, 1}, {4, 2}, {4, 3}};
  return Pattern(Graph(5, e), {{0, 1}, {0, 2}, {0, 3}, {4, 1}});
}

struct Row {
  Vertex apex;
  int coapex;                              // -1: undefined
  std::vector<std::pair<Vertex, int>> active;  // (vertex, faced pattern vertex or -1)
};

// Labels: v1 v2 w1 w2 w3 u1 u2 u3 x1 x3 x2 = 0..10, y1..y5 = 11..15.
const std::vector<std::vector<Row>>& worked_maps() {
  static const std::vector<std::vector<Row>> maps = {
      {{0, 1, {{0, -1}, {1, -1}}}},
      {{0, 1, {{0, -1}, {1, 1}}}, {2, 3, {{2, -1}, {3, 0}}}},
      {{0, 1, {{0, 2}, {1, 1}}}, {2, 3, {{2, -1}, {3, 0}}}, {5, 6, {{5, -1}, {6, 0}}}},
      {{0, 1, {}}, {2, 3, {{2, -1}}}, {5, 6, {{5, -1}}}, {8, -1, {{8, -1}}}},
      {{0, 1, {}}, {2, 3, {{2, 4}}}, {5, 6, {{5, 4}}}, {8, -1, {{8, 4}}}, {11, -1, {}}},
  };
  return maps;
}

std::string maps_mismatch(const CrochetState& s, const std::vector<Row>& want) {
  for (std::size_t p = 0; p < want.size(); ++p) {
    const auto& got = s.vertex[p];
    const auto& w = want[p];
    std::vector<std::pair<Vertex, int>> act;
    for (const auto& a : got.active) act.emplace_back(a.vertex, a.faces ? *a.faces : -1);
    std::sort(act.begin(), act.end());
    auto wa = w.active;
    std::sort(wa.begin(), wa.end());
    if (got.apex != w.apex || (got.coapex ? *got.coapex : -1) != w.coapex || act != wa) {
      return "maps differ at p" + std::to_string(p + 1);
    }
  }
  return "";
}

}  // namespace

std::vector<Check> fixtures(const fs::path& dir) {
  std::vector<Check> out;
  auto guarded = [&](const std::string& name, auto&& body) {
    try {
      std::string why = body();
      out.push_back({name, why.empty(), why});
    } catch (const std::exception& e) {
      out.push_back({name, false, e.what()});
    }
  };

  CrochetBuilder b(worked_pattern());
  for (int k = 0; k < 5; ++k) {
    const std::string name = "worked_example_G" + std::to_string(k + 1);
    guarded(name, [&]() -> std::string {
      b.step(k);
      const auto& s = b.state();
      const Graph want = read_g6(dir / ("g" + std::to_string(k + 1) + ".g6"));
      if (k < 4) {
        if (!(s.graph == want)) return "graph differs from the fixture labelling";
      } else if (!are_isomorphic(s.graph, want)) {
        return "graph not isomorphic to the fixture";
      }
      return maps_mismatch(s, worked_maps()[k]);
    });
  }

  guarded("c4_hyperedge_is_h13", [&]() -> std::string {
    const Graph c4(4, std::vector<Edge>{{0, 1}, {1, 2}, {2, 3}, {3, 0}});
    const Graph g = build(H13Pattern(Pattern(c4, {}), {Hyperedge{0, 1, 2, 3}}));
    const int conn[] = {1, 5};
    std::ostringstream d;
    d << "n=" << g.order() << " e=" << g.size();
    if (g.order() != 13 || g.size() != 26) return d.str();
    for (Vertex v = 0; v < 13; ++v) {
      if (g.degree(v) != 4) return "not 4-regular";
    }
    if (!are_isomorphic(g, circulant(13, conn))) return "not the circulant C13(1,5)";
    if (!are_isomorphic(g, read_g6(dir / "h13.g6"))) return "differs from h13.g6";
    return "";
  });

  guarded("decorated_c4_pendant", [&]() -> std::string {
    const Graph u(5, std::vector<Edge>{{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 4}});
    const H13Pattern hp(Pattern(u, {{0, 4}}), {Hyperedge{0, 1, 2, 3}});
    const Graph g = build(hp);
    const int a = independence_number(g);
    std::ostringstream d;
    d << "n=" << g.order() << " e=" << g.size() << " alpha=" << a;
    if (g.order() != 16 || g.size() != 33 || a != 5 || !is_triangle_free(g)) return d.str();
    if (!are_isomorphic(g, read_g6(dir / "decorated_c4_pendant.g6"))) return "differs from fixture";
    return "";
  });
  return out;
}

Check table_matches(const Catalog& catalog, int j,
                    const std::map<std::tuple<int, int, int>, long>& expected) {
  const auto t = emit_table(catalog, j);
  std::ostringstream bad;
  int cells = 0, wrong = 0;
  for (const auto& [key, want] : expected) {
    const auto [jj, n, e] = key;
    if (jj != j) continue;
    ++cells;
    if (t.at(n, e) != want) {
      ++wrong;
      bad << " (" << n << "," << e << ")=" << t.at(n, e) << "/" << want;
    }
  }
  for (const auto& [ne, c] : t.cells) {
    if (!expected.count({j, ne.first, ne.second})) {
      ++wrong;
      bad << " (" << ne.first << "," << ne.second << ")=" << c << "/0";
    }
  }
  std::string detail = std::to_string(cells) + " cells";
  if (wrong) detail += ", mismatches:" + bad.str();
  if (cells == 0) return {"table_j" + std::to_string(j), false, "no expected cells"};
  return {"table_j" + std::to_string(j), wrong == 0, detail};
}

Check cells_match(const Catalog& catalog, int j, const std::vector<std::tuple<int, int, long>>& cells) {
  const auto t = emit_table(catalog, j);
  std::ostringstream d;
  bool ok = true;
  for (const auto& [n, e, want] : cells) {
    const long got = t.at(n, e);
    ok &= got == want;
    d << " (3," << j << ";" << n << "," << e << ")=" << got;
    if (got != want) d << "!=" << want;
  }
  return {"cells_j" + std::to_string(j), ok, d.str().substr(1)};
}

Check verify_all(int k) {
  BuildOptions o;
  o.verify = true;
  long graphs = 0;
  try {
    for (int m = 1; m <= k; ++m) {
      for (const auto& hp : enumerate_h13_patterns(m)) {
        const auto r = verify_build(hp, build(hp, o));
        ++graphs;
        if (!r.ok()) return {"verify_builds", false, r.source + "\n" + to_text(r)};
      }
    }
  } catch (const std::exception& e) {
    return {"verify_builds", false, e.what()};
  }
  return {"verify_builds", true, std::to_string(graphs) + " connected builds, patterns <= " +
                                     std::to_string(k) + " vertices"};
}

Check order_invariance_all(int max_order, int trials, std::uint64_t seed) {
  BuildOptions o;
  o.verify = true;
  long patterns = 0;
  for (int m = 1; m <= max_order; ++m) {
    for (const auto& hp : enumerate_h13_patterns(m)) {
      ++patterns;
      if (!order_invariance(hp, trials, seed + patterns, o)) {
        return {"order_invariance", false, serialize(hp)};
      }
    }
  }
  return {"order_invariance", true,
          std::to_string(patterns) + " patterns x " + std::to_string(trials) + " orders"};
}

namespace {

Graph random_graph(std::mt19937_64& rng, int n, double p) {
  Graph g(n);
  std::bernoulli_distribution coin(p);
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (coin(rng)) g.add_edge(u, v);
    }
  }
  return g;
}

}  // namespace

Check alpha_agreement(int count, int max_n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> pick_n(1, max_n);
  std::uniform_real_distribution<double> pick_p(0.05, 0.7);
  for (int i = 0; i < count; ++i) {
    const Graph g = random_graph(rng, pick_n(rng), pick_p(rng));
    const int a = independence_number(g), b = brute_alpha(g);
    if (a != b) {
      return {"alpha_agreement", false,
              graph6_encode(g) + ": " + std::to_string(a) + " vs " + std::to_string(b)};
    }
  }
  return {"alpha_agreement", true, std::to_string(count) + " graphs, n <= " + std::to_string(max_n)};
}

Check graph6_round_trip(int count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> pick_n(0, Graph::kMaxVertices);
  std::uniform_real_distribution<double> pick_p(0.0, 1.0);
  for (int i = 0; i < count; ++i) {
    const Graph g = random_graph(rng, pick_n(rng), pick_p(rng));
    const std::string text = graph6_encode(g);
    if (!(graph6_decode(text) == g)) return {"graph6_round_trip", false, text};
  }
  return {"graph6_round_trip", true, std::to_string(count) + " graphs"};
}

Check reference_rows(const Catalog& catalog, const fs::path& dir) {
  const fs::path j6 = dir / "j6.g6", j7 = dir / "j7.g6";
  if (dir.empty() || !fs::exists(j6) || !fs::exists(j7)) {
    return {"reference_rows", false,
            "reference graph6 files j6.g6 and j7.g6 not supplied (use --ref-dir)"};
  }
  try {
    const auto r6 = compare_reference(catalog, 6, j6);
    const auto r7 = compare_reference(catalog, 7, j7);
    struct Want {
      const ReferenceReport* r;
      int n, e;
      long patterned, unpatterned;
    };
    const Want wants[] = {{&r6, 16, 32, 4, 1}, {&r7, 19, 37, 11, 0}, {&r7, 20, 44, 15, 0},
                          {&r7, 21, 51, 4, 0}};
    bool ok = true;
    std::ostringstream d;
    for (const auto& w : wants) {
      auto it = w.r->rows.find({w.n, w.e});
      const ReferenceRow row = it == w.r->rows.end() ? ReferenceRow{} : it->second;
      ok &= row.patterned == w.patterned && row.unpatterned == w.unpatterned;
      d << " (3," << w.r->j << ";" << w.n << "," << w.e << ")=" << row.patterned << "/"
        << row.unpatterned;
    }
    return {"reference_rows", ok, d.str().substr(1)};
  } catch (const std::exception& e) {
    return {"reference_rows", false, e.what()};
  }
}

std::string line(const Check& c) {
  return std::string(c.pass ? "PASS " : "FAIL ") + c.name + (c.detail.empty() ? "" : "  " + c.detail);
}

}  // namespace crochet::checks
