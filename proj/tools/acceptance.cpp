// One PASS/FAIL line per acceptance criterion. Exit status covers the
// criteria named by --require (default: all).
#include <CLI11.hpp>

#include <chrono>
#include <iostream>

#include "checks.hpp"

namespace fs = std::filesystem;
using namespace crochet;

namespace {

struct Criterion {
  int id;
  std::string title;
  std::vector<Check> parts;
  double seconds = 0;

  bool pass() const {
    return !parts.empty() &&
           std::all_of(parts.begin(), parts.end(), [](const Check& c) { return c.pass; });
  }
};

template <class F>
Criterion timed(int id, std::string title, F&& body) {
  const auto t0 = std::chrono::steady_clock::now();
  Criterion c{id, std::move(title), {}, 0};
  try {
    c.parts = body();
  } catch (const std::exception& e) {
    c.parts.push_back({"exception", false, e.what()});
  }
  c.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return c;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Acceptance suite"};
  fs::path ref_dir, fixtures = checks::default_fixture_dir(), expected = checks::default_expected_csv();
  std::vector<int> require{1, 2, 3, 4, 5, 6};
  bool verbose = false;
  app.add_option("--ref-dir", ref_dir, "Directory with reference lists j6.g6 and j7.g6");
  app.add_option("--fixtures", fixtures)->capture_default_str();
  app.add_option("--expected", expected)->capture_default_str();
  app.add_option("--require", require, "Criteria that decide the exit status")
      ->delimiter(',')
      ->check(CLI::Range(1, 6));
  app.add_flag("-v,--verbose", verbose, "Print every sub-check");
  CLI11_PARSE(app, argc, argv);

  Catalog catalog;
  std::map<std::tuple<int, int, int>, long> want;
  std::vector<Criterion> results;

  // Built once in verify mode; criteria 1-3 read tables from it.
  const auto setup = timed(0, "catalog", [&] {
    BuildOptions o;
    o.verify = true;
    populate(catalog, build_components(7, o), 7);
    want = read_long_csv(expected);
    return std::vector<Check>{{"catalog", true, std::to_string(catalog.size()) + " graphs"}};
  });
  if (!setup.pass()) {
    for (const auto& p : setup.parts) std::cout << checks::line(p) << "\n";
    return 1;
  }

  results.push_back(timed(1, "count tables j = 3..6", [&] {
    std::vector<Check> v;
    for (int j = 3; j <= 6; ++j) v.push_back(checks::table_matches(catalog, j, want));
    v.push_back(checks::cells_match(catalog, 3, {{4, 2, 1}, {5, 5, 1}}));
    v.push_back(checks::cells_match(catalog, 5, {{13, 26, 1}}));
    v.push_back(checks::cells_match(catalog, 6, {{16, 32, 4}, {16, 33, 2}, {15, 26, 3}, {14, 21, 4}}));
    return v;
  }));
  results.push_back(timed(2, "count table j = 7", [&] {
    return std::vector<Check>{
        checks::table_matches(catalog, 7, want),
        checks::cells_match(catalog, 7, {{19, 37, 11}, {20, 44, 15}, {21, 51, 4}, {18, 32, 14}})};
  }));
  results.push_back(timed(3, "count table j = 8", [&] {
    return std::vector<Check>{checks::table_matches(catalog, 8, want),
                              checks::cells_match(catalog, 8, {{23, 49, 102}, {24, 56, 51}})};
  }));
  results.push_back(timed(4, "reference comparison j = 6, 7", [&] {
    return std::vector<Check>{checks::reference_rows(catalog, ref_dir)};
  }));
  results.push_back(timed(5, "fixture traces", [&] { return checks::fixtures(fixtures); }));
  results.push_back(timed(6, "property suites", [&] {
    return std::vector<Check>{checks::verify_all(7), checks::order_invariance_all(6, 20, 1),
                              checks::alpha_agreement(200, 18, 7), checks::graph6_round_trip(1000, 11)};
  }));

  bool ok = true;
  for (const auto& c : results) {
    std::printf("%s criterion %d: %s (%.1fs)\n", c.pass() ? "PASS" : "FAIL", c.id, c.title.c_str(),
                c.seconds);
    for (const auto& p : c.parts) {
      if (verbose || !p.pass) std::cout << "    " << checks::line(p) << "\n";
    }
    if (std::find(require.begin(), require.end(), c.id) != require.end()) ok &= c.pass();
  }
  return ok ? 0 : 1;
}
