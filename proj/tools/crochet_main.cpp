// crochet: enumerate patterns, build graphs, write catalogs and count tables.
#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <thread>

#include "checks.hpp"
#include "crochet/catalog.hpp"
#include "crochet/graph6.hpp"
#include "crochet/pattern.hpp"

namespace fs = std::filesystem;
using namespace crochet;

namespace {

enum Exit { kOk = 0, kVerifyFailed = 1, kUsage = 2, kIo = 3 };

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void write_file(const fs::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out || !(out << text)) throw CatalogError("cannot write " + path.string());
}

void make_dir(const fs::path& dir) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw CatalogError("cannot create " + dir.string() + ": " + ec.message());
}

int resolve_workers(int w) {
  if (w > 0) return w;
  return std::max(1u, std::thread::hardware_concurrency());
}

// out/build.txt records the bound the catalog was built for.
int built_k(const fs::path& out) {
  std::ifstream in(out / "build.txt");
  std::string line;
  while (std::getline(in, line)) {
    if (line.starts_with("k=")) return std::stoi(line.substr(2));
  }
  return -1;
}

int gen_underlying(int n, const fs::path& out) {
  make_dir(out);
  std::string text;
  const auto graphs = enumerate_underlying(n);
  for (const auto& g : graphs) text += graph6_encode(g) + "\n";
  write_file(out / ("underlying_n" + std::to_string(n) + ".g6"), text);
  std::cout << graphs.size() << " connected triangle-free subcubic graphs on " << n
            << " vertices\n";
  return kOk;
}

int gen_patterns(int k, const fs::path& out) {
  make_dir(out);
  std::string text;
  for (int m = 1; m <= k; ++m) {
    const auto ps = enumerate_h13_patterns(m);
    std::size_t plain = 0;
    for (const auto& hp : ps) {
      plain += hp.hyperedges().empty();
      text += std::to_string(m) + "\t" + serialize(hp) + "\n";
    }
    std::cout << "m=" << m << ": " << ps.size() << " patterns (" << plain << " without hyperedges)\n";
  }
  write_file(out / ("patterns_k" + std::to_string(k) + ".tsv"), text);
  return kOk;
}

int run_build(int k, bool verify, int workers, const fs::path& out) {
  make_dir(out);
  BuildOptions o;
  o.verify = verify;
  const auto comps = build_components(k, o, resolve_workers(workers));
  Catalog catalog;
  const std::size_t multisets = populate(catalog, comps, k);
  catalog.save(out / "catalog.tsv");
  write_file(out / "build.txt", "k=" + std::to_string(k) + "\nverify=" + (verify ? "1" : "0") + "\n");
  if (verify) {
    std::vector<VerificationReport> reports;
    for (const auto& bucket : comps) {
      for (const auto& c : bucket) reports.push_back(c.report);
    }
    write_file(out / "verify.csv", to_csv(reports));
  }
  std::size_t connected = 0;
  for (const auto& b : comps) connected += b.size();
  std::cout << connected << " connected patterns, " << multisets << " pattern multisets, "
            << catalog.size() << " distinct graphs\n";
  return kOk;
}

Catalog load_for_j(const fs::path& out, const fs::path& catalog_path, int j) {
  const int k = built_k(out);
  if (catalog_path.empty() && k >= 0 && j - 1 > k) {
    throw UsageError("catalog in " + out.string() + " was built with --k " + std::to_string(k) +
                     "; j = " + std::to_string(j) + " needs --k " + std::to_string(j - 1));
  }
  return Catalog::load(catalog_path.empty() ? out / "catalog.tsv" : catalog_path);
}

int run_table(int j, const fs::path& out, const fs::path& catalog_path, const fs::path& expected) {
  const Catalog catalog = load_for_j(out, catalog_path, j);
  const auto t = emit_table(catalog, j);
  const std::string stem = "table_j" + std::to_string(j);
  write_file(out / (stem + ".csv"), render_csv(t));
  write_file(out / (stem + ".txt"), render_text(t));
  write_file(out / (stem + "_long.csv"), render_long_csv(t));
  std::cout << render_text(t);
  if (!expected.empty()) {
    const auto c = checks::table_matches(catalog, j, read_long_csv(expected));
    std::cout << checks::line(c) << "\n";
    if (!c.pass) return kVerifyFailed;
  }
  return kOk;
}

int run_compare(int j, const fs::path& ref, const fs::path& out, const fs::path& catalog_path) {
  const Catalog catalog = load_for_j(out, catalog_path, j);
  const auto r = compare_reference(catalog, j, ref);
  const std::string stem = "compare_j" + std::to_string(j);
  write_file(out / (stem + ".csv"), render_csv(r));
  write_file(out / (stem + ".txt"), render_text(r));
  std::cout << render_text(r);
  return kOk;
}

int run_selfcheck(const fs::path& fixtures, const fs::path& expected) {
  std::vector<Check> all = checks::fixtures(fixtures);
  BuildOptions o;
  o.verify = true;
  Catalog catalog;
  populate(catalog, build_components(6, o), 6);
  const auto want = read_long_csv(expected);
  for (int j = 3; j <= 7; ++j) all.push_back(checks::table_matches(catalog, j, want));
  all.push_back(checks::verify_all(6));
  all.push_back(checks::order_invariance_all(6, 20, 1));
  all.push_back(checks::alpha_agreement(200, 18, 7));
  all.push_back(checks::graph6_round_trip(1000, 11));
  bool ok = true;
  for (const auto& c : all) {
    std::cout << checks::line(c) << "\n";
    ok &= c.pass;
  }
  return ok ? kOk : kVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Crochet-pattern construction of triangle-free Ramsey graphs"};
  app.require_subcommand(1);
  fs::path out = "out";
  app.add_option("--out", out, "Directory for all artifacts")->capture_default_str();

  int n = 0, k = 0, j = 0, workers = 1;
  bool verify = false;
  fs::path ref, catalog_path, expected;
  fs::path fixtures = checks::default_fixture_dir();
  fs::path expected_default = checks::default_expected_csv();

  auto* gu = app.add_subcommand("gen-underlying", "Connected triangle-free graphs of max degree 3");
  gu->add_option("--n", n, "Vertex count")->required()->check(CLI::Range(1, 14));

  auto* gp = app.add_subcommand("gen-patterns", "Connected H13-patterns with 1..K vertices");
  gp->add_option("--k", k, "Largest pattern size")->required()->check(CLI::Range(1, 12));

  auto* bd = app.add_subcommand("build", "Build every pattern of total size <= K into a catalog");
  bd->add_option("--k", k, "Largest total pattern size (tables up to j = K + 1)")
      ->required()
      ->check(CLI::Range(1, 12));
  bd->add_flag("--verify", verify, "Per-step checks and a verification report per graph");
  bd->add_option("--workers", workers, "Builder threads, 0 for one per core")
      ->capture_default_str()
      ->check(CLI::NonNegativeNumber);

  auto* tb = app.add_subcommand("table", "Count table of the catalog for alpha < J");
  tb->add_option("--j", j, "Target j")->required()->check(CLI::Range(2, 13));
  tb->add_option("--catalog", catalog_path, "Catalog file (default: <out>/catalog.tsv)");
  tb->add_option("--expected", expected, "Long CSV j,n,e,count to check against");

  auto* cp = app.add_subcommand("compare", "Split a reference graph6 list into patterned and unpatterned");
  cp->add_option("--j", j, "Target j")->required()->check(CLI::Range(2, 13));
  cp->add_option("--ref", ref, "Reference graph6 file")->required();
  cp->add_option("--catalog", catalog_path, "Catalog file (default: <out>/catalog.tsv)");

  auto* sc = app.add_subcommand("selfcheck", "Fixture traces and property suites");
  sc->add_option("--fixtures", fixtures, "Fixture directory")->capture_default_str();
  sc->add_option("--expected", expected_default, "Expected counts CSV")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*gu) return gen_underlying(n, out);
    if (*gp) return gen_patterns(k, out);
    if (*bd) return run_build(k, verify, workers, out);
    if (*tb) return run_table(j, out, catalog_path, expected);
    if (*cp) return run_compare(j, ref, out, catalog_path);
    if (*sc) return run_selfcheck(fixtures, expected_default);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const CrochetError& e) {
    std::cerr << "build failed: " << e.what() << "\n";
    return kVerifyFailed;
  } catch (const PatternError& e) {
    std::cerr << "pattern error: " << e.what() << "\n";
    return kVerifyFailed;
  } catch (const CatalogError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kIo;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kIo;
  }
  return kUsage;
}
