#pragma once

#include <filesystem>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "crochet/canonical.hpp"
#include "crochet/crochet.hpp"
#include "crochet/graph.hpp"
#include "crochet/pattern.hpp"
#include "crochet/verify.hpp"

namespace crochet {

class CatalogError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// One stored graph. `graph6` is the graph in canonical labelling, so equal
/// strings mean isomorphic graphs; it is the dedup key.
struct CatalogEntry {
  std::string graph6;
  int j = 0;  ///< n(P) + 1: alpha(G) < j
  int n = 0;
  int e = 0;
  std::string pattern;  ///< serialized source; components of a union joined by " + "

  friend bool operator==(const CatalogEntry&, const CatalogEntry&) = default;
};

/// Entry for g built from a pattern of `pattern_order` vertices.
CatalogEntry make_entry(const Graph& g, int pattern_order, std::string pattern);

class Catalog {
 public:
  /// False (and no change) when an isomorphic graph is already present.
  bool insert(CatalogEntry entry);
  /// Inserts every entry of `other`; the result does not depend on merge order
  /// except for which source pattern is kept, which is the least one.
  void merge(const Catalog& other);

  std::size_t size() const { return by_key_.size(); }
  bool contains(const std::string& canonical_graph6) const { return by_key_.count(canonical_graph6) > 0; }
  const CatalogEntry* find(const std::string& canonical_graph6) const;

  /// Entries sorted by (j, n, e, graph6).
  std::vector<CatalogEntry> entries() const;
  std::vector<CatalogEntry> entries(int j) const;

  /// Tab-separated lines: graph6, j, n, e, pattern. Sorted, so equal
  /// catalogs give byte-identical files.
  std::string to_tsv() const;
  void save(const std::filesystem::path& path) const;
  /// Parses a file written by save. Graphs are re-canonicalised and the
  /// stored (n, e) checked, so hand-edited files still dedup correctly.
  static Catalog load(const std::filesystem::path& path);
  static Catalog parse(std::istream& in, const std::string& name);

 private:
  std::map<std::string, CatalogEntry> by_key_;
};

/// Built graphs of all connected H13-patterns of one size.
struct ComponentBuild {
  std::string pattern;
  Graph graph;  ///< canonical labelling
  std::vector<std::pair<CanonicalForm, Graph>> parts;  ///< connected pieces, canonical
  VerificationReport report;  ///< filled in verify mode only
};

/// Builds every connected H13-pattern with 1..k vertices on `workers` threads.
/// Output (index m - 1 holds size m) does not depend on the worker count. In
/// verify mode each step is checked and each graph runs through verify_build;
/// the first failure in pattern order is thrown as CrochetError.
std::vector<std::vector<ComponentBuild>> build_components(int k, const BuildOptions& options,
                                                          int workers = 1);

/// Inserts the disjoint union of every multiset of components with total
/// size at most k. Returns the number of multisets visited.
std::size_t populate(Catalog& catalog, const std::vector<std::vector<ComponentBuild>>& comps, int k);

/// Cells (n, e) -> number of distinct graphs with alpha < j.
struct CountTable {
  int j = 0;
  std::map<std::pair<int, int>, long> cells;

  long at(int n, int e) const;
  long total() const;
};

CountTable emit_table(const Catalog& catalog, int j);
/// Rows are edge counts, columns vertex counts; empty cells stay blank.
std::string render_csv(const CountTable& t);
std::string render_text(const CountTable& t);
/// One row per nonzero cell: j,n,e,count.
std::string render_long_csv(const CountTable& t);

/// (j, n, e) -> count from a long CSV with header j,n,e,count.
std::map<std::tuple<int, int, int>, long> read_long_csv(const std::filesystem::path& path);

struct ReferenceRow {
  long reference = 0;     ///< graphs in the reference file
  long patterned = 0;     ///< reference graphs also in the catalog
  long unpatterned = 0;   ///< reference graphs not in the catalog
  long catalog_only = 0;  ///< catalog graphs missing from the reference
};

struct ReferenceReport {
  int j = 0;
  std::map<std::pair<int, int>, ReferenceRow> rows;
};

/// Compares the catalog's graphs with alpha < j against reference graph6
/// lines. Each reference graph must parse, be triangle-free and have alpha < j;
/// otherwise CatalogError lists the offending lines. Duplicate reference
/// graphs count once.
ReferenceReport compare_reference(const Catalog& catalog, int j, std::istream& reference,
                                  const std::string& name);
ReferenceReport compare_reference(const Catalog& catalog, int j,
                                  const std::filesystem::path& reference);
std::string render_csv(const ReferenceReport& r);
std::string render_text(const ReferenceReport& r);

}  // namespace crochet
