#include "crochet/catalog.hpp"

#include <algorithm>
#include <atomic>
#include <fstream>
#include <functional>
#include <iomanip>
#include <mutex>
#include <set>
#include <sstream>
#include <thread>

#include "crochet/graph6.hpp"
#include "crochet/independence.hpp"
#include "crochet/verify.hpp"

namespace crochet {

CatalogEntry make_entry(const Graph& g, int pattern_order, std::string pattern) {
  return {graph6_encode(canonical_graph(g)), pattern_order + 1, g.order(), g.size(),
          std::move(pattern)};
}

bool Catalog::insert(CatalogEntry entry) {
  auto [it, fresh] = by_key_.try_emplace(entry.graph6, entry);
  if (!fresh && entry.pattern < it->second.pattern) it->second.pattern = std::move(entry.pattern);
  return fresh;
}

void Catalog::merge(const Catalog& other) {
  for (const auto& [key, e] : other.by_key_) insert(e);
}

const CatalogEntry* Catalog::find(const std::string& canonical_graph6) const {
  auto it = by_key_.find(canonical_graph6);
  return it == by_key_.end() ? nullptr : &it->second;
}

std::vector<CatalogEntry> Catalog::entries() const {
  std::vector<CatalogEntry> out;
  out.reserve(by_key_.size());
  for (const auto& [key, e] : by_key_) out.push_back(e);
  std::sort(out.begin(), out.end(), [](const CatalogEntry& a, const CatalogEntry& b) {
    return std::tie(a.j, a.n, a.e, a.graph6) < std::tie(b.j, b.n, b.e, b.graph6);
  });
  return out;
}

std::vector<CatalogEntry> Catalog::entries(int j) const {
  auto all = entries();
  std::erase_if(all, [j](const CatalogEntry& e) { return e.j != j; });
  return all;
}

std::string Catalog::to_tsv() const {
  std::ostringstream out;
  for (const auto& e : entries()) {
    out << e.graph6 << '\t' << e.j << '\t' << e.n << '\t' << e.e << '\t' << e.pattern << '\n';
  }
  return out.str();
}

void Catalog::save(const std::filesystem::path& path) const {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw CatalogError("cannot write " + path.string());
  out << to_tsv();
  if (!out) throw CatalogError("write failed: " + path.string());
}

Catalog Catalog::load(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw CatalogError("cannot read " + path.string());
  return parse(in, path.string());
}

Catalog Catalog::parse(std::istream& in, const std::string& name) {
  Catalog c;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    auto fail = [&](const std::string& why) {
      return CatalogError(name + ":" + std::to_string(lineno) + ": " + why);
    };
    std::vector<std::string> f;
    std::size_t start = 0;
    for (std::size_t tab; (tab = line.find('\t', start)) != std::string::npos; start = tab + 1) {
      f.push_back(line.substr(start, tab - start));
    }
    f.push_back(line.substr(start));
    if (f.size() != 5) throw fail("expected 5 tab-separated fields");
    CatalogEntry e;
    try {
      e.j = std::stoi(f[1]);
      e.n = std::stoi(f[2]);
      e.e = std::stoi(f[3]);
    } catch (const std::exception&) {
      throw fail("bad number");
    }
    Graph g;
    try {
      g = graph6_decode(f[0]);
    } catch (const Graph6Error& err) {
      throw fail(err.what());
    }
    if (g.order() != e.n || g.size() != e.e) throw fail("(n, e) does not match the graph");
    e.graph6 = graph6_encode(canonical_graph(g));
    e.pattern = f[4];
    c.insert(std::move(e));
  }
  return c;
}

namespace {

ComponentBuild make_component(const H13Pattern& hp, const BuildOptions& options) {
  const Graph g = build(hp, options);
  ComponentBuild out;
  if (options.verify) {
    out.report = verify_build(hp, g);
    const auto& report = out.report;
    if (!report.ok()) {
      std::string failed;
      for (const auto& c : report.checks) {
        if (!c.pass) failed += " " + c.name + " (" + c.detail + ")";
      }
      throw CrochetError("verification failed for " + serialize(hp) + ":" + failed);
    }
  }
  out.pattern = serialize(hp);
  out.graph = canonical_graph(g);
  for (const auto& comp : g.components()) {
    VertexSet keep;
    for (Vertex v : comp) keep.insert(v);
    const Graph piece = g.induced(keep);
    const auto lab = canonical_labeling(piece);
    out.parts.emplace_back(lab.form, piece.relabeled(lab.position));
  }
  return out;
}

}  // namespace

std::vector<std::vector<ComponentBuild>> build_components(int k, const BuildOptions& options,
                                                          int workers) {
  std::vector<std::vector<ComponentBuild>> out(std::max(k, 0));
  for (int m = 1; m <= k; ++m) {
    const auto patterns = enumerate_h13_patterns(m);
    auto& slot = out[m - 1];
    slot.resize(patterns.size());
    std::vector<std::string> errors(patterns.size());
    std::atomic<std::size_t> next{0};
    std::atomic<bool> failed{false};
    auto work = [&] {
      for (std::size_t i; !failed && (i = next++) < patterns.size();) {
        try {
          slot[i] = make_component(patterns[i], options);
        } catch (const std::exception& e) {
          errors[i] = e.what();
          failed = true;
        }
      }
    };
    const int threads = std::max(1, workers);
    std::vector<std::thread> pool;
    for (int t = 1; t < threads; ++t) pool.emplace_back(work);
    work();
    for (auto& t : pool) t.join();
    if (failed) {
      // Report the earliest failing pattern so the message is independent of scheduling;
      // patterns before it may not have been attempted, so rerun them serially.
      for (std::size_t i = 0; i < patterns.size(); ++i) {
        if (!errors[i].empty()) throw CrochetError(errors[i]);
        if (slot[i].pattern.empty()) slot[i] = make_component(patterns[i], options);
      }
    }
  }
  return out;
}

std::size_t populate(Catalog& catalog, const std::vector<std::vector<ComponentBuild>>& comps, int k) {
  std::size_t visited = 0;
  std::vector<const ComponentBuild*> chosen;
  std::function<void(int, int, std::size_t)> rec = [&](int used, int max_m, std::size_t min_idx) {
    if (used > 0) {
      ++visited;
      std::vector<const std::pair<CanonicalForm, Graph>*> parts;
      std::string name;
      for (const auto* c : chosen) {
        for (const auto& p : c->parts) parts.push_back(&p);
        name += (name.empty() ? "" : " + ") + c->pattern;
      }
      std::stable_sort(parts.begin(), parts.end(),
                       [](const auto* a, const auto* b) { return a->first < b->first; });
      Graph g;
      for (const auto* p : parts) g = g.disjoint_union(p->second);
      catalog.insert({graph6_encode(g), used + 1, g.order(), g.size(), std::move(name)});
    }
    for (int m = std::min(k - used, max_m); m >= 1; --m) {
      if (m > static_cast<int>(comps.size())) continue;
      const auto& bucket = comps[m - 1];
      for (std::size_t i = (m == max_m ? min_idx : 0); i < bucket.size(); ++i) {
        chosen.push_back(&bucket[i]);
        rec(used + m, m, i);
        chosen.pop_back();
      }
    }
  };
  rec(0, k, 0);
  return visited;
}

long CountTable::at(int n, int e) const {
  auto it = cells.find({n, e});
  return it == cells.end() ? 0 : it->second;
}

long CountTable::total() const {
  long s = 0;
  for (const auto& [k, c] : cells) s += c;
  return s;
}

CountTable emit_table(const Catalog& catalog, int j) {
  CountTable t;
  t.j = j;
  for (const auto& e : catalog.entries(j)) t.cells[{e.n, e.e}] += 1;
  return t;
}

namespace {

struct Axes {
  std::vector<int> ns;
  std::vector<int> es;
};

Axes axes_of(const CountTable& t) {
  std::set<int> ns, es;
  for (const auto& [k, c] : t.cells) {
    ns.insert(k.first);
    es.insert(k.second);
  }
  return {{ns.begin(), ns.end()}, {es.begin(), es.end()}};
}

}  // namespace

std::string render_csv(const CountTable& t) {
  const auto ax = axes_of(t);
  std::ostringstream out;
  out << "e\\n";
  for (int n : ax.ns) out << ',' << n;
  out << '\n';
  for (int e : ax.es) {
    out << e;
    for (int n : ax.ns) {
      out << ',';
      if (long c = t.at(n, e)) out << c;
    }
    out << '\n';
  }
  return out.str();
}

std::string render_text(const CountTable& t) {
  const auto ax = axes_of(t);
  int width = 3;
  for (const auto& [k, c] : t.cells) width = std::max<int>(width, std::to_string(c).size());
  std::ostringstream out;
  out << "j = " << t.j << ": rows e, columns n\n";
  out << std::setw(4) << "e" << " |";
  for (int n : ax.ns) out << ' ' << std::setw(width) << n;
  out << '\n' << std::string(6 + ax.ns.size() * (width + 1), '-') << '\n';
  for (int e : ax.es) {
    out << std::setw(4) << e << " |";
    for (int n : ax.ns) {
      const long c = t.at(n, e);
      out << ' ' << std::setw(width) << (c ? std::to_string(c) : "");
    }
    out << '\n';
  }
  return out.str();
}

std::string render_long_csv(const CountTable& t) {
  std::ostringstream out;
  out << "j,n,e,count\n";
  for (const auto& [k, c] : t.cells) out << t.j << ',' << k.first << ',' << k.second << ',' << c << '\n';
  return out.str();
}

std::map<std::tuple<int, int, int>, long> read_long_csv(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw CatalogError("cannot read " + path.string());
  std::map<std::tuple<int, int, int>, long> out;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (lineno == 1 || line.empty()) continue;
    int j, n, e;
    long c;
    char c1, c2, c3;
    std::istringstream ls(line);
    if (!(ls >> j >> c1 >> n >> c2 >> e >> c3 >> c) || c1 != ',' || c2 != ',' || c3 != ',') {
      throw CatalogError(path.string() + ":" + std::to_string(lineno) + ": malformed row");
    }
    out[{j, n, e}] = c;
  }
  return out;
}

ReferenceReport compare_reference(const Catalog& catalog, int j, std::istream& reference,
                                  const std::string& name) {
  ReferenceReport r;
  r.j = j;
  std::set<std::string> seen;
  std::vector<std::string> bad;
  std::string line;
  int lineno = 0;
  while (std::getline(reference, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line == ">>graph6<<") continue;
    Graph g;
    try {
      g = graph6_decode(line);
    } catch (const Graph6Error& e) {
      bad.push_back(std::to_string(lineno) + " (" + e.what() + ")");
      continue;
    }
    if (!is_triangle_free(g)) {
      bad.push_back(std::to_string(lineno) + " (has a triangle)");
      continue;
    }
    if (independence_number(g) >= j) {
      bad.push_back(std::to_string(lineno) + " (independence number >= " + std::to_string(j) + ")");
      continue;
    }
    auto key = graph6_encode(canonical_graph(g));
    if (!seen.insert(key).second) continue;
    auto& row = r.rows[{g.order(), g.size()}];
    ++row.reference;
    // Only builds at this j count; a smaller pattern's graph can still sit under j.
    const CatalogEntry* hit = catalog.find(key);
    if (hit && hit->j == j) {
      ++row.patterned;
    } else {
      ++row.unpatterned;
    }
  }
  if (!bad.empty()) {
    std::string msg = name + ": invalid reference graphs on lines";
    for (const auto& b : bad) msg += " " + b;
    throw CatalogError(msg);
  }
  // Catalog graphs for classes the reference covers but lacks.
  for (const auto& e : catalog.entries(j)) {
    auto it = r.rows.find({e.n, e.e});
    if (it != r.rows.end() && !seen.count(e.graph6)) ++it->second.catalog_only;
  }
  return r;
}

ReferenceReport compare_reference(const Catalog& catalog, int j,
                                  const std::filesystem::path& reference) {
  std::ifstream in(reference);
  if (!in) throw CatalogError("cannot read " + reference.string());
  return compare_reference(catalog, j, in, reference.string());
}

std::string render_csv(const ReferenceReport& r) {
  std::ostringstream out;
  out << "j,n,e,reference,patterned,unpatterned,catalog_only\n";
  for (const auto& [k, row] : r.rows) {
    out << r.j << ',' << k.first << ',' << k.second << ',' << row.reference << ',' << row.patterned
        << ',' << row.unpatterned << ',' << row.catalog_only << '\n';
  }
  return out.str();
}

std::string render_text(const ReferenceReport& r) {
  std::ostringstream out;
  out << "class              total  patterned  unpatterned  missing-from-reference\n";
  for (const auto& [k, row] : r.rows) {
    std::ostringstream cls;
    cls << "(3," << r.j << ";" << k.first << "," << k.second << ")";
    out << std::left << std::setw(18) << cls.str() << std::right << std::setw(6) << row.reference
        << std::setw(11) << row.patterned << std::setw(13) << row.unpatterned << std::setw(24)
        << row.catalog_only << '\n';
  }
  return out.str();
}

}  // namespace crochet
