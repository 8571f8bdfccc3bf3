#include "crochet/pattern.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <numeric>
#include <set>

#include "crochet/graph6.hpp"
#include "crochet/independence.hpp"

namespace crochet {

Pattern::Pattern(Graph underlying, std::vector<Arc> arcs)
    : graph_(std::move(underlying)), out_(graph_.order()) {
  if (graph_.max_degree() > 3) throw PatternError("pattern has a vertex of valency above 3");
  if (!is_triangle_free(graph_)) throw PatternError("pattern contains a triangle");
  for (const Arc& a : arcs) {
    if (a.tail < 0 || a.tail >= order() || a.head < 0 || a.head >= order()) {
      throw PatternError("arc endpoint out of range");
    }
    if (!graph_.adjacent(a.tail, a.head)) throw PatternError("arc is not an edge of the pattern");
    if (out_[a.head].contains(a.tail)) throw PatternError("edge directed both ways");
    if (out_[a.tail].contains(a.head)) throw PatternError("duplicate arc");
    if (graph_.degree(a.tail) != 3) throw PatternError("arc tail is not trivalent");
    out_[a.tail].insert(a.head);
  }
  for (Vertex p = 0; p < order(); ++p) {
    if (graph_.degree(p) == 3 && outdeg(p) != 1 && outdeg(p) != 3) {
      throw PatternError("trivalent vertex " + std::to_string(p) + " has out-valency " +
                         std::to_string(outdeg(p)));
    }
  }
}

std::vector<Arc> Pattern::arcs() const {
  std::vector<Arc> out;
  for (Vertex p = 0; p < order(); ++p) {
    for (Vertex q : out_[p]) out.push_back({p, q});
  }
  return out;
}

Pattern Pattern::relabeled(std::span<const Vertex> perm) const {
  std::vector<Arc> moved;
  for (const Arc& a : arcs()) moved.push_back({perm[a.tail], perm[a.head]});
  return Pattern(graph_.relabeled(perm), std::move(moved));
}

namespace {

VertexSet members(const Hyperedge& h) {
  VertexSet s;
  for (Vertex v : h) s.insert(v);
  return s;
}

}  // namespace

bool is_valid_hyperedge(const Pattern& p, const Hyperedge& h) {
  const Graph& g = p.underlying();
  const VertexSet s = members(h);
  if (s.size() != 4 || !s.is_subset_of(g.vertices())) return false;
  // Four vertices of a triangle-free graph induce C4 iff each has exactly two
  // neighbours among them.
  int leaving = 0;
  for (Vertex v : s) {
    if ((g.neighbors(v) & s).size() != 2) return false;
    leaving += (g.neighbors(v) - s).size();
    if (g.degree(v) == 3 && p.outdeg(v) != 1) return false;
  }
  return leaving <= 1;
}

H13Pattern::H13Pattern(Pattern p, std::vector<Hyperedge> hyperedges)
    : pattern_(std::move(p)), hyperedges_(std::move(hyperedges)) {
  VertexSet used;
  for (auto& h : hyperedges_) {
    std::sort(h.begin(), h.end());
    if (!is_valid_hyperedge(pattern_, h)) throw PatternError("invalid hyperedge");
    if (members(h).intersects(used)) throw PatternError("hyperedges overlap");
    used |= members(h);
  }
  std::sort(hyperedges_.begin(), hyperedges_.end());
}

H13Pattern H13Pattern::relabeled(std::span<const Vertex> perm) const {
  std::vector<Hyperedge> moved;
  for (const auto& h : hyperedges_) moved.push_back({perm[h[0]], perm[h[1]], perm[h[2]], perm[h[3]]});
  return H13Pattern(pattern_.relabeled(perm), std::move(moved));
}

PatternEncoding encode_pattern(const H13Pattern& hp) {
  const Pattern& p = hp.pattern();
  PatternEncoding enc{p.underlying(), std::vector<int>(p.order(), 0)};
  for (const Arc& a : p.arcs()) {
    enc.graph.remove_edge(a.tail, a.head);
    const Vertex x = enc.graph.add_vertex();
    const Vertex y = enc.graph.add_vertex();
    enc.colors.push_back(1);
    enc.colors.push_back(2);
    enc.graph.add_edge(a.tail, x);
    enc.graph.add_edge(x, y);
    enc.graph.add_edge(y, a.head);
  }
  for (const auto& h : hp.hyperedges()) {
    const Vertex c = enc.graph.add_vertex();
    enc.colors.push_back(3);
    for (Vertex v : h) enc.graph.add_edge(c, v);
  }
  return enc;
}

CanonicalForm pattern_form(const H13Pattern& hp) {
  const auto enc = encode_pattern(hp);
  return canonical_form(enc.graph, enc.colors);
}

CanonicalForm pattern_form(const Pattern& p) { return pattern_form(H13Pattern(p)); }

H13Pattern canonical_pattern(const H13Pattern& hp) {
  const auto enc = encode_pattern(hp);
  const auto lab = canonical_labeling(enc.graph, enc.colors);
  const int n = hp.order();
  std::vector<Vertex> by_pos(n);
  std::iota(by_pos.begin(), by_pos.end(), 0);
  std::sort(by_pos.begin(), by_pos.end(),
            [&](Vertex a, Vertex b) { return lab.position[a] < lab.position[b]; });
  std::vector<Vertex> perm(n);
  for (int i = 0; i < n; ++i) perm[by_pos[i]] = i;
  return hp.relabeled(perm);
}

std::string serialize(const H13Pattern& hp) {
  std::string out = graph6_encode(hp.pattern().underlying());
  out.push_back(';');
  bool first = true;
  for (const Arc& a : hp.pattern().arcs()) {
    if (!first) out.push_back(',');
    first = false;
    out += std::to_string(a.tail) + ">" + std::to_string(a.head);
  }
  out.push_back(';');
  first = true;
  for (const auto& h : hp.hyperedges()) {
    if (!first) out.push_back(',');
    first = false;
    out += std::to_string(h[0]) + "." + std::to_string(h[1]) + "." + std::to_string(h[2]) + "." +
           std::to_string(h[3]);
  }
  return out;
}

std::string serialize(const Pattern& p) { return serialize(H13Pattern(p)); }

namespace {

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  if (s.empty()) return out;
  std::size_t start = 0;
  while (true) {
    const auto pos = s.find(sep, start);
    out.push_back(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

int parse_int(std::string_view s) {
  int v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty()) {
    throw PatternError("bad integer '" + std::string(s) + "' in pattern line");
  }
  return v;
}

}  // namespace

H13Pattern parse_h13_pattern(std::string_view line) {
  while (!line.empty() && (line.back() == '\n' || line.back() == '\r')) line.remove_suffix(1);
  const auto fields = split(line, ';');
  if (fields.size() != 3) throw PatternError("pattern line needs three ';'-separated fields");
  Graph g;
  try {
    g = graph6_decode(fields[0]);
  } catch (const Graph6Error& e) {
    throw PatternError(std::string("pattern graph: ") + e.what());
  }
  std::vector<Arc> arcs;
  for (auto item : split(fields[1], ',')) {
    const auto ends = split(item, '>');
    if (ends.size() != 2) throw PatternError("bad arc '" + std::string(item) + "'");
    arcs.push_back({parse_int(ends[0]), parse_int(ends[1])});
  }
  std::vector<Hyperedge> hyper;
  for (auto item : split(fields[2], ',')) {
    const auto ids = split(item, '.');
    if (ids.size() != 4) throw PatternError("bad hyperedge '" + std::string(item) + "'");
    hyper.push_back({parse_int(ids[0]), parse_int(ids[1]), parse_int(ids[2]), parse_int(ids[3])});
  }
  return H13Pattern(Pattern(std::move(g), std::move(arcs)), std::move(hyper));
}

std::vector<Graph> enumerate_underlying(int n) {
  if (n < 1 || n > 14) throw PatternError("underlying graph order must lie in 1..14");
  std::map<CanonicalForm, Graph> level;
  level.emplace(canonical_form(Graph(1)), Graph(1));
  for (int m = 2; m <= n; ++m) {
    std::map<CanonicalForm, Graph> next;
    for (const auto& [form, g] : level) {
      std::vector<Vertex> open;
      for (Vertex v = 0; v < g.order(); ++v) {
        if (g.degree(v) < 3) open.push_back(v);
      }
      auto attach = [&](const VertexSet& s) {
        if (!g.is_independent(s)) return;
        Graph child = g;
        const Vertex x = child.add_vertex();
        for (Vertex v : s) child.add_edge(x, v);
        auto lab = canonical_labeling(child);
        if (next.contains(lab.form)) return;
        next.emplace(lab.form, child.relabeled(lab.position));
      };
      // The new vertex meets an independent set of one to three unsaturated
      // vertices; independence keeps the child triangle-free.
      const std::size_t k = open.size();
      for (std::size_t a = 0; a < k; ++a) {
        const VertexSet sa = VertexSet::single(open[a]);
        attach(sa);
        for (std::size_t b = a + 1; b < k; ++b) {
          const VertexSet sb = sa | VertexSet::single(open[b]);
          attach(sb);
          for (std::size_t c = b + 1; c < k; ++c) attach(sb | VertexSet::single(open[c]));
        }
      }
    }
    level = std::move(next);
  }
  std::vector<Graph> out;
  out.reserve(level.size());
  for (auto& [form, g] : level) out.push_back(std::move(g));
  return out;
}

std::vector<Pattern> enumerate_orientations(const Graph& underlying) {
  const Graph& g = underlying;
  std::vector<Vertex> tri;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (g.degree(v) == 3) tri.push_back(v);
  }
  std::map<CanonicalForm, Pattern> found;
  std::vector<VertexSet> out(g.order());

  // Each trivalent vertex directs all three edges or exactly one.
  auto recurse = [&](auto&& self, std::size_t i) -> void {
    if (i == tri.size()) {
      std::vector<Arc> arcs;
      for (Vertex t : tri) {
        for (Vertex h : out[t]) arcs.push_back({t, h});
      }
      H13Pattern hp{Pattern(g, std::move(arcs))};
      auto form = pattern_form(hp);
      if (!found.contains(form)) found.emplace(std::move(form), canonical_pattern(hp).pattern());
      return;
    }
    const Vertex t = tri[i];
    auto consistent = [&](const VertexSet& s) {
      for (Vertex h : s) {
        if (out[h].contains(t)) return false;
      }
      return true;
    };
    std::vector<VertexSet> options{g.neighbors(t)};
    for (Vertex h : g.neighbors(t)) options.push_back(VertexSet::single(h));
    for (const auto& s : options) {
      if (!consistent(s)) continue;
      out[t] = s;
      self(self, i + 1);
      out[t] = VertexSet{};
    }
  };
  recurse(recurse, 0);

  std::vector<Pattern> result;
  for (auto& [form, p] : found) result.push_back(std::move(p));
  return result;
}

std::vector<H13Pattern> enumerate_decorations(const Pattern& p) {
  const Graph& g = p.underlying();
  std::vector<Hyperedge> candidates;
  std::set<Hyperedge> seen;
  for (Vertex a = 0; a < g.order(); ++a) {
    const auto nb = g.neighbors(a);
    for (Vertex x : nb) {
      for (Vertex y : nb) {
        if (y <= x) continue;
        for (Vertex z : g.neighbors(x) & g.neighbors(y)) {
          if (z == a) continue;
          Hyperedge h{a, x, y, z};
          std::sort(h.begin(), h.end());
          if (seen.insert(h).second && is_valid_hyperedge(p, h)) candidates.push_back(h);
        }
      }
    }
  }
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    for (std::size_t j = i + 1; j < candidates.size(); ++j) {
      if (members(candidates[i]).intersects(members(candidates[j]))) {
        throw PatternError("overlapping admissible hyperedges in pattern " + serialize(p));
      }
    }
  }

  std::map<CanonicalForm, H13Pattern> found;
  const std::size_t c = candidates.size();
  for (std::size_t mask = 0; mask < (std::size_t{1} << c); ++mask) {
    std::vector<Hyperedge> chosen;
    for (std::size_t i = 0; i < c; ++i) {
      if (mask >> i & 1) chosen.push_back(candidates[i]);
    }
    H13Pattern hp(p, std::move(chosen));
    auto form = pattern_form(hp);
    if (!found.contains(form)) found.emplace(std::move(form), canonical_pattern(hp));
  }
  std::vector<H13Pattern> result;
  for (auto& [form, hp] : found) result.push_back(std::move(hp));
  return result;
}

std::vector<H13Pattern> enumerate_h13_patterns(int n) {
  std::map<CanonicalForm, H13Pattern> found;
  for (const Graph& g : enumerate_underlying(n)) {
    for (const Pattern& p : enumerate_orientations(g)) {
      for (auto& hp : enumerate_decorations(p)) {
        auto form = pattern_form(hp);
        found.emplace(std::move(form), std::move(hp));
      }
    }
  }
  std::vector<H13Pattern> result;
  for (auto& [form, hp] : found) result.push_back(std::move(hp));
  return result;
}

ContractionMap contract_to_auxiliary(const H13Pattern& hp) {
  const Pattern& p = hp.pattern();
  const int n = p.order();
  const auto& hyper = hp.hyperedges();
  std::vector<int> owner(n, -1);
  for (std::size_t i = 0; i < hyper.size(); ++i) {
    for (Vertex v : hyper[i]) owner[v] = static_cast<int>(i);
  }

  ContractionMap cm;
  cm.hyperedge_vertex.assign(hyper.size(), -1);
  cm.outward.assign(hyper.size(), false);
  std::vector<Vertex> image(n, -1);
  // v_H takes the place of the least member of H.
  for (Vertex v = 0; v < n; ++v) {
    if (owner[v] < 0) {
      image[v] = static_cast<Vertex>(cm.origin.size());
      cm.origin.push_back(v);
    } else if (cm.hyperedge_vertex[owner[v]] < 0) {
      cm.hyperedge_vertex[owner[v]] = static_cast<Vertex>(cm.origin.size());
      cm.origin.push_back(-1 - owner[v]);
    }
    if (owner[v] >= 0) image[v] = cm.hyperedge_vertex[owner[v]];
  }

  Graph aux(static_cast<int>(cm.origin.size()));
  for (const auto& [u, v] : p.underlying().edges()) {
    if (image[u] != image[v]) aux.add_edge(image[u], image[v]);
  }
  std::vector<Arc> arcs;
  for (const Arc& a : p.arcs()) {
    if (image[a.tail] == image[a.head]) continue;
    if (owner[a.tail] >= 0) {
      cm.outward[owner[a.tail]] = true;
      continue;
    }
    arcs.push_back({image[a.tail], image[a.head]});
  }
  cm.auxiliary = Pattern(std::move(aux), std::move(arcs));
  return cm;
}

}  // namespace crochet
