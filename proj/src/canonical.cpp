#include "crochet/canonical.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>

namespace crochet {

namespace {

// Form layout: byte n, then n colour bytes in canonical order, then the upper
// triangle of the adjacency matrix row by row, packed 8 bits per byte.
CanonicalForm encode(const Graph& g, std::span<const int> colors, std::span<const Vertex> at) {
  const int n = g.order();
  CanonicalForm out;
  out.reserve(1 + n + (n * n) / 16 + 1);
  out.push_back(static_cast<char>(n));
  for (int i = 0; i < n; ++i) out.push_back(static_cast<char>(colors.empty() ? 0 : colors[at[i]]));
  unsigned char acc = 0;
  int nbits = 0;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      acc = static_cast<unsigned char>((acc << 1) | (g.adjacent(at[i], at[j]) ? 1 : 0));
      if (++nbits == 8) {
        out.push_back(static_cast<char>(acc));
        acc = 0;
        nbits = 0;
      }
    }
  }
  if (nbits > 0) out.push_back(static_cast<char>(acc << (8 - nbits)));
  return out;
}

struct Decoded {
  Graph graph;
  std::vector<int> colors;
};

Decoded decode(const CanonicalForm& f) {
  const int n = static_cast<unsigned char>(f.at(0));
  Decoded d{Graph(n), std::vector<int>(n)};
  for (int i = 0; i < n; ++i) d.colors[i] = static_cast<unsigned char>(f.at(1 + i));
  std::size_t byte = 1 + n;
  int bit = 0;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const auto b = static_cast<unsigned char>(f.at(byte));
      if ((b >> (7 - bit)) & 1) d.graph.add_edge(i, j);
      if (++bit == 8) {
        bit = 0;
        ++byte;
      }
    }
  }
  return d;
}

std::uint64_t mix(std::uint64_t h, std::uint64_t x) {
  h ^= x + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  return h;
}

// Ordered partition stored as one colour per vertex; colours are cell ranks.
using Coloring = std::vector<int>;

class Canonizer {
 public:
  Canonizer(const Graph& g, std::span<const int> colors) : g_(g), colors_(colors), n_(g.order()) {}

  CanonicalLabeling run() {
    Coloring start(n_, 0);
    if (!colors_.empty()) {
      std::vector<int> distinct(colors_.begin(), colors_.end());
      std::sort(distinct.begin(), distinct.end());
      distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
      for (int v = 0; v < n_; ++v) {
        start[v] = static_cast<int>(std::lower_bound(distinct.begin(), distinct.end(), colors_[v]) -
                                    distinct.begin());
      }
    }
    std::vector<std::uint64_t> traces{refine(start)};
    std::vector<Vertex> path;
    search(start, traces, path);

    CanonicalLabeling out;
    out.position.resize(n_);
    for (int v = 0; v < n_; ++v) out.position[v] = best_->coloring[v];
    out.form = best_->cert;
    return out;
  }

 private:
  struct Leaf {
    std::vector<std::uint64_t> traces;
    CanonicalForm cert;
    Coloring coloring;
  };

  // Equitable refinement. New cells are ordered by (old cell, sorted multiset of
  // neighbour cells), so the result depends only on the isomorphism class of
  // (graph, coloring). Returns a hash of the refinement history.
  std::uint64_t refine(Coloring& color) const {
    std::uint64_t trace = 0;
    int cells = 1 + *std::max_element(color.begin(), color.end());
    std::vector<std::vector<int>> sig(n_);
    std::vector<int> order(n_);
    while (true) {
      for (int v = 0; v < n_; ++v) {
        auto& s = sig[v];
        s.clear();
        s.push_back(color[v]);
        for (Vertex u : g_.neighbors(v)) s.push_back(color[u]);
        std::sort(s.begin() + 1, s.end());
      }
      std::iota(order.begin(), order.end(), 0);
      std::sort(order.begin(), order.end(), [&](int a, int b) { return sig[a] < sig[b]; });
      int rank = 0;
      for (int i = 0; i < n_; ++i) {
        if (i > 0 && sig[order[i]] != sig[order[i - 1]]) {
          ++rank;
          for (int x : sig[order[i - 1]]) trace = mix(trace, static_cast<std::uint64_t>(x));
          trace = mix(trace, 0xffffULL);
        }
        color[order[i]] = rank;
      }
      for (int x : sig[order[n_ - 1]]) trace = mix(trace, static_cast<std::uint64_t>(x));
      const int next_cells = rank + 1;
      trace = mix(trace, static_cast<std::uint64_t>(next_cells));
      if (next_cells == cells) break;
      cells = next_cells;
    }
    return trace;
  }

  static Coloring individualize(const Coloring& color, Vertex v) {
    Coloring out(color);
    const int c = color[v];
    for (auto& x : out) {
      if (x > c) ++x;
    }
    for (std::size_t u = 0; u < out.size(); ++u) {
      if (color[u] == c && static_cast<Vertex>(u) != v) out[u] = c + 1;
    }
    return out;
  }

  // -1, 0, +1 comparing a trace path against the same-length prefix of the best leaf.
  int compare_prefix(const std::vector<std::uint64_t>& traces) const {
    if (!best_) return 1;
    for (std::size_t i = 0; i < traces.size(); ++i) {
      if (i >= best_->traces.size()) return 1;
      if (traces[i] != best_->traces[i]) return traces[i] < best_->traces[i] ? -1 : 1;
    }
    return 0;
  }

  int find(std::vector<int>& parent, int x) const {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }

  std::vector<int> orbits_fixing(const std::vector<Vertex>& path) const {
    std::vector<int> parent(n_);
    std::iota(parent.begin(), parent.end(), 0);
    for (const auto& gamma : automorphisms_) {
      bool fixes = std::all_of(path.begin(), path.end(), [&](Vertex p) { return gamma[p] == p; });
      if (!fixes) continue;
      for (int v = 0; v < n_; ++v) {
        int a = find(parent, v);
        int b = find(parent, gamma[v]);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
      }
    }
    for (int v = 0; v < n_; ++v) parent[v] = find(parent, v);
    return parent;
  }

  void search(const Coloring& color, std::vector<std::uint64_t>& traces, std::vector<Vertex>& path) {
    const int cmp = compare_prefix(traces);
    if (cmp < 0) return;

    // Target cell: the first smallest non-singleton cell.
    std::vector<int> cell_size(n_, 0);
    for (int c : color) ++cell_size[c];
    int target = -1;
    for (int c = 0; c < n_; ++c) {
      if (cell_size[c] > 1 && (target < 0 || cell_size[c] < cell_size[target])) target = c;
    }

    if (target < 0) {
      leaf(color, traces, cmp);
      return;
    }

    std::vector<Vertex> tried;
    for (Vertex v = 0; v < n_; ++v) {
      if (color[v] != target) continue;
      if (!tried.empty() && !automorphisms_.empty()) {
        auto orbit = orbits_fixing(path);
        bool redundant = std::any_of(tried.begin(), tried.end(),
                                     [&](Vertex u) { return orbit[u] == orbit[v]; });
        if (redundant) continue;
      }
      Coloring child = individualize(color, v);
      traces.push_back(refine(child));
      path.push_back(v);
      search(child, traces, path);
      path.pop_back();
      traces.pop_back();
      tried.push_back(v);
    }
  }

  void leaf(const Coloring& color, const std::vector<std::uint64_t>& traces, int cmp) {
    std::vector<Vertex> at(n_);
    for (int v = 0; v < n_; ++v) at[color[v]] = v;
    CanonicalForm cert = encode(g_, colors_, at);
    if (cmp > 0 || cert > best_->cert) {
      best_ = Leaf{traces, std::move(cert), color};
      return;
    }
    if (cert == best_->cert) {
      // Both labellings give the same graph: v -> best^-1(this(v)) is an automorphism.
      std::vector<Vertex> best_at(n_);
      for (int v = 0; v < n_; ++v) best_at[best_->coloring[v]] = v;
      std::vector<Vertex> gamma(n_);
      for (int v = 0; v < n_; ++v) gamma[v] = best_at[color[v]];
      automorphisms_.push_back(std::move(gamma));
    }
  }

  const Graph& g_;
  std::span<const int> colors_;
  int n_;
  std::optional<Leaf> best_;
  std::vector<std::vector<Vertex>> automorphisms_;
};

CanonicalLabeling connected_labeling(const Graph& g, std::span<const int> colors) {
  if (g.order() == 0) return {{}, encode(g, colors, {})};
  return Canonizer(g, colors).run();
}

}  // namespace

CanonicalLabeling canonical_labeling(const Graph& g, std::span<const int> colors) {
  if (!colors.empty() && static_cast<int>(colors.size()) != g.order()) {
    throw GraphError("colour vector size does not match graph order");
  }
  auto comps = g.components();
  if (comps.size() <= 1) return connected_labeling(g, colors);

  struct Part {
    std::vector<Vertex> vertices;
    CanonicalLabeling labeling;
  };
  std::vector<Part> parts;
  for (auto& comp : comps) {
    VertexSet keep;
    for (Vertex v : comp) keep.insert(v);
    Graph sub = g.induced(keep);
    std::vector<int> sub_colors;
    if (!colors.empty()) {
      for (Vertex v : comp) sub_colors.push_back(colors[v]);
    }
    parts.push_back({comp, connected_labeling(sub, sub_colors)});
  }
  std::stable_sort(parts.begin(), parts.end(),
                   [](const Part& a, const Part& b) { return a.labeling.form < b.labeling.form; });

  CanonicalLabeling out;
  out.position.assign(g.order(), -1);
  int offset = 0;
  for (const auto& p : parts) {
    for (std::size_t i = 0; i < p.vertices.size(); ++i) {
      out.position[p.vertices[i]] = offset + p.labeling.position[i];
    }
    offset += static_cast<int>(p.vertices.size());
  }
  std::vector<Vertex> at(g.order());
  for (int v = 0; v < g.order(); ++v) at[out.position[v]] = v;
  out.form = encode(g, colors, at);
  return out;
}

CanonicalForm canonical_form(const Graph& g) { return canonical_labeling(g).form; }

CanonicalForm canonical_form(const Graph& g, std::span<const int> colors) {
  return canonical_labeling(g, colors).form;
}

bool are_isomorphic(const Graph& a, const Graph& b) {
  if (a.order() != b.order() || a.size() != b.size()) return false;
  return canonical_form(a) == canonical_form(b);
}

Graph canonical_graph(const Graph& g) { return g.relabeled(canonical_labeling(g).position); }

CanonicalForm union_form(std::vector<CanonicalForm> parts) {
  std::sort(parts.begin(), parts.end());
  Graph g;
  std::vector<int> colors;
  for (const auto& f : parts) {
    Decoded d = decode(f);
    g = g.disjoint_union(d.graph);
    colors.insert(colors.end(), d.colors.begin(), d.colors.end());
  }
  std::vector<Vertex> identity(g.order());
  std::iota(identity.begin(), identity.end(), 0);
  return encode(g, colors, identity);
}

}  // namespace crochet
