#include "crochet/graph.hpp"

#include <algorithm>
#include <string>

namespace crochet {

Graph::Graph(int n) {
  if (n < 0 || n > kMaxVertices) {
    throw GraphError("vertex count " + std::to_string(n) + " outside [0, 128]");
  }
  adj_.resize(n);
}

Graph::Graph(int n, std::span<const Edge> edges) : Graph(n) {
  for (auto [u, v] : edges) add_edge(u, v);
}

void Graph::check_vertex(Vertex v) const {
  if (v < 0 || v >= order()) {
    throw GraphError("vertex " + std::to_string(v) + " out of range for graph of order " +
                     std::to_string(order()));
  }
}

Vertex Graph::add_vertex() {
  if (order() >= kMaxVertices) throw GraphError("graph would exceed 128 vertices");
  adj_.emplace_back();
  return order() - 1;
}

void Graph::add_edge(Vertex u, Vertex v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw GraphError("loop at vertex " + std::to_string(u));
  if (adj_[u].contains(v)) {
    throw GraphError("duplicate edge " + std::to_string(u) + "-" + std::to_string(v));
  }
  adj_[u].insert(v);
  adj_[v].insert(u);
  ++edges_;
}

void Graph::remove_edge(Vertex u, Vertex v) {
  check_vertex(u);
  check_vertex(v);
  if (!adj_[u].contains(v)) {
    throw GraphError("no edge " + std::to_string(u) + "-" + std::to_string(v));
  }
  adj_[u].erase(v);
  adj_[v].erase(u);
  --edges_;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edges_);
  for (Vertex u = 0; u < order(); ++u) {
    for (Vertex v : adj_[u]) {
      if (v > u) out.emplace_back(u, v);
    }
  }
  return out;
}

int Graph::max_degree() const {
  int d = 0;
  for (const auto& a : adj_) d = std::max(d, a.size());
  return d;
}

bool Graph::is_independent(const VertexSet& s) const {
  for (Vertex v : s) {
    if (adj_[v].intersects(s)) return false;
  }
  return true;
}

std::vector<std::vector<Vertex>> Graph::components() const {
  std::vector<std::vector<Vertex>> out;
  VertexSet unseen = vertices();
  while (!unseen.empty()) {
    VertexSet comp = VertexSet::single(unseen.first());
    VertexSet frontier = comp;
    while (!frontier.empty()) {
      VertexSet next;
      for (Vertex v : frontier) next |= adj_[v];
      next -= comp;
      comp |= next;
      frontier = next;
    }
    unseen -= comp;
    out.emplace_back(comp.begin(), comp.end());
  }
  return out;
}

bool Graph::is_connected() const { return components().size() <= 1; }

Graph Graph::induced(const VertexSet& keep, std::vector<Vertex>* old_index) const {
  std::vector<Vertex> map(order(), -1);
  std::vector<Vertex> back;
  for (Vertex v : keep) {
    check_vertex(v);
    map[v] = static_cast<Vertex>(back.size());
    back.push_back(v);
  }
  Graph g(static_cast<int>(back.size()));
  for (Vertex nu = 0; nu < g.order(); ++nu) {
    for (Vertex w : adj_[back[nu]] & keep) {
      if (map[w] > nu) g.add_edge(nu, map[w]);
    }
  }
  if (old_index) *old_index = std::move(back);
  return g;
}

Graph Graph::relabeled(std::span<const Vertex> perm) const {
  if (static_cast<int>(perm.size()) != order()) throw GraphError("permutation size mismatch");
  Graph g(order());
  for (auto [u, v] : edges()) g.add_edge(perm[u], perm[v]);
  return g;
}

Graph Graph::disjoint_union(const Graph& other) const {
  Graph g = *this;
  const int shift = order();
  for (int i = 0; i < other.order(); ++i) g.add_vertex();
  for (auto [u, v] : other.edges()) g.add_edge(u + shift, v + shift);
  return g;
}

Graph cycle_graph(int n) {
  Graph g(n);
  for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
  return g;
}

Graph path_graph(int n) {
  Graph g(n);
  for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
  return g;
}

Graph complete_bipartite(int a, int b) {
  Graph g(a + b);
  for (int i = 0; i < a; ++i) {
    for (int j = 0; j < b; ++j) g.add_edge(i, a + j);
  }
  return g;
}

Graph circulant(int n, std::span<const int> connections) {
  Graph g(n);
  for (int i = 0; i < n; ++i) {
    for (int c : connections) {
      int j = ((i + c) % n + n) % n;
      if (j != i && !g.adjacent(i, j)) g.add_edge(i, j);
    }
  }
  return g;
}

}  // namespace crochet
