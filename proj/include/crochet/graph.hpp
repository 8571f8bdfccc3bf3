#pragma once

#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "crochet/vertex_set.hpp"

namespace crochet {

using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;

class GraphError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Simple undirected graph on vertices 0..n-1 with bitset adjacency.
///
/// Values are cheap to copy (at most 2 KiB of adjacency). Mutation is limited
/// to growing the graph; every algorithm in the library takes graphs by const
/// reference and returns new values.
class Graph {
 public:
  static constexpr int kMaxVertices = VertexSet::kCapacity;

  Graph() = default;
  explicit Graph(int n);
  Graph(int n, std::span<const Edge> edges);

  int order() const { return static_cast<int>(adj_.size()); }
  int size() const { return edges_; }

  const VertexSet& neighbors(Vertex v) const { return adj_[v]; }
  int degree(Vertex v) const { return adj_[v].size(); }
  bool adjacent(Vertex u, Vertex v) const { return adj_[u].contains(v); }
  VertexSet vertices() const { return VertexSet::range(order()); }
  VertexSet closed_neighborhood(Vertex v) const { return adj_[v] | VertexSet::single(v); }

  /// Appends an isolated vertex and returns its index.
  Vertex add_vertex();
  /// Adds edge uv; throws on loops, out-of-range endpoints, and duplicates.
  void add_edge(Vertex u, Vertex v);
  void remove_edge(Vertex u, Vertex v);

  std::vector<Edge> edges() const;
  int max_degree() const;
  bool is_independent(const VertexSet& s) const;
  bool is_connected() const;
  /// Connected components, each sorted ascending; components ordered by least vertex.
  std::vector<std::vector<Vertex>> components() const;

  /// Subgraph induced on `keep`, vertices renumbered in increasing order.
  /// When `old_index` is given it receives new -> old.
  Graph induced(const VertexSet& keep, std::vector<Vertex>* old_index = nullptr) const;
  /// Graph with vertex v renamed perm[v].
  Graph relabeled(std::span<const Vertex> perm) const;
  /// Disjoint union; vertices of `other` are shifted by order().
  Graph disjoint_union(const Graph& other) const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  void check_vertex(Vertex v) const;

  std::vector<VertexSet> adj_;
  int edges_ = 0;
};

Graph cycle_graph(int n);
Graph path_graph(int n);
Graph complete_bipartite(int a, int b);
/// Circulant graph on n vertices joining i and i±c (mod n) for each c.
Graph circulant(int n, std::span<const int> connections);

}  // namespace crochet
