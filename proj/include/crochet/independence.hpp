#pragma once

#include <optional>
#include <vector>

#include "crochet/graph.hpp"

namespace crochet {

/// True iff no three mutually adjacent vertices exist.
bool is_triangle_free(const Graph& g);

/// Exact independence number of g.
int independence_number(const Graph& g);
/// Exact independence number of the subgraph induced on `within`.
int independence_number(const Graph& g, const VertexSet& within);

/// G_v: the graph left after deleting v together with all of its neighbours.
struct NeighborhoodDeletion {
  Graph graph;
  std::vector<Vertex> old_index;  ///< new vertex -> vertex of the input graph
};
NeighborhoodDeletion closed_neighborhood_deletion(const Graph& g, Vertex v);

/// Every maximum independent set of g meets m.
bool is_destabiliser(const Graph& g, const VertexSet& m);
/// A destabiliser none of whose one-smaller subsets is a destabiliser.
bool is_minimal_destabiliser(const Graph& g, const VertexSet& m);

/// deg(v) when (g, v) is a d-stitch, otherwise nullopt.
std::optional<int> classify_d_stitch(const Graph& g, Vertex v);

/// Deleting any single edge raises the independence number.
bool is_edge_critical(const Graph& g);

}  // namespace crochet
