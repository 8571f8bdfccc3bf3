#pragma once

#include <optional>
#include <vector>

#include "crochet/graph.hpp"

namespace crochet {

/// A bipartite base set M = A ∪ B of a host graph. A and B are disjoint
/// independent sets, both nonempty; when exactly one part is a singleton it is A.
struct BipartiteBase {
  VertexSet a;
  VertexSet b;

  VertexSet all() const { return a | b; }

  /// N[u] split as A = {u}, B = N(u).
  static BipartiteBase closed_neighborhood(const Graph& g, Vertex u);
};

/// Throws GraphError unless `base` satisfies the BipartiteBase invariants in g.
void validate_base(const Graph& g, const BipartiteBase& base);

struct StitchResult {
  Graph graph;
  Vertex apex = -1;
  std::optional<Vertex> coapex;
  std::vector<Vertex> new_vertices;  ///< in constructor order (v1, v2, ... / c1, c2, ...)
};

/// G + P2: new vertices (v1, v2), apex v1, coapex v2.
StitchResult cr1(const Graph& g);

/// 2-stitch on `base`: new vertices (s, a, b) with s ~ a, s ~ b, a ~ A, b ~ B.
/// Apex s; coapex a when |A| = 1, unset otherwise.
StitchResult cr2(const Graph& g, const BipartiteBase& base);

/// C4 stitch: new 4-cycle c1 c2 c3 c4 with c1 ~ A1, c3 ~ B1, c2 ~ A2, c4 ~ B2.
/// Apex c2, coapex c1.
StitchResult cr_c4(const Graph& g, const BipartiteBase& m1, const BipartiteBase& m2);

/// Which leaf, besides v2, each A_i of a triangular stitch is joined to.
enum class TriangleWinding {
  kForward,   ///< A1 ~ v4, A2 ~ v5, A3 ~ v3
  kBackward,  ///< A1 ~ v5, A2 ~ v3, A3 ~ v4
};

/// Triangular stitch: v1 ~ v2..v5, v2 ~ A1 ∪ A2 ∪ A3, v3 ~ B1, v4 ~ B2, v5 ~ B3,
/// and each A_i is also joined to the leaf of the next base in winding order.
/// Apex v1, coapex v2.
StitchResult cr_triangle(const Graph& g, const BipartiteBase& m1, const BipartiteBase& m2,
                         const BipartiteBase& m3,
                         TriangleWinding winding = TriangleWinding::kForward);

/// K_{2,3} stitch: {v1, v2} completely joined to {v3, v4, v5}; v1 ~ A1, v2 ~ B1,
/// v3 ~ A2, v4 ~ B2, v3 ~ A3, v4 ~ A3, v5 ~ B3. Apex v1, no coapex.
StitchResult cr_k23(const Graph& g, const BipartiteBase& m1, const BipartiteBase& m2,
                    const BipartiteBase& m3);

}  // namespace crochet
