#include "crochet/independence.hpp"

#include <algorithm>

namespace crochet {

bool is_triangle_free(const Graph& g) {
  for (Vertex u = 0; u < g.order(); ++u) {
    for (Vertex v : g.neighbors(u)) {
      if (v > u && g.neighbors(u).intersects(g.neighbors(v))) return false;
    }
  }
  return true;
}

namespace {

// Include/exclude branching on a maximum-degree vertex. Vertices of degree
// <= 1 are taken greedily, which never loses optimality. The bound is
// |cand| minus a greedy matching: each matched edge holds at most one vertex of
// an independent set.
class MaxIndependentSet {
 public:
  explicit MaxIndependentSet(const Graph& g) : g_(g) {}

  int solve(const VertexSet& cand) {
    best_ = greedy(cand);
    search(cand, 0);
    return best_;
  }

 private:
  int greedy(VertexSet cand) const {
    int count = 0;
    while (!cand.empty()) {
      Vertex pick = -1;
      int pick_deg = 1 << 30;
      for (Vertex v : cand) {
        int d = (g_.neighbors(v) & cand).size();
        if (d < pick_deg) {
          pick = v;
          pick_deg = d;
        }
      }
      ++count;
      cand -= g_.closed_neighborhood(pick);
    }
    return count;
  }

  int matching_bound(VertexSet cand) const {
    int bound = 0;
    while (!cand.empty()) {
      Vertex v = cand.first();
      cand.erase(v);
      VertexSet nb = g_.neighbors(v) & cand;
      if (!nb.empty()) cand.erase(nb.first());
      ++bound;
    }
    return bound;
  }

  void search(VertexSet cand, int taken) {
    for (bool reduced = true; reduced;) {
      reduced = false;
      for (Vertex v : cand) {
        if ((g_.neighbors(v) & cand).size() <= 1) {
          ++taken;
          cand -= g_.closed_neighborhood(v);
          reduced = true;
          break;
        }
      }
    }
    if (cand.empty()) {
      best_ = std::max(best_, taken);
      return;
    }
    if (taken + matching_bound(cand) <= best_) return;

    Vertex pivot = -1;
    int pivot_deg = -1;
    for (Vertex v : cand) {
      int d = (g_.neighbors(v) & cand).size();
      if (d > pivot_deg) {
        pivot = v;
        pivot_deg = d;
      }
    }
    search(cand - g_.closed_neighborhood(pivot), taken + 1);
    cand.erase(pivot);
    search(cand, taken);
  }

  const Graph& g_;
  int best_ = 0;
};

}  // namespace

int independence_number(const Graph& g, const VertexSet& within) {
  if (within.empty()) return 0;
  return MaxIndependentSet(g).solve(within & g.vertices());
}

int independence_number(const Graph& g) { return independence_number(g, g.vertices()); }

NeighborhoodDeletion closed_neighborhood_deletion(const Graph& g, Vertex v) {
  if (v < 0 || v >= g.order()) throw GraphError("vertex out of range: " + std::to_string(v));
  NeighborhoodDeletion out;
  out.graph = g.induced(g.vertices() - g.closed_neighborhood(v), &out.old_index);
  return out;
}

bool is_destabiliser(const Graph& g, const VertexSet& m) {
  if (!m.is_subset_of(g.vertices())) throw GraphError("destabiliser candidate not a vertex subset");
  return independence_number(g, g.vertices() - m) < independence_number(g);
}

bool is_minimal_destabiliser(const Graph& g, const VertexSet& m) {
  if (!m.is_subset_of(g.vertices())) throw GraphError("destabiliser candidate not a vertex subset");
  const int alpha = independence_number(g);
  const VertexSet all = g.vertices();
  if (independence_number(g, all - m) >= alpha) return false;
  for (Vertex x : m) {
    VertexSet smaller = m;
    smaller.erase(x);
    if (independence_number(g, all - smaller) < alpha) return false;
  }
  return true;
}

std::optional<int> classify_d_stitch(const Graph& g, Vertex v) {
  if (v < 0 || v >= g.order()) throw GraphError("vertex out of range: " + std::to_string(v));
  const int alpha = independence_number(g);
  if (independence_number(g, g.vertices() - g.closed_neighborhood(v)) != alpha - 1) {
    return std::nullopt;
  }
  for (Vertex u : g.neighbors(v)) {
    Graph h = g;
    h.remove_edge(v, u);
    if (independence_number(h) <= alpha) return std::nullopt;
  }
  return g.degree(v);
}

bool is_edge_critical(const Graph& g) {
  const int alpha = independence_number(g);
  for (auto [u, v] : g.edges()) {
    Graph h = g;
    h.remove_edge(u, v);
    if (independence_number(h) <= alpha) return false;
  }
  return true;
}

}  // namespace crochet
