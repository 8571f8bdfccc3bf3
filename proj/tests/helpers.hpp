#pragma once

#include <random>

#include "crochet/graph.hpp"

namespace testutil {

inline crochet::Graph random_graph(std::mt19937_64& rng, int n, double p) {
  crochet::Graph g(n);
  std::bernoulli_distribution coin(p);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (coin(rng)) g.add_edge(u, v);
  return g;
}

inline crochet::Graph random_relabel(const crochet::Graph& g, std::mt19937_64& rng) {
  std::vector<crochet::Vertex> perm(g.order());
  for (int i = 0; i < g.order(); ++i) perm[i] = i;
  std::shuffle(perm.begin(), perm.end(), rng);
  return g.relabeled(perm);
}

inline crochet::Graph h13() {
  const int conn[] = {1, 5};
  return crochet::circulant(13, conn);
}

}  // namespace testutil
