#pragma once

#include <span>
#include <string>
#include <vector>

#include "crochet/graph.hpp"

namespace crochet {

/// Byte string that is equal for two (vertex-coloured) graphs iff they are isomorphic.
using CanonicalForm = std::string;

struct CanonicalLabeling {
  std::vector<Vertex> position;  ///< vertex -> canonical index
  CanonicalForm form;
};

/// Canonical labelling by colour refinement with individualisation and
/// backtracking. Automorphisms found at equal leaves prune sibling branches.
/// `colors` (optional, one per vertex, each in [0, 256)) must be preserved by
/// isomorphisms. Disconnected graphs are labelled component-wise with
/// components sorted by their own forms.
CanonicalLabeling canonical_labeling(const Graph& g, std::span<const int> colors = {});

CanonicalForm canonical_form(const Graph& g);
CanonicalForm canonical_form(const Graph& g, std::span<const int> colors);

bool are_isomorphic(const Graph& a, const Graph& b);

/// The graph g relabelled into canonical order.
Graph canonical_graph(const Graph& g);

/// Canonical form of a disjoint union, assembled from the forms of its parts.
CanonicalForm union_form(std::vector<CanonicalForm> parts);

}  // namespace crochet
