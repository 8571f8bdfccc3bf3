#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "crochet/canonical.hpp"
#include "crochet/graph.hpp"

namespace crochet {

class PatternError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Arc {
  Vertex tail;
  Vertex head;
  friend auto operator<=>(const Arc&, const Arc&) = default;
};

/// A triangle-free graph of maximum valency three with some edges directed.
/// The tail of every directed edge is trivalent, no edge carries two
/// directions, and every trivalent vertex has out-valency 1 or 3.
///
/// Patterns produced by the enumerators are connected. A disconnected pattern
/// is accepted and stands for the disjoint union of its components.
class Pattern {
 public:
  Pattern() = default;
  /// Validates all invariants; throws PatternError.
  Pattern(Graph underlying, std::vector<Arc> arcs);

  const Graph& underlying() const { return graph_; }
  int order() const { return graph_.order(); }
  int size() const { return graph_.size(); }
  int degree(Vertex p) const { return graph_.degree(p); }
  bool directs(Vertex p, Vertex q) const { return out_[p].contains(q); }
  const VertexSet& out(Vertex p) const { return out_[p]; }
  int outdeg(Vertex p) const { return out_[p].size(); }
  std::vector<Arc> arcs() const;

  /// Pattern with vertex p renamed perm[p].
  Pattern relabeled(std::span<const Vertex> perm) const;

  friend bool operator==(const Pattern&, const Pattern&) = default;

 private:
  Graph graph_;
  std::vector<VertexSet> out_;
};

using Hyperedge = std::array<Vertex, 4>;

/// A pattern decorated with pairwise disjoint 4-vertex hyperedges. Each
/// hyperedge induces a C4, has at most one edge leaving it, and its trivalent
/// vertices have out-valency 1.
class H13Pattern {
 public:
  H13Pattern() = default;
  explicit H13Pattern(Pattern p) : pattern_(std::move(p)) {}
  /// Validates; hyperedges are stored sorted.
  H13Pattern(Pattern p, std::vector<Hyperedge> hyperedges);

  const Pattern& pattern() const { return pattern_; }
  const std::vector<Hyperedge>& hyperedges() const { return hyperedges_; }
  int order() const { return pattern_.order(); }

  /// Decoration in the pattern's vertex numbering, with members renamed.
  H13Pattern relabeled(std::span<const Vertex> perm) const;

  friend bool operator==(const H13Pattern&, const H13Pattern&) = default;

 private:
  Pattern pattern_;
  std::vector<Hyperedge> hyperedges_;
};

/// Hyperedge `h` satisfies the three decoration conditions in `p`.
bool is_valid_hyperedge(const Pattern& p, const Hyperedge& h);

/// Colour-encoded graph whose (coloured) isomorphisms are exactly the
/// isomorphisms of the decorated pattern. Pattern vertices keep indices
/// 0..n-1 with colour 0; a directed edge t->h is subdivided t - x - y - h with
/// x coloured 1 and y coloured 2; each hyperedge becomes a colour-3 vertex
/// joined to its members.
struct PatternEncoding {
  Graph graph;
  std::vector<int> colors;
};
PatternEncoding encode_pattern(const H13Pattern& hp);

CanonicalForm pattern_form(const Pattern& p);
CanonicalForm pattern_form(const H13Pattern& hp);
/// Isomorphic copy with pattern vertices in canonical order.
H13Pattern canonical_pattern(const H13Pattern& hp);

/// Line format: "<graph6>;<t>h,...>;<a.b.c.d,...>". Empty lists leave their field empty.
std::string serialize(const H13Pattern& hp);
std::string serialize(const Pattern& p);
H13Pattern parse_h13_pattern(std::string_view line);

/// Connected triangle-free graphs with maximum valency <= 3 on n vertices,
/// one per isomorphism class, each in canonical labelling, sorted by form.
/// Built by adding a vertex to every graph on n-1 vertices and rejecting
/// children whose canonical form was already seen. 1 <= n <= 14.
std::vector<Graph> enumerate_underlying(int n);

/// All patterns on the underlying graph, one per isomorphism class of the
/// directed structure, in canonical labelling, sorted by form.
std::vector<Pattern> enumerate_orientations(const Graph& underlying);

/// All hyperedge sets (including the empty one) on p, one per isomorphism
/// class of the decorated pattern, sorted by form.
std::vector<H13Pattern> enumerate_decorations(const Pattern& p);

/// All connected H13-patterns on exactly n vertices, deduplicated, sorted by form.
std::vector<H13Pattern> enumerate_h13_patterns(int n);

/// Result of contracting each hyperedge H of an H13-pattern to one vertex v_H.
struct ContractionMap {
  Pattern auxiliary;
  /// auxiliary vertex -> original vertex, or -1 - (hyperedge index) for v_H.
  std::vector<int> origin;
  /// hyperedge index -> v_H.
  std::vector<Vertex> hyperedge_vertex;
  /// hyperedge index -> the hyperedge had an edge directed out of it.
  std::vector<bool> outward;
};
ContractionMap contract_to_auxiliary(const H13Pattern& hp);

}  // namespace crochet
