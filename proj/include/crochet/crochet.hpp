#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "crochet/graph.hpp"
#include "crochet/pattern.hpp"
#include "crochet/stitches.hpp"

namespace crochet {

class CrochetError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Which base of a Case 6 step is the closed neighbourhood N[x3].
enum class K23Roles {
  kTargetThird,  ///< the neighbour p_k points to supplies M3 = N[x3]
  kTargetFirst,  ///< the neighbour p_k points to supplies M1
};

/// Which of apex(v_H) and its partner plays u_{H,1} in the H13 decoration.
enum class DecorationRoles {
  kApexSecond,  ///< u_{H,2} = apex, u_{H,1} = coapex (or a least-degree neighbour)
  kApexFirst,   ///< u_{H,1} = apex, as the roles are usually written
};

/// Choices the construction leaves open. The defaults are the ones used for
/// every table; the alternatives exist so their effect can be checked.
struct BuildOptions {
  /// Run the per-step checks: alpha(G_k) = k, triangle-freeness, and minimality
  /// of every 2-stitch base as a destabiliser of G_{k-1}.
  bool verify = false;
  K23Roles k23_roles = K23Roles::kTargetThird;
  TriangleWinding triangle_winding = TriangleWinding::kForward;
  /// Swap the two undirected neighbours' roles in Case 6.
  bool swap_case6_pair = false;
  /// Reverse the processing-order tie break between the two neighbours in Case 4.
  bool swap_case4_ties = false;
  /// Use B as the apex-side class for 4-cycle and path bases (C2, C4).
  bool swap_cycle_parts = false;
  /// Which least-degree neighbour of the apex (by rank) stands in for an undefined coapex.
  int decoration_fallback = 0;
  DecorationRoles decoration_roles = DecorationRoles::kApexSecond;
};

enum class StepCase { kCase1 = 1, kCase2, kCase3, kCase4, kCase5, kCase6 };

/// How a base was read off a processed neighbour p_l.
/// kSeed is N[coapex(p_l)] for a neighbour met for the first time.
enum class BaseCase { kSeed, kC1, kC2, kC3, kC4 };

const char* to_string(BaseCase c);

struct ResolvedBase {
  BaseCase tag = BaseCase::kC1;
  BipartiteBase base;
  /// Centre x when the base is a closed neighbourhood N[x].
  std::optional<Vertex> center;
};

struct ActiveVertex {
  Vertex vertex;
  std::optional<Vertex> faces;  ///< pattern vertex, or undefined
  friend bool operator==(const ActiveVertex&, const ActiveVertex&) = default;
};

struct PatternVertexState {
  int position = -1;  ///< processing index, -1 while unprocessed
  Vertex apex = -1;
  std::optional<Vertex> coapex;
  std::vector<ActiveVertex> active;
  std::vector<Vertex> stitch_vertices;  ///< vertices of G added for this pattern vertex
};

struct StepRecord {
  Vertex pattern_vertex;
  StepCase kind;
  std::vector<Vertex> neighbors;  ///< processed neighbours in base order (M1, M2, ...)
  std::vector<BaseCase> bases;
  int order_after;
  int size_after;
};

struct CrochetState {
  Graph graph;
  std::vector<PatternVertexState> vertex;
  std::vector<StepRecord> trace;
  int processed = 0;
};

/// Processing order: breadth-first from the canonically least vertex, visiting
/// neighbours in canonical order; components in canonical order.
std::vector<Vertex> order_vertices(const Pattern& p);

/// True iff `order` is a permutation of the pattern vertices. Any permutation
/// works: a vertex with no processed neighbour simply starts over with Case 1.
bool is_valid_order(const Pattern& p, std::span<const Vertex> order);

class CrochetBuilder {
 public:
  /// 4-cycle apex - x - opposite - y.
  struct Cycle4 {
    Vertex apex;
    Vertex opposite;
    Vertex x;
    Vertex y;
  };

  explicit CrochetBuilder(Pattern p, BuildOptions options = {});

  /// Processes p_k. Throws CrochetError when no rule applies or, in verify
  /// mode, when a check fails.
  void step(Vertex pk);
  void run(std::span<const Vertex> order);

  const Pattern& pattern() const { return pattern_; }
  const CrochetState& state() const { return state_; }

  /// Base for the processed neighbour p_l of the unprocessed p_k, from the current state.
  ResolvedBase resolve_base(Vertex pl, Vertex pk) const;
  /// Number of processed neighbours of p once p_k is processed.
  int degree_at(Vertex p, Vertex pk) const;

 private:
  /// The 4-cycle through apex(p_l), preferring one closed along p_l's own stitch.
  Cycle4 own_cycle(Vertex pl, Vertex pk, const char* tag, bool as_base) const;
  std::string where(Vertex pk) const;
  ResolvedBase closed_base(Vertex pl, Vertex pk, const char* role) const;
  void update_neighbor(Vertex pl, Vertex pk, const CrochetState& before);
  void check_step(Vertex pk, const Graph& before, const std::vector<ResolvedBase>& bases,
                  bool two_stitch) const;

  Pattern pattern_;
  BuildOptions options_;
  CrochetState state_;
};

/// Runs the recursion over a (plain) pattern.
CrochetState build_state(const Pattern& p, const BuildOptions& options = {});
CrochetState build_state(const Pattern& p, std::span<const Vertex> order,
                         const BuildOptions& options = {});

/// G(P) for a pattern without decoration.
Graph build_ordinary(const Pattern& p, const BuildOptions& options = {});

/// Expands each contracted v_H of the auxiliary build into a copy of H13.
Graph decorate(const CrochetState& state, const ContractionMap& cm,
               const BuildOptions& options = {});

/// G(P) for an H13-pattern: contract, build, decorate.
Graph build(const H13Pattern& hp, const BuildOptions& options = {});
Graph build(const H13Pattern& hp, std::span<const Vertex> auxiliary_order,
            const BuildOptions& options = {});

/// The 26 edges of H13 on labels 0 = u_{H,1}, 1 = u_{H,2}, i = w_{H,i} (3..13),
/// with the other labels unused.
std::span<const Edge> h13_template_edges();

}  // namespace crochet
