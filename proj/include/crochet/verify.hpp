#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "crochet/canonical.hpp"
#include "crochet/crochet.hpp"
#include "crochet/graph.hpp"
#include "crochet/pattern.hpp"

namespace crochet {

/// Largest order brute_alpha accepts.
inline constexpr int kBruteAlphaLimit = 30;

/// Independence number by plain enumeration of independent sets. Only
/// adjacency prunes the search; it shares no code with the branch and bound.
/// Throws GraphError above kBruteAlphaLimit vertices.
int brute_alpha(const Graph& g);

struct Check {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct VerificationReport {
  CanonicalForm graph;
  std::string source;  ///< serialized pattern
  std::vector<Check> checks;

  bool ok() const;
  const Check* find(std::string_view name) const;
};

/// Triangle-freeness, alpha = n(P), the vertex-count formula and, without
/// hyperedges, the edge-count formula. alpha also goes through brute_alpha
/// when the graph has at most `oracle_limit` vertices.
VerificationReport verify_build(const H13Pattern& source, const Graph& g,
                                int oracle_limit = kBruteAlphaLimit);
VerificationReport verify_build(const Pattern& source, const Graph& g,
                                int oracle_limit = kBruteAlphaLimit);

/// One line per check: "<PASS|FAIL> <name> <detail>".
std::string to_text(const VerificationReport& r);
/// Header plus one row per check: source,check,pass,detail.
std::string to_csv(const std::vector<VerificationReport>& reports);

/// A random processing order. Half the time
/// it grows each component outward from a random root, otherwise it is a plain shuffle.
std::vector<Vertex> random_valid_order(const Pattern& p, std::mt19937_64& rng);

/// Builds `trials` random valid orders (the first is the default order) and
/// reports whether every output has the same canonical form. Build errors
/// count as failures.
bool order_invariance(const Pattern& p, int trials, std::uint64_t seed = 1,
                      const BuildOptions& options = {});
bool order_invariance(const H13Pattern& hp, int trials, std::uint64_t seed = 1,
                      const BuildOptions& options = {});

}  // namespace crochet
