#include "crochet/verify.hpp"

#include <algorithm>
#include <sstream>

#include "crochet/independence.hpp"

namespace crochet {

namespace {

// Every independent set is visited once: vertices are decided in index order,
// and a vertex is skipped only when a chosen neighbour blocks it.
int enumerate_independent(const Graph& g, Vertex next, VertexSet blocked, int size) {
  if (next == g.order()) return size;
  int best = enumerate_independent(g, next + 1, blocked, size);
  if (!blocked.contains(next)) {
    best = std::max(best, enumerate_independent(g, next + 1, blocked | g.neighbors(next), size + 1));
  }
  return best;
}

std::string pair_detail(int got, int want) {
  return "got " + std::to_string(got) + ", expected " + std::to_string(want);
}

VerificationReport verify_impl(const Pattern& p, int hyperedges, std::string source,
                               const Graph& g, int oracle_limit) {
  VerificationReport r;
  r.graph = canonical_form(g);
  r.source = std::move(source);

  r.checks.push_back({"triangle_free", is_triangle_free(g), ""});

  const int a = independence_number(g);
  r.checks.push_back({"alpha", a == p.order(), pair_detail(a, p.order())});
  if (g.order() <= oracle_limit && g.order() <= kBruteAlphaLimit) {
    const int b = brute_alpha(g);
    r.checks.push_back({"alpha_oracle", b == p.order(), pair_detail(b, p.order())});
  }

  const int n_want = 2 * p.order() + p.size() + hyperedges;
  r.checks.push_back({"order_formula", g.order() == n_want, pair_detail(g.order(), n_want)});
  if (hyperedges == 0) {
    int sq = 0;
    for (Vertex v = 0; v < p.order(); ++v) sq += p.degree(v) * p.degree(v);
    const int e_want = p.order() + 2 * p.size() + sq / 2;
    r.checks.push_back({"size_formula", g.size() == e_want, pair_detail(g.size(), e_want)});
  }
  return r;
}

template <class Build>
bool invariance_impl(const Pattern& p, int trials, std::uint64_t seed, Build&& build) {
  std::mt19937_64 rng(seed);
  std::optional<CanonicalForm> first;
  for (int t = 0; t < trials; ++t) {
    const auto order = t == 0 ? order_vertices(p) : random_valid_order(p, rng);
    CanonicalForm f;
    try {
      f = canonical_form(build(order));
    } catch (const CrochetError&) {
      return false;
    }
    if (!first) {
      first = std::move(f);
    } else if (f != *first) {
      return false;
    }
  }
  return true;
}

}  // namespace

int brute_alpha(const Graph& g) {
  if (g.order() > kBruteAlphaLimit) {
    throw GraphError("brute_alpha: " + std::to_string(g.order()) + " vertices exceeds " +
                     std::to_string(kBruteAlphaLimit));
  }
  return enumerate_independent(g, 0, VertexSet{}, 0);
}

bool VerificationReport::ok() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
}

const Check* VerificationReport::find(std::string_view name) const {
  for (const auto& c : checks) {
    if (c.name == name) return &c;
  }
  return nullptr;
}

VerificationReport verify_build(const H13Pattern& source, const Graph& g, int oracle_limit) {
  return verify_impl(source.pattern(), static_cast<int>(source.hyperedges().size()),
                     serialize(source), g, oracle_limit);
}

VerificationReport verify_build(const Pattern& source, const Graph& g, int oracle_limit) {
  return verify_impl(source, 0, serialize(source), g, oracle_limit);
}

std::string to_text(const VerificationReport& r) {
  std::ostringstream out;
  for (const auto& c : r.checks) {
    out << (c.pass ? "PASS " : "FAIL ") << c.name;
    if (!c.detail.empty()) out << ' ' << c.detail;
    out << '\n';
  }
  return out.str();
}

std::string to_csv(const std::vector<VerificationReport>& reports) {
  std::ostringstream out;
  out << "source,check,pass,detail\n";
  for (const auto& r : reports) {
    for (const auto& c : r.checks) {
      out << '"' << r.source << "\"," << c.name << ',' << (c.pass ? 1 : 0) << ",\"" << c.detail
          << "\"\n";
    }
  }
  return out.str();
}

std::vector<Vertex> random_valid_order(const Pattern& p, std::mt19937_64& rng) {
  const int n = p.order();
  if (std::bernoulli_distribution(0.5)(rng)) {
    std::vector<Vertex> any(n);
    for (Vertex v = 0; v < n; ++v) any[v] = v;
    std::shuffle(any.begin(), any.end(), rng);
    return any;
  }
  const auto comps = p.underlying().components();
  std::vector<std::size_t> comp_order(comps.size());
  for (std::size_t i = 0; i < comps.size(); ++i) comp_order[i] = i;
  std::shuffle(comp_order.begin(), comp_order.end(), rng);

  std::vector<Vertex> order;
  order.reserve(n);
  for (std::size_t c : comp_order) {
    const auto& comp = comps[c];
    std::uniform_int_distribution<std::size_t> pick_root(0, comp.size() - 1);
    VertexSet done = VertexSet::single(comp[pick_root(rng)]);
    order.push_back(done.first());
    VertexSet frontier = p.underlying().neighbors(order.back());
    while (!frontier.empty()) {
      std::uniform_int_distribution<int> pick(0, frontier.size() - 1);
      auto it = frontier.begin();
      for (int k = pick(rng); k > 0; --k) ++it;
      const Vertex v = *it;
      order.push_back(v);
      done.insert(v);
      frontier |= p.underlying().neighbors(v);
      frontier -= done;
    }
  }
  return order;
}

bool order_invariance(const Pattern& p, int trials, std::uint64_t seed, const BuildOptions& options) {
  return invariance_impl(p, trials, seed, [&](const std::vector<Vertex>& order) {
    return build_state(p, order, options).graph;
  });
}

bool order_invariance(const H13Pattern& hp, int trials, std::uint64_t seed,
                      const BuildOptions& options) {
  const auto cm = contract_to_auxiliary(hp);
  return invariance_impl(cm.auxiliary, trials, seed, [&](const std::vector<Vertex>& order) {
    return build(hp, order, options);
  });
}

}  // namespace crochet
