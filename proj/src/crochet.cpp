#include "crochet/crochet.hpp"

#include <algorithm>
#include <array>
#include <deque>
#include <sstream>

#include "crochet/independence.hpp"

namespace crochet {

const char* to_string(BaseCase c) {
  switch (c) {
    case BaseCase::kSeed: return "seed";
    case BaseCase::kC1: return "C1";
    case BaseCase::kC2: return "C2";
    case BaseCase::kC3: return "C3";
    case BaseCase::kC4: return "C4";
  }
  return "?";
}

std::span<const Edge> h13_template_edges() {
  static constexpr std::array<Edge, 26> kEdges{{
      {0, 1},  {0, 6},  {0, 13}, {0, 9},  {1, 3},   {1, 10},  {1, 7},  {6, 11}, {6, 7},
      {6, 5},  {13, 12}, {13, 8}, {13, 5}, {9, 4},   {9, 10},  {9, 8},  {3, 4},  {3, 11},
      {3, 8},  {4, 12}, {4, 5},  {11, 12}, {11, 10}, {12, 7}, {10, 5}, {7, 8},
  }};
  return kEdges;
}

std::vector<Vertex> order_vertices(const Pattern& p) {
  const int n = p.order();
  const auto enc = encode_pattern(H13Pattern(p));
  const auto pos = canonical_labeling(enc.graph, enc.colors).position;
  std::vector<Vertex> by_pos(n);
  for (Vertex v = 0; v < n; ++v) by_pos[v] = v;
  std::sort(by_pos.begin(), by_pos.end(), [&](Vertex a, Vertex b) { return pos[a] < pos[b]; });

  std::vector<Vertex> order;
  std::vector<bool> seen(n, false);
  for (Vertex root : by_pos) {
    if (seen[root]) continue;
    std::deque<Vertex> queue{root};
    seen[root] = true;
    while (!queue.empty()) {
      const Vertex v = queue.front();
      queue.pop_front();
      order.push_back(v);
      std::vector<Vertex> next;
      for (Vertex u : p.underlying().neighbors(v)) {
        if (!seen[u]) next.push_back(u);
      }
      std::sort(next.begin(), next.end(), [&](Vertex a, Vertex b) { return pos[a] < pos[b]; });
      for (Vertex u : next) {
        seen[u] = true;
        queue.push_back(u);
      }
    }
  }
  return order;
}

bool is_valid_order(const Pattern& p, std::span<const Vertex> order) {
  const int n = p.order();
  if (static_cast<int>(order.size()) != n) return false;
  std::vector<bool> done(n, false);
  for (Vertex v : order) {
    if (v < 0 || v >= n || done[v]) return false;
    done[v] = true;
  }
  return true;
}

CrochetBuilder::CrochetBuilder(Pattern p, BuildOptions options)
    : pattern_(std::move(p)), options_(options) {
  state_.vertex.resize(pattern_.order());
}

std::string CrochetBuilder::where(Vertex pk) const {
  const int step = state_.vertex[pk].position >= 0 ? state_.vertex[pk].position : state_.processed;
  return "pattern " + serialize(pattern_) + ", step " + std::to_string(step + 1) +
         " (vertex " + std::to_string(pk) + ")";
}

int CrochetBuilder::degree_at(Vertex p, Vertex pk) const {
  int d = 0;
  for (Vertex q : pattern_.underlying().neighbors(p)) {
    if (q == pk || state_.vertex[q].position >= 0) ++d;
  }
  return d;
}

namespace {

std::optional<Vertex> faced_active(const PatternVertexState& s, Vertex target) {
  for (const auto& a : s.active) {
    if (a.faces == target) return a.vertex;
  }
  return std::nullopt;
}

// 4-cycles a - x - z - y with x, y drawn from `sides`.
std::vector<CrochetBuilder::Cycle4> four_cycles_through(const Graph& g, Vertex a, const VertexSet& sides) {
  std::vector<CrochetBuilder::Cycle4> out;
  const auto nb = g.neighbors(a) & sides;
  for (Vertex x : nb) {
    for (Vertex y : nb) {
      if (y <= x) continue;
      for (Vertex z : g.neighbors(x) & g.neighbors(y)) {
        if (z != a) out.push_back({a, z, x, y});
      }
    }
  }
  return out;
}

}  // namespace

CrochetBuilder::Cycle4 CrochetBuilder::own_cycle(Vertex pl, Vertex pk, const char* tag,
                                                bool as_base) const {
  const auto& s = state_.vertex[pl];
  const Graph& g = state_.graph;
  VertexSet own;
  for (Vertex v : s.stitch_vertices) own.insert(v);
  // Cycles closed along the stitch's own vertices come first, then those through
  // the coapex, then any. A cycle used as a base must be a minimal destabiliser.
  auto all = four_cycles_through(g, s.apex, g.vertices());
  std::vector<std::vector<Cycle4>> tiers(3);
  for (const auto& c : all) {
    if (own.contains(c.x) && own.contains(c.y)) {
      tiers[0].push_back(c);
    } else if (s.coapex && (c.x == *s.coapex || c.y == *s.coapex)) {
      tiers[1].push_back(c);
    } else {
      tiers[2].push_back(c);
    }
  }
  for (auto& tier : tiers) {
    if (as_base) {
      std::erase_if(tier, [&](const Cycle4& c) {
        VertexSet m;
        for (Vertex v : {c.apex, c.opposite, c.x, c.y}) m.insert(v);
        return !is_minimal_destabiliser(g, m);
      });
    }
    if (tier.empty()) continue;
    if (tier.size() > 1) {
      throw CrochetError(std::string(tag) + " base: " + std::to_string(tier.size()) +
                         " 4-cycles through the apex of neighbour " + std::to_string(pl) +
                         " qualify; " + where(pk));
    }
    return tier[0];
  }
  throw CrochetError(std::string(tag) + " base: no 4-cycle through the apex of neighbour " +
                     std::to_string(pl) + "; " + where(pk));
}

ResolvedBase CrochetBuilder::closed_base(Vertex pl, Vertex pk, const char* role) const {
  const ResolvedBase r = resolve_base(pl, pk);
  if (!r.center) {
    throw CrochetError(std::string("base ") + role + " from neighbour " + std::to_string(pl) +
                       " resolved to " + to_string(r.tag) + ", a closed neighbourhood is required; " +
                       where(pk));
  }
  return r;
}

ResolvedBase CrochetBuilder::resolve_base(Vertex pl, Vertex pk) const {
  const Graph& g = state_.graph;
  const auto& s = state_.vertex[pl];
  const int d = degree_at(pl, pk);
  auto closed = [&](BaseCase tag, Vertex x) {
    return ResolvedBase{tag, BipartiteBase::closed_neighborhood(g, x), x};
  };
  if (d == 1) {
    if (!s.coapex) throw CrochetError("first neighbour has no coapex; " + where(pk));
    return closed(BaseCase::kSeed, *s.coapex);
  }
  if (d == 2) return closed(BaseCase::kC1, s.apex);
  if (d != 3) throw CrochetError("pattern vertex of valency above 3; " + where(pk));

  if (pattern_.outdeg(pl) == 3) {
    // Path x - apex - w - y off the rest of the 4-cycle, w the coapex when there is one.
    const Cycle4 c = own_cycle(pl, pk, "C2", false);
    const Vertex apex = s.apex;
    VertexSet cyc;
    for (Vertex v : {c.apex, c.opposite, c.x, c.y}) cyc.insert(v);
    const VertexSet ws = s.coapex ? VertexSet::single(*s.coapex) : g.neighbors(apex);
    std::vector<BipartiteBase> found;
    for (Vertex w : ws) {
      for (Vertex x : g.neighbors(apex) - cyc - VertexSet::single(w)) {
        for (Vertex y : g.neighbors(w) - cyc - VertexSet::single(apex)) {
          BipartiteBase base{VertexSet::single(apex) | VertexSet::single(y),
                             VertexSet::single(w) | VertexSet::single(x)};
          if (is_minimal_destabiliser(g, base.all())) found.push_back(base);
        }
      }
    }
    if (found.size() != 1) {
      throw CrochetError("C2 base: " + std::to_string(found.size()) +
                         " paths qualify for neighbour " + std::to_string(pl) + "; " + where(pk));
    }
    BipartiteBase base = found[0];
    if (options_.swap_cycle_parts) std::swap(base.a, base.b);
    return {BaseCase::kC2, base, std::nullopt};
  }

  if (pattern_.directs(pl, pk)) {
    const Cycle4 c = own_cycle(pl, pk, "C4", true);
    BipartiteBase base{VertexSet::single(c.apex) | VertexSet::single(c.opposite),
                       VertexSet::single(c.x) | VertexSet::single(c.y)};
    if (options_.swap_cycle_parts) std::swap(base.a, base.b);
    return {BaseCase::kC4, base, std::nullopt};
  }

  // The active vertex facing the head of p_l's arc decides between C1 and C3.
  const Vertex head = pattern_.out(pl).first();
  const auto faced = faced_active(s, head);
  if (faced && *faced == s.apex) return closed(BaseCase::kC1, s.apex);
  if (faced && s.coapex && *faced == *s.coapex) return closed(BaseCase::kC3, *s.coapex);
  throw CrochetError("no active vertex of neighbour " + std::to_string(pl) + " faces " +
                     std::to_string(head) + "; " + where(pk));
}

void CrochetBuilder::update_neighbor(Vertex pl, Vertex pk, const CrochetState& before) {
  auto& s = state_.vertex[pl];
  const int d = degree_at(pl, pk);
  if (d == 1) {
    for (auto& a : s.active) {
      if (s.coapex && a.vertex == *s.coapex) a.faces = pk;
      if (a.vertex == s.apex) a.faces = std::nullopt;
    }
    return;
  }
  if (d == 2) {
    for (auto& a : s.active) {
      if (a.vertex == s.apex) {
        a.faces = pk;
        return;
      }
    }
    throw CrochetError("apex of neighbour " + std::to_string(pl) + " is not active; " + where(pk));
  }
  s.active.clear();
  for (Vertex pi : pattern_.out(pl)) {
    if (pi == pk || before.vertex[pi].position < 0) continue;
    auto& act = state_.vertex[pi].active;
    std::erase_if(act, [&](const ActiveVertex& a) { return a.faces == pl; });
  }
}

void CrochetBuilder::check_step(Vertex pk, const Graph& before,
                                const std::vector<ResolvedBase>& bases, bool two_stitch) const {
  const Graph& g = state_.graph;
  if (!is_triangle_free(g)) throw CrochetError("triangle created; " + where(pk));
  const int a = independence_number(g);
  if (a != state_.processed) {
    throw CrochetError("alpha is " + std::to_string(a) + ", expected " +
                       std::to_string(state_.processed) + "; " + where(pk));
  }
  if (two_stitch) {
    for (const auto& b : bases) {
      if (!is_minimal_destabiliser(before, b.base.all())) {
        throw CrochetError(std::string(to_string(b.tag)) +
                           " base is not a minimal destabiliser; " + where(pk));
      }
    }
  }
}

void CrochetBuilder::step(Vertex pk) {
  if (pk < 0 || pk >= pattern_.order()) throw CrochetError("pattern vertex out of range");
  if (state_.vertex[pk].position >= 0) throw CrochetError("pattern vertex processed twice");

  std::vector<Vertex> nbrs;
  for (Vertex q : pattern_.underlying().neighbors(pk)) {
    if (state_.vertex[q].position >= 0) nbrs.push_back(q);
  }
  std::sort(nbrs.begin(), nbrs.end(), [&](Vertex a, Vertex b) {
    return state_.vertex[a].position < state_.vertex[b].position;
  });

  const CrochetState before = state_;
  PatternVertexState next;
  next.position = state_.processed;
  std::vector<ResolvedBase> bases;
  StepCase kind;
  StitchResult r;

  if (nbrs.empty()) {
    kind = StepCase::kCase1;
    r = cr1(state_.graph);
    next.active = {{r.new_vertices[0], std::nullopt}, {r.new_vertices[1], std::nullopt}};
  } else if (nbrs.size() == 1) {
    const Vertex pl = nbrs[0];
    kind = degree_at(pl, pk) == 1 ? StepCase::kCase2 : StepCase::kCase3;
    bases.push_back(resolve_base(pl, pk));
    const auto tag = bases[0].tag;
    r = cr2(state_.graph, bases[0].base);
    if (tag == BaseCase::kC2 || tag == BaseCase::kC4) {
      r.coapex.reset();
      next.active = {{r.apex, std::nullopt}};
    } else {
      next.active = {{r.new_vertices[0], std::nullopt}, {r.new_vertices[1], pl}};
    }
  } else if (nbrs.size() == 2) {
    kind = StepCase::kCase4;
    auto [l1, l2] = std::pair{nbrs[0], nbrs[1]};
    if (options_.swap_case4_ties) std::swap(l1, l2);
    const int d1 = degree_at(l1, pk);
    const int d2 = degree_at(l2, pk);
    if (d1 > d2) {
      std::swap(l1, l2);
    } else if (d1 == d2) {
      // A neighbour directing into p_k goes first; failing that, the one p_k
      // points to goes second so that c2 faces it.
      const bool in1 = pattern_.directs(l1, pk);
      const bool in2 = pattern_.directs(l2, pk);
      if ((in2 && !in1) || (!in1 && !in2 && pattern_.directs(pk, l1))) std::swap(l1, l2);
    }
    nbrs = {l1, l2};
    bases = {resolve_base(l1, pk), resolve_base(l2, pk)};
    r = cr_c4(state_.graph, bases[0].base, bases[1].base);
    const Vertex c1 = r.new_vertices[0];
    const Vertex c2 = r.new_vertices[1];
    const int e1 = degree_at(l1, pk);
    const int e2 = degree_at(l2, pk);
    if (e1 == 3 && e2 == 3) r.coapex.reset();
    const bool in1 = pattern_.directs(l1, pk);
    const bool in2 = pattern_.directs(l2, pk);
    std::vector<Vertex> act;
    if (e1 == 3 && e2 == 3) {
      if (!(in1 && in2)) act = {c2};
    } else if (e1 != e2 && e2 == 3 && in2) {
      act = {c1};
    } else {
      act = {c1, c2};
    }
    for (Vertex u : act) {
      std::optional<Vertex> f;
      for (int i = 0; i < 2; ++i) {
        if (r.graph.neighbors(u).intersects(bases[i].base.all())) {
          if (f) throw CrochetError("active vertex faces both neighbours; " + where(pk));
          f = nbrs[i];
        }
      }
      next.active.push_back({u, f});
    }
  } else {
    const bool triangle = pattern_.outdeg(pk) == 3;
    kind = triangle ? StepCase::kCase5 : StepCase::kCase6;
    if (triangle) {
      for (Vertex pl : nbrs) bases.push_back(closed_base(pl, pk, "of a triangular stitch"));
      r = cr_triangle(state_.graph, bases[0].base, bases[1].base, bases[2].base,
                      options_.triangle_winding);
    } else {
      std::vector<Vertex> rest;
      Vertex target = -1;
      for (Vertex pl : nbrs) {
        if (pattern_.directs(pk, pl)) {
          target = pl;
        } else {
          rest.push_back(pl);
        }
      }
      if (target < 0 || rest.size() != 2) throw CrochetError("Case 6 without a unique target; " + where(pk));
      if (options_.swap_case6_pair) std::swap(rest[0], rest[1]);
      if (options_.k23_roles == K23Roles::kTargetThird) {
        nbrs = {rest[0], rest[1], target};
      } else {
        nbrs = {target, rest[0], rest[1]};
      }
      bases = {resolve_base(nbrs[0], pk), resolve_base(nbrs[1], pk),
               closed_base(nbrs[2], pk, "M3 of a K23 stitch")};
      r = cr_k23(state_.graph, bases[0].base, bases[1].base, bases[2].base);
    }
  }

  next.apex = r.apex;
  next.coapex = r.coapex;
  next.stitch_vertices = r.new_vertices;
  state_.graph = std::move(r.graph);
  state_.vertex[pk] = std::move(next);
  for (Vertex pl : nbrs) update_neighbor(pl, pk, before);
  state_.processed += 1;

  StepRecord rec{pk, kind, nbrs, {}, state_.graph.order(), state_.graph.size()};
  for (const auto& b : bases) rec.bases.push_back(b.tag);
  state_.trace.push_back(std::move(rec));

  if (options_.verify) {
    check_step(pk, before.graph, bases, kind == StepCase::kCase2 || kind == StepCase::kCase3);
  }
}

void CrochetBuilder::run(std::span<const Vertex> order) {
  if (!is_valid_order(pattern_, order)) throw CrochetError("invalid processing order");
  for (Vertex v : order) step(v);
}

CrochetState build_state(const Pattern& p, std::span<const Vertex> order, const BuildOptions& options) {
  CrochetBuilder b(p, options);
  b.run(order);
  return b.state();
}

CrochetState build_state(const Pattern& p, const BuildOptions& options) {
  const auto order = order_vertices(p);
  return build_state(p, order, options);
}

Graph build_ordinary(const Pattern& p, const BuildOptions& options) {
  return build_state(p, options).graph;
}

Graph decorate(const CrochetState& state, const ContractionMap& cm, const BuildOptions& options) {
  const Graph& gk = state.graph;
  Graph g = gk;
  for (std::size_t h = 0; h < cm.hyperedge_vertex.size(); ++h) {
    const auto& s = state.vertex.at(cm.hyperedge_vertex[h]);
    Vertex u1 = s.apex;
    Vertex u2;
    if (s.coapex) {
      u2 = *s.coapex;
    } else {
      // Any neighbour will do as long as e(G) stays minimal: take one of least degree.
      std::vector<Vertex> nb;
      int least = gk.order();
      for (Vertex x : gk.neighbors(u1)) least = std::min(least, gk.degree(x));
      for (Vertex x : gk.neighbors(u1)) {
        if (gk.degree(x) == least) nb.push_back(x);
      }
      if (nb.empty()) throw CrochetError("contracted vertex with an isolated apex");
      u2 = nb[std::clamp<int>(options.decoration_fallback, 0, nb.size() - 1)];
    }
    if (!gk.adjacent(u1, u2)) throw CrochetError("u_{H,1} and u_{H,2} are not adjacent");
    if (options.decoration_roles == DecorationRoles::kApexSecond) std::swap(u1, u2);

    std::array<Vertex, 14> at{};
    at[0] = u1;
    at[1] = u2;
    for (int i = 3; i <= 13; ++i) at[i] = g.add_vertex();
    for (const auto& [a, b] : h13_template_edges()) {
      if (!g.adjacent(at[a], at[b])) g.add_edge(at[a], at[b]);
    }
    auto attach = [&](int w, Vertex anchor, Vertex skip) {
      for (Vertex x : gk.neighbors(anchor)) {
        if (x != skip && !g.adjacent(at[w], x)) g.add_edge(at[w], x);
      }
    };
    if (cm.outward[h]) {
      attach(7, u1, u2);
      attach(6, u2, u1);
      attach(9, u2, u1);
    } else {
      attach(6, u2, u1);
      attach(13, u2, u1);
      attach(9, u2, u1);
    }
  }
  return g;
}

Graph build(const H13Pattern& hp, std::span<const Vertex> auxiliary_order, const BuildOptions& options) {
  const auto cm = contract_to_auxiliary(hp);
  const auto state = build_state(cm.auxiliary, auxiliary_order, options);
  Graph g = decorate(state, cm, options);
  if (options.verify) {
    if (!is_triangle_free(g)) throw CrochetError("decorated graph has a triangle: " + serialize(hp));
    const int a = independence_number(g);
    if (a != hp.order()) {
      throw CrochetError("decorated graph has alpha " + std::to_string(a) + ", expected " +
                         std::to_string(hp.order()) + ": " + serialize(hp));
    }
  }
  return g;
}

Graph build(const H13Pattern& hp, const BuildOptions& options) {
  const auto cm = contract_to_auxiliary(hp);
  const auto order = order_vertices(cm.auxiliary);
  return build(hp, order, options);
}

}  // namespace crochet
