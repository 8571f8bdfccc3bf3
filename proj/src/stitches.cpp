#include "crochet/stitches.hpp"

#include <initializer_list>

namespace crochet {

BipartiteBase BipartiteBase::closed_neighborhood(const Graph& g, Vertex u) {
  return {VertexSet::single(u), g.neighbors(u)};
}

void validate_base(const Graph& g, const BipartiteBase& base) {
  if (!base.all().is_subset_of(g.vertices())) throw GraphError("base not contained in host graph");
  if (base.a.empty()) throw GraphError("base part A is empty");
  if (base.b.empty()) throw GraphError("base part B is empty");
  if (base.a.intersects(base.b)) throw GraphError("base parts A and B overlap");
  if (!g.is_independent(base.a)) throw GraphError("base part A is not independent");
  if (!g.is_independent(base.b)) throw GraphError("base part B is not independent");
  if (base.b.size() == 1 && base.a.size() != 1) {
    throw GraphError("singleton base part must be A");
  }
}

namespace {

void validate_disjoint(const Graph& g, std::initializer_list<const BipartiteBase*> bases) {
  VertexSet seen;
  for (const auto* m : bases) {
    validate_base(g, *m);
    if (m->all().intersects(seen)) throw GraphError("stitch bases overlap");
    seen |= m->all();
  }
}

void join(Graph& g, Vertex v, const VertexSet& s) {
  for (Vertex x : s) g.add_edge(v, x);
}

}  // namespace

StitchResult cr1(const Graph& g) {
  StitchResult r{g, -1, std::nullopt, {}};
  Vertex v1 = r.graph.add_vertex();
  Vertex v2 = r.graph.add_vertex();
  r.graph.add_edge(v1, v2);
  r.apex = v1;
  r.coapex = v2;
  r.new_vertices = {v1, v2};
  return r;
}

StitchResult cr2(const Graph& g, const BipartiteBase& base) {
  validate_base(g, base);
  StitchResult r{g, -1, std::nullopt, {}};
  Vertex s = r.graph.add_vertex();
  Vertex a = r.graph.add_vertex();
  Vertex b = r.graph.add_vertex();
  r.graph.add_edge(s, a);
  r.graph.add_edge(s, b);
  join(r.graph, a, base.a);
  join(r.graph, b, base.b);
  r.apex = s;
  if (base.a.size() == 1) r.coapex = a;
  r.new_vertices = {s, a, b};
  return r;
}

StitchResult cr_c4(const Graph& g, const BipartiteBase& m1, const BipartiteBase& m2) {
  validate_disjoint(g, {&m1, &m2});
  StitchResult r{g, -1, std::nullopt, {}};
  Vertex c[4];
  for (auto& v : c) v = r.graph.add_vertex();
  for (int i = 0; i < 4; ++i) r.graph.add_edge(c[i], c[(i + 1) % 4]);
  join(r.graph, c[0], m1.a);
  join(r.graph, c[2], m1.b);
  join(r.graph, c[1], m2.a);
  join(r.graph, c[3], m2.b);
  r.apex = c[1];
  r.coapex = c[0];
  r.new_vertices = {c[0], c[1], c[2], c[3]};
  return r;
}

StitchResult cr_triangle(const Graph& g, const BipartiteBase& m1, const BipartiteBase& m2,
                         const BipartiteBase& m3, TriangleWinding winding) {
  validate_disjoint(g, {&m1, &m2, &m3});
  StitchResult r{g, -1, std::nullopt, {}};
  Vertex v[5];
  for (auto& x : v) x = r.graph.add_vertex();
  for (int i = 1; i < 5; ++i) r.graph.add_edge(v[0], v[i]);
  const BipartiteBase* m[3] = {&m1, &m2, &m3};
  join(r.graph, v[1], m1.a | m2.a | m3.a);
  for (int i = 0; i < 3; ++i) {
    join(r.graph, v[2 + i], m[i]->b);
    const int shift = winding == TriangleWinding::kForward ? 1 : 2;
    join(r.graph, v[2 + (i + shift) % 3], m[i]->a);
  }
  r.apex = v[0];
  r.coapex = v[1];
  r.new_vertices = {v[0], v[1], v[2], v[3], v[4]};
  return r;
}

StitchResult cr_k23(const Graph& g, const BipartiteBase& m1, const BipartiteBase& m2,
                    const BipartiteBase& m3) {
  validate_disjoint(g, {&m1, &m2, &m3});
  StitchResult r{g, -1, std::nullopt, {}};
  Vertex v[5];
  for (auto& x : v) x = r.graph.add_vertex();
  for (int i : {0, 1}) {
    for (int j : {2, 3, 4}) r.graph.add_edge(v[i], v[j]);
  }
  join(r.graph, v[0], m1.a);
  join(r.graph, v[1], m1.b);
  join(r.graph, v[2], m2.a);
  join(r.graph, v[3], m2.b);
  join(r.graph, v[3], m3.a);
  join(r.graph, v[4], m3.b);
  join(r.graph, v[2], m3.a);
  r.apex = v[0];
  r.new_vertices = {v[0], v[1], v[2], v[3], v[4]};
  return r;
}

}  // namespace crochet
