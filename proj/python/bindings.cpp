#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "crochet/catalog.hpp"
#include "crochet/crochet.hpp"
#include "crochet/graph6.hpp"
#include "crochet/independence.hpp"
#include "crochet/verify.hpp"

namespace py = pybind11;
using namespace crochet;

namespace {

Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
  std::vector<Edge> es(edges.begin(), edges.end());
  return Graph(n, es);
}

std::vector<std::pair<int, int>> edges_of(const std::string& g6) {
  std::vector<std::pair<int, int>> out;
  for (auto [u, v] : graph6_decode(g6).edges()) out.emplace_back(u, v);
  return out;
}

Catalog build_catalog(int k, bool verify, int workers) {
  if (k < 1) throw py::value_error("k must be at least 1");
  BuildOptions o;
  o.verify = verify;
  Catalog c;
  {
    py::gil_scoped_release unlocked;
    populate(c, build_components(k, o, workers), k);
  }
  return c;
}

py::dict table(const Catalog& c, int j) {
  py::dict d;
  for (const auto& [ne, count] : emit_table(c, j).cells) d[py::make_tuple(ne.first, ne.second)] = count;
  return d;
}

}  // namespace

PYBIND11_MODULE(pycrochet, m) {
  m.doc() = "Crochet construction of H13-patterned triangle-free Ramsey graphs";

  py::register_exception<CrochetError>(m, "CrochetError", PyExc_RuntimeError);
  py::register_exception<PatternError>(m, "PatternError", PyExc_ValueError);
  py::register_exception<Graph6Error>(m, "Graph6Error", PyExc_ValueError);
  py::register_exception<CatalogError>(m, "CatalogError", PyExc_IOError);

  m.def("graph6_encode", [](int n, const std::vector<std::pair<int, int>>& edges) {
    return graph6_encode(from_edges(n, edges));
  }, py::arg("n"), py::arg("edges"));
  m.def("graph6_decode", [](const std::string& s) {
    return py::make_tuple(graph6_decode(s).order(), edges_of(s));
  }, py::arg("graph6"));
  m.def("canonical_graph6", [](const std::string& s) {
    return graph6_encode(canonical_graph(graph6_decode(s)));
  }, py::arg("graph6"));
  m.def("independence_number", [](const std::string& s) {
    return independence_number(graph6_decode(s));
  }, py::arg("graph6"));
  m.def("is_triangle_free", [](const std::string& s) {
    return is_triangle_free(graph6_decode(s));
  }, py::arg("graph6"));

  m.def("h13_patterns", [](int size) {
    std::vector<std::string> out;
    for (const auto& hp : enumerate_h13_patterns(size)) out.push_back(serialize(hp));
    return out;
  }, py::arg("size"), "Serialized connected H13-patterns with `size` vertices.");
  m.def("build_pattern", [](const std::string& pattern, bool verify) {
    BuildOptions o;
    o.verify = verify;
    return graph6_encode(build(parse_h13_pattern(pattern), o));
  }, py::arg("pattern"), py::arg("verify") = false, "graph6 of the crocheted graph.");
  m.def("verify_pattern", [](const std::string& pattern) {
    const auto hp = parse_h13_pattern(pattern);
    const auto r = verify_build(hp, build(hp));
    py::dict d;
    for (const auto& c : r.checks) d[py::str(c.name)] = py::make_tuple(c.pass, c.detail);
    return d;
  }, py::arg("pattern"), "Check name -> (pass, detail) for the built graph.");

  py::class_<CatalogEntry>(m, "CatalogEntry")
      .def_readonly("graph6", &CatalogEntry::graph6)
      .def_readonly("j", &CatalogEntry::j)
      .def_readonly("n", &CatalogEntry::n)
      .def_readonly("e", &CatalogEntry::e)
      .def_readonly("pattern", &CatalogEntry::pattern)
      .def("__repr__", [](const CatalogEntry& e) {
        return "<CatalogEntry j=" + std::to_string(e.j) + " n=" + std::to_string(e.n) +
               " e=" + std::to_string(e.e) + " " + e.graph6 + ">";
      });

  py::class_<Catalog>(m, "Catalog")
      .def(py::init<>())
      .def_static("build", &build_catalog, py::arg("k"), py::arg("verify") = false, py::arg("workers") = 1,
                  "Every union of connected H13-patterns with at most k vertices.")
      .def_static("load", [](const std::string& path) { return Catalog::load(path); }, py::arg("path"))
      .def("save", [](const Catalog& c, const std::string& path) { c.save(path); }, py::arg("path"))
      .def("__len__", &Catalog::size)
      .def("__contains__", [](const Catalog& c, const std::string& g6) {
        return c.contains(graph6_encode(canonical_graph(graph6_decode(g6))));
      })
      .def("entries", [](const Catalog& c, std::optional<int> j) { return j ? c.entries(*j) : c.entries(); },
           py::arg("j") = py::none())
      .def("table", &table, py::arg("j"), "{(n, e): count} of graphs with alpha < j.")
      .def("to_tsv", &Catalog::to_tsv);
}
