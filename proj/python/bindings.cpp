#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <vector>

#include "p4spec/constructions.hpp"
#include "p4spec/dsl.hpp"
#include "p4spec/formats.hpp"
#include "p4spec/p4_structure.hpp"
#include "p4spec/report.hpp"
#include "p4spec/spectral.hpp"
#include "p4spec/theorems.hpp"

namespace py = pybind11;
using namespace p4spec;

namespace {

// Structured results cross the boundary as JSON text; the Python side decodes
// them, which keeps one serializer for the CLI and the module.
std::string dumped(const Json& j) { return j.dump(); }

Graph head_or_empty(const std::optional<Graph>& head) { return head ? *head : Graph{}; }

FamilyId family_id(const std::string& name) {
  const auto id = parse_family_id(name);
  if (!id) {
    throw py::value_error("unknown family '" + name + "'");
  }
  return *id;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Laplacian spectra and P4 structure of small graphs";

  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);

  py::class_<Graph>(m, "Graph")
      .def(py::init<int>(), py::arg("n") = 0)
      .def_static(
          "from_edges",
          [](int n, const std::vector<std::pair<int, int>>& edges) {
            std::vector<Edge> list;
            for (const auto& [u, v] : edges) {
              list.push_back({u, v});
            }
            return Graph::from_edge_list(n, list);
          },
          py::arg("n"), py::arg("edges"))
      .def_property_readonly("order", &Graph::order)
      .def_property_readonly("size", &Graph::size)
      .def("adjacent", &Graph::adjacent)
      .def("degrees", &Graph::degrees)
      .def("edges",
           [](const Graph& g) {
             std::vector<std::pair<int, int>> out;
             for (const auto& [u, v] : g.edges()) {
               out.emplace_back(u, v);
             }
             return out;
           })
      .def("complement", [](const Graph& g) { return complement(g); })
      .def("graph6", [](const Graph& g) { return to_graph6(g); })
      .def(py::self == py::self)
      .def("__repr__", [](const Graph& g) { return "<Graph " + describe(g) + ">"; });

  m.def("parse_graph6", &parse_graph6, py::arg("text"));
  m.def("parse_edge_list", [](const std::string& text) { return parse_edge_list(text); }, py::arg("text"));
  m.def("parse_dsl", &parse_dsl, py::arg("expr"));
  m.def("to_graph6", &to_graph6);
  m.def("write_edge_list", &write_edge_list);

  m.def("disjoint_union", &disjoint_union);
  m.def("join", &join);
  m.def("are_isomorphic", [](const Graph& g, const Graph& h) { return are_isomorphic(g, h); });
  m.def("thin_spider", [](int k, const std::optional<Graph>& head) { return thin_spider(k, head_or_empty(head)); },
        py::arg("k"), py::arg("head") = py::none());
  m.def("thick_spider", [](int k, const std::optional<Graph>& head) { return thick_spider(k, head_or_empty(head)); },
        py::arg("k"), py::arg("head") = py::none());
  m.def("family", [](const std::string& name) { return family(family_id(name)); }, py::arg("name"));

  m.def("laplacian_char_poly",
        [](const Graph& g) {
          // Python ints from decimal strings, so large coefficients survive.
          py::list out;
          for (const auto& c : laplacian_char_poly(g).coefficient_strings()) {
            out.append(py::int_(py::str(c)));
          }
          return out;
        },
        "Coefficients of det(xI - L), constant term first.");
  m.def("is_l_integral", &is_l_integral);
  m.def("numeric_spectrum", &numeric_spectrum, py::arg("g"), py::arg("tol") = 1e-9);

  m.def("_exact_spectrum_json", [](const Graph& g) { return dumped(to_json(exact_spectrum(g))); });
  m.def("_classify_json", [](const Graph& g) { return dumped(to_json(classify(g))); });
  m.def("_closed_form_json", [](int k, int j) { return dumped(to_json(thin_spider_closed_form(k, j))); });
  m.def(
      "_verify_json",
      [](int n_max, const std::string& theorems, int shards, int shard_id, std::optional<std::uint64_t> sample,
         std::uint64_t seed, int jobs) {
        VerifyOptions o;
        o.n_max = n_max;
        o.theorems = theorems;
        o.shards = shards;
        o.shard_id = shard_id;
        o.sample = sample;
        o.seed = seed;
        o.jobs = jobs;
        validate(o);
        VerifyReport r;
        {
          py::gil_scoped_release release;
          r = verify_theorems(o);
        }
        return dumped(to_json(r, false));
      },
      py::arg("n_max"), py::arg("theorems"), py::arg("shards"), py::arg("shard_id"), py::arg("sample"),
      py::arg("seed"), py::arg("jobs"));
}
