#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "zdg/export.hpp"
#include "zdg/suite.hpp"

namespace py = pybind11;

namespace {

py::object big(const zdg::BigInt& v) { return py::int_(py::str(v.str())); }

}  // namespace

PYBIND11_MODULE(_zdg, m) {
  m.doc() = "Zero-divisor graphs of finite commutative rings";

  py::class_<zdg::Ring>(m, "Ring")
      .def_property_readonly("order", &zdg::Ring::order)
      .def_property_readonly("characteristic", &zdg::Ring::characteristic)
      .def_property_readonly("kind", [](const zdg::Ring& r) {
        switch (r.kind()) {
          case zdg::RingKind::Zn: return "zn";
          case zdg::RingKind::Field: return "field";
          case zdg::RingKind::Product: return "product";
        }
        return "?";
      })
      .def("mul", &zdg::Ring::mul)
      .def("add", &zdg::Ring::add)
      .def("render", &zdg::Ring::render)
      .def("describe", &zdg::Ring::describe)
      .def("is_field_product", &zdg::Ring::is_field_product)
      .def("is_boolean", &zdg::Ring::is_boolean)
      .def("__repr__", [](const zdg::Ring& r) { return "<Ring " + r.describe() + ">"; });

  m.def("make_ring", &zdg::make_ring, py::arg("spec"));
  m.def("zero_divisors", &zdg::zero_divisors);

  py::class_<zdg::Graph>(m, "Graph")
      .def(py::init<std::size_t, std::vector<zdg::Edge>, std::vector<std::string>>(), py::arg("vertex_count"),
           py::arg("edges"), py::arg("labels") = std::vector<std::string>{})
      .def_property_readonly("vertex_count", &zdg::Graph::vertex_count)
      .def_property_readonly("edge_count", &zdg::Graph::edge_count)
      .def_property_readonly("edges", &zdg::Graph::edges)
      .def_property_readonly("labels", [](const zdg::Graph& g) {
        std::vector<std::string> out;
        for (zdg::Vertex v = 0; v < g.vertex_count(); ++v) out.push_back(g.label(v));
        return out;
      })
      .def("adjacent", &zdg::Graph::adjacent)
      .def("degree", &zdg::Graph::degree)
      .def("neighbors", [](const zdg::Graph& g, zdg::Vertex v) {
        auto n = g.neighbors(v);
        return std::vector<zdg::Vertex>(n.begin(), n.end());
      })
      .def("to_json", [](const zdg::Graph& g) { return zdg::to_json(g); })
      .def("to_dot", [](const zdg::Graph& g) { return zdg::to_dot(g); })
      .def("__eq__", [](const zdg::Graph& a, const zdg::Graph& b) { return a == b; });

  m.def("zero_divisor_graph", &zdg::zero_divisor_graph);
  m.def("annihilating_ideal_graph", &zdg::annihilating_ideal_graph);
  m.def("compressed_graph", [](const zdg::Ring& r) {
    auto c = zdg::compressed_graph(r);
    return py::make_tuple(c.graph, c.class_of);
  }, "Returns (graph, class_of).");
  m.def("vertices_of", [](const zdg::Ring& r, const std::vector<zdg::Element>& xs) { return zdg::vertices_of(r, xs); });
  m.def("boutin_gap_graph", &zdg::boutin_gap_graph, py::arg("k"));
  m.def("twin_classes", [](const zdg::Graph& g) { return zdg::twin_classes(g).classes; });

  py::class_<zdg::InvariantResult>(m, "InvariantResult")
      .def_property_readonly("kind", [](const zdg::InvariantResult& r) { return zdg::to_string(r.kind); })
      .def_readonly("lower", &zdg::InvariantResult::lower)
      .def_readonly("upper", &zdg::InvariantResult::upper)
      .def_readonly("certificate", &zdg::InvariantResult::certificate)
      .def_readonly("exact", &zdg::InvariantResult::exact)
      .def_readonly("method", &zdg::InvariantResult::method)
      .def("__repr__", [](const zdg::InvariantResult& r) {
        return "<" + zdg::to_string(r.kind) + " [" + std::to_string(r.lower) + ", " + std::to_string(r.upper) + "] " +
               r.method + ">";
      });

  auto options = [](std::uint64_t limit, std::vector<zdg::VertexSet> hints) {
    zdg::SearchOptions o;
    o.exhaustive_limit = limit;
    o.hints = std::move(hints);
    return o;
  };
  m.def("determining_number",
        [options](const zdg::Graph& g, std::uint64_t limit, std::vector<zdg::VertexSet> hints) {
          return zdg::determining_number(g, options(limit, std::move(hints)));
        },
        py::arg("graph"), py::arg("exhaustive_limit") = zdg::kDefaultExhaustiveLimit,
        py::arg("hints") = std::vector<zdg::VertexSet>{}, py::call_guard<py::gil_scoped_release>());
  m.def("metric_dimension",
        [options](const zdg::Graph& g, std::uint64_t limit, std::vector<zdg::VertexSet> hints) {
          return zdg::metric_dimension(g, options(limit, std::move(hints)));
        },
        py::arg("graph"), py::arg("exhaustive_limit") = zdg::kDefaultExhaustiveLimit,
        py::arg("hints") = std::vector<zdg::VertexSet>{}, py::call_guard<py::gil_scoped_release>());
  m.def("is_fixing_set", [](const zdg::Graph& g, const zdg::VertexSet& s) { return zdg::is_fixing_set(g, s); });
  m.def("is_resolving_set",
        [](const zdg::Graph& g, const zdg::VertexSet& s) { return zdg::is_resolving_set(zdg::all_pairs_distances(g), s); });

  m.def("automorphism_order", [](const zdg::Graph& g) {
    zdg::AutGroup group;
    {
      py::gil_scoped_release release;
      group = zdg::automorphism_group(g);
    }
    return big(group.order);
  });
  m.def("automorphism_generators", [](const zdg::Graph& g) {
    std::vector<std::vector<zdg::Vertex>> out;
    for (const auto& p : zdg::automorphism_group(g).generators) out.push_back(p.image());
    return out;
  });

  m.def("det_dim_zn", &zdg::det_dim_zn);
  m.def("zn_canonical_set", &zdg::zn_canonical_set);
  m.def("det_dim_semisimple", &zdg::det_dim_semisimple);
  m.def("semisimple_canonical_set", &zdg::semisimple_canonical_set);
  m.def("boolean_canonical_set", &zdg::boolean_canonical_set);

  m.def("_run_suite_json",
        [](const std::string& name, std::uint32_t max_n, std::uint32_t max_order, std::uint32_t boolean_max_n,
           std::uint32_t gap_max_k, std::uint32_t gap_bound_max_k, std::uint64_t limit, std::size_t workers) {
          zdg::SuiteParams p;
          p.zn_max_n = max_n;
          p.semisimple_max_order = max_order;
          p.boolean_max_n = boolean_max_n;
          p.gap_max_k = gap_max_k;
          p.gap_bound_max_k = gap_bound_max_k;
          p.exhaustive_limit = limit;
          p.workers = workers;
          zdg::SuiteReport report;
          {
            py::gil_scoped_release release;
            report = zdg::run_suite(name, p);
          }
          return py::make_tuple(zdg::to_json(report), zdg::exit_status(report));
        });
}
