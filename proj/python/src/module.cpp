#include <pybind11/functional.h>
#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "twotree/bundle.hpp"
#include "twotree/embedding.hpp"
#include "twotree/families.hpp"
#include "twotree/graph6.hpp"
#include "twotree/handles.hpp"
#include "twotree/ktree.hpp"
#include "twotree/partition.hpp"
#include "twotree/spanning.hpp"

namespace py = pybind11;
using namespace twotree;

namespace {

using EdgeTuple = std::pair<VertexId, VertexId>;

std::vector<Edge> to_edges(const std::vector<EdgeTuple>& in) {
  std::vector<Edge> out;
  out.reserve(in.size());
  for (auto [u, v] : in) out.emplace_back(u, v);
  return out;
}

std::vector<EdgeTuple> from_edges(const std::vector<Edge>& in) {
  std::vector<EdgeTuple> out;
  out.reserve(in.size());
  for (const auto& e : in) out.emplace_back(e.u, e.v);
  return out;
}

py::dict sequence_dict(const KTreeSequence& s) {
  py::dict d;
  d["k"] = s.k;
  d["base"] = s.base;
  py::list steps;
  for (const auto& st : s.steps) steps.append(py::make_tuple(st.vertex, st.attach));
  d["steps"] = steps;
  return d;
}

std::string bundle_text(const Bundle& b) {
  std::ostringstream out;
  write_bundle(out, b);
  return out.str();
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.attr("__version__") = kVersion;

  // Later registrations are tried first.
  py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<InvariantViolation>(m, "InvariantViolation", PyExc_RuntimeError);

  py::class_<Graph>(m, "Graph")
      .def(py::init([](std::size_t n, const std::vector<EdgeTuple>& edges) {
             const auto e = to_edges(edges);
             return Graph::from_edges(n, e);
           }),
           py::arg("order"), py::arg("edges"))
      .def_property_readonly("order", &Graph::order)
      .def_property_readonly("size", &Graph::size)
      .def("edges", [](const Graph& g) { return from_edges(g.edges()); })
      .def("neighbors", [](const Graph& g, VertexId v) {
        auto n = g.neighbors(v);
        return std::vector<VertexId>(n.begin(), n.end());
      })
      .def("degree", &Graph::degree)
      .def("adjacent", &Graph::adjacent)
      .def("is_connected", &Graph::is_connected)
      .def("graph6", [](const Graph& g) { return graph6_encode(g); })
      .def(py::self == py::self)
      .def("__repr__", [](const Graph& g) {
        return "<Graph order=" + std::to_string(g.order()) + " size=" + std::to_string(g.size()) + ">";
      });

  py::class_<EmbeddedGraph>(m, "EmbeddedGraph")
      .def(py::init(&EmbeddedGraph::from_rotation), py::arg("rotation"))
      .def_property_readonly("graph", &EmbeddedGraph::graph)
      .def_property_readonly("order", &EmbeddedGraph::order)
      .def_property_readonly("size", &EmbeddedGraph::size)
      .def("rotations", &EmbeddedGraph::rotations)
      .def("faces", [](const EmbeddedGraph& eg) {
        std::vector<std::vector<VertexId>> out;
        for (const auto& f : faces(eg)) out.push_back(f.vertices);
        return out;
      })
      .def("to_rot", [](const EmbeddedGraph& eg) {
        std::ostringstream out;
        write_rot(out, eg);
        return out.str();
      })
      .def(py::self == py::self)
      .def("__repr__", [](const EmbeddedGraph& eg) {
        return "<EmbeddedGraph order=" + std::to_string(eg.order()) + " size=" + std::to_string(eg.size()) + ">";
      });

  m.def("from_graph6", &graph6_decode, py::arg("text"));
  m.def("to_graph6", &graph6_encode);
  m.def("from_rot", [](const std::string& text) {
    std::istringstream in(text);
    return read_rot(in);
  });

  m.def("prism", &prism, py::arg("r"));
  m.def("cube", &cube);
  m.def("k4", &k4);
  m.def("double_wheel", &double_wheel, py::arg("n"));
  m.def("g_k", &g_k, py::arg("k"));
  m.def("h_22", &h_22);
  m.def("random_k_tree", &random_k_tree, py::arg("n"), py::arg("k"), py::arg("seed") = 0);
  m.def("random_4mp_dual", &random_4mp_dual, py::arg("order"), py::arg("seed") = 0);
  m.def("random_stacked_triangulation", &random_stacked_triangulation, py::arg("order"), py::arg("seed") = 0);
  m.def("count_bricks", &count_bricks);

  m.def("dual", &dual);
  m.def("stack_all_faces", &stack_all_faces);
  m.def("check_genus_zero", &check_genus_zero);
  m.def("is_4mp", &is_4mp);
  m.def("is_4mp_dual", &is_4mp_dual);
  m.def("is_cubic", &is_cubic);
  m.def("vertex_connectivity", &vertex_connectivity);
  m.def("isomorphic", &isomorphic);

  m.def("add_handle", [](const EmbeddedGraph& eg, EdgeTuple a, EdgeTuple b) {
    return add_handle(eg, HandleSite{Edge(a.first, a.second), Edge(b.first, b.second), std::nullopt}).embedding;
  });
  m.def("four_handle", [](const EmbeddedGraph& eg, std::size_t face, int pair) {
    return four_handle(eg, face, pair).embedding;
  });
  m.def("handle_closure", &handle_closure, py::arg("max_order"));

  m.def(
      "find_partition",
      [](const Graph& g, const std::string& left, const std::string& right, unsigned threads) -> py::object {
        PartitionSpec spec;
        spec.left = parse_shape(left);
        spec.right = parse_shape(right);
        PartitionOptions opts;
        opts.threads = threads;
        const auto r = find_partition(g, spec, opts);
        if (!r.sat()) return py::none();
        return py::make_tuple(r.certificate->left, r.certificate->right);
      },
      py::arg("graph"), py::arg("left") = "path", py::arg("right") = "tree", py::arg("threads") = 1);

  m.def(
      "find_hamiltonian_cycle",
      [](const Graph& g) -> py::object {
        const auto c = find_hamiltonian_cycle(g);
        if (!c) return py::none();
        return py::cast(c->vertices);
      },
      py::arg("graph"));
  m.def("count_hamiltonian_cycles", &count_hamiltonian_cycles);
  m.def("has_linear_hamiltonian_cycle", [](const EmbeddedGraph& eg) -> py::object {
    const auto c = has_linear_hamiltonian_cycle(eg);
    if (!c) return py::none();
    return py::cast(c->vertices);
  });
  m.def("find_spanning_two_tree", [](const Graph& g) -> py::object {
    const auto r = find_spanning_two_tree(g);
    if (!r.tree) return py::none();
    return sequence_dict(*r.tree);
  });
  m.def("count_spanning_two_trees", [](const Graph& g) { return enumerate_spanning_two_trees(g).size(); });
  m.def("recognize_k_tree", [](const Graph& g, std::size_t k) -> py::object {
    const auto s = recognize_k_tree(g, k);
    if (!s) return py::none();
    return sequence_dict(*s);
  });
  m.def("is_maximal_k_degenerate", [](const Graph& g, std::size_t k) {
    return is_maximal_k_degenerate(g, k).has_value();
  });
  m.def("spanning_max_2_degenerate", [](const EmbeddedGraph& eg) { return spanning_max_2_degenerate(eg).subgraph; });

  m.def(
      "certify",
      [](bool direct) {
        CertifyOptions opts;
        opts.direct = direct;
        py::gil_scoped_release release;
        return bundle_text(certify_counterexample(opts));
      },
      py::arg("direct") = true);
  m.def("verify", [](const std::string& text) {
    std::istringstream in(text);
    return verify_bundle(read_bundle(in));
  });
}
