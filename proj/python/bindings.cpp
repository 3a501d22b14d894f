#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <algorithm>
#include <set>
#include <sstream>

#include "middlemen/centrality.hpp"
#include "middlemen/contestability.hpp"
#include "middlemen/fixtures.hpp"
#include "middlemen/graph.hpp"
#include "middlemen/middleman.hpp"
#include "middlemen/report.hpp"

namespace py = pybind11;
using namespace middlemen;

namespace {

std::set<std::string> labels_of(const DirectedGraph& g, const NodeSet& set) {
  std::set<std::string> out;
  for (NodeId id : set.to_vector()) out.insert(g.label(id));
  return out;
}

template <typename T>
py::dict by_label(const DirectedGraph& g, const std::vector<T>& values) {
  py::dict out;
  for (NodeId v = 0; v < g.size(); ++v) out[py::str(g.label(v))] = values[v];
  return out;
}

py::object as_fraction(const Rational& r) {
  return py::module_::import("fractions").attr("Fraction")(r.num(), r.den());
}

std::vector<std::string> class_names(const std::vector<MiddlemanClass>& classes) {
  std::vector<std::string> out;
  for (auto c : classes) out.emplace_back(to_string(c));
  return out;
}

py::dict scores(const DirectedGraph& g, const CentralityVector& v) { return by_label(g, v.scores); }

}  // namespace

PYBIND11_MODULE(_middlemen, m) {
  m.doc() = "Critical nodes (middlemen), contestability and brokerage power";
  m.attr("__version__") = kVersion;

  py::register_exception<GraphError>(m, "GraphError", PyExc_ValueError);
  py::register_exception<SizeGuardError>(m, "SizeGuardError", PyExc_RuntimeError);
  py::register_exception<SpectralBoundError>(m, "SpectralBoundError", PyExc_ValueError);

  py::class_<DirectedGraph>(m, "Graph")
      .def(py::init([](const std::vector<std::pair<std::string, std::string>>& arcs,
                       const std::vector<std::string>& nodes) {
             std::ostringstream text;
             for (const auto& [from, to] : arcs) text << from << "," << to << "\n";
             auto parsed = parse_edge_list(text.str());
             std::vector<std::string> labels = nodes;
             for (const auto& label : parsed.labels())
               if (std::find(labels.begin(), labels.end(), label) == labels.end())
                 labels.push_back(label);
             std::vector<Arc> ids;
             DirectedGraph index(labels, {});
             for (const auto& [from, to] : arcs) ids.emplace_back(index.id(from), index.id(to));
             return DirectedGraph(std::move(labels), std::move(ids));
           }),
           py::arg("arcs"), py::arg("nodes") = std::vector<std::string>{})
      .def_static("from_edge_list", py::overload_cast<std::string_view>(&parse_edge_list),
                  py::arg("text"))
      .def_static("from_adjacency_matrix", &from_adjacency_matrix, py::arg("matrix"),
                  py::arg("labels") = std::vector<std::string>{})
      .def_static(
          "fixture",
          [](const std::string& name) {
            auto g = fixture(name);
            if (!g) throw py::key_error("unknown fixture '" + name + "'");
            return *g;
          },
          py::arg("name"))
      .def_property_readonly("labels", &DirectedGraph::labels)
      .def_property_readonly("arcs",
                             [](const DirectedGraph& g) {
                               std::vector<std::pair<std::string, std::string>> out;
                               for (auto [a, b] : g.arcs()) out.emplace_back(g.label(a), g.label(b));
                               return out;
                             })
      .def("__len__", &DirectedGraph::size)
      .def("remove_node", [](const DirectedGraph& g, const std::string& v) {
        return remove_node(g, g.id(v));
      })
      .def("underlying_undirected", &underlying_undirected)
      .def("__repr__", [](const DirectedGraph& g) {
        return "<Graph n=" + std::to_string(g.size()) + " arcs=" + std::to_string(g.arc_count()) +
               ">";
      });

  m.def("fixture_names", [] {
    std::vector<std::string> names;
    for (const auto& f : fixtures()) names.push_back(f.name);
    return names;
  });

  m.def("successor_set", [](const DirectedGraph& g, const std::string& v) {
    return labels_of(g, successor_set(g, g.id(v)));
  });
  m.def("predecessor_set", [](const DirectedGraph& g, const std::string& v) {
    return labels_of(g, predecessor_set(g, g.id(v)));
  });

  m.def("pair_middleman_set", [](const DirectedGraph& g, const std::string& i, const std::string& j) {
    return labels_of(g, pair_middleman_set(g, g.id(i), g.id(j)));
  });
  m.def("middleman_set", [](const DirectedGraph& g) { return labels_of(g, middleman_set(g)); });
  m.def("classify", [](const DirectedGraph& g) { return by_label(g, class_names(classify(g))); });
  m.def("classify_all",
        [](const DirectedGraph& g) { return by_label(g, class_names(classify_all(g))); },
        "Matrix-route classification.");
  m.def("brokerage", [](const DirectedGraph& g) { return by_label(g, brokerage(g)); });
  m.def("potential_brokerage", [](const DirectedGraph& g) {
    auto p = potential_brokerage(g);
    return py::make_tuple(p.raw, p.normalizer);
  });
  m.def("middleman_power", [](const DirectedGraph& g, const std::string& v) {
    return as_fraction(middleman_power(g, g.id(v)));
  }, "Exact value as fractions.Fraction.");
  m.def("distance_based_power", [](const DirectedGraph& g, const std::string& v) {
    return distance_based_power(g, g.id(v));
  });
  m.def("power_all", [](const DirectedGraph& g) {
    auto p = power_all(g);
    py::dict normalized;
    for (NodeId v = 0; v < g.size(); ++v) normalized[py::str(g.label(v))] = as_fraction(p.normalized[v]);
    return py::make_tuple(by_label(g, p.raw), normalized, p.normalizer);
  }, "Matrix route: (raw, normalized, normalizer).");

  m.def("contests", [](const DirectedGraph& g, const std::vector<std::string>& contenders,
                       const std::string& v) {
    NodeSet set(g.size());
    for (const auto& c : contenders) set.insert(g.id(c));
    auto result = contests(g, set, g.id(v));
    std::vector<std::pair<std::string, std::string>> uncovered;
    for (auto [a, b] : result.uncovered) uncovered.emplace_back(g.label(a), g.label(b));
    return py::make_tuple(result.contested, uncovered);
  });
  m.def("directly_contests", [](const DirectedGraph& g, const std::string& j, const std::string& i) {
    return directly_contests(g, g.id(j), g.id(i));
  });
  m.def("is_contested", [](const DirectedGraph& g, const std::string& v) {
    return is_contested(g, g.id(v));
  });
  m.def("minimal_contesting_sets", [](const DirectedGraph& g, const std::string& v) {
    std::vector<std::vector<std::string>> out;
    for (const auto& set : minimal_contesting_sets(g, g.id(v))) {
      std::vector<std::string> labels;
      for (NodeId id : set) labels.push_back(g.label(id));
      out.push_back(std::move(labels));
    }
    return out;
  });
  m.def("duality_audit", [](const DirectedGraph& g) {
    std::vector<std::string> out;
    for (NodeId v : duality_audit(g).counterexamples) out.push_back(g.label(v));
    return out;
  }, "Counterexamples to 'uncontested intermediary iff middleman' (empty on success).");

  m.def("betweenness", [](const DirectedGraph& g, bool normalized) {
    return scores(g, betweenness(g, normalized));
  }, py::arg("g"), py::arg("normalized") = true);
  m.def("closeness", [](const DirectedGraph& g) { return scores(g, closeness(g)); });
  m.def("bonacich", [](const DirectedGraph& g, double beta) { return scores(g, bonacich(g, beta)); },
        py::arg("g"), py::arg("beta") = kDefaultBonacichBeta);
  m.def("pagerank", [](const DirectedGraph& g, double d) { return scores(g, pagerank(g, d)); },
        py::arg("g"), py::arg("damping") = kDefaultDamping);
  m.def("beta_measure", [](const DirectedGraph& g) { return scores(g, beta_measure(g)); });

  m.def("report", [](const DirectedGraph& g, double beta, double damping, bool raw) {
    AnalysisOptions options;
    options.beta = beta;
    options.damping = damping;
    options.raw_betweenness = raw;
    return to_json(analyze(g, options)).dump();
  }, py::arg("g"), py::arg("beta") = kDefaultBonacichBeta, py::arg("damping") = kDefaultDamping,
     py::arg("raw") = false, "Full analysis report as a JSON string.");
}
