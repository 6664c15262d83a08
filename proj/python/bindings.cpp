// Python bindings. Link and node sets keep a shared reference to their graph,
// so a set stays valid after the Python Graph object goes away.

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "cplc/bench.hpp"
#include "cplc/error.hpp"
#include "cplc/metrics.hpp"
#include "cplc/report.hpp"
#include "cplc/sweep.hpp"
#include "cplc/towns.hpp"
#include "cplc/walker.hpp"

namespace py = pybind11;
using namespace pybind11::literals;

namespace {

using cplc::Graph;
using cplc::LinkSet;
using cplc::NodeSet;
using GraphPtr = std::shared_ptr<const Graph>;
using Pair = std::pair<std::string, std::string>;

struct Links {
  GraphPtr graph;
  LinkSet set;
};

struct Nodes {
  GraphPtr graph;
  NodeSet set;
};

cplc::NodeId require_node(const Graph& g, const std::string& label) {
  const auto id = g.find_node(label);
  if (!id) throw cplc::ValidationError("node '" + label + "' is not in the graph");
  return *id;
}

Links links_from_pairs(const GraphPtr& g, const std::vector<Pair>& pairs) {
  LinkSet set(*g);
  for (const auto& [a, b] : pairs) {
    const auto e = g->find_edge(require_node(*g, a), require_node(*g, b));
    if (!e) throw cplc::ValidationError("edge '" + a + " " + b + "' is not in the graph");
    set.insert(*e);
  }
  return {g, std::move(set)};
}

Nodes nodes_from_labels(const GraphPtr& g, const std::vector<std::string>& labels) {
  NodeSet set(*g);
  for (const std::string& l : labels) set.insert(require_node(*g, l));
  return {g, std::move(set)};
}

std::vector<Pair> label_pairs(const LinkSet& set) {
  const Graph& g = set.graph();
  std::vector<Pair> out;
  for (cplc::EdgeId e : set.edge_ids()) out.emplace_back(g.label(g.edge(e).u), g.label(g.edge(e).v));
  return out;
}

py::object to_python(const cplc::Json& j) { return py::module_::import("json").attr("loads")(j.dump()); }

py::object component_to_python(const Graph& g, const cplc::SweepResult& s, bool verbose, bool keep_selected) {
  cplc::ResultDocument doc;
  doc.components.push_back(cplc::make_component_record(g, s, verbose));
  if (!keep_selected) doc.components[0].selected.reset();
  return to_python(cplc::to_json(doc).at("components").at(0));
}

py::dict walk_to_python(const cplc::WalkEstimate& e) {
  return py::dict("trials"_a = e.trials, "escapes"_a = e.escapes, "estimate"_a = e.estimate(),
                  "standard_error"_a = e.standard_error());
}

cplc::TieRule tie_rule(std::optional<std::uint64_t> seed) { return cplc::TieRule{seed}; }

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Core-periphery structure of link communities";

  auto base = py::register_exception<cplc::Error>(m, "CplcError", PyExc_ValueError);
  py::register_exception<cplc::ParseError>(m, "ParseError", base.ptr());
  py::register_exception<cplc::ValidationError>(m, "ValidationError", base.ptr());
  auto precondition = py::register_exception<cplc::PreconditionError>(m, "PreconditionError", base.ptr());
  py::register_exception<cplc::UndefinedMeasure>(m, "UndefinedMeasure", precondition.ptr());
  py::register_exception<cplc::InvariantError>(m, "InvariantError", base.ptr());

  py::class_<Graph, std::shared_ptr<Graph>>(m, "Graph")
      .def_static("from_text",
                  [](const std::string& text) { return std::make_shared<Graph>(cplc::parse_edge_list(text)); },
                  "text"_a, "Parse a whitespace-separated edge list.")
      .def_static("from_file",
                  [](const std::string& path) { return std::make_shared<Graph>(cplc::load_edge_list_file(path)); },
                  "path"_a)
      .def_static("random", [](std::size_t edges, std::uint64_t seed) {
            return std::make_shared<Graph>(cplc::random_connected_graph(edges, seed));
          }, "edges"_a, "seed"_a = 1, "Connected preferential-attachment graph with exactly `edges` edges.")
      .def_property_readonly("node_count", &Graph::node_count)
      .def_property_readonly("edge_count", &Graph::edge_count)
      .def("labels", [](const Graph& g) {
        std::vector<std::string> out;
        for (cplc::NodeId i = 0; i < g.node_count(); ++i) out.push_back(g.label(i));
        return out;
      })
      .def("edges", [](const std::shared_ptr<Graph>& g) { return label_pairs(LinkSet::all(*g)); })
      .def("degree", [](const Graph& g, const std::string& label) { return g.degree(require_node(g, label)); })
      .def("all_links", [](const std::shared_ptr<Graph>& g) { return Links{g, LinkSet::all(*g)}; })
      .def("links", [](const std::shared_ptr<Graph>& g, const std::vector<Pair>& pairs) {
        return links_from_pairs(g, pairs);
      }, "pairs"_a)
      .def("community_file", [](const std::shared_ptr<Graph>& g, const std::string& path) {
        return Links{g, cplc::load_community_file(*g, path)};
      }, "path"_a)
      .def("nodes", [](const std::shared_ptr<Graph>& g, const std::vector<std::string>& labels) {
        return nodes_from_labels(g, labels);
      }, "labels"_a)
      .def("star", [](const std::shared_ptr<Graph>& g, const std::string& centre) {
        return Links{g, LinkSet::from_edges(*g, cplc::make_star(LinkSet::all(*g), require_node(*g, centre)).links)};
      }, "centre"_a)
      .def("__repr__", [](const Graph& g) {
        return "<Graph " + std::to_string(g.node_count()) + " nodes, " + std::to_string(g.edge_count()) + " edges>";
      });

  py::class_<Links>(m, "LinkSet")
      .def("__len__", [](const Links& l) { return l.set.size(); })
      .def("pairs", [](const Links& l) { return label_pairs(l.set); })
      .def("__contains__", [](const Links& l, const Pair& p) {
        const auto e = l.graph->find_edge(require_node(*l.graph, p.first), require_node(*l.graph, p.second));
        return e && l.set.contains(*e);
      })
      .def("__eq__", [](const Links& a, const Links& b) { return a.graph == b.graph && a.set == b.set; })
      .def("complement", [](const Links& l) { return Links{l.graph, l.set.complement()}; })
      .def("nodes", [](const Links& l) { return Nodes{l.graph, NodeSet::touched_by(l.set)}; })
      .def("components", [](const Links& l) {
        std::vector<Links> out;
        for (LinkSet& part : cplc::connected_components(l.set)) out.push_back({l.graph, std::move(part)});
        return out;
      })
      .def("is_connected", [](const Links& l) { return cplc::is_link_connected(l.set); })
      .def("is_star", [](const Links& l) { return cplc::is_star(l.set); })
      .def("pair_connectedness", [](const Links& l) { return cplc::pair_connectedness(l.set); })
      .def("connectedness_density", [](const Links& l) { return cplc::connectedness_density(l.set); })
      .def("sigma", [](const Links& l, const Links* context) {
        return context ? cplc::sigma(l.set, context->set) : cplc::sigma(l.set);
      }, "context"_a = nullptr)
      .def("escape_probability", [](const Links& l) { return cplc::escape_probability_links(l.set); })
      .def("normalized_node_cut", [](const Links& l, const Links* context) {
        const cplc::SeparationReport r =
            context ? cplc::normalized_node_cut(l.set, context->set) : cplc::normalized_node_cut(l.set);
        return py::dict("sigma"_a = r.sigma, "kin"_a = r.kin, "kin_complement"_a = r.kin_complement,
                        "esc_links"_a = r.esc_links, "esc_complement"_a = r.esc_complement, "psi"_a = r.psi);
      }, "context"_a = nullptr, "Psi and its parts; `context` is the edge set E (default: the whole graph).")
      .def("metrics", [](const Links& l) { return to_python(cplc::link_set_metrics(l.set)); })
      .def("__repr__", [](const Links& l) { return "<LinkSet " + std::to_string(l.set.size()) + " links>"; });

  py::class_<Nodes>(m, "NodeSet")
      .def("__len__", [](const Nodes& n) { return n.set.size(); })
      .def("labels", [](const Nodes& n) {
        std::vector<std::string> out;
        for (cplc::NodeId i : n.set.node_ids()) out.push_back(n.graph->label(i));
        return out;
      })
      .def("persistence_probability", [](const Nodes& n) { return cplc::persistence_probability(n.set); })
      .def("escape_probability", [](const Nodes& n) { return cplc::escape_probability_nodes(n.set); })
      .def("weak_community", [](const Nodes& n) { return cplc::weak_community_check(n.set); })
      .def("conductance", [](const Nodes& n) { return cplc::conductance(n.set); })
      .def("normalized_cut", [](const Nodes& n) { return cplc::normalized_cut(n.set); })
      .def("metrics", [](const Nodes& n) { return to_python(cplc::node_set_metrics(n.set)); })
      .def("__repr__", [](const Nodes& n) { return "<NodeSet " + std::to_string(n.set.size()) + " nodes>"; });

  m.def("run_cplc", [](const Links& community, const std::string& q, std::optional<std::uint64_t> seed, bool verbose) {
    cplc::SweepResult single;
    {
      py::gil_scoped_release release;
      single.levels.push_back(
          cplc::score_level(cplc::run_cplc(community.set, cplc::parse_fraction(q), tie_rule(seed)), community.set));
    }
    const py::object component = component_to_python(*community.graph, single, verbose, false);
    return py::object(component["levels"][py::int_(0)]);
  }, "community"_a, "q"_a, "seed"_a = py::none(), "verbose"_a = false,
        "Towns of a link-connected community at resolution q (a fraction string such as \"4/9\").");

  m.def("sweep", [](const Links& community, std::optional<std::uint64_t> seed, unsigned jobs, bool verbose) {
    cplc::SweepResult s;
    {
      py::gil_scoped_release release;
      s = cplc::sweep(community.set, {tie_rule(seed), jobs});
    }
    return component_to_python(*community.graph, s, verbose, true);
  }, "community"_a, "seed"_a = py::none(), "jobs"_a = 1, "verbose"_a = false,
        "All resolution levels from q = 0 upwards, with the selected level index.");

  m.def("simulate_node_escape", [](const Nodes& nodes, std::uint64_t trials, std::uint64_t seed, unsigned jobs) {
    cplc::WalkEstimate e;
    {
      py::gil_scoped_release release;
      e = cplc::simulate_node_escape(nodes.set, trials, seed, jobs);
    }
    return walk_to_python(e);
  }, "nodes"_a, "trials"_a = 1'000'000, "seed"_a = 1, "jobs"_a = 1);

  m.def("simulate_link_escape", [](const Links& links, std::uint64_t trials, std::uint64_t seed, unsigned jobs) {
    cplc::WalkEstimate e;
    {
      py::gil_scoped_release release;
      e = cplc::simulate_link_escape(links.set, trials, seed, jobs);
    }
    return walk_to_python(e);
  }, "links"_a, "trials"_a = 1'000'000, "seed"_a = 1, "jobs"_a = 1);
}
