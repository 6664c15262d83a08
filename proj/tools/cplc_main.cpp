// Command-line front end: metrics, towns, export-dot, oracle, bench.

#include <chrono>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cplc/bench.hpp"
#include "cplc/error.hpp"
#include "cplc/metrics.hpp"
#include "cplc/report.hpp"
#include "cplc/sweep.hpp"
#include "cplc/walker.hpp"

namespace {

using namespace cplc;

void write_output(const std::string& text, const std::string& path) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw ValidationError("cannot write '" + path + "'");
  out << text;
}

std::string render(const ResultDocument& doc, const std::string& format) {
  return format == "text" ? render_text(doc) : serialize(doc);
}

struct MetricsArgs {
  std::string graph, community, nodes, format = "json", output;
};

int cmd_metrics(const MetricsArgs& a) {
  const Graph g = load_edge_list_file(a.graph);
  ResultDocument doc;
  doc.command = "metrics";
  doc.nodes = g.node_count();
  doc.edges = g.edge_count();
  if (!a.nodes.empty()) {
    doc.parameters["nodes"] = a.nodes;
    doc.metrics = node_set_metrics(load_node_set_file(g, a.nodes));
  } else {
    doc.parameters["community"] = a.community;
    doc.metrics = link_set_metrics(load_community_file(g, a.community));
  }
  write_output(render(doc, a.format), a.output);
  return 0;
}

struct TownsArgs {
  std::string graph, community, q, format = "json", output;
  bool sweep = false, per_component = false, verbose = false, timing = false;
  std::optional<std::uint64_t> seed;
  unsigned jobs = 1;
};

int cmd_towns(const TownsArgs& a) {
  const auto start = std::chrono::steady_clock::now();
  const Graph g = load_edge_list_file(a.graph);
  const LinkSet community = a.community.empty() ? LinkSet::all(g) : load_community_file(g, a.community);
  if (community.empty()) throw PreconditionError("the community has no links");

  ResultDocument doc;
  doc.command = "towns";
  doc.nodes = g.node_count();
  doc.edges = g.edge_count();
  doc.parameters["community"] = a.community.empty() ? Json("all edges") : Json(a.community);
  doc.parameters["mode"] = a.sweep ? "sweep" : "fixed";
  if (!a.sweep) doc.parameters["q"] = to_string(parse_fraction(a.q));
  doc.parameters["seed"] = a.seed ? Json(*a.seed) : Json(nullptr);
  doc.parameters["per_component"] = a.per_component;

  std::vector<LinkSet> parts;
  if (a.per_component) {
    parts = connected_components(community);
  } else {
    parts.push_back(community);
  }
  const TieRule tie{a.seed};
  for (const LinkSet& part : parts) {
    if (a.sweep) {
      doc.components.push_back(make_component_record(g, sweep(part, {tie, a.jobs}), a.verbose));
    } else {
      SweepResult single;
      single.levels.push_back(score_level(run_cplc(part, parse_fraction(a.q), tie), part));
      ComponentRecord rec = make_component_record(g, single, a.verbose);
      rec.selected.reset();
      doc.components.push_back(std::move(rec));
    }
  }
  if (a.timing) {
    doc.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  }
  write_output(render(doc, a.format), a.output);
  return 0;
}

struct DotArgs {
  std::string graph, document, output;
  std::size_t component = 0;
  std::optional<std::size_t> level;
};

int cmd_export_dot(const DotArgs& a) {
  const Graph g = load_edge_list_file(a.graph);
  std::ifstream in(a.document);
  if (!in) throw ValidationError("cannot open '" + a.document + "'");
  std::stringstream text;
  text << in.rdbuf();
  const ResultDocument doc = parse_document(text.str());
  write_output(export_dot(g, doc, a.component, a.level), a.output);
  return 0;
}

struct OracleArgs {
  std::string graph, set;
  bool nodes = false;
  std::uint64_t trials = 1'000'000, seed = 1;
  unsigned jobs = 1;
};

int cmd_oracle(const OracleArgs& a) {
  const Graph g = load_edge_list_file(a.graph);
  double closed = 0;
  WalkEstimate est;
  if (a.nodes) {
    const NodeSet set = load_node_set_file(g, a.set);
    closed = escape_probability_nodes(set);
    est = simulate_node_escape(set, a.trials, a.seed, a.jobs);
  } else {
    const LinkSet set = load_community_file(g, a.set);
    closed = escape_probability_links(set);
    est = simulate_link_escape(set, a.trials, a.seed, a.jobs);
  }
  const bool pass = est.agrees_with(closed);
  std::cout << std::setprecision(10) << "walker        " << (a.nodes ? "node" : "link-node-link") << "\n"
            << "closed_form   " << closed << "\n"
            << "estimate      " << est.estimate() << "\n"
            << "stderr        " << est.standard_error() << "\n"
            << "trials        " << est.trials << "\n"
            << "seed          " << a.seed << "\n"
            << "within_3sigma " << (pass ? "pass" : "fail") << "\n";
  return 0;
}

struct BenchArgs {
  std::vector<std::size_t> sizes{100, 200, 400, 800};
  BenchOptions options;
};

int cmd_bench(const BenchArgs& a) {
  const auto rows = run_bench(a.sizes, a.options);
  std::cout << std::left << std::setw(10) << "edges" << std::setw(10) << "nodes" << std::setw(10) << "levels"
            << "seconds\n";
  for (const BenchRow& r : rows) {
    std::cout << std::setw(10) << r.edges << std::setw(10) << std::setprecision(5) << r.nodes << std::setw(10)
              << r.levels << std::setprecision(6) << r.seconds << "\n";
  }
  if (const auto slope = fit_loglog_slope(rows)) {
    std::cout << "exponent " << std::setprecision(4) << *slope << "\n";
  } else {
    std::cout << "exponent unavailable (need two distinct sizes)\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Core-periphery structures (towns) in link communities"};
  app.require_subcommand(1);

  MetricsArgs metrics;
  auto* m = app.add_subcommand("metrics", "Cohesion and separation measures of a link set or node set");
  m->add_option("graph", metrics.graph, "Edge-list file")->required()->check(CLI::ExistingFile);
  auto* m_comm = m->add_option("community", metrics.community, "Community edge-list file")->check(CLI::ExistingFile);
  auto* m_nodes = m->add_option("--nodes", metrics.nodes, "Node-set file instead of a community")->check(CLI::ExistingFile);
  m_comm->excludes(m_nodes);
  m->add_option("--format", metrics.format)->check(CLI::IsMember({"json", "text"}));
  m->add_option("-o,--output", metrics.output, "Output file (default stdout)");

  TownsArgs towns;
  auto* t = app.add_subcommand("towns", "Decompose a link community into towns");
  t->add_option("graph", towns.graph, "Edge-list file")->required()->check(CLI::ExistingFile);
  t->add_option("community", towns.community, "Community edge-list file (default: all edges)")
      ->check(CLI::ExistingFile);
  auto* t_q = t->add_option("--q", towns.q, "Resolution, e.g. 0, 1/4, 0.5");
  auto* t_sweep = t->add_flag("--sweep", towns.sweep, "Explore every resolution threshold and select a level");
  t_q->excludes(t_sweep);
  t->add_option("--seed", towns.seed, "Shuffle equal-sized stars with this seed");
  t->add_option("--format", towns.format)->check(CLI::IsMember({"json", "text"}));
  t->add_flag("--per-component", towns.per_component, "Decompose each connected component separately");
  t->add_flag("--verbose", towns.verbose, "Include the merge log");
  t->add_flag("--timing", towns.timing, "Include wall-clock time in the document");
  t->add_option("--jobs", towns.jobs, "Threads for level scoring")->check(CLI::PositiveNumber);
  t->add_option("-o,--output", towns.output, "Output file (default stdout)");

  DotArgs dot;
  auto* d = app.add_subcommand("export-dot", "Render one level of a towns document as DOT");
  d->add_option("graph", dot.graph, "Edge-list file")->required()->check(CLI::ExistingFile);
  d->add_option("document", dot.document, "Result document from 'towns'")->required()->check(CLI::ExistingFile);
  d->add_option("--component", dot.component);
  d->add_option("--level", dot.level, "Level index (default: selected level)");
  d->add_option("-o,--output", dot.output, "Output file (default stdout)");

  OracleArgs oracle;
  auto* o = app.add_subcommand("oracle", "Compare a closed-form escape probability with random walkers");
  o->add_option("graph", oracle.graph, "Edge-list file")->required()->check(CLI::ExistingFile);
  o->add_option("set", oracle.set, "Community edge-list file, or node-set file with --nodes")
      ->required()
      ->check(CLI::ExistingFile);
  o->add_flag("--nodes", oracle.nodes, "Treat the set file as node labels");
  o->add_option("--trials", oracle.trials)->check(CLI::PositiveNumber);
  o->add_option("--seed", oracle.seed);
  o->add_option("--jobs", oracle.jobs)->check(CLI::PositiveNumber);

  BenchArgs bench;
  auto* b = app.add_subcommand("bench", "Time full sweeps on random connected graphs");
  b->add_option("--sizes", bench.sizes, "Edge counts")->delimiter(',');
  b->add_option("--seed", bench.options.seed);
  b->add_option("--graphs", bench.options.graphs, "Random graphs per size")->check(CLI::PositiveNumber);
  b->add_option("--repeats", bench.options.repeats, "Timed batches per graph")->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    // --help exits 0; every usage error, including a missing file, exits 1.
    return app.exit(e) == 0 ? 0 : 1;
  }

  try {
    if (*m) {
      if (metrics.community.empty() && metrics.nodes.empty()) {
        throw ValidationError("metrics needs a community file or --nodes");
      }
      return cmd_metrics(metrics);
    }
    if (*t) {
      if (!towns.sweep && towns.q.empty()) throw ValidationError("towns needs --q or --sweep");
      return cmd_towns(towns);
    }
    if (*d) return cmd_export_dot(dot);
    if (*o) return cmd_oracle(oracle);
    if (*b) return cmd_bench(bench);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code(e.kind());
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  }
  return 0;
}
