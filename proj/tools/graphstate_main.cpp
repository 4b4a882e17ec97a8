#include <charconv>
#include <cmath>
#include <cstdint>
#include <exception>
#include <fstream>
#include <iostream>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "graphstate/analytic.hpp"
#include "graphstate/circuit.hpp"
#include "graphstate/document.hpp"
#include "graphstate/graph.hpp"
#include "graphstate/parallel.hpp"
#include "graphstate/sampler.hpp"
#include "graphstate/statevector.hpp"

namespace {

using nlohmann::json;
using namespace graphstate;

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw IoError("cannot read file: " + path);
  return buf.str();
}

void emit_output(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw IoError("cannot write file: " + out_path);
  out << text;
  out.flush();
  if (!out) throw IoError("cannot write file: " + out_path);
}

std::string format_double(double value) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof(buf), value);
  return std::string(buf, res.ptr);
}

Axis axis_of_char(char c) {
  switch (c) {
    case 'x': return Axis::X;
    case 'y': return Axis::Y;
    default: return Axis::Z;
  }
}

const std::vector<std::string> kAxisChoices = {"xx", "yy", "zz",
                                               "yz", "zx", "xy"};

std::vector<std::string> vertex_selection(
    const GraphSpec& g, const std::vector<std::string>& requested) {
  if (requested.empty()) {
    std::vector<std::string> all;
    for (std::size_t q = 0; q < g.vertex_count(); ++q)
      all.push_back(g.index_map().label_of(q));
    return all;
  }
  for (const auto& v : requested)
    if (!g.has_vertex(v))
      throw std::invalid_argument("unknown vertex: " + v);
  return requested;
}

int run_structure(const std::string& graph_path, const std::string& out_path) {
  const GraphDocument doc = load_graph_document(read_file(graph_path));
  const GraphSpec& g = doc.graph;
  const SetId sets[3] = {SetId::U, SetId::V, SetId::W};

  json vertices = json::array();
  for (SetId s : sets)
    for (const auto& x : g.vertices(s)) {
      json degree = json::object();
      for (SetId t : sets)
        if (t != s)
          degree[std::string(set_name(t))] = g.neighbors(x, t).size();
      vertices.push_back({{"vertex", x},
                          {"set", std::string(set_name(s))},
                          {"degree", degree}});
    }

  json pairs = json::array();
  for (SetId s : sets) {
    const auto& members = g.vertices(s);
    for (std::size_t i = 0; i < members.size(); ++i)
      for (std::size_t j = i + 1; j < members.size(); ++j)
        for (SetId t : sets) {
          if (t == s) continue;
          const NeighborhoodStats st = pair_stats(g, members[i], members[j], t);
          pairs.push_back({{"first", members[i]},
                           {"second", members[j]},
                           {"set", std::string(set_name(s))},
                           {"target", std::string(set_name(t))},
                           {"exclusive_first", st.exclusive_first},
                           {"exclusive_second", st.exclusive_second},
                           {"symmetric_difference", st.symmetric_difference},
                           {"common", st.common},
                           {"four_cycles", st.four_cycles}});
        }
  }

  json out = {{"vertices", vertices}, {"pairs", pairs}};
  emit_output(out.dump(2) + "\n", out_path);
  return 0;
}

int run_edist(const std::string& graph_path, const std::string& mode,
              const std::vector<std::string>& vertices_flag,
              const std::string& noise_path, bool seed_given,
              std::uint64_t seed, const std::string& out_path) {
  const GraphDocument doc = load_graph_document(read_file(graph_path));
  const auto targets = vertex_selection(doc.graph, vertices_flag);

  NoiseConfig cfg;
  if (!noise_path.empty()) cfg = parse_noise_config(read_file(noise_path));
  if (seed_given) cfg.seed = seed;

  const bool want_analytic = mode == "analytic" || mode == "compare";
  const bool want_sim = mode == "simulated" || mode == "compare";
  const bool want_sampled = mode == "sampled" || mode == "compare";

  StateVector state(0);
  if (want_sim) state = build_graph_state(doc.graph, doc.init);

  json results = json::array();
  for (const auto& v : targets) {
    json row = {{"vertex", v}};
    double analytic = 0.0;
    if (want_analytic) {
      analytic = entanglement_distance_analytic(doc.graph, doc.init, v);
      row["analytic"] = analytic;
    }
    if (want_sim) {
      const double sim =
          entanglement_distance_sim(state, doc.graph.index_map().qubit_of(v));
      row["simulated"] = sim;
      if (want_analytic) row["abs_diff_simulated"] = std::fabs(analytic - sim);
    }
    if (want_sampled) {
      const Estimate est =
          estimate_entanglement_distance(doc.graph, doc.init, v, cfg);
      row["sampled"] = est.value;
      row["sampled_stderr"] = est.std_error;
      if (want_analytic)
        row["abs_diff_sampled"] = std::fabs(analytic - est.value);
    }
    results.push_back(std::move(row));
  }

  json out = {{"mode", mode}, {"results", results}};
  emit_output(out.dump(2) + "\n", out_path);
  return 0;
}

int run_correlators(const std::string& graph_path, const std::string& x1,
                    const std::string& x2, std::vector<std::string> axes,
                    const std::string& out_path) {
  const GraphDocument doc = load_graph_document(read_file(graph_path));
  const GraphSpec& g = doc.graph;
  if (!g.has_vertex(x1)) throw std::invalid_argument("unknown vertex: " + x1);
  if (!g.has_vertex(x2)) throw std::invalid_argument("unknown vertex: " + x2);
  if (x1 == x2)
    throw std::invalid_argument("correlator requires distinct vertices");
  if (axes.empty()) axes = kAxisChoices;

  const StateVector state = build_graph_state(g, doc.init);
  const std::size_t q1 = g.index_map().qubit_of(x1);
  const std::size_t q2 = g.index_map().qubit_of(x2);
  const bool same_set = g.set_of(x1) == g.set_of(x2);

  json results = json::array();
  for (const auto& combo : axes) {
    const Axis a1 = axis_of_char(combo[0]);
    const Axis a2 = axis_of_char(combo[1]);
    const double sim = expect_pauli(state, {{q1, a1}, {q2, a2}});
    json row = {{"axes", combo}, {"simulated", sim}};
    if (same_set && correlator_axes_covered(g.set_of(x1), a1, a2)) {
      const double analytic =
          correlator_analytic(g, doc.init, x1, x2, a1, a2);
      row["analytic"] = analytic;
      row["abs_diff"] = std::fabs(analytic - sim);
    } else {
      row["note"] = "simulator-only: no closed form in source";
    }
    results.push_back(std::move(row));
  }

  json out = {{"first", x1}, {"second", x2}, {"results", results}};
  emit_output(out.dump(2) + "\n", out_path);
  return 0;
}

int run_compile(const std::string& graph_path, bool fuse,
                const std::string& out_path) {
  const GraphDocument doc = load_graph_document(read_file(graph_path));
  const Circuit c = compile_state_prep(doc.graph, doc.init, fuse);
  emit_output(emit_circuit_text(c), out_path);
  return 0;
}

int run_sweep(const std::string& graph_path, const std::string& spec_path,
              bool seed_given, std::uint64_t seed,
              const std::string& out_path) {
  const GraphDocument doc = load_graph_document(read_file(graph_path));
  SweepSpec spec = parse_sweep_spec(read_file(spec_path));
  if (seed_given) spec.noise.seed = seed;

  const GraphSpec& base = doc.graph;
  const auto targets = vertex_selection(base, spec.vertices);
  const std::vector<double> thetas = spec.theta.values();
  const std::vector<double> phis = spec.phi.values();
  const std::size_t points = thetas.size() * phis.size();
  const bool sampled = spec.mode == "sampled" || spec.mode == "compare";
  const bool simulated = spec.mode == "simulated";

  struct Row {
    double analytic = 0.0;
    double estimate = 0.0;
    double std_error = 0.0;
  };
  std::vector<Row> rows(points * targets.size());

  std::mutex error_mutex;
  std::exception_ptr first_error;
  parallel_for(points, [&](std::size_t begin, std::size_t end) {
    try {
      for (std::size_t point = begin; point < end; ++point) {
        const double theta = thetas[point / phis.size()];
        const double phi = phis[point % phis.size()];

        std::vector<Arc> arcs;
        for (const Coupling& cp : base.couplings())
          arcs.push_back({cp.a, cp.b, phi});
        const GraphSpec g(base.vertices(SetId::U), base.vertices(SetId::V),
                          base.vertices(SetId::W), arcs);
        InitParams params;
        for (std::size_t q = 0; q < g.vertex_count(); ++q)
          params.angles[g.index_map().label_of(q)] = {theta, spec.alpha};

        StateVector state(0);
        if (simulated) state = build_graph_state(g, params);
        for (std::size_t vi = 0; vi < targets.size(); ++vi) {
          Row& row = rows[point * targets.size() + vi];
          row.analytic = entanglement_distance_analytic(g, params,
                                                        targets[vi]);
          if (sampled) {
            NoiseConfig cfg = spec.noise;
            cfg.seed = derive_seed(derive_seed(spec.noise.seed, point), vi);
            const Estimate est =
                estimate_entanglement_distance(g, params, targets[vi], cfg);
            row.estimate = est.value;
            row.std_error = est.std_error;
          } else if (simulated) {
            row.estimate = entanglement_distance_sim(
                state, g.index_map().qubit_of(targets[vi]));
          } else {
            row.estimate = row.analytic;
          }
        }
      }
    } catch (...) {
      std::lock_guard<std::mutex> lock(error_mutex);
      if (!first_error) first_error = std::current_exception();
    }
  });
  if (first_error) std::rethrow_exception(first_error);

  std::string csv = "theta,phi,vertex,analytic,estimate,stderr,abs_diff\n";
  for (std::size_t point = 0; point < points; ++point) {
    const double theta = thetas[point / phis.size()];
    const double phi = phis[point % phis.size()];
    for (std::size_t vi = 0; vi < targets.size(); ++vi) {
      const Row& row = rows[point * targets.size() + vi];
      csv += format_double(theta);
      csv += ',';
      csv += format_double(phi);
      csv += ',';
      csv += targets[vi];
      csv += ',';
      csv += format_double(row.analytic);
      csv += ',';
      csv += format_double(row.estimate);
      csv += ',';
      csv += format_double(row.std_error);
      csv += ',';
      csv += format_double(std::fabs(row.analytic - row.estimate));
      csv += '\n';
    }
  }
  emit_output(csv, out_path);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Entangled-state toolkit for weighted directed tripartite graphs"};
  app.require_subcommand(1);

  std::string graph_path, spec_path, noise_path, out_path, mode = "compare";
  std::string x1, x2;
  std::vector<std::string> vertices_flag, axes_flag;
  std::uint64_t seed = 0;
  bool fuse = false;

  auto* structure =
      app.add_subcommand("structure", "Degrees and pair statistics as JSON");
  structure->add_option("graph", graph_path, "graph JSON file")->required();
  structure->add_option("--out", out_path, "output path (default stdout)");

  auto* edist = app.add_subcommand(
      "edist", "Entanglement distance per vertex (JSON)");
  edist->add_option("graph", graph_path, "graph JSON file")->required();
  edist->add_option("--mode", mode, "computation mode")
      ->check(CLI::IsMember({"analytic", "simulated", "sampled", "compare"}));
  edist->add_option("--vertex", vertices_flag,
                    "vertex label (repeatable; default: all)");
  edist->add_option("--noise-file", noise_path, "noise config JSON");
  auto* edist_seed =
      edist->add_option("--seed", seed, "override the noise-config seed");
  edist->add_option("--out", out_path, "output path (default stdout)");

  auto* sweep = app.add_subcommand(
      "sweep", "Grid sweep over theta and phi, CSV output");
  sweep->add_option("graph", graph_path, "graph JSON file")->required();
  sweep->add_option("spec", spec_path, "sweep spec JSON file")->required();
  auto* sweep_seed =
      sweep->add_option("--seed", seed, "override the noise seed");
  sweep->add_option("--out", out_path, "output path (default stdout)");

  auto* correlators = app.add_subcommand(
      "correlators", "Two-point correlators for a vertex pair (JSON)");
  correlators->add_option("graph", graph_path, "graph JSON file")->required();
  correlators->add_option("first", x1, "first vertex")->required();
  correlators->add_option("second", x2, "second vertex")->required();
  correlators->add_option("--axes", axes_flag, "axis pair (repeatable)")
      ->check(CLI::IsMember(kAxisChoices));
  correlators->add_option("--out", out_path, "output path (default stdout)");

  auto* compile =
      app.add_subcommand("compile", "Emit the preparation circuit as text");
  compile->add_option("graph", graph_path, "graph JSON file")->required();
  compile->add_flag("--fuse", fuse, "merge adjacent same-axis rotations");
  compile->add_option("--out", out_path, "output path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (app.got_subcommand(structure))
      return run_structure(graph_path, out_path);
    if (app.got_subcommand(edist))
      return run_edist(graph_path, mode, vertices_flag, noise_path,
                       edist_seed->count() > 0, seed, out_path);
    if (app.got_subcommand(sweep))
      return run_sweep(graph_path, spec_path, sweep_seed->count() > 0, seed,
                       out_path);
    if (app.got_subcommand(correlators))
      return run_correlators(graph_path, x1, x2, axes_flag, out_path);
    if (app.got_subcommand(compile))
      return run_compile(graph_path, fuse, out_path);
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
