#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "graphstate/graph.hpp"
#include "graphstate/sampler.hpp"
#include "graphstate/statevector.hpp"

namespace graphstate {

// Graph documents may carry initial-state angles under "init":
//   {"U": [...], ..., "init": {"u0": {"theta": 0.5, "alpha": 0.0}}}
// Vertices absent from "init" default to theta = 0, alpha = 0.
struct GraphDocument {
  GraphSpec graph;
  InitParams init;
};

GraphDocument load_graph_document(std::string_view json_text);
std::string save_graph_document(const GraphDocument& doc);

// {"readout_flip": p, "single_qubit_x_flip": p, "two_qubit_depolarizing": p,
//  "shots": n, "seed": s} with every key optional.
NoiseConfig parse_noise_config(std::string_view json_text);

struct GridSpec {
  double start = 0.0;
  double stop = 0.0;
  std::size_t steps = 1;

  std::vector<double> values() const;
};

// Sweep description: theta applies to every vertex, alpha is fixed, phi
// applies to every arc. Vertices defaults to all vertices in qubit order.
//   {"theta": {"start": 0, "stop": 3.14159, "steps": 17},
//    "phi":   {"start": 0, "stop": 3.14159, "steps": 17},
//    "alpha": 0.0, "mode": "analytic", "vertices": ["u0"],
//    "noise": { ... }}
struct SweepSpec {
  GridSpec theta;
  GridSpec phi;
  double alpha = 0.0;
  std::string mode = "analytic";  // analytic | simulated | sampled
  std::vector<std::string> vertices;
  NoiseConfig noise;
  bool has_noise = false;
};

SweepSpec parse_sweep_spec(std::string_view json_text);

}  // namespace graphstate
