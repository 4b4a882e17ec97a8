#pragma once

#include <cstdint>
#include <map>
#include <string>

#include "graphstate/circuit.hpp"
#include "graphstate/graph.hpp"
#include "graphstate/statevector.hpp"

namespace graphstate {

// Stochastic error model for shot-based sampling. Trajectory insertion points:
// an X flip after each single-qubit gate, a uniformly random non-identity
// two-qubit Pauli after each ZZ, independent readout flips per bit.
struct NoiseConfig {
  double readout_flip = 0.0;
  double single_qubit_x_flip = 0.0;
  double two_qubit_depolarizing = 0.0;
  std::uint64_t shots = 8192;
  std::uint64_t seed = 0;
};

// Bitstring -> frequency. Character k of the key (from the left) is qubit k.
using ShotCounts = std::map<std::string, std::uint64_t>;

// Runs `cfg.shots` independent trajectories of the circuit. Each shot draws
// from its own counter-derived RNG stream, so results depend only on
// (circuit, cfg) and not on thread scheduling. Respects GRAPHSTATE_THREADS.
ShotCounts sample_counts(const Circuit& c, const NoiseConfig& cfg);

struct Estimate {
  double value = 0.0;
  double std_error = 0.0;
};

// (N0 - N1) / shots for one bit position, with binomial standard error
// sqrt((1 - value^2) / shots).
Estimate estimate_mean_z(const ShotCounts& counts, std::size_t qubit);

// Samples three circuit variants (Z readout bare, X via RY(-pi/2), Y via
// RX(pi/2)) of the compiled preparation and combines them into
// 1 - sum_j <sigma_j>^2. The standard error is first-order propagated:
// 2 sqrt(sum_j (value_j * std_error_j)^2). Each axis uses a seed derived from
// cfg.seed, so the triple is deterministic given cfg.
Estimate estimate_entanglement_distance(const GraphSpec& g,
                                        const InitParams& params,
                                        const std::string& vertex,
                                        const NoiseConfig& cfg);

// Single-stream seed derivation used for per-shot and per-axis streams.
std::uint64_t derive_seed(std::uint64_t root, std::uint64_t index);

}  // namespace graphstate
