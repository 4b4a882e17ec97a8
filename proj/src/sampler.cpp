#include "graphstate/sampler.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>
#include <random>
#include <stdexcept>
#include <vector>

#include "graphstate/parallel.hpp"

namespace graphstate {

namespace {

// 53-bit draw in [0, 1); avoids distribution objects so streams are identical
// across standard libraries.
double next_unit(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

void apply_pauli(StateVector& psi, std::size_t qubit, int pauli) {
  auto& amps = psi.amplitudes();
  const std::size_t mask = std::size_t{1} << qubit;
  const std::complex<double> im{0.0, 1.0};
  for (std::size_t b = 0; b < amps.size(); ++b) {
    if (pauli == 3) {
      if (b & mask) amps[b] = -amps[b];
      continue;
    }
    if (b & mask) continue;
    std::complex<double> a0 = amps[b], a1 = amps[b | mask];
    if (pauli == 1) {
      amps[b] = a1;
      amps[b | mask] = a0;
    } else {
      amps[b] = -im * a1;
      amps[b | mask] = im * a0;
    }
  }
}

struct ErrorEvent {
  std::size_t gate_index = 0;
  int pauli0 = 0;  // 0 = I, 1 = X, 2 = Y, 3 = Z
  int pauli1 = 0;
};

std::size_t sample_index(const std::vector<double>& cumulative, double u) {
  auto it = std::upper_bound(cumulative.begin(), cumulative.end(), u);
  if (it == cumulative.end()) return cumulative.size() - 1;
  return static_cast<std::size_t>(it - cumulative.begin());
}

std::size_t sample_trajectory(const Circuit& c,
                              const std::vector<ErrorEvent>& events,
                              double u) {
  StateVector psi(c.num_qubits);
  std::size_t next_event = 0;
  for (std::size_t gi = 0; gi < c.gates.size(); ++gi) {
    const Gate& g = c.gates[gi];
    switch (g.kind) {
      case Gate::Kind::RX: psi.apply_rotation(g.q0, Axis::X, g.angle); break;
      case Gate::Kind::RY: psi.apply_rotation(g.q0, Axis::Y, g.angle); break;
      case Gate::Kind::RZ: psi.apply_rotation(g.q0, Axis::Z, g.angle); break;
      case Gate::Kind::ZZ:
        psi.apply_two_axis_rotation(g.q0, Axis::Z, g.q1, Axis::Z, g.angle);
        break;
    }
    while (next_event < events.size() &&
           events[next_event].gate_index == gi) {
      const ErrorEvent& ev = events[next_event++];
      if (ev.pauli0 != 0) apply_pauli(psi, g.q0, ev.pauli0);
      if (ev.pauli1 != 0) apply_pauli(psi, g.q1, ev.pauli1);
    }
  }
  double acc = 0.0;
  const auto& amps = psi.amplitudes();
  for (std::size_t b = 0; b < amps.size(); ++b) {
    acc += std::norm(amps[b]);
    if (u < acc) return b;
  }
  return amps.size() - 1;
}

void check_probability(double p, const char* name) {
  if (!(p >= 0.0 && p <= 1.0))
    throw std::invalid_argument(std::string(name) +
                                " must be a probability in [0, 1]");
}

}  // namespace

std::uint64_t derive_seed(std::uint64_t root, std::uint64_t index) {
  std::uint64_t z = root + (index + 1) * 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

ShotCounts sample_counts(const Circuit& c, const NoiseConfig& cfg) {
  check_probability(cfg.readout_flip, "readout_flip");
  check_probability(cfg.single_qubit_x_flip, "single_qubit_x_flip");
  check_probability(cfg.two_qubit_depolarizing, "two_qubit_depolarizing");
  if (cfg.shots == 0) throw std::invalid_argument("shots must be positive");

  const StateVector base = simulate(c);
  std::vector<double> cumulative(base.dim());
  double acc = 0.0;
  for (std::size_t b = 0; b < base.dim(); ++b) {
    acc += std::norm(base.amplitude(b));
    cumulative[b] = acc;
  }

  const std::size_t n = c.num_qubits;
  ShotCounts counts;
  std::mutex merge_mutex;
  parallel_for(cfg.shots, [&](std::uint64_t begin, std::uint64_t end) {
    std::map<std::size_t, std::uint64_t> local;
    std::vector<ErrorEvent> events;
    for (std::uint64_t shot = begin; shot < end; ++shot) {
      std::mt19937_64 rng(derive_seed(cfg.seed, shot));
      events.clear();
      for (std::size_t gi = 0; gi < c.gates.size(); ++gi) {
        if (c.gates[gi].is_two_qubit()) {
          if (next_unit(rng) < cfg.two_qubit_depolarizing) {
            int choice = static_cast<int>(next_unit(rng) * 15.0);
            choice = std::min(choice, 14) + 1;  // skip identity x identity
            events.push_back({gi, choice / 4, choice % 4});
          }
        } else if (next_unit(rng) < cfg.single_qubit_x_flip) {
          events.push_back({gi, 1, 0});
        }
      }
      const double u = next_unit(rng);
      std::size_t index = events.empty() ? sample_index(cumulative, u)
                                         : sample_trajectory(c, events, u);
      for (std::size_t k = 0; k < n; ++k)
        if (next_unit(rng) < cfg.readout_flip) index ^= std::size_t{1} << k;
      ++local[index];
    }
    std::lock_guard<std::mutex> lock(merge_mutex);
    for (const auto& [index, count] : local) {
      std::string key(n, '0');
      for (std::size_t k = 0; k < n; ++k)
        if (index & (std::size_t{1} << k)) key[k] = '1';
      counts[key] += count;
    }
  });
  return counts;
}

Estimate estimate_mean_z(const ShotCounts& counts, std::size_t qubit) {
  std::uint64_t zeros = 0, ones = 0;
  for (const auto& [key, count] : counts) {
    if (qubit >= key.size())
      throw std::invalid_argument("qubit index out of range for counts");
    (key[qubit] == '0' ? zeros : ones) += count;
  }
  const std::uint64_t total = zeros + ones;
  if (total == 0) throw std::invalid_argument("empty counts");
  const double value =
      (static_cast<double>(zeros) - static_cast<double>(ones)) /
      static_cast<double>(total);
  const double variance = std::max(0.0, 1.0 - value * value);
  return {value, std::sqrt(variance / static_cast<double>(total))};
}

Estimate estimate_entanglement_distance(const GraphSpec& g,
                                        const InitParams& params,
                                        const std::string& vertex,
                                        const NoiseConfig& cfg) {
  const std::size_t qubit = g.index_map().qubit_of(vertex);
  const Circuit prep = compile_state_prep(g, params);
  const Axis axes[3] = {Axis::X, Axis::Y, Axis::Z};

  double value = 1.0;
  double var = 0.0;
  for (int i = 0; i < 3; ++i) {
    Circuit c = prep;
    for (const Gate& gate : compile_measurement(axes[i], qubit))
      c.gates.push_back(gate);
    NoiseConfig axis_cfg = cfg;
    axis_cfg.seed = derive_seed(cfg.seed, static_cast<std::uint64_t>(i));
    const Estimate est = estimate_mean_z(sample_counts(c, axis_cfg), qubit);
    value -= est.value * est.value;
    var += est.value * est.value * est.std_error * est.std_error;
  }
  return {value, 2.0 * std::sqrt(var)};
}

}  // namespace graphstate
