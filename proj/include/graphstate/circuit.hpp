#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "graphstate/graph.hpp"
#include "graphstate/statevector.hpp"

namespace graphstate {

// Elementary gate set: single-qubit rotations exp(-i angle/2 sigma_a) and the
// two-qubit coupling exp(-i angle/2 sigma_z sigma_z).
struct Gate {
  enum class Kind { RX, RY, RZ, ZZ };
  Kind kind = Kind::RZ;
  std::size_t q0 = 0;
  std::size_t q1 = 0;  // ZZ only
  double angle = 0.0;

  bool is_two_qubit() const { return kind == Kind::ZZ; }
  bool touches(std::size_t q) const {
    return q0 == q || (is_two_qubit() && q1 == q);
  }
};

bool operator==(const Gate& a, const Gate& b);

struct Circuit {
  std::size_t num_qubits = 0;
  std::vector<Gate> gates;
  std::vector<std::size_t> measured;  // empty when no readout is recorded

  bool operator==(const Circuit& other) const;
};

// State preparation as RY(theta), RZ(alpha) per qubit followed by one ZZ block
// per nonzero coupling. Each block wraps the ZZ in basis changes that map
// sigma_z to the coupling's Pauli on that side:
//   U side: RY(-pi/2) before, RY(+pi/2) after
//   V side: RX(+pi/2) before, RX(-pi/2) after
//   W side: bare.
// The prepared state matches build_graph_state up to global phase.
// fuse_basis_changes merges adjacent same-axis rotations (sliding across
// gates on disjoint qubits) and drops the resulting zero-angle gates.
Circuit compile_state_prep(const GraphSpec& g, const InitParams& params,
                           bool fuse_basis_changes = false);

// Basis change turning a sigma_z readout of `qubit` into sigma_axis:
// X -> RY(-pi/2), Y -> RX(+pi/2), Z -> nothing.
std::vector<Gate> compile_measurement(Axis axis, std::size_t qubit);

// Text form, one gate per line:
//   qubits 3
//   RY q0 1.5707963267948966
//   ZZ q0 q1 0.5
//   MEASURE q0 q2
// Angles are shortest round-trip decimal; parse(emit(c)) == c.
std::string emit_circuit_text(const Circuit& c);
Circuit parse_circuit_text(std::string_view text);

StateVector simulate(const Circuit& c);

}  // namespace graphstate
