#pragma once

#include <complex>
#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "graphstate/graph.hpp"

namespace graphstate {

enum class Axis { X, Y, Z };

std::string_view axis_name(Axis a);

struct PauliTerm {
  std::size_t qubit = 0;
  Axis axis = Axis::Z;
};

// Product of single-qubit Paulis on distinct qubits.
using PauliString = std::vector<PauliTerm>;

struct BlochAngles {
  double theta = 0.0;
  double alpha = 0.0;
};

// Per-vertex initial-state angles: cos(theta/2)|0> + e^{i alpha} sin(theta/2)|1>.
struct InitParams {
  std::map<std::string, BlochAngles> angles;

  const BlochAngles& at(const std::string& label) const;
  static InitParams zeros(const GraphSpec& g);
};

// Dense amplitude vector over n <= 24 qubits. Qubit 0 is the least significant
// bit of the basis index; |0> is the +1 eigenstate of sigma_z. Global phase is
// whatever the applied operations produce; nothing renormalizes it.
class StateVector {
 public:
  explicit StateVector(std::size_t num_qubits);

  std::size_t num_qubits() const { return n_; }
  std::size_t dim() const { return amps_.size(); }
  std::complex<double> amplitude(std::size_t basis_index) const;
  const std::vector<std::complex<double>>& amplitudes() const { return amps_; }
  std::vector<std::complex<double>>& amplitudes() { return amps_; }

  double norm() const;

  // exp(-i angle/2 sigma_axis) on one qubit.
  void apply_rotation(std::size_t qubit, Axis axis, double angle);

  // exp(-i angle/2 sigma_a1 sigma_a2) on two distinct qubits.
  void apply_two_axis_rotation(std::size_t q1, Axis a1, std::size_t q2,
                               Axis a2, double angle);

 private:
  std::size_t n_ = 0;
  std::vector<std::complex<double>> amps_;
};

StateVector init_product_state(const GraphSpec& g, const InitParams& params);

// Initial product state followed by one two-axis rotation per nonzero
// coupling: X on the U side, Y on the V side, Z on the W side.
StateVector build_graph_state(const GraphSpec& g, const InitParams& params);

double expect_pauli(const StateVector& psi, const PauliString& pauli);

// 1 - <sx>^2 - <sy>^2 - <sz>^2 for one qubit of the given state.
double entanglement_distance_sim(const StateVector& psi, std::size_t qubit);

}  // namespace graphstate
