#include "graphstate/statevector.hpp"

#include <cmath>
#include <set>
#include <stdexcept>

namespace graphstate {

namespace {

using c64 = std::complex<double>;

constexpr std::size_t kMaxQubits = 24;

// <out| sigma_axis |in> for single bits.
c64 pauli_element(Axis axis, unsigned out, unsigned in) {
  switch (axis) {
    case Axis::X: return out != in ? c64{1.0, 0.0} : c64{};
    case Axis::Y:
      if (out == in) return c64{};
      return out ? c64{0.0, 1.0} : c64{0.0, -1.0};
    case Axis::Z:
      if (out != in) return c64{};
      return in ? c64{-1.0, 0.0} : c64{1.0, 0.0};
  }
  return c64{};
}

void check_qubit(std::size_t q, std::size_t n) {
  if (q >= n) throw std::invalid_argument("qubit index out of range");
}

}  // namespace

std::string_view axis_name(Axis a) {
  switch (a) {
    case Axis::X: return "x";
    case Axis::Y: return "y";
    case Axis::Z: return "z";
  }
  return "?";
}

const BlochAngles& InitParams::at(const std::string& label) const {
  auto it = angles.find(label);
  if (it == angles.end())
    throw std::invalid_argument("missing vertex parameters: " + label);
  return it->second;
}

InitParams InitParams::zeros(const GraphSpec& g) {
  InitParams p;
  for (auto s : {SetId::U, SetId::V, SetId::W})
    for (const auto& label : g.vertices(s)) p.angles[label] = {};
  return p;
}

StateVector::StateVector(std::size_t num_qubits) : n_(num_qubits) {
  if (num_qubits > kMaxQubits)
    throw std::invalid_argument("qubit count exceeds capacity (24)");
  amps_.assign(std::size_t{1} << n_, c64{});
  amps_[0] = 1.0;
}

std::complex<double> StateVector::amplitude(std::size_t basis_index) const {
  if (basis_index >= amps_.size())
    throw std::invalid_argument("basis index out of range");
  return amps_[basis_index];
}

double StateVector::norm() const {
  double acc = 0.0;
  for (const auto& a : amps_) acc += std::norm(a);
  return std::sqrt(acc);
}

void StateVector::apply_rotation(std::size_t qubit, Axis axis, double angle) {
  check_qubit(qubit, n_);
  const double c = std::cos(angle / 2.0), s = std::sin(angle / 2.0);
  c64 m00, m01, m10, m11;
  switch (axis) {
    case Axis::X:
      m00 = c; m01 = c64{0.0, -s}; m10 = c64{0.0, -s}; m11 = c;
      break;
    case Axis::Y:
      m00 = c; m01 = -s; m10 = s; m11 = c;
      break;
    case Axis::Z:
      m00 = c64{c, -s}; m01 = 0.0; m10 = 0.0; m11 = c64{c, s};
      break;
  }
  const std::size_t mask = std::size_t{1} << qubit;
  for (std::size_t b = 0; b < amps_.size(); ++b) {
    if (b & mask) continue;
    c64 a0 = amps_[b], a1 = amps_[b | mask];
    amps_[b] = m00 * a0 + m01 * a1;
    amps_[b | mask] = m10 * a0 + m11 * a1;
  }
}

void StateVector::apply_two_axis_rotation(std::size_t q1, Axis a1,
                                          std::size_t q2, Axis a2,
                                          double angle) {
  check_qubit(q1, n_);
  check_qubit(q2, n_);
  if (q1 == q2)
    throw std::invalid_argument("two-axis rotation requires distinct qubits");
  const double c = std::cos(angle / 2.0), s = std::sin(angle / 2.0);
  const c64 minus_is{0.0, -s};
  const std::size_t m1 = a1 != Axis::Z ? std::size_t{1} << q1 : 0;
  const std::size_t m2 = a2 != Axis::Z ? std::size_t{1} << q2 : 0;
  const std::size_t mask = m1 | m2;

  auto elem = [&](std::size_t out, std::size_t in) {
    return pauli_element(a1, (out >> q1) & 1, (in >> q1) & 1) *
           pauli_element(a2, (out >> q2) & 1, (in >> q2) & 1);
  };

  if (mask == 0) {
    // Both factors diagonal; the generator only contributes a phase.
    for (std::size_t b = 0; b < amps_.size(); ++b)
      amps_[b] *= c64{c, 0.0} + minus_is * elem(b, b);
    return;
  }

  const std::size_t pivot = mask & (~mask + 1);
  for (std::size_t b = 0; b < amps_.size(); ++b) {
    if (b & pivot) continue;
    const std::size_t p = b ^ mask;
    c64 a0 = amps_[b], a1v = amps_[p];
    amps_[b] = c * a0 + minus_is * elem(b, p) * a1v;
    amps_[p] = c * a1v + minus_is * elem(p, b) * a0;
  }
}

StateVector init_product_state(const GraphSpec& g, const InitParams& params) {
  QubitIndexMap map = g.index_map();
  StateVector psi(map.size());
  auto& amps = psi.amplitudes();
  std::size_t filled = 1;
  for (std::size_t q = 0; q < map.size(); ++q) {
    const BlochAngles& ang = params.at(map.label_of(q));
    if (!std::isfinite(ang.theta) || !std::isfinite(ang.alpha))
      throw std::invalid_argument("non-finite angle for vertex " +
                                  map.label_of(q));
    const c64 a0{std::cos(ang.theta / 2.0), 0.0};
    const c64 a1 = std::polar(std::sin(ang.theta / 2.0), ang.alpha);
    for (std::size_t b = 0; b < filled; ++b) {
      amps[b | filled] = amps[b] * a1;
      amps[b] *= a0;
    }
    filled <<= 1;
  }
  return psi;
}

StateVector build_graph_state(const GraphSpec& g, const InitParams& params) {
  StateVector psi = init_product_state(g, params);
  QubitIndexMap map = g.index_map();
  for (const auto& cpl : g.couplings()) {
    if (cpl.angle == 0.0) continue;
    SetId sa = g.set_of(cpl.a);
    SetId sb = g.set_of(cpl.b);
    // Canonical coupling orientation puts the earlier set first, so the pair
    // is one of (U,V), (V,W), (U,W).
    Axis ax_a = sa == SetId::U ? Axis::X : Axis::Y;
    Axis ax_b = sb == SetId::V ? Axis::Y : Axis::Z;
    psi.apply_two_axis_rotation(map.qubit_of(cpl.a), ax_a,
                                map.qubit_of(cpl.b), ax_b, cpl.angle);
  }
  return psi;
}

double expect_pauli(const StateVector& psi, const PauliString& pauli) {
  const std::size_t n = psi.num_qubits();
  std::set<std::size_t> seen;
  std::size_t mask = 0;
  for (const auto& term : pauli) {
    check_qubit(term.qubit, n);
    if (!seen.insert(term.qubit).second)
      throw std::invalid_argument("duplicate qubit in Pauli string");
    if (term.axis != Axis::Z) mask |= std::size_t{1} << term.qubit;
  }
  const auto& amps = psi.amplitudes();
  c64 acc{};
  for (std::size_t b = 0; b < amps.size(); ++b) {
    if (amps[b] == c64{}) continue;
    c64 coeff{1.0, 0.0};
    const std::size_t out = b ^ mask;
    for (const auto& term : pauli)
      coeff *= pauli_element(term.axis, (out >> term.qubit) & 1,
                             (b >> term.qubit) & 1);
    acc += std::conj(amps[out]) * coeff * amps[b];
  }
  return acc.real();
}

double entanglement_distance_sim(const StateVector& psi, std::size_t qubit) {
  check_qubit(qubit, psi.num_qubits());
  double acc = 0.0;
  for (Axis ax : {Axis::X, Axis::Y, Axis::Z}) {
    double m = expect_pauli(psi, {{qubit, ax}});
    acc += m * m;
  }
  return 1.0 - acc;
}

}  // namespace graphstate
