#include "graphstate/circuit.hpp"

#include <algorithm>
#include <charconv>
#include <numbers>
#include <stdexcept>
#include <system_error>

namespace graphstate {

namespace {

constexpr double kHalfPi = std::numbers::pi / 2.0;

// With fusion on, a single-qubit rotation merges into the most recent gate on
// the same qubit when that gate shares its axis; gates on disjoint qubits
// commute past it. A merged angle of exactly zero deletes the gate.
void append_gate(std::vector<Gate>& gates, const Gate& gate, bool fuse) {
  if (fuse && !gate.is_two_qubit()) {
    for (auto it = gates.rbegin(); it != gates.rend(); ++it) {
      if (!it->touches(gate.q0)) continue;
      if (it->kind == gate.kind) {
        it->angle += gate.angle;
        if (it->angle == 0.0) gates.erase(std::next(it).base());
        return;
      }
      break;
    }
  }
  gates.push_back(gate);
}

// Basis changes mapping sigma_z into each set's coupling axis.
void append_coupling_wrap(std::vector<Gate>& gates, SetId side, std::size_t q,
                          bool closing, bool fuse) {
  switch (side) {
    case SetId::U:
      append_gate(gates, {Gate::Kind::RY, q, 0, closing ? kHalfPi : -kHalfPi},
                  fuse);
      break;
    case SetId::V:
      append_gate(gates, {Gate::Kind::RX, q, 0, closing ? -kHalfPi : kHalfPi},
                  fuse);
      break;
    case SetId::W:
      break;
  }
}

void write_angle(std::string& out, double value) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof(buf), value);
  out.append(buf, res.ptr);
}

std::vector<std::string_view> split_tokens(std::string_view line) {
  std::vector<std::string_view> tokens;
  std::size_t pos = 0;
  while (pos < line.size()) {
    while (pos < line.size() && line[pos] == ' ') ++pos;
    std::size_t end = pos;
    while (end < line.size() && line[end] != ' ') ++end;
    if (end > pos) tokens.push_back(line.substr(pos, end - pos));
    pos = end;
  }
  return tokens;
}

[[noreturn]] void bad_line(std::string_view line) {
  throw std::invalid_argument("malformed circuit line: " + std::string(line));
}

std::size_t parse_qubit(std::string_view token, std::size_t num_qubits,
                        std::string_view line) {
  if (token.size() < 2 || token[0] != 'q') bad_line(line);
  std::size_t value = 0;
  auto res = std::from_chars(token.data() + 1, token.data() + token.size(),
                             value);
  if (res.ec != std::errc{} || res.ptr != token.data() + token.size())
    bad_line(line);
  if (value >= num_qubits)
    throw std::invalid_argument("qubit index out of range: " +
                                std::string(token));
  return value;
}

double parse_angle(std::string_view token, std::string_view line) {
  double value = 0.0;
  auto res = std::from_chars(token.data(), token.data() + token.size(), value);
  if (res.ec != std::errc{} || res.ptr != token.data() + token.size())
    bad_line(line);
  return value;
}

}  // namespace

bool operator==(const Gate& a, const Gate& b) {
  return a.kind == b.kind && a.q0 == b.q0 && a.q1 == b.q1 &&
         a.angle == b.angle;
}

bool Circuit::operator==(const Circuit& other) const {
  return num_qubits == other.num_qubits && gates == other.gates &&
         measured == other.measured;
}

Circuit compile_state_prep(const GraphSpec& g, const InitParams& params,
                           bool fuse_basis_changes) {
  const QubitIndexMap& idx = g.index_map();
  Circuit c;
  c.num_qubits = g.vertex_count();
  for (std::size_t q = 0; q < c.num_qubits; ++q) {
    const BlochAngles& ang = params.at(idx.label_of(q));
    if (ang.theta != 0.0)
      c.gates.push_back({Gate::Kind::RY, q, 0, ang.theta});
    if (ang.alpha != 0.0)
      c.gates.push_back({Gate::Kind::RZ, q, 0, ang.alpha});
  }
  for (const Coupling& cp : g.couplings()) {
    if (cp.angle == 0.0) continue;
    const std::size_t qa = idx.qubit_of(cp.a);
    const std::size_t qb = idx.qubit_of(cp.b);
    const SetId sa = g.set_of(cp.a);
    const SetId sb = g.set_of(cp.b);
    append_coupling_wrap(c.gates, sa, qa, false, fuse_basis_changes);
    append_coupling_wrap(c.gates, sb, qb, false, fuse_basis_changes);
    c.gates.push_back({Gate::Kind::ZZ, qa, qb, cp.angle});
    append_coupling_wrap(c.gates, sa, qa, true, fuse_basis_changes);
    append_coupling_wrap(c.gates, sb, qb, true, fuse_basis_changes);
  }
  return c;
}

std::vector<Gate> compile_measurement(Axis axis, std::size_t qubit) {
  switch (axis) {
    case Axis::X: return {{Gate::Kind::RY, qubit, 0, -kHalfPi}};
    case Axis::Y: return {{Gate::Kind::RX, qubit, 0, kHalfPi}};
    case Axis::Z: return {};
  }
  throw std::invalid_argument("bad axis");
}

std::string emit_circuit_text(const Circuit& c) {
  std::string out = "qubits " + std::to_string(c.num_qubits) + "\n";
  for (const Gate& g : c.gates) {
    switch (g.kind) {
      case Gate::Kind::RX: out += "RX"; break;
      case Gate::Kind::RY: out += "RY"; break;
      case Gate::Kind::RZ: out += "RZ"; break;
      case Gate::Kind::ZZ: out += "ZZ"; break;
    }
    out += " q" + std::to_string(g.q0);
    if (g.is_two_qubit()) out += " q" + std::to_string(g.q1);
    out += ' ';
    write_angle(out, g.angle);
    out += '\n';
  }
  if (!c.measured.empty()) {
    out += "MEASURE";
    for (std::size_t q : c.measured) out += " q" + std::to_string(q);
    out += '\n';
  }
  return out;
}

Circuit parse_circuit_text(std::string_view text) {
  Circuit c;
  bool saw_header = false;
  bool saw_measure = false;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string_view line = text.substr(pos, eol - pos);
    pos = eol + 1;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    auto tokens = split_tokens(line);
    if (tokens.empty()) continue;

    if (!saw_header) {
      if (tokens.size() != 2 || tokens[0] != "qubits") bad_line(line);
      std::size_t n = 0;
      auto res = std::from_chars(tokens[1].data(),
                                 tokens[1].data() + tokens[1].size(), n);
      if (res.ec != std::errc{} ||
          res.ptr != tokens[1].data() + tokens[1].size())
        bad_line(line);
      c.num_qubits = n;
      saw_header = true;
      continue;
    }

    if (tokens[0] == "MEASURE") {
      if (saw_measure)
        throw std::invalid_argument("duplicate MEASURE line");
      if (tokens.size() < 2) bad_line(line);
      for (std::size_t i = 1; i < tokens.size(); ++i)
        c.measured.push_back(parse_qubit(tokens[i], c.num_qubits, line));
      saw_measure = true;
      continue;
    }
    if (saw_measure)
      throw std::invalid_argument("gate after MEASURE line");

    Gate g;
    if (tokens[0] == "RX") g.kind = Gate::Kind::RX;
    else if (tokens[0] == "RY") g.kind = Gate::Kind::RY;
    else if (tokens[0] == "RZ") g.kind = Gate::Kind::RZ;
    else if (tokens[0] == "ZZ") g.kind = Gate::Kind::ZZ;
    else bad_line(line);

    if (g.kind == Gate::Kind::ZZ) {
      if (tokens.size() != 4) bad_line(line);
      g.q0 = parse_qubit(tokens[1], c.num_qubits, line);
      g.q1 = parse_qubit(tokens[2], c.num_qubits, line);
      if (g.q0 == g.q1)
        throw std::invalid_argument("two-qubit gate needs distinct qubits");
      g.angle = parse_angle(tokens[3], line);
    } else {
      if (tokens.size() != 3) bad_line(line);
      g.q0 = parse_qubit(tokens[1], c.num_qubits, line);
      g.angle = parse_angle(tokens[2], line);
    }
    c.gates.push_back(g);
  }
  if (!saw_header)
    throw std::invalid_argument("missing qubits header line");
  return c;
}

StateVector simulate(const Circuit& c) {
  StateVector psi(c.num_qubits);
  for (const Gate& g : c.gates) {
    if (g.q0 >= c.num_qubits || (g.is_two_qubit() && g.q1 >= c.num_qubits))
      throw std::invalid_argument("qubit index out of range in circuit");
    switch (g.kind) {
      case Gate::Kind::RX: psi.apply_rotation(g.q0, Axis::X, g.angle); break;
      case Gate::Kind::RY: psi.apply_rotation(g.q0, Axis::Y, g.angle); break;
      case Gate::Kind::RZ: psi.apply_rotation(g.q0, Axis::Z, g.angle); break;
      case Gate::Kind::ZZ:
        psi.apply_two_axis_rotation(g.q0, Axis::Z, g.q1, Axis::Z, g.angle);
        break;
    }
  }
  return psi;
}

}  // namespace graphstate
