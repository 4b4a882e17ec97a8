#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <complex>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "graphstate/analytic.hpp"
#include "graphstate/circuit.hpp"
#include "graphstate/document.hpp"
#include "graphstate/graph.hpp"
#include "graphstate/sampler.hpp"
#include "graphstate/statevector.hpp"

namespace py = pybind11;
using namespace graphstate;

namespace {

Axis axis_from_string(const std::string& name) {
  if (name == "x" || name == "X") return Axis::X;
  if (name == "y" || name == "Y") return Axis::Y;
  if (name == "z" || name == "Z") return Axis::Z;
  throw std::invalid_argument("axis must be one of x, y, z");
}

SetId set_from_string(const std::string& name) {
  if (name == "U") return SetId::U;
  if (name == "V") return SetId::V;
  if (name == "W") return SetId::W;
  throw std::invalid_argument("set must be one of U, V, W");
}

NoiseConfig make_noise(double readout_flip, double single_qubit_x_flip,
                       double two_qubit_depolarizing, std::uint64_t shots,
                       std::uint64_t seed) {
  NoiseConfig cfg;
  cfg.readout_flip = readout_flip;
  cfg.single_qubit_x_flip = single_qubit_x_flip;
  cfg.two_qubit_depolarizing = two_qubit_depolarizing;
  cfg.shots = shots;
  cfg.seed = seed;
  return cfg;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() =
      "Entangled states on weighted directed tripartite graphs: analytic "
      "entanglement distances and correlators, exact simulation, circuit "
      "compilation, and noisy shot sampling.";

  py::class_<GraphDocument>(m, "Graph")
      .def_static(
          "from_json",
          [](const std::string& text) { return load_graph_document(text); },
          py::arg("json_text"))
      .def("to_json",
           [](const GraphDocument& doc) { return save_graph_document(doc); })
      .def_property_readonly(
          "num_qubits",
          [](const GraphDocument& doc) { return doc.graph.vertex_count(); })
      .def("vertices",
           [](const GraphDocument& doc) {
             std::vector<std::string> out;
             for (std::size_t q = 0; q < doc.graph.vertex_count(); ++q)
               out.push_back(doc.graph.index_map().label_of(q));
             return out;
           })
      .def(
          "set_of",
          [](const GraphDocument& doc, const std::string& vertex) {
            return std::string(set_name(doc.graph.set_of(vertex)));
          },
          py::arg("vertex"))
      .def(
          "qubit_of",
          [](const GraphDocument& doc, const std::string& vertex) {
            return doc.graph.index_map().qubit_of(vertex);
          },
          py::arg("vertex"))
      .def(
          "coupling_angle",
          [](const GraphDocument& doc, const std::string& a,
             const std::string& b) { return doc.graph.coupling_angle(a, b); },
          py::arg("a"), py::arg("b"))
      .def(
          "neighbors",
          [](const GraphDocument& doc, const std::string& vertex,
             const std::string& target) {
            return doc.graph.neighbors(vertex, set_from_string(target));
          },
          py::arg("vertex"), py::arg("target"))
      .def(
          "pair_stats",
          [](const GraphDocument& doc, const std::string& x1,
             const std::string& x2, const std::string& target) {
            const NeighborhoodStats st =
                pair_stats(doc.graph, x1, x2, set_from_string(target));
            py::dict out;
            out["exclusive_first"] = st.exclusive_first;
            out["exclusive_second"] = st.exclusive_second;
            out["symmetric_difference"] = st.symmetric_difference;
            out["common"] = st.common;
            out["four_cycles"] = st.four_cycles;
            return out;
          },
          py::arg("x1"), py::arg("x2"), py::arg("target"));

  m.def(
      "mean_spin",
      [](const GraphDocument& doc, const std::string& vertex) {
        const MeanSpin s = mean_spin_analytic(doc.graph, doc.init, vertex);
        return py::make_tuple(s.x, s.y, s.z);
      },
      py::arg("graph"), py::arg("vertex"),
      "Closed-form Bloch vector (x, y, z) of one vertex.");

  m.def(
      "entanglement_distance",
      [](const GraphDocument& doc, const std::string& vertex) {
        return entanglement_distance_analytic(doc.graph, doc.init, vertex);
      },
      py::arg("graph"), py::arg("vertex"),
      "Closed-form entanglement distance of one vertex.");

  m.def(
      "entanglement_distance_simulated",
      [](const GraphDocument& doc, const std::string& vertex) {
        const StateVector psi = build_graph_state(doc.graph, doc.init);
        return entanglement_distance_sim(psi,
                                         doc.graph.index_map().qubit_of(vertex));
      },
      py::arg("graph"), py::arg("vertex"),
      "Entanglement distance from the exact statevector.");

  m.def(
      "entanglement_distance_sampled",
      [](const GraphDocument& doc, const std::string& vertex,
         double readout_flip, double single_qubit_x_flip,
         double two_qubit_depolarizing, std::uint64_t shots,
         std::uint64_t seed) {
        const Estimate est = estimate_entanglement_distance(
            doc.graph, doc.init, vertex,
            make_noise(readout_flip, single_qubit_x_flip,
                       two_qubit_depolarizing, shots, seed));
        return py::make_tuple(est.value, est.std_error);
      },
      py::arg("graph"), py::arg("vertex"), py::arg("readout_flip") = 0.0,
      py::arg("single_qubit_x_flip") = 0.0,
      py::arg("two_qubit_depolarizing") = 0.0, py::arg("shots") = 8192,
      py::arg("seed") = 0,
      "Shot-based estimate (value, std_error) under the noise model.");

  m.def(
      "correlator",
      [](const GraphDocument& doc, const std::string& x1,
         const std::string& x2, const std::string& axes) {
        if (axes.size() != 2)
          throw std::invalid_argument("axes must be two characters, e.g. xx");
        return correlator_analytic(doc.graph, doc.init, x1, x2,
                                   axis_from_string(axes.substr(0, 1)),
                                   axis_from_string(axes.substr(1, 1)));
      },
      py::arg("graph"), py::arg("x1"), py::arg("x2"), py::arg("axes"),
      "Closed-form two-point correlator; raises ValueError off coverage.");

  m.def(
      "correlator_simulated",
      [](const GraphDocument& doc, const std::string& x1,
         const std::string& x2, const std::string& axes) {
        if (axes.size() != 2)
          throw std::invalid_argument("axes must be two characters, e.g. xx");
        const StateVector psi = build_graph_state(doc.graph, doc.init);
        return expect_pauli(
            psi, {{doc.graph.index_map().qubit_of(x1),
                   axis_from_string(axes.substr(0, 1))},
                  {doc.graph.index_map().qubit_of(x2),
                   axis_from_string(axes.substr(1, 1))}});
      },
      py::arg("graph"), py::arg("x1"), py::arg("x2"), py::arg("axes"),
      "Two-point correlator from the exact statevector.");

  m.def(
      "statevector",
      [](const GraphDocument& doc) {
        return build_graph_state(doc.graph, doc.init).amplitudes();
      },
      py::arg("graph"),
      "Exact amplitudes; qubit 0 is the least significant index bit.");

  m.def(
      "compile_circuit",
      [](const GraphDocument& doc, bool fuse) {
        return emit_circuit_text(compile_state_prep(doc.graph, doc.init, fuse));
      },
      py::arg("graph"), py::arg("fuse") = false,
      "Preparation circuit in the line-based text format.");

  m.def(
      "sample_counts",
      [](const std::string& circuit_text, double readout_flip,
         double single_qubit_x_flip, double two_qubit_depolarizing,
         std::uint64_t shots, std::uint64_t seed) {
        const Circuit c = parse_circuit_text(circuit_text);
        return sample_counts(c, make_noise(readout_flip, single_qubit_x_flip,
                                           two_qubit_depolarizing, shots,
                                           seed));
      },
      py::arg("circuit_text"), py::arg("readout_flip") = 0.0,
      py::arg("single_qubit_x_flip") = 0.0,
      py::arg("two_qubit_depolarizing") = 0.0, py::arg("shots") = 8192,
      py::arg("seed") = 0,
      "Bitstring counts; character k of a key is qubit k.");
}
