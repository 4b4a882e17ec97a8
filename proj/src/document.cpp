#include "graphstate/document.hpp"

#include <cmath>
#include <stdexcept>

#include "json.hpp"

namespace graphstate {

namespace {

using nlohmann::json;

double number_field(const json& obj, const char* key, double fallback,
                    const char* doc_name) {
  if (!obj.contains(key)) return fallback;
  const json& value = obj.at(key);
  if (!value.is_number())
    throw std::invalid_argument(std::string(doc_name) + ": key \"" + key +
                                "\" must be a number");
  return value.get<double>();
}

json parse_object(std::string_view text, const char* doc_name) {
  json obj;
  try {
    obj = json::parse(text);
  } catch (const json::exception& e) {
    throw std::invalid_argument("malformed " + std::string(doc_name) + ": " +
                                e.what());
  }
  if (!obj.is_object())
    throw std::invalid_argument(std::string(doc_name) +
                                " must be a JSON object");
  return obj;
}

GridSpec parse_grid(const json& obj, const char* key) {
  if (!obj.contains(key))
    throw std::invalid_argument("sweep document: missing grid \"" +
                                std::string(key) + "\"");
  const json& grid = obj.at(key);
  if (!grid.is_object())
    throw std::invalid_argument("sweep document: grid \"" + std::string(key) +
                                "\" must be an object");
  GridSpec out;
  out.start = number_field(grid, "start", 0.0, "sweep document");
  out.stop = number_field(grid, "stop", 0.0, "sweep document");
  if (!std::isfinite(out.start) || !std::isfinite(out.stop))
    throw std::invalid_argument("sweep document: grid bounds must be finite");
  if (!grid.contains("steps") || !grid.at("steps").is_number_unsigned())
    throw std::invalid_argument(
        "sweep document: grid needs a nonnegative integer \"steps\"");
  out.steps = grid.at("steps").get<std::size_t>();
  if (out.steps == 0)
    throw std::invalid_argument("sweep document: steps must be at least 1");
  return out;
}

}  // namespace

GraphDocument load_graph_document(std::string_view json_text) {
  GraphDocument doc;
  doc.graph = GraphSpec::parse(json_text);
  doc.init = InitParams::zeros(doc.graph);

  const json obj = parse_object(json_text, "graph document");
  if (!obj.contains("init")) return doc;
  const json& init = obj.at("init");
  if (!init.is_object())
    throw std::invalid_argument("graph document: \"init\" must be an object");
  for (const auto& [label, entry] : init.items()) {
    if (!doc.graph.has_vertex(label))
      throw std::invalid_argument("unknown vertex in init: " + label);
    if (!entry.is_object())
      throw std::invalid_argument("graph document: init entry for \"" + label +
                                  "\" must be an object");
    BlochAngles ang;
    ang.theta = number_field(entry, "theta", 0.0, "graph document");
    ang.alpha = number_field(entry, "alpha", 0.0, "graph document");
    if (!std::isfinite(ang.theta) || !std::isfinite(ang.alpha))
      throw std::invalid_argument("non-finite angle for vertex " + label);
    doc.init.angles[label] = ang;
  }
  return doc;
}

std::string save_graph_document(const GraphDocument& doc) {
  json obj = json::parse(doc.graph.serialize());
  json init = json::object();
  for (SetId s : {SetId::U, SetId::V, SetId::W})
    for (const auto& label : doc.graph.vertices(s)) {
      const BlochAngles& ang = doc.init.at(label);
      init[label] = {{"theta", ang.theta}, {"alpha", ang.alpha}};
    }
  obj["init"] = std::move(init);
  return obj.dump(2) + "\n";
}

NoiseConfig parse_noise_config(std::string_view json_text) {
  const json obj = parse_object(json_text, "noise document");
  NoiseConfig cfg;
  for (const auto& [key, value] : obj.items()) {
    if (key == "readout_flip" || key == "single_qubit_x_flip" ||
        key == "two_qubit_depolarizing") {
      if (!value.is_number())
        throw std::invalid_argument("noise document: key \"" + key +
                                    "\" must be a number");
      const double p = value.get<double>();
      if (!(p >= 0.0 && p <= 1.0))
        throw std::invalid_argument("noise document: key \"" + key +
                                    "\" must be a probability in [0, 1]");
      if (key == "readout_flip") cfg.readout_flip = p;
      else if (key == "single_qubit_x_flip") cfg.single_qubit_x_flip = p;
      else cfg.two_qubit_depolarizing = p;
    } else if (key == "shots" || key == "seed") {
      if (!value.is_number_unsigned())
        throw std::invalid_argument("noise document: key \"" + key +
                                    "\" must be a nonnegative integer");
      if (key == "shots") {
        cfg.shots = value.get<std::uint64_t>();
        if (cfg.shots == 0)
          throw std::invalid_argument(
              "noise document: shots must be at least 1");
      } else {
        cfg.seed = value.get<std::uint64_t>();
      }
    } else {
      throw std::invalid_argument("noise document: unknown key \"" + key +
                                  "\"");
    }
  }
  return cfg;
}

std::vector<double> GridSpec::values() const {
  std::vector<double> out;
  out.reserve(steps);
  if (steps == 1) {
    out.push_back(start);
    return out;
  }
  const double span = (stop - start) / static_cast<double>(steps - 1);
  for (std::size_t k = 0; k < steps; ++k)
    out.push_back(start + span * static_cast<double>(k));
  return out;
}

SweepSpec parse_sweep_spec(std::string_view json_text) {
  const json obj = parse_object(json_text, "sweep document");
  SweepSpec spec;
  spec.theta = parse_grid(obj, "theta");
  spec.phi = parse_grid(obj, "phi");
  spec.alpha = number_field(obj, "alpha", 0.0, "sweep document");
  if (!std::isfinite(spec.alpha))
    throw std::invalid_argument("sweep document: alpha must be finite");

  if (obj.contains("mode")) {
    if (!obj.at("mode").is_string())
      throw std::invalid_argument("sweep document: mode must be a string");
    spec.mode = obj.at("mode").get<std::string>();
  }
  if (spec.mode != "analytic" && spec.mode != "simulated" &&
      spec.mode != "sampled" && spec.mode != "compare")
    throw std::invalid_argument("sweep document: unknown mode \"" + spec.mode +
                                "\"");

  if (obj.contains("vertices")) {
    const json& verts = obj.at("vertices");
    if (!verts.is_array())
      throw std::invalid_argument("sweep document: vertices must be an array");
    for (const json& v : verts) {
      if (!v.is_string())
        throw std::invalid_argument(
            "sweep document: vertices must be strings");
      spec.vertices.push_back(v.get<std::string>());
    }
  }

  if (obj.contains("noise")) {
    spec.noise = parse_noise_config(obj.at("noise").dump());
    spec.has_noise = true;
  }

  for (const auto& [key, value] : obj.items()) {
    (void)value;
    if (key != "theta" && key != "phi" && key != "alpha" && key != "mode" &&
        key != "vertices" && key != "noise")
      throw std::invalid_argument("sweep document: unknown key \"" + key +
                                  "\"");
  }
  return spec;
}

}  // namespace graphstate
