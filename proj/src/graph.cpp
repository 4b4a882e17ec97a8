#include "graphstate/graph.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>
#include <utility>

#include "json.hpp"

namespace graphstate {

namespace {

using nlohmann::json;

std::pair<std::string, std::string> ordered_key(const std::string& a,
                                                const std::string& b) {
  return a <= b ? std::make_pair(a, b) : std::make_pair(b, a);
}

}  // namespace

std::string_view set_name(SetId s) {
  switch (s) {
    case SetId::U: return "U";
    case SetId::V: return "V";
    case SetId::W: return "W";
  }
  return "?";
}

QubitIndexMap::QubitIndexMap(std::vector<std::string> labels)
    : labels_(std::move(labels)) {
  for (std::size_t i = 0; i < labels_.size(); ++i) index_[labels_[i]] = i;
}

std::size_t QubitIndexMap::qubit_of(const std::string& label) const {
  auto it = index_.find(label);
  if (it == index_.end())
    throw std::invalid_argument("unknown vertex: " + label);
  return it->second;
}

const std::string& QubitIndexMap::label_of(std::size_t qubit) const {
  if (qubit >= labels_.size())
    throw std::invalid_argument("qubit index out of range");
  return labels_[qubit];
}

GraphSpec::GraphSpec(std::vector<std::string> u, std::vector<std::string> v,
                     std::vector<std::string> w, std::vector<Arc> arcs) {
  sets_[0] = std::move(u);
  sets_[1] = std::move(v);
  sets_[2] = std::move(w);
  arcs_ = std::move(arcs);
  validate_and_index();
}

void GraphSpec::validate_and_index() {
  set_of_.clear();
  couplings_.clear();
  pair_angle_.clear();

  for (int s = 0; s < 3; ++s) {
    for (const auto& label : sets_[s]) {
      if (label.empty()) throw std::invalid_argument("empty vertex label");
      auto [it, inserted] = set_of_.emplace(label, static_cast<SetId>(s));
      if (!inserted)
        throw std::invalid_argument("duplicate label: " + label);
    }
  }

  // Merge parallel same-orientation arcs, keeping first-occurrence order.
  std::vector<Arc> merged;
  std::map<std::pair<std::string, std::string>, std::size_t> arc_index;
  for (const auto& arc : arcs_) {
    auto from_it = set_of_.find(arc.from);
    auto to_it = set_of_.find(arc.to);
    if (from_it == set_of_.end())
      throw std::invalid_argument("unknown endpoint: " + arc.from);
    if (to_it == set_of_.end())
      throw std::invalid_argument("unknown endpoint: " + arc.to);
    if (from_it->second == to_it->second)
      throw std::invalid_argument("intra-set arc: " + arc.from + " -> " +
                                  arc.to);
    if (!std::isfinite(arc.weight))
      throw std::invalid_argument("non-finite weight on arc " + arc.from +
                                  " -> " + arc.to);
    auto key = std::make_pair(arc.from, arc.to);
    auto it = arc_index.find(key);
    if (it == arc_index.end()) {
      arc_index.emplace(key, merged.size());
      merged.push_back(arc);
    } else {
      merged[it->second].weight += arc.weight;
    }
  }
  arcs_ = std::move(merged);

  std::map<std::pair<std::string, std::string>, std::size_t> coupling_index;
  for (const auto& arc : arcs_) {
    SetId sf = set_of_.at(arc.from);
    SetId st = set_of_.at(arc.to);
    // Canonical orientation: the endpoint in the earlier set comes first.
    bool keep = static_cast<int>(sf) < static_cast<int>(st);
    std::string a = keep ? arc.from : arc.to;
    std::string b = keep ? arc.to : arc.from;
    auto key = std::make_pair(a, b);
    auto it = coupling_index.find(key);
    if (it == coupling_index.end()) {
      coupling_index.emplace(key, couplings_.size());
      couplings_.push_back({a, b, arc.weight});
    } else {
      couplings_[it->second].angle += arc.weight;
    }
  }
  for (const auto& c : couplings_)
    pair_angle_[ordered_key(c.a, c.b)] = c.angle;
}

GraphSpec GraphSpec::parse(std::string_view json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("malformed graph document: ") +
                                e.what());
  }
  if (!doc.is_object())
    throw std::invalid_argument("malformed graph document: not an object");

  auto read_set = [&](const char* key) {
    std::vector<std::string> out;
    if (!doc.contains(key)) return out;
    const json& arr = doc.at(key);
    if (!arr.is_array())
      throw std::invalid_argument(std::string("malformed graph document: ") +
                                  key + " must be an array");
    for (const auto& item : arr) {
      if (!item.is_string())
        throw std::invalid_argument(
            std::string("malformed graph document: ") + key +
            " entries must be strings");
      out.push_back(item.get<std::string>());
    }
    return out;
  };

  std::vector<Arc> arcs;
  if (doc.contains("arcs")) {
    const json& arr = doc.at("arcs");
    if (!arr.is_array())
      throw std::invalid_argument(
          "malformed graph document: arcs must be an array");
    for (const auto& item : arr) {
      if (!item.is_object() || !item.contains("from") ||
          !item.contains("to") || !item.contains("weight") ||
          !item.at("from").is_string() || !item.at("to").is_string() ||
          !item.at("weight").is_number())
        throw std::invalid_argument(
            "malformed graph document: arc entries need string from/to and "
            "numeric weight");
      arcs.push_back({item.at("from").get<std::string>(),
                      item.at("to").get<std::string>(),
                      item.at("weight").get<double>()});
    }
  }

  return GraphSpec(read_set("U"), read_set("V"), read_set("W"),
                   std::move(arcs));
}

std::string GraphSpec::serialize() const {
  json doc;
  doc["U"] = sets_[0];
  doc["V"] = sets_[1];
  doc["W"] = sets_[2];
  json arr = json::array();
  for (const auto& arc : arcs_)
    arr.push_back({{"from", arc.from}, {"to", arc.to}, {"weight", arc.weight}});
  doc["arcs"] = std::move(arr);
  return doc.dump(2);
}

const std::vector<std::string>& GraphSpec::vertices(SetId s) const {
  return sets_[static_cast<int>(s)];
}

std::size_t GraphSpec::vertex_count() const {
  return sets_[0].size() + sets_[1].size() + sets_[2].size();
}

bool GraphSpec::has_vertex(const std::string& label) const {
  return set_of_.count(label) != 0;
}

SetId GraphSpec::set_of(const std::string& label) const {
  auto it = set_of_.find(label);
  if (it == set_of_.end())
    throw std::invalid_argument("unknown vertex: " + label);
  return it->second;
}

std::vector<std::string> GraphSpec::neighbors(const std::string& x,
                                              SetId target) const {
  SetId own = set_of(x);
  if (own == target)
    throw std::invalid_argument(
        "same-set neighborhood undefined for tripartite graph");
  std::vector<std::string> out;
  for (const auto& y : sets_[static_cast<int>(target)])
    if (pair_angle_.count(ordered_key(x, y))) out.push_back(y);
  return out;
}

double GraphSpec::coupling_angle(const std::string& a,
                                 const std::string& b) const {
  if (set_of(a) == set_of(b))
    throw std::invalid_argument("intra-set pair has no coupling angle: " + a +
                                ", " + b);
  auto it = pair_angle_.find(ordered_key(a, b));
  return it == pair_angle_.end() ? 0.0 : it->second;
}

QubitIndexMap GraphSpec::index_map() const {
  std::vector<std::string> labels;
  labels.reserve(vertex_count());
  for (int s = 0; s < 3; ++s)
    labels.insert(labels.end(), sets_[s].begin(), sets_[s].end());
  return QubitIndexMap(std::move(labels));
}

NeighborhoodStats pair_stats(const GraphSpec& g, const std::string& x1,
                             const std::string& x2, SetId target) {
  if (x1 == x2)
    throw std::invalid_argument("pair statistics require distinct vertices");
  if (g.set_of(x1) != g.set_of(x2))
    throw std::invalid_argument(
        "pair statistics defined for same-set pairs only");
  auto n1_list = g.neighbors(x1, target);
  auto n2_list = g.neighbors(x2, target);
  std::set<std::string> n1(n1_list.begin(), n1_list.end());
  std::set<std::string> n2(n2_list.begin(), n2_list.end());

  NeighborhoodStats stats;
  for (const auto& y : n1)
    n2.count(y) ? ++stats.common : ++stats.exclusive_first;
  for (const auto& y : n2)
    if (!n1.count(y)) ++stats.exclusive_second;
  stats.symmetric_difference = stats.exclusive_first + stats.exclusive_second;
  stats.four_cycles = stats.common * (stats.common - 1) / 2;
  return stats;
}

}  // namespace graphstate
