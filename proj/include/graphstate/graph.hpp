#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace graphstate {

// Vertex partition. Arcs may connect U-V, V-W, or U-W; never two vertices of
// the same set.
enum class SetId { U, V, W };

std::string_view set_name(SetId s);

struct Arc {
  std::string from;
  std::string to;
  double weight = 0.0;
};

// Unordered coupled pair with the effective angle (both orientations summed).
// `a` always belongs to the earlier set in (U, V, W) order.
struct Coupling {
  std::string a;
  std::string b;
  double angle = 0.0;
};

// Stable vertex -> qubit assignment: U vertices first, then V, then W, each in
// document order, starting at 0.
class QubitIndexMap {
 public:
  QubitIndexMap() = default;
  explicit QubitIndexMap(std::vector<std::string> labels);

  std::size_t size() const { return labels_.size(); }
  std::size_t qubit_of(const std::string& label) const;
  const std::string& label_of(std::size_t qubit) const;

 private:
  std::vector<std::string> labels_;
  std::map<std::string, std::size_t> index_;
};

// Weighted directed tripartite graph. Parallel same-orientation arcs are
// merged (weights summed) on construction; arc order is first occurrence.
class GraphSpec {
 public:
  GraphSpec() = default;
  GraphSpec(std::vector<std::string> u, std::vector<std::string> v,
            std::vector<std::string> w, std::vector<Arc> arcs);

  // Accepts the JSON document form: {"U": [...], "V": [...], "W": [...],
  // "arcs": [{"from", "to", "weight"}, ...]}. Unknown keys are ignored so a
  // combined document (e.g. with "init") parses as its graph part.
  static GraphSpec parse(std::string_view json_text);
  std::string serialize() const;

  const std::vector<std::string>& vertices(SetId s) const;
  std::size_t vertex_count() const;
  bool has_vertex(const std::string& label) const;
  SetId set_of(const std::string& label) const;

  const std::vector<Arc>& arcs() const { return arcs_; }

  // Coupled unordered pairs in first-occurrence order, zero angles included.
  const std::vector<Coupling>& couplings() const { return couplings_; }

  // Vertices of `target` adjacent to `x` through either orientation, in the
  // target set's document order. `target` must differ from x's own set.
  std::vector<std::string> neighbors(const std::string& x, SetId target) const;

  double coupling_angle(const std::string& a, const std::string& b) const;

  QubitIndexMap index_map() const;

 private:
  void validate_and_index();

  std::vector<std::string> sets_[3];
  std::vector<Arc> arcs_;
  std::vector<Coupling> couplings_;
  std::map<std::string, SetId> set_of_;
  std::map<std::pair<std::string, std::string>, double> pair_angle_;
};

// Neighborhood overlap counts for a same-set vertex pair toward one target
// set. symmetric_difference = exclusive_first + exclusive_second, and
// four_cycles = common choose 2.
struct NeighborhoodStats {
  std::size_t exclusive_first = 0;
  std::size_t exclusive_second = 0;
  std::size_t symmetric_difference = 0;
  std::size_t common = 0;
  std::size_t four_cycles = 0;
};

NeighborhoodStats pair_stats(const GraphSpec& g, const std::string& x1,
                             const std::string& x2, SetId target);

}  // namespace graphstate
