#pragma once

#include <string>
#include <vector>

#include "rdl/coloring.hpp"
#include "rdl/common.hpp"

#include <nlohmann/json_fwd.hpp>

namespace rdl {

// Ordered vertex sequence with a claimed color. On directed hosts `pattern`
// is a word over {F, B}: pattern[i] == 'F' means the arc runs order[i] ->
// order[i+1], 'B' the reverse. Empty pattern on a directed host means all-F.
struct PathWitness {
  VertexSeq order;
  ColorId color = 0;
  std::string pattern;

  std::size_t size() const { return order.size(); }
  VertexSet vertex_set() const;

  nlohmann::json to_json() const;
  static PathWitness from_json(const nlohmann::json& j);
};

// Every witness re-validates against its host coloring; this is the single
// checking routine used by tests and by the CLI recheck command.
bool validate_path(const PrefixColoring& host, const PathWitness& w, std::string* why = nullptr);

// Vertex-disjoint paths of one color. In total colorings every path endpoint
// (including singletons) must also carry the forest color; interior vertices
// may have any vertex color.
struct ForestWitness {
  std::vector<VertexSeq> paths;
  ColorId color = 0;

  std::size_t vertex_count() const;
  VertexSet vertex_set() const;

  nlohmann::json to_json() const;
  static ForestWitness from_json(const nlohmann::json& j);
};

bool validate_forest(const PrefixColoring& host, const ForestWitness& w,
                     bool check_endpoint_vertex_colors, std::string* why = nullptr);

// out-switches and in-switches of a directed path witness (1-based positions)
struct SwitchProfile {
  std::vector<std::size_t> out_switches;
  std::vector<std::size_t> in_switches;
};
SwitchProfile switch_profile(const PrefixColoring& host, const PathWitness& w);

}  // namespace rdl
