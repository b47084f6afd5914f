#include "rdl/witness.hpp"

#include <algorithm>
#include <unordered_set>

#include <nlohmann/json.hpp>

namespace rdl {

VertexSet PathWitness::vertex_set() const {
  VertexSet s(order.begin(), order.end());
  std::sort(s.begin(), s.end());
  return s;
}

nlohmann::json PathWitness::to_json() const {
  nlohmann::json j;
  j["vertices"] = order;
  j["color"] = color;
  if (pattern.empty())
    j["pattern"] = nullptr;
  else
    j["pattern"] = pattern;
  return j;
}

PathWitness PathWitness::from_json(const nlohmann::json& j) {
  PathWitness w;
  w.order = j.at("vertices").get<VertexSeq>();
  w.color = j.at("color").get<int>();
  if (j.contains("pattern") && !j.at("pattern").is_null())
    w.pattern = j.at("pattern").get<std::string>();
  return w;
}

namespace {
bool fail(std::string* why, const std::string& msg) {
  if (why) *why = msg;
  return false;
}
}  // namespace

bool validate_path(const PrefixColoring& host, const PathWitness& w, std::string* why) {
  if (w.order.empty()) return fail(why, "empty path");
  std::unordered_set<Vertex> seen;
  for (Vertex v : w.order) {
    if (v < 1 || v > host.n()) return fail(why, "vertex outside prefix");
    if (!seen.insert(v).second) return fail(why, "repeated vertex");
  }
  if (w.color < 0 || w.color >= host.num_colors()) return fail(why, "color out of range");
  if (!host.directed()) {
    if (!w.pattern.empty()) return fail(why, "pattern on undirected host");
    for (std::size_t i = 0; i + 1 < w.order.size(); ++i)
      if (host.color(w.order[i], w.order[i + 1]) != w.color)
        return fail(why, "edge color mismatch at position " + std::to_string(i + 1));
    return true;
  }
  if (!w.pattern.empty() && w.pattern.size() != w.order.size() - 1)
    return fail(why, "pattern length mismatch");
  for (std::size_t i = 0; i + 1 < w.order.size(); ++i) {
    const bool forward = w.pattern.empty() || w.pattern[i] == 'F';
    if (!forward && w.pattern[i] != 'B') return fail(why, "bad pattern letter");
    Vertex from = forward ? w.order[i] : w.order[i + 1];
    Vertex to = forward ? w.order[i + 1] : w.order[i];
    if (host.color(from, to) != w.color)
      return fail(why, "arc color mismatch at position " + std::to_string(i + 1));
  }
  return true;
}

std::size_t ForestWitness::vertex_count() const {
  std::size_t c = 0;
  for (const auto& p : paths) c += p.size();
  return c;
}

VertexSet ForestWitness::vertex_set() const {
  VertexSet s;
  for (const auto& p : paths) s.insert(s.end(), p.begin(), p.end());
  std::sort(s.begin(), s.end());
  return s;
}

nlohmann::json ForestWitness::to_json() const {
  nlohmann::json j;
  j["paths"] = paths;
  j["color"] = color;
  return j;
}

ForestWitness ForestWitness::from_json(const nlohmann::json& j) {
  ForestWitness w;
  w.paths = j.at("paths").get<std::vector<VertexSeq>>();
  w.color = j.at("color").get<int>();
  return w;
}

bool validate_forest(const PrefixColoring& host, const ForestWitness& w,
                     bool check_endpoint_vertex_colors, std::string* why) {
  if (w.color < 0 || w.color >= host.num_colors()) return fail(why, "color out of range");
  std::unordered_set<Vertex> seen;
  for (const auto& p : w.paths) {
    if (p.empty()) return fail(why, "empty path in forest");
    for (Vertex v : p) {
      if (v < 1 || v > host.n()) return fail(why, "vertex outside prefix");
      if (!seen.insert(v).second) return fail(why, "forests paths overlap");
    }
    for (std::size_t i = 0; i + 1 < p.size(); ++i)
      if (host.color(p[i], p[i + 1]) != w.color) return fail(why, "edge color mismatch");
    if (check_endpoint_vertex_colors) {
      if (!host.has_vertex_colors()) return fail(why, "host has no vertex colors");
      if (host.vertex_color(p.front()) != w.color || host.vertex_color(p.back()) != w.color)
        return fail(why, "path endpoint has wrong vertex color");
    }
  }
  return true;
}

SwitchProfile switch_profile(const PrefixColoring& host, const PathWitness& w) {
  if (!host.directed()) throw ParamError("switch_profile: host must be directed");
  std::string why;
  if (!validate_path(host, w, &why)) throw ContractError("switch_profile: invalid witness: " + why);
  SwitchProfile sp;
  const std::size_t m = w.order.size();
  auto arc_forward = [&](std::size_t i) {  // true when arc i runs order[i] -> order[i+1]
    return w.pattern.empty() || w.pattern[i] == 'F';
  };
  for (std::size_t pos = 1; pos <= m; ++pos) {
    // in/out degree of order[pos-1] within the path
    int indeg = 0, outdeg = 0;
    if (pos >= 2) (arc_forward(pos - 2) ? indeg : outdeg)++;
    if (pos <= m - 1) (arc_forward(pos - 1) ? outdeg : indeg)++;
    if (m == 1) {  // degenerate single vertex: both switches
      sp.out_switches.push_back(pos);
      sp.in_switches.push_back(pos);
      continue;
    }
    if (indeg == 0) sp.out_switches.push_back(pos);
    if (outdeg == 0) sp.in_switches.push_back(pos);
  }
  return sp;
}

}  // namespace rdl
