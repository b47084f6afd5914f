#include "rdl/engine_component.hpp"

#include <algorithm>
#include <map>

namespace rdl {

std::vector<VertexSet> color_components(const PrefixColoring& host, ColorId color) {
  const std::uint32_t n = host.n();
  DisjointSets ds(n);
  for (Vertex u = 1; u <= n; ++u)
    for (Vertex v = u + 1; v <= n; ++v) {
      bool edge = host.color(u, v) == color || (host.directed() && host.color(v, u) == color);
      if (edge) ds.unite(u, v);
    }
  std::map<std::uint32_t, VertexSet> groups;
  for (Vertex v = 1; v <= n; ++v) groups[ds.find(v)].push_back(v);
  std::vector<VertexSet> out;
  out.reserve(groups.size());
  for (auto& [root, members] : groups) out.push_back(std::move(members));
  std::sort(out.begin(), out.end(),
            [](const VertexSet& a, const VertexSet& b) { return a.front() < b.front(); });
  return out;
}

ComponentResult largest_mono_component(const PrefixColoring& host) {
  ComponentResult best;
  bool have = false;
  for (ColorId c = 0; c < host.num_colors(); ++c) {
    auto comps = color_components(host, c);
    for (auto& comp : comps) {
      if (!have || comp.size() > best.members.size()) {
        best.color = c;
        best.members = comp;
        have = true;
      }
    }
  }
  return best;
}

}  // namespace rdl
