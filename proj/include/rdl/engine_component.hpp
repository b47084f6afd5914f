#pragma once

#include "rdl/coloring.hpp"
#include "rdl/common.hpp"

namespace rdl {

struct ComponentResult {
  ColorId color = 0;
  VertexSet members;
};

// Largest monochromatic connected component over all colors (union-find per
// color; directed hosts use the underlying undirected arcs of each color).
// Ties break by color order, then by lowest contained vertex.
ComponentResult largest_mono_component(const PrefixColoring& host);

// Component vertex sets of one color's subgraph, sorted by lowest member.
std::vector<VertexSet> color_components(const PrefixColoring& host, ColorId color);

// Union-find over vertices 1..n.
class DisjointSets {
 public:
  explicit DisjointSets(std::uint32_t n) : parent_(n + 1), rank_(n + 1, 0) {
    for (std::uint32_t i = 0; i <= n; ++i) parent_[i] = i;
  }
  std::uint32_t find(std::uint32_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  void unite(std::uint32_t a, std::uint32_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (rank_[a] < rank_[b]) std::swap(a, b);
    parent_[b] = a;
    if (rank_[a] == rank_[b]) ++rank_[a];
  }

 private:
  std::vector<std::uint32_t> parent_;
  std::vector<std::uint8_t> rank_;
};

}  // namespace rdl
