#pragma once

#include <vector>

#include "rdl/coloring.hpp"
#include "rdl/common.hpp"
#include "rdl/ratio.hpp"
#include "rdl/witness.hpp"

namespace rdl {

// A vertex set X inside a host interval in which sampled (exhaustive when
// |X| <= 10) pairs are joined by monochromatic paths of >= alpha * |interval|
// vertices, built from a long monochromatic cycle plus its two-edge closure.
// Maximality: no vertex outside X has two same-color edges into X (fixpoint
// construction). alpha is never reported higher than certified.
struct ConnectorWitness {
  VertexSet X;
  ColorId color = 0;
  Ratio alpha{0};
  VertexSeq base_cycle;                    // closed order; last->first edge implicit
  std::vector<VertexSet> closure_layers;   // cumulative X_0 ⊆ X_1 ⊆ ...
  bool degraded = false;                   // no cycle of length >= |interval|/3
  VertexSet interval;
};

ConnectorWitness find_alpha_connector(const PrefixColoring& host, const VertexSet& interval,
                                      std::uint64_t seed = 1);

// Monochromatic u,v-path inside X: walk closure chains down to the base
// cycle, route the long way around, then re-absorb skipped vertices. Exact
// endpoint-to-endpoint DP when X is small.
PathWitness connector_path(const PrefixColoring& host, const ConnectorWitness& conn, Vertex u,
                           Vertex v, std::uint64_t seed = 1);

}  // namespace rdl
