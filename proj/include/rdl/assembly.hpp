#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rdl/coloring.hpp"
#include "rdl/common.hpp"
#include "rdl/connector.hpp"
#include "rdl/density.hpp"
#include "rdl/witness.hpp"

#include <nlohmann/json_fwd.hpp>

namespace rdl {

struct AssemblyOptions {
  std::uint64_t seed = 1;
  int separator_cap = 3;  // case-1 obstruction size bound
  // vertex is colored red when its red degree into the rest of the prefix is
  // at least this fraction of it
  Ratio red_threshold{1, 2};
  unsigned threads = 0;
};

struct JoinRecord {
  Vertex from = 0, to = 0;
  VertexSeq via;  // interior vertices of the connecting path (may be empty)
};

struct IntervalArtifact {
  std::uint64_t lo = 0, hi = 0;  // interval [lo, hi]
  ColorId color = 0;
  std::size_t artifact_size = 0;  // forest / connector-path mass used
  Ratio alpha{0};                 // connectors only
  std::string kind;               // forest | connector | skipped
};

struct AssemblyTrace {
  std::string case_tag;  // "1" | "2" for the upper-density path; "1a" | "1b" | "2" for the strong one
  std::vector<IntervalArtifact> intervals;
  std::vector<JoinRecord> joins;
  std::vector<std::string> notes;  // discarded joins, skipped intervals
  VertexSet separator;             // case 1 only

  nlohmann::json to_json() const;
};

struct AssemblyResult {
  PathWitness path;
  AssemblyTrace trace;
  DensityProfile profile;
};

// Near-spanning one-color path between two prescribed vertices of X_i built
// from the balanced-bipartite machinery when no 2-matching of X2's color
// leaves X1. endpoint_side selects whether both endpoints sit in X1 (1) or in
// X2 (2).
PathWitness bridge_no_matching(const PrefixColoring& host, const VertexSet& V1,
                               const VertexSet& V2, const VertexSet& X1,
                               const ConnectorWitness& X2, int endpoint_side,
                               std::uint64_t seed = 1);

// Same-endpoint pair of paths, one in each connector's color; Case 1 routes
// through a 2-matching, Case 2 falls back to bridge_no_matching. The two
// paths share exactly their endpoints in Case 1; in Case 2 the off-color
// path may additionally reuse interior vertices of X2 (recorded).
struct BridgePair {
  PathWitness red_path;   // color of X1
  PathWitness blue_path;  // color of X2
  Vertex u = 0, v = 0;
  int case_tag = 0;  // 1 = matching route, 2 = no-matching fallback
};
BridgePair bridge_dual(const PrefixColoring& host, const VertexSet& V1, const VertexSet& V2,
                       const ConnectorWitness& X1, const ConnectorWitness& X2,
                       std::uint64_t seed = 1);

// Upper-density path assembly: vertex 2-coloring by majority residual degree,
// small-separator obstruction detection (case 1), else per-interval dense
// forests stitched through later vertices (case 2). Profile reports upper
// density at the schedule's interval boundaries.
AssemblyResult assemble_34_path(const ColoringSpec& spec, std::uint32_t N,
                                AssemblyOptions opt = {});

// Strong-upper-density path assembly: per-interval connectors, then the
// matching-chain / bridge-chain / alternating-pair strategies; the best
// record wins. Profile reports f(n)/n at interval boundaries.
AssemblyResult assemble_23_sud_path(const ColoringSpec& spec, std::uint32_t N,
                                    AssemblyOptions opt = {});

// Interval schedules used by the assemblers (exposed for tests/CLI).
std::vector<std::uint64_t> schedule_34_boundaries(std::uint32_t N);
std::vector<std::uint64_t> schedule_sud_boundaries(std::uint32_t N);

// Vertex 2-coloring by the residual-degree rule.
std::vector<std::uint8_t> residual_vertex_colors(const PrefixColoring& host, Ratio threshold,
                                                 unsigned threads = 0);

// Construction-specific greedy builders used by the ceiling experiments: the
// blue path that weaves odd power intervals with the next even interval on
// the doubling construction, and the blue path covering the non-multiples of
// 3 in order.
PathWitness eg89_blue_greedy_path(const PrefixColoring& host);
PathWitness eg23_blue_cover_path(const PrefixColoring& host);

}  // namespace rdl
