#pragma once

#include <string>
#include <vector>

#include "rdl/coloring.hpp"
#include "rdl/common.hpp"
#include "rdl/witness.hpp"

namespace rdl {

// Exact-search budgets (chosen for seconds-scale runs; overridable).
struct SearchBudgets {
  std::uint32_t undirected_dp = 24;
  std::uint32_t directed_dp = 16;
};

// Maximum-vertex-count path in the single-color subgraph, by subset DP over
// (visited set, endpoint) states. Throws BudgetError past the DP budget.
PathWitness longest_mono_path(const PrefixColoring& host, ColorId color,
                              SearchBudgets budgets = {});
PathWitness longest_mono_path_in(const PrefixColoring& host, ColorId color,
                                 const VertexSet& verts, SearchBudgets budgets = {});

// Longest monochromatic cycle in the single-color subgraph (>= 3 vertices;
// returns the cycle as a closed order without repeating the start). Empty
// witness when the subgraph has no cycle.
PathWitness longest_mono_cycle_in(const PrefixColoring& host, ColorId color,
                                  const VertexSet& verts, SearchBudgets budgets = {});

enum class OrientPattern { Consistent, AntiDirected, Word, Unconstrained };

// Maximum monochromatic path whose arc directions match the pattern; the
// witness carries the realized F/B word.
PathWitness longest_oriented_path(const PrefixColoring& host, ColorId color, OrientPattern pat,
                                  const std::string& word = "", SearchBudgets budgets = {});
PathWitness longest_oriented_path_in(const PrefixColoring& host, ColorId color, OrientPattern pat,
                                     const VertexSet& verts, const std::string& word = "",
                                     SearchBudgets budgets = {});

struct HeuristicOptions {
  std::uint64_t seed = 1;
  std::uint32_t restarts = 6;
  std::uint32_t scan_cap = 4096;      // candidate scans per extension attempt
  std::uint32_t rotation_cap = 2000;  // rotations per restart
  bool absorb = true;                 // insertion pass after extension stalls
};

// Rotation-extension longest-path heuristic for prefixes beyond the DP
// budget. The witness is always validity-checked before return; results feed
// density experiments only, never oracle claims.
PathWitness heuristic_long_path(const PrefixColoring& host, ColorId color,
                                HeuristicOptions opt = {});
PathWitness heuristic_long_path_in(const PrefixColoring& host, ColorId color,
                                   const VertexSet& verts, HeuristicOptions opt = {});

// Greedy + restarts searcher for consistently oriented monochromatic paths on
// directed hosts.
PathWitness heuristic_consistent_path(const PrefixColoring& host, ColorId color,
                                      HeuristicOptions opt = {});

// Exact search when the host fits the DP budget, heuristic otherwise.
PathWitness best_long_path_in(const PrefixColoring& host, ColorId color, const VertexSet& verts,
                              SearchBudgets budgets = {}, HeuristicOptions opt = {});

// Insert unused pool vertices between consecutive path vertices while both
// bracketing edges have the path color; mutates order in place.
void absorb_pass(const PrefixColoring& host, ColorId color, VertexSeq& order,
                 std::vector<Vertex> pool, std::uint32_t scan_cap = 4096);

}  // namespace rdl
