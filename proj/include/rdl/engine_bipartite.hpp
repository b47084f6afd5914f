#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rdl/coloring.hpp"
#include "rdl/common.hpp"
#include "rdl/witness.hpp"

namespace rdl {

// Complete 2-colored bipartite host on parts L, R. Vertices are encoded as
// 0..mL-1 (left) and mL..mL+mR-1 (right).
struct Bip2Col {
  std::uint32_t mL = 0, mR = 0;
  std::vector<std::uint8_t> col;  // mL x mR

  int at(std::uint32_t l, std::uint32_t r) const { return col[std::size_t(l) * mR + r]; }
  bool left(std::uint32_t v) const { return v < mL; }
  std::uint32_t total() const { return mL + mR; }
  // edge color between encoded vertices on opposite sides
  int color_of(std::uint32_t a, std::uint32_t b) const {
    return left(a) ? at(a, b - mL) : at(b, a - mL);
  }
};

struct BipPath {
  std::vector<std::uint32_t> verts;  // encoded, alternating sides
  int color = -1;                    // -1 while a singleton (flexible)
};

struct BipPartition {
  std::vector<BipPath> paths;
};

bool validate_bip_partition(const Bip2Col& host, const BipPartition& p, std::string* why = nullptr);

// Partition of the host into at most three monochromatic paths: exhaustive
// subset DP for small hosts, insertion + merge + rotation local search with
// seeded restarts above that. Output is always validity-checked; throws
// SearchError when the heuristic gives up (never returns an invalid
// partition).
BipPartition bipartite_3path_partition(const Bip2Col& host, std::uint64_t seed = 1);

// Bipartite graph (not necessarily complete), encoded like Bip2Col.
struct BipGraph {
  std::uint32_t mL = 0, mR = 0;
  std::vector<std::uint8_t> adj;  // mL x mR incidence

  bool at(std::uint32_t l, std::uint32_t r) const { return adj[std::size_t(l) * mR + r] != 0; }
  bool left(std::uint32_t v) const { return v < mL; }
  std::uint32_t total() const { return mL + mR; }
  bool adjacent(std::uint32_t a, std::uint32_t b) const {
    if (left(a) == left(b)) return false;
    return left(a) ? at(a, b - mL) : at(b, a - mL);
  }
  std::uint32_t degree(std::uint32_t v) const;
};

// Degree condition of the bipartite Hamiltonian-path theorem, on balanced
// graphs: sort both sides by degree; with j (resp. k) the smallest 1-based
// index where d(u_j) <= j+1 (resp. d(v_k) <= k+1), the condition is
// d(u_j) + d(v_k) >= m+2 and holds vacuously when either index is undefined.
struct LvCondition {
  bool holds = false;
  bool j_defined = false, k_defined = false;
  std::uint32_t j = 0, k = 0;      // 1-based indices into the sorted orders
  std::uint32_t duj = 0, dvk = 0;  // the corresponding degrees
};
LvCondition las_vergnas_condition(const BipGraph& g);

struct LvResult {
  LvCondition cond;
  std::optional<std::vector<std::uint32_t>> path;  // encoded vertices, u ... v
};

// Hamiltonian u,v-path across the bipartition: checks the degree condition;
// when it holds, searches exhaustively (<= 20 vertices) or by fixed-endpoint
// rotation-extension (verified). Exhaustive exhaustion without a path while
// the condition holds contradicts the theorem -> InternalError.
LvResult las_vergnas_path(const BipGraph& g, std::uint32_t u_left, std::uint32_t v_right,
                          std::uint64_t seed = 1);

// Hamiltonian path with both prescribed endpoints (any sides; sides must be
// compatible with alternation). Exact for <= 20 vertices, rotation heuristic
// beyond; nullopt when none found.
std::optional<std::vector<std::uint32_t>> bip_ham_path_fixed_ends(const BipGraph& g,
                                                                  std::uint32_t a, std::uint32_t b,
                                                                  std::uint64_t seed = 1);

}  // namespace rdl
