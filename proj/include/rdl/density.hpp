#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "rdl/common.hpp"
#include "rdl/ratio.hpp"

#include <nlohmann/json_fwd.hpp>

namespace rdl {

enum class DensityKind { Upper, Lower, StrongUpper, StrongLower };
std::string density_kind_name(DensityKind k);

// |A ∩ [n]| / n
Ratio density_at(const VertexSet& set, std::uint64_t n);

// f(n)/n where f(n) is the longest initial segment of the sequence contained
// in [n]; computed by scanning until the first entry exceeding n.
Ratio strong_density_at(const VertexSeq& seq, std::uint64_t n);

// |F| / max(F)
Ratio local_density(const VertexSet& F);

// Checkpointed density series with limsup/liminf estimates reported as
// records over a trailing window of checkpoints (no finite prefix determines
// a limsup; the window start is a parameter, default the trailing half).
struct DensityProfile {
  DensityKind kind = DensityKind::Upper;
  std::vector<std::uint64_t> checkpoints;
  std::vector<Ratio> values;
  std::vector<std::uint8_t> flagged;  // per-checkpoint admissibility flag
  std::size_t tail_start = 0;

  // max/min of flagged values with index >= t
  std::optional<Ratio> suffix_max(std::size_t t) const;
  std::optional<Ratio> suffix_min(std::size_t t) const;
  // records over the designated tail; 0 (resp. 1) when no flagged checkpoint
  Ratio record_upper() const;
  Ratio record_lower() const;

  nlohmann::json to_json() const;
  std::string to_csv() const;
};

std::size_t default_tail_start(std::size_t checkpoint_count);

DensityProfile profile_set(const VertexSet& set, const std::vector<std::uint64_t>& checkpoints,
                           DensityKind kind = DensityKind::Upper);
DensityProfile profile_seq(const VertexSeq& seq, const std::vector<std::uint64_t>& checkpoints,
                           DensityKind kind = DensityKind::StrongUpper);

// Sufficient-condition estimator for the strong upper density of a connected
// subgraph: a checkpoint n_k is flagged when the induced subgraph on
// V ∩ [n_k] is connected; the estimate is the record over flagged
// checkpoints. Throws ContractError when the graph on all of `vertices` is
// not connected.
using AdjacencyFn = std::function<bool(Vertex, Vertex)>;
DensityProfile strong_density_connected(const VertexSet& vertices, const AdjacencyFn& adj,
                                        const std::vector<std::uint64_t>& checkpoints);

// An ordering of V ∩ [limit] whose every initial segment induces a connected
// subgraph (BFS order); empty when none exists.
VertexSeq prefix_connected_ordering(const VertexSet& vertices, const AdjacencyFn& adj,
                                    std::uint64_t limit);

// Exhaustive search over all orderings for the best strong density of a
// connected subgraph; exponential, guarded at |V| <= 12.
Ratio strong_density_exhaustive(const VertexSet& vertices, const AdjacencyFn& adj,
                                const std::vector<std::uint64_t>& checkpoints);

struct TransversalResult {
  VertexSet B;
  std::vector<std::uint64_t> thresholds;  // n_i per family index
  std::size_t active_index = 0;           // largest i with n_i <= N
  Ratio density_at_N{0};
  std::vector<std::uint64_t> per_cell_count;  // |B ∩ A_i|
};

// Given a partition of [N] into cells (cell_of[v-1] in [0, m)), pick
// thresholds n_i as the least n from which the union A_1 ∪ ... ∪ A_i has
// density < eps_i on every prefix in [n, N], and return B = ∪ A_i ∩ [n_i].
TransversalResult density1_transversal(const std::vector<std::uint32_t>& cell_of,
                                       const std::vector<Ratio>& eps, std::uint64_t N);

// The diagonal (column-of-triangular-pairing) partition of [N]; cell_of[v-1]
// is the 0-based column index of v.
std::vector<std::uint32_t> diagonal_partition(std::uint64_t N);

}  // namespace rdl
