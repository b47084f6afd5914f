#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "rdl/common.hpp"
#include "rdl/interval.hpp"

#include <nlohmann/json_fwd.hpp>

namespace rdl {

// Fixed artifact convention: red = 0, blue = 1, green = 2.
inline constexpr ColorId kRed = 0;
inline constexpr ColorId kBlue = 1;
inline constexpr ColorId kGreen = 2;

enum class Scheme {
  DirectedResidue,      // "directed-residue-k"
  DirectedGrowth,       // "directed-growth"
  Affine,               // "affine"
  StrongLower,          // "strong-lower"
  AffineLower3,         // "affine-lower-3"
  EgStrong23,           // "eg-strong-2-3"
  EgUpper89,            // "eg-upper-8-9"
  BoundedIndependence,  // "bounded-independence"
  Explicit,             // "explicit"
  SeededRandom,         // "seeded-random"
};

std::string scheme_name(Scheme s);
Scheme scheme_from_name(const std::string& name);

// Named increasing integer functions used as interval-size descriptors.
struct GrowthFn {
  enum class Kind { Identity, Constant, Linear, Power };
  Kind kind = Kind::Identity;
  std::int64_t a = 1;  // constant value / linear factor / exponent

  std::uint64_t operator()(std::uint64_t n) const;
  bool increasing_unbounded() const { return kind != Kind::Constant; }

  nlohmann::json to_json() const;
  static GrowthFn from_json(const nlohmann::json& j);
};

// Deterministic rule assigning a color to every pair over the positive
// integers; materializable on any prefix. Immutable once built.
struct ColoringSpec {
  Scheme scheme = Scheme::Explicit;
  bool directed = false;
  int num_colors = 2;

  // scheme-specific parameters; only the relevant ones are meaningful
  std::int64_t k = 0;        // directed-residue-k
  std::int64_t q = 0;        // affine (prime)
  GrowthFn h;                // directed-growth, bounded-independence
  PartitionDesc partition;   // strong-lower, affine-lower-3
  std::uint64_t seed = 0;    // seeded-random
  bool total = false;        // seeded-random: also draw vertex colors

  // explicit scheme: row-major lower-triangular (undirected) or full
  // (directed) color matrix on [explicit_n]
  std::uint32_t explicit_n = 0;
  std::vector<std::uint8_t> matrix;
  std::vector<std::uint8_t> vertex_colors;  // optional total coloring

  void validate() const;  // throws ParamError

  nlohmann::json to_json() const;
  static ColoringSpec from_json(const nlohmann::json& j);
};

bool is_prime(std::int64_t q);

// Generators for each construction (parameters validated here).
ColoringSpec gen_directed_residue(std::int64_t k);
ColoringSpec gen_directed_growth(GrowthFn h);
ColoringSpec gen_affine(std::int64_t q);
ColoringSpec gen_strong_lower(PartitionDesc partition);
ColoringSpec gen_affine_lower3(PartitionDesc partition);
ColoringSpec gen_eg_strong_2_3();
ColoringSpec gen_eg_upper_8_9();
ColoringSpec gen_bounded_independence(GrowthFn h);
ColoringSpec gen_explicit(std::uint32_t n, bool directed, int num_colors,
                          std::vector<std::uint8_t> matrix,
                          std::vector<std::uint8_t> vertex_colors = {});
ColoringSpec gen_seeded_random(std::uint64_t seed, int num_colors = 2, bool directed = false,
                               bool total = false);
ColoringSpec gen_all_one_color(std::uint32_t n, ColorId c, int num_colors = 2);

// Color table of a spec restricted to [n]. Lookups are rule-evaluated in
// O(1) (per-vertex class/interval indices are precomputed), so deep prefixes
// never tabulate the n^2 pairs.
class PrefixColoring {
 public:
  std::uint32_t n() const { return n_; }
  bool directed() const { return spec_->directed; }
  int num_colors() const { return spec_->num_colors; }
  const ColoringSpec& spec() const { return *spec_; }

  ColorId color(Vertex u, Vertex v) const;

  bool has_vertex_colors() const { return !vcol_.empty(); }
  ColorId vertex_color(Vertex v) const { return vcol_[v - 1]; }
  const std::vector<std::uint8_t>& vertex_color_table() const { return vcol_; }

  // Same edge rule with a replacement vertex coloring (total colorings).
  PrefixColoring with_vertex_colors(std::vector<std::uint8_t> vcol) const;

  // Interval structure of the scheme, when it has one.
  const IntervalPartition* intervals() const {
    return part_.count() ? &part_ : nullptr;
  }

  friend PrefixColoring materialize(const ColoringSpec& spec, std::uint32_t n);

 private:
  std::shared_ptr<const ColoringSpec> spec_;
  std::uint32_t n_ = 0;
  IntervalPartition part_;           // instantiated when the scheme uses one
  std::vector<std::uint32_t> aux_;   // vertex -> residue class or interval idx
  std::vector<std::uint8_t> vcol_;   // optional vertex colors
  std::vector<std::uint8_t> affine_tab_;  // q^2 x q^2 pairwise class table
};

PrefixColoring materialize(const ColoringSpec& spec, std::uint32_t n);

// Checkpoint schedule for a spec: its interval boundaries clipped to [1, N]
// when the scheme has intervals, else geometric (ratio 2) ending at N.
std::vector<std::uint64_t> default_checkpoints(const PrefixColoring& c);

}  // namespace rdl
