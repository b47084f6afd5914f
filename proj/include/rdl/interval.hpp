#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "rdl/common.hpp"
#include "rdl/ratio.hpp"

#include <nlohmann/json_fwd.hpp>

namespace rdl {

// Consecutive intervals A_1, A_2, ... covering a prefix of the positive
// integers. sizes_ is 0-based storage; scheme code maps storage index to
// whatever index origin its rule uses.
class IntervalPartition {
 public:
  IntervalPartition() = default;
  static IntervalPartition from_sizes(std::vector<std::uint64_t> sizes);

  std::size_t count() const { return sizes_.size(); }
  std::uint64_t size(std::size_t i) const { return sizes_[i]; }
  // last vertex of interval i (1-based vertex labels)
  std::uint64_t end(std::size_t i) const { return ends_[i]; }
  std::uint64_t begin(std::size_t i) const { return i == 0 ? 1 : ends_[i - 1] + 1; }
  std::uint64_t total() const { return ends_.empty() ? 0 : ends_.back(); }
  const std::vector<std::uint64_t>& ends() const { return ends_; }

  // 0-based index of the interval containing vertex v; v must be <= total().
  std::size_t index_of(std::uint64_t v) const;

  // Materialized-scale check of the fast-growing property: the ratios
  // |A_i| / (|A_1|+...+|A_i|) must be nondecreasing from the second interval
  // on (the first ratio is always 1 and is ignored).
  bool fast_growing_at_scale() const;

  std::vector<Ratio> ratios() const;

 private:
  std::vector<std::uint64_t> sizes_;
  std::vector<std::uint64_t> ends_;
};

// Declarative recipe for a partition; instantiated at materialize time so a
// single spec can cover any prefix length.
struct PartitionDesc {
  enum class Kind { Sizes, Geometric, Factorial };
  Kind kind = Kind::Geometric;
  std::vector<std::uint64_t> sizes;  // Kind::Sizes
  std::uint64_t first = 1;           // Geometric: |A_1|
  std::uint64_t ratio = 2;           // Geometric: |A_{i+1}| = ratio * |A_i|
  std::uint64_t scale = 1;           // Factorial: |A_i| = scale * i!

  // Produce a partition whose total covers at least `cover` vertices
  // (explicit sizes are taken as-is and must already cover).
  IntervalPartition instantiate(std::uint64_t cover) const;

  nlohmann::json to_json() const;
  static PartitionDesc from_json(const nlohmann::json& j);
};

}  // namespace rdl
