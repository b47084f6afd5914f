#pragma once

#include <string>
#include <vector>

#include "rdl/coloring.hpp"
#include "rdl/common.hpp"
#include "rdl/ratio.hpp"
#include "rdl/witness.hpp"

namespace rdl {

struct GlpResult {
  ForestWitness forest_minority;  // lives inside R ∪ B'
  ForestWitness forest_majority;
  int defect = 0;       // wrong-side endpoints after the exchange descent
  VertexSet deleted;    // the <= 3 deleted endpoints
};

// Lemma machinery: partition [B', R] into <= 3 monochromatic paths, drive the
// wrong-endpoint defect down by endpoint exchanges (ties by lowest vertex),
// delete the <= 3 offenders, and pad both sides with singletons. Requires a
// total 2-coloring with |R| <= |B| on the host, R being the vertices of
// `minority_color`.
GlpResult glp_path_forests_in(const PrefixColoring& total, const VertexSet& host_verts,
                              const VertexSet& bprime, ColorId minority_color,
                              std::uint64_t seed = 1);

// Whole-prefix convenience with R = color 0.
GlpResult glp_path_forests(const PrefixColoring& total, const VertexSet& bprime,
                           std::uint64_t seed = 1);

// First |R| majority-colored vertices, the artifact's default B' choice.
VertexSet default_bprime(const PrefixColoring& total, const VertexSet& host_verts,
                         ColorId minority_color);

struct MpfTraceStep {
  std::uint64_t r = 0, b = 0, J = 0;  // counts and interval length
  // claim outcome at this interval: -1 not examined, 0 majority-forest branch,
  // 1 minority-forest branch, 2 difference-increase branch
  int branch = -1;
  std::int64_t diff = 0;  // b - r
};

struct MpfResult {
  ForestWitness forest;
  std::uint64_t ell = 0;  // host-relative prefix length
  std::vector<MpfTraceStep> descent;
  std::string exit_kind;  // equal-count | blue-shortcut | claim-majority | claim-minority | final
  bool swapped = false;   // color roles swapped to enforce |R| <= |B|
  Ratio achieved{0};      // |F ∩ [ell]| / ell
};

// Density-increment search for a monochromatic path forest F and ell >= k
// with |F ∩ [ell]| >= (3/4 - eps) ell, on the host's natural order:
// equal-count checkpoint, interval descent via b_{i+1} = r_i, the 3:1
// majority shortcut, the three-branch claim analysis, and a final whole-host
// application.
MpfResult mpf_dense_forest(const PrefixColoring& total, Ratio eps, std::uint64_t k,
                           std::uint64_t seed = 1);
MpfResult mpf_dense_forest_in(const PrefixColoring& total, const VertexSet& host_verts, Ratio eps,
                              std::uint64_t k, std::uint64_t seed = 1);

}  // namespace rdl
