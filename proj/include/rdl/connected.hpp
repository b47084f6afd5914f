#pragma once

#include <string>
#include <vector>

#include "rdl/coloring.hpp"
#include "rdl/common.hpp"
#include "rdl/density.hpp"

#include <nlohmann/json_fwd.hpp>

namespace rdl {

// Structured partition of a 3-colored complete prefix. Role colors: `blue` is
// the color of the chosen maximal component, `red` the color of the second
// component, `green` the remaining color.
//   case 1: some color's component spans the prefix (stored in W, color blue)
//   case 2: {W,X,Y,Z} all nonempty; [W,X],[Y,Z] blue, [W,Y],[X,Z] red,
//           [W,Z],[X,Y] green, all complete
//   case 3: X,Y,Z nonempty; [X,Y] blue, [X,Z] red, [Y,Z] green complete;
//           no green in [W,X], no red in [W,Y], no blue in [W,Z];
//           W∪X∪Y blue-connected, W∪X∪Z red-connected, W∪Y∪Z green-connected
struct TrichotomyCertificate {
  int case_tag = 0;
  VertexSet W, X, Y, Z;
  ColorId blue = 0, red = 1, green = 2;

  // filled by validate_trichotomy: (block label, edges checked)
  std::vector<std::pair<std::string, std::size_t>> transcript;

  nlohmann::json to_json() const;
};

TrichotomyCertificate trichotomy(const PrefixColoring& host);
bool validate_trichotomy(const PrefixColoring& host, TrichotomyCertificate& cert,
                         std::string* why = nullptr);

// Which of the three cases admit a valid certificate on this host (existence
// probe used by tests; the lemma is existential so several may hold).
std::vector<int> trichotomy_case_probe(const PrefixColoring& host);

struct SudTreeResult {
  ColorId color = 0;
  VertexSet component;
  DensityProfile profile;
  std::string note;  // which regime produced the component
};

// 2 colors: at every checkpoint at least one color connects the prefix;
// pigeonhole the majority color and estimate its strong density over flagged
// checkpoints.
SudTreeResult sud_tree_2col(const ColoringSpec& spec, std::uint32_t N,
                            const std::vector<std::uint64_t>& checkpoints);

// 3 colors: per-checkpoint trichotomy, then the recurring-case bookkeeping
// (spanning color, block-pair extension, or the half-size component ledger).
SudTreeResult sud_tree_3col(const ColoringSpec& spec, std::uint32_t N,
                            const std::vector<std::uint64_t>& checkpoints);

// Classify vertex (n+1) into the case-2 partition of [n]; returns the number
// of parts whose block constraints stay satisfied, or -1 when some color
// spans [n+1] (the proof's escape into case 1).
int case2_extension_fit(const PrefixColoring& host_np1, const TrichotomyCertificate& cert);

}  // namespace rdl
