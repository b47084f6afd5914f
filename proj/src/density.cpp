#include "rdl/density.hpp"

#include <algorithm>
#include <sstream>

#include <nlohmann/json.hpp>

namespace rdl {

std::string density_kind_name(DensityKind k) {
  switch (k) {
    case DensityKind::Upper: return "upper";
    case DensityKind::Lower: return "lower";
    case DensityKind::StrongUpper: return "strong-upper";
    case DensityKind::StrongLower: return "strong-lower";
  }
  return "?";
}

Ratio density_at(const VertexSet& set, std::uint64_t n) {
  if (n == 0) throw ParamError("density_at: n must be >= 1");
  auto it = std::upper_bound(set.begin(), set.end(), static_cast<Vertex>(std::min<std::uint64_t>(n, UINT32_MAX)));
  return Ratio(static_cast<std::int64_t>(it - set.begin()), static_cast<std::int64_t>(n));
}

Ratio strong_density_at(const VertexSeq& seq, std::uint64_t n) {
  if (n == 0) throw ParamError("strong_density_at: n must be >= 1");
  std::size_t f = 0;
  while (f < seq.size() && seq[f] <= n) ++f;
  return Ratio(static_cast<std::int64_t>(f), static_cast<std::int64_t>(n));
}

Ratio local_density(const VertexSet& F) {
  if (F.empty()) throw ParamError("local_density: empty set");
  return Ratio(static_cast<std::int64_t>(F.size()), static_cast<std::int64_t>(F.back()));
}

std::size_t default_tail_start(std::size_t checkpoint_count) { return checkpoint_count / 2; }

std::optional<Ratio> DensityProfile::suffix_max(std::size_t t) const {
  std::optional<Ratio> best;
  for (std::size_t i = t; i < values.size(); ++i) {
    if (!flagged.empty() && !flagged[i]) continue;
    if (!best || *best < values[i]) best = values[i];
  }
  return best;
}

std::optional<Ratio> DensityProfile::suffix_min(std::size_t t) const {
  std::optional<Ratio> best;
  for (std::size_t i = t; i < values.size(); ++i) {
    if (!flagged.empty() && !flagged[i]) continue;
    if (!best || values[i] < *best) best = values[i];
  }
  return best;
}

Ratio DensityProfile::record_upper() const { return suffix_max(tail_start).value_or(Ratio(0)); }
Ratio DensityProfile::record_lower() const { return suffix_min(tail_start).value_or(Ratio(1)); }

nlohmann::json DensityProfile::to_json() const {
  nlohmann::json rows = nlohmann::json::array();
  for (std::size_t i = 0; i < checkpoints.size(); ++i) {
    rows.push_back({{"checkpoint", checkpoints[i]},
                    {"value_num", values[i].num},
                    {"value_den", values[i].den},
                    {"flagged", flagged.empty() ? true : bool(flagged[i])}});
  }
  return nlohmann::json{{"kind", density_kind_name(kind)},
                        {"tail_start", tail_start},
                        {"record_upper_num", record_upper().num},
                        {"record_upper_den", record_upper().den},
                        {"record_lower_num", record_lower().num},
                        {"record_lower_den", record_lower().den},
                        {"rows", rows}};
}

std::string DensityProfile::to_csv() const {
  std::ostringstream out;
  out << "checkpoint,value_num,value_den,flagged,value_float\n";
  for (std::size_t i = 0; i < checkpoints.size(); ++i) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.9g", values[i].to_double());
    out << checkpoints[i] << ',' << values[i].num << ',' << values[i].den << ','
        << (flagged.empty() ? 1 : int(flagged[i])) << ',' << buf << '\n';
  }
  return out.str();
}

namespace {
void check_checkpoints(const std::vector<std::uint64_t>& cps) {
  if (cps.empty()) throw ParamError("profile: empty checkpoint list");
  for (std::size_t i = 1; i < cps.size(); ++i)
    if (cps[i] <= cps[i - 1]) throw ParamError("profile: checkpoints must increase");
  if (cps.front() == 0) throw ParamError("profile: checkpoints must be >= 1");
}
}  // namespace

DensityProfile profile_set(const VertexSet& set, const std::vector<std::uint64_t>& checkpoints,
                           DensityKind kind) {
  check_checkpoints(checkpoints);
  DensityProfile p;
  p.kind = kind;
  p.checkpoints = checkpoints;
  p.tail_start = default_tail_start(checkpoints.size());
  for (std::uint64_t n : checkpoints) p.values.push_back(density_at(set, n));
  return p;
}

DensityProfile profile_seq(const VertexSeq& seq, const std::vector<std::uint64_t>& checkpoints,
                           DensityKind kind) {
  check_checkpoints(checkpoints);
  DensityProfile p;
  p.kind = kind;
  p.checkpoints = checkpoints;
  p.tail_start = default_tail_start(checkpoints.size());
  for (std::uint64_t n : checkpoints) p.values.push_back(strong_density_at(seq, n));
  return p;
}

namespace {

// connectivity of the induced subgraph on `verts` via BFS over the oracle
bool induced_connected(const std::vector<Vertex>& verts, const AdjacencyFn& adj) {
  if (verts.size() <= 1) return true;
  std::vector<std::uint8_t> seen(verts.size(), 0);
  std::vector<std::size_t> queue{0};
  seen[0] = 1;
  std::size_t reached = 1;
  while (!queue.empty()) {
    std::size_t i = queue.back();
    queue.pop_back();
    for (std::size_t j = 0; j < verts.size(); ++j) {
      if (!seen[j] && adj(verts[i], verts[j])) {
        seen[j] = 1;
        ++reached;
        queue.push_back(j);
      }
    }
  }
  return reached == verts.size();
}

}  // namespace

DensityProfile strong_density_connected(const VertexSet& vertices, const AdjacencyFn& adj,
                                        const std::vector<std::uint64_t>& checkpoints) {
  check_checkpoints(checkpoints);
  if (!is_sorted_distinct(vertices)) throw ParamError("strong_density_connected: vertex set not sorted");
  if (!induced_connected(vertices, adj))
    throw ContractError("strong_density_connected: global graph is disconnected");
  DensityProfile p;
  p.kind = DensityKind::StrongUpper;
  p.checkpoints = checkpoints;
  p.tail_start = default_tail_start(checkpoints.size());
  for (std::uint64_t n : checkpoints) {
    std::vector<Vertex> pref(vertices.begin(),
                             std::upper_bound(vertices.begin(), vertices.end(), n));
    bool conn = induced_connected(pref, adj);
    p.values.push_back(Ratio(static_cast<std::int64_t>(pref.size()), static_cast<std::int64_t>(n)));
    p.flagged.push_back(conn ? 1 : 0);
  }
  return p;
}

VertexSeq prefix_connected_ordering(const VertexSet& vertices, const AdjacencyFn& adj,
                                    std::uint64_t limit) {
  std::vector<Vertex> pref(vertices.begin(), std::upper_bound(vertices.begin(), vertices.end(), limit));
  if (pref.empty()) return {};
  VertexSeq order;
  std::vector<std::uint8_t> used(pref.size(), 0);
  order.push_back(pref[0]);
  used[0] = 1;
  while (order.size() < pref.size()) {
    bool grew = false;
    for (std::size_t j = 0; j < pref.size() && !grew; ++j) {
      if (used[j]) continue;
      for (Vertex w : order) {
        if (adj(pref[j], w)) {
          order.push_back(pref[j]);
          used[j] = 1;
          grew = true;
          break;
        }
      }
    }
    if (!grew) return {};  // disconnected prefix
  }
  return order;
}

Ratio strong_density_exhaustive(const VertexSet& vertices, const AdjacencyFn& adj,
                                const std::vector<std::uint64_t>& checkpoints) {
  check_checkpoints(checkpoints);
  if (vertices.size() > 12) throw BudgetError("strong_density_exhaustive: |V| > 12");
  const std::size_t m = vertices.size();
  Ratio best(0);
  VertexSeq order;
  std::vector<std::uint8_t> used(m, 0);
  // DFS over prefix-connected orderings
  auto eval = [&]() {
    for (std::uint64_t n : checkpoints) {
      Ratio r = strong_density_at(order, n);
      if (best < r) best = r;
    }
  };
  std::function<void()> rec = [&]() {
    eval();
    if (order.size() == m) return;
    for (std::size_t j = 0; j < m; ++j) {
      if (used[j]) continue;
      bool ok = order.empty();
      for (Vertex w : order)
        if (adj(vertices[j], w)) {
          ok = true;
          break;
        }
      if (!ok) continue;
      used[j] = 1;
      order.push_back(vertices[j]);
      rec();
      order.pop_back();
      used[j] = 0;
    }
  };
  rec();
  return best;
}

TransversalResult density1_transversal(const std::vector<std::uint32_t>& cell_of,
                                       const std::vector<Ratio>& eps, std::uint64_t N) {
  if (cell_of.size() != N) throw ParamError("density1_transversal: cell_of must label [N]");
  std::uint32_t m = 0;
  for (std::uint32_t c : cell_of) m = std::max(m, c + 1);
  if (eps.size() < m) throw ParamError("density1_transversal: need eps for every cell");

  for (std::size_t i = 1; i < eps.size(); ++i)
    if (eps[i] > eps[i - 1]) throw ParamError("density1_transversal: eps must be nonincreasing");

  TransversalResult res;
  res.thresholds.resize(m, 0);
  res.per_cell_count.resize(m, 0);
  std::vector<std::uint8_t> in_B(N, 0);

  // in_union[v-1] = 1 when cell_of[v-1] <= i, extended cell by cell
  std::vector<std::uint8_t> in_union(N, 0);
  std::uint32_t certified = 0;  // cells with a threshold inside [N]
  for (std::uint32_t i = 0; i < m; ++i) {
    for (std::uint64_t v = 1; v <= N; ++v)
      if (cell_of[v - 1] == i) in_union[v - 1] = 1;
    // least n with density(union, t) < eps_i for every t in [n, N]: one pass
    // remembering the last violating prefix
    std::uint64_t count = 0, last_violation = 0;
    for (std::uint64_t t = 1; t <= N; ++t) {
      count += in_union[t - 1];
      if (!(Ratio(static_cast<std::int64_t>(count), static_cast<std::int64_t>(t)) < eps[i]))
        last_violation = t;
    }
    if (last_violation == N) {
      // threshold falls beyond the materialized prefix; the first cell must
      // certify or the family violates the precondition outright
      if (i == 0)
        throw ContractError("density1_transversal: first cell never drops below eps");
      break;
    }
    const std::uint64_t n_i = last_violation + 1;
    res.thresholds[i] = n_i;
    certified = i + 1;
    for (std::uint64_t v = 1; v <= n_i; ++v) {
      if (cell_of[v - 1] == i && !in_B[v - 1]) {
        in_B[v - 1] = 1;
        ++res.per_cell_count[i];
      }
    }
  }
  // cells whose threshold lies beyond [N] are kept whole on the prefix
  for (std::uint32_t i = certified; i < m; ++i) {
    res.thresholds[i] = N + 1;
    for (std::uint64_t v = 1; v <= N; ++v) {
      if (cell_of[v - 1] == i && !in_B[v - 1]) {
        in_B[v - 1] = 1;
        ++res.per_cell_count[i];
      }
    }
  }
  for (std::uint64_t v = 1; v <= N; ++v)
    if (in_B[v - 1]) res.B.push_back(static_cast<Vertex>(v));
  res.density_at_N = density_at(res.B, N);
  res.active_index = certified == 0 ? 0 : certified - 1;
  return res;
}

std::vector<std::uint32_t> diagonal_partition(std::uint64_t N) {
  // Cantor-style triangular enumeration: v-1 = t(t+1)/2 + r with 0 <= r <= t;
  // column index = r.
  std::vector<std::uint32_t> cell(N);
  std::uint64_t t = 0, base = 0;
  for (std::uint64_t v = 1; v <= N; ++v) {
    std::uint64_t off = v - 1 - base;
    if (off > t) {
      ++t;
      base = v - 1;
      off = 0;
    }
    cell[v - 1] = static_cast<std::uint32_t>(off);
  }
  return cell;
}

}  // namespace rdl
