#include "rdl/engine_forest.hpp"

#include <algorithm>

#include "rdl/engine_bipartite.hpp"

namespace rdl {

namespace {

void require_total_2coloring(const PrefixColoring& total) {
  if (total.num_colors() != 2 || total.directed())
    throw ParamError("path forests need an undirected 2-coloring");
  if (!total.has_vertex_colors()) throw ParamError("path forests need vertex colors");
}

}  // namespace

VertexSet default_bprime(const PrefixColoring& total, const VertexSet& host_verts,
                         ColorId minority_color) {
  std::size_t r = 0;
  for (Vertex v : host_verts)
    if (total.vertex_color(v) == minority_color) ++r;
  VertexSet bp;
  for (Vertex v : host_verts) {
    if (bp.size() == r) break;
    if (total.vertex_color(v) != minority_color) bp.push_back(v);
  }
  return bp;
}

GlpResult glp_path_forests(const PrefixColoring& total, const VertexSet& bprime,
                           std::uint64_t seed) {
  VertexSet host(total.n());
  for (std::uint32_t i = 0; i < total.n(); ++i) host[i] = i + 1;
  return glp_path_forests_in(total, host, bprime, 0, seed);
}

GlpResult glp_path_forests_in(const PrefixColoring& total, const VertexSet& host_verts,
                              const VertexSet& bprime, ColorId minority_color,
                              std::uint64_t seed) {
  require_total_2coloring(total);
  const ColorId c_min = minority_color;
  const ColorId c_maj = 1 - minority_color;

  VertexSet R, B;
  for (Vertex v : host_verts)
    (total.vertex_color(v) == c_min ? R : B).push_back(v);
  if (R.size() > B.size()) throw ContractError("glp_path_forests: |R| > |B|");
  if (bprime.size() != R.size()) throw ContractError("glp_path_forests: |B'| must equal |R|");
  for (Vertex v : bprime)
    if (total.vertex_color(v) != c_maj || !std::binary_search(host_verts.begin(), host_verts.end(), v))
      throw ContractError("glp_path_forests: B' must be majority vertices of the host");

  GlpResult res;
  res.forest_minority.color = c_min;
  res.forest_majority.color = c_maj;

  std::vector<std::uint8_t> on_min_path(total.n() + 1, 0), on_maj_path(total.n() + 1, 0);

  if (!R.empty()) {
    // bipartite host [B', R]; encoded left = B', right = R
    const std::uint32_t m = static_cast<std::uint32_t>(R.size());
    Bip2Col bip;
    bip.mL = bip.mR = m;
    bip.col.resize(std::size_t(m) * m);
    for (std::uint32_t l = 0; l < m; ++l)
      for (std::uint32_t r = 0; r < m; ++r)
        bip.col[std::size_t(l) * m + r] = static_cast<std::uint8_t>(total.color(bprime[l], R[r]));

    BipPartition part = bipartite_3path_partition(bip, seed);

    auto global_of = [&](std::uint32_t enc) { return enc < m ? bprime[enc] : R[enc - m]; };
    auto right_side = [&](std::uint32_t enc) { return enc >= m; };

    // color singletons so they carry zero defect: R-side -> minority,
    // B'-side -> majority
    for (BipPath& p : part.paths)
      if (p.verts.size() == 1) p.color = right_side(p.verts[0]) ? c_min : c_maj;

    // a minority path's bad endpoints sit on the B' side, a majority path's on
    // the R side
    auto bad_end = [&](const BipPath& p, bool front) -> bool {
      std::uint32_t e = front ? p.verts.front() : p.verts.back();
      return p.color == c_min ? !right_side(e) : right_side(e);
    };

    // exchange descent: while a minority path and a majority path both carry a
    // bad endpoint, the edge between those endpoints lets one absorb the other
    for (;;) {
      int pi = -1, pf = 0, qi = -1, qf = 0;
      Vertex best_p = 0, best_q = 0;
      for (std::size_t i = 0; i < part.paths.size(); ++i) {
        const BipPath& p = part.paths[i];
        for (int f = 0; f < 2; ++f) {
          if (p.verts.size() == 1 && f == 1) continue;
          if (!bad_end(p, f == 0)) continue;
          Vertex g = global_of(f == 0 ? p.verts.front() : p.verts.back());
          if (p.color == c_min) {
            if (pi < 0 || g < best_p) {
              pi = static_cast<int>(i);
              pf = f;
              best_p = g;
            }
          } else {
            if (qi < 0 || g < best_q) {
              qi = static_cast<int>(i);
              qf = f;
              best_q = g;
            }
          }
        }
      }
      if (pi < 0 || qi < 0 || pi == qi) break;
      BipPath& p = part.paths[static_cast<std::size_t>(pi)];
      BipPath& q = part.paths[static_cast<std::size_t>(qi)];
      if (pf == 0) std::reverse(p.verts.begin(), p.verts.end());  // bad end to the back
      if (qf == 0) std::reverse(q.verts.begin(), q.verts.end());
      std::uint32_t x = p.verts.back();  // B'-side (minority path's offender)
      std::uint32_t y = q.verts.back();  // R-side (majority path's offender)
      int ec = bip.color_of(x, y);
      if (ec == c_min) {
        p.verts.push_back(y);
        q.verts.pop_back();
      } else {
        q.verts.push_back(x);
        p.verts.pop_back();
      }
      auto retire = [&](std::size_t idx) {
        BipPath& t = part.paths[idx];
        if (t.verts.empty()) {
          part.paths.erase(part.paths.begin() + static_cast<std::ptrdiff_t>(idx));
        } else if (t.verts.size() == 1) {
          t.color = right_side(t.verts[0]) ? c_min : c_maj;
        }
      };
      retire(static_cast<std::size_t>(std::max(pi, qi)));
      if (!part.paths.empty() && static_cast<std::size_t>(std::min(pi, qi)) < part.paths.size())
        retire(static_cast<std::size_t>(std::min(pi, qi)));
    }

    // count and delete the remaining wrong-side endpoints
    for (BipPath& p : part.paths) {
      while (!p.verts.empty() && bad_end(p, true)) {
        res.deleted.push_back(global_of(p.verts.front()));
        p.verts.erase(p.verts.begin());
        ++res.defect;
      }
      while (!p.verts.empty() && bad_end(p, false)) {
        res.deleted.push_back(global_of(p.verts.back()));
        p.verts.pop_back();
        ++res.defect;
      }
    }
    if (res.defect > 3)
      throw InternalError("glp_path_forests: defect exceeds 3 after the exchange descent");
    std::sort(res.deleted.begin(), res.deleted.end());

    for (const BipPath& p : part.paths) {
      if (p.verts.empty()) continue;
      VertexSeq path;
      for (std::uint32_t enc : p.verts) path.push_back(global_of(enc));
      if (p.color == c_min) {
        for (Vertex v : path) on_min_path[v] = 1;
        res.forest_minority.paths.push_back(std::move(path));
      } else {
        for (Vertex v : path) on_maj_path[v] = 1;
        res.forest_majority.paths.push_back(std::move(path));
      }
    }
  }

  for (Vertex v : R)
    if (!on_min_path[v]) res.forest_minority.paths.push_back({v});
  for (Vertex v : B)
    if (!on_maj_path[v]) res.forest_majority.paths.push_back({v});

  std::string why;
  if (!validate_forest(total, res.forest_minority, true, &why))
    throw InternalError("glp minority forest invalid: " + why);
  if (!validate_forest(total, res.forest_majority, true, &why))
    throw InternalError("glp majority forest invalid: " + why);
  const std::size_t size_sum =
      res.forest_minority.vertex_count() + res.forest_majority.vertex_count();
  if (size_sum + 3 < host_verts.size() + R.size())
    throw InternalError("glp_path_forests: |F_R| + |F_B| bound violated");
  return res;
}

MpfResult mpf_dense_forest(const PrefixColoring& total, Ratio eps, std::uint64_t k,
                           std::uint64_t seed) {
  VertexSet host(total.n());
  for (std::uint32_t i = 0; i < total.n(); ++i) host[i] = i + 1;
  return mpf_dense_forest_in(total, host, eps, k, seed);
}

MpfResult mpf_dense_forest_in(const PrefixColoring& total, const VertexSet& host_verts, Ratio eps,
                              std::uint64_t k, std::uint64_t seed) {
  require_total_2coloring(total);
  const std::uint64_t h = host_verts.size();
  if (!(Ratio(0) < eps && eps <= Ratio(3, 4))) throw ParamError("mpf: need 0 < eps <= 3/4");
  if (Ratio(static_cast<std::int64_t>(k)) < Ratio(3) / eps) throw ParamError("mpf: need k >= 3/eps");
  // sufficient size for the final whole-host bound: 2*eps*n >= k + 3
  if (Ratio(2) * eps * Ratio(static_cast<std::int64_t>(h)) <
      Ratio(static_cast<std::int64_t>(k + 3)))
    throw ParamError("mpf: host too short for the target density (need 2*eps*n >= k+3)");

  MpfResult res;
  std::uint64_t count0 = 0;
  for (Vertex v : host_verts)
    if (total.vertex_color(v) == 0) ++count0;
  const ColorId c_min = (count0 * 2 <= h) ? 0 : 1;
  res.swapped = (c_min == 1);

  auto is_min = [&](Vertex v) { return total.vertex_color(v) == c_min; };
  const Ratio target = Ratio(3, 4) - eps;

  auto host_prefix = [&](std::uint64_t len) {
    return VertexSet(host_verts.begin(), host_verts.begin() + static_cast<std::ptrdiff_t>(len));
  };
  auto count_in_prefix = [&](const ForestWitness& f, std::uint64_t len) {
    const Vertex cutoff = host_verts[len - 1];
    std::size_t c = 0;
    for (const auto& p : f.paths)
      for (Vertex v : p)
        if (v <= cutoff) ++c;
    return static_cast<std::uint64_t>(c);
  };
  auto finish = [&](ForestWitness f, std::uint64_t ell, std::string kind) {
    res.forest = std::move(f);
    res.ell = ell;
    res.exit_kind = std::move(kind);
    res.achieved = Ratio(static_cast<std::int64_t>(count_in_prefix(res.forest, ell)),
                         static_cast<std::int64_t>(ell));
    if (res.achieved < target)
      throw InternalError("mpf_dense_forest: achieved density misses the proof bound (" +
                          res.achieved.str() + " at ell " + std::to_string(ell) + " via " +
                          res.exit_kind + ")");
    return res;
  };
  auto glp_max_forest = [&](std::uint64_t len, std::uint64_t bprime_len) -> GlpResult {
    VertexSet pref = host_prefix(len);
    VertexSet bp;
    for (Vertex v : pref) {
      if (bp.size() == bprime_len) break;
      if (!is_min(v)) bp.push_back(v);
    }
    return glp_path_forests_in(total, pref, bp, c_min, seed);
  };

  // equal-count checkpoint: first ell >= k with as many minority as majority
  {
    std::uint64_t mins = 0;
    for (std::uint64_t pos = 1; pos <= h; ++pos) {
      if (is_min(host_verts[pos - 1])) ++mins;
      if (pos >= k && mins * 2 == pos) {
        GlpResult g = glp_max_forest(pos, mins);
        const ForestWitness& f =
            g.forest_minority.vertex_count() >= g.forest_majority.vertex_count()
                ? g.forest_minority
                : g.forest_majority;
        return finish(f, pos, "equal-count");
      }
    }
  }

  // interval descent J_0 ⊃ J_1 ⊃ ...; J_{i+1} ends at the b_{i+1}-th majority
  // vertex, where b_{i+1} = r_i
  std::vector<Vertex> maj_positions;  // host-relative positions (1-based) of majority vertices
  std::vector<std::uint64_t> min_prefix(h + 1, 0);
  for (std::uint64_t pos = 1; pos <= h; ++pos) {
    min_prefix[pos] = min_prefix[pos - 1] + (is_min(host_verts[pos - 1]) ? 1 : 0);
    if (!is_min(host_verts[pos - 1])) maj_positions.push_back(static_cast<Vertex>(pos));
  }
  const std::uint64_t r0 = min_prefix[h], b0 = h - r0;

  std::vector<MpfTraceStep> steps;
  steps.push_back({r0, b0, h, -1, static_cast<std::int64_t>(b0) - static_cast<std::int64_t>(r0)});
  std::uint64_t r = r0;
  for (;;) {
    std::uint64_t b_next = r;
    if (b_next == 0) break;
    std::uint64_t pos = maj_positions[b_next - 1];  // end of J_{i+1}
    std::uint64_t r_next = min_prefix[pos];
    if (pos >= steps.back().J)
      throw InternalError("mpf_dense_forest: interval sizes failed to decrease");
    steps.push_back({r_next, b_next, pos, -1,
                     static_cast<std::int64_t>(b_next) - static_cast<std::int64_t>(r_next)});
    if (pos < k) break;
    r = r_next;
  }
  // t: last index with |J_t| >= k
  std::size_t t = 0;
  for (std::size_t i = 0; i < steps.size(); ++i)
    if (steps[i].J >= k) t = i;
  res.descent = steps;

  // 3:1 shortcut: the majority vertices of J_t alone are dense enough
  if (steps[t].b >= 3 * steps[t].r) {
    ForestWitness f;
    f.color = 1 - c_min;
    const std::uint64_t len = steps[t].J;
    for (std::uint64_t pos = 1; pos <= len; ++pos)
      if (!is_min(host_verts[pos - 1])) f.paths.push_back({host_verts[pos - 1]});
    res.descent = steps;
    return finish(std::move(f), len, "blue-shortcut");
  }

  // claim analysis on J_0 ⊃ ... ⊃ J_t
  for (std::size_t i = 1; i <= t; ++i) {
    const std::uint64_t lenPrev = steps[i - 1].J, lenCur = steps[i].J;
    GlpResult g = glp_max_forest(lenPrev, steps[i].b);  // B' = first b_i majority vertices
    const std::uint64_t majC = count_in_prefix(g.forest_majority, lenPrev);
    if (Ratio(static_cast<std::int64_t>(majC)) >=
        target * Ratio(static_cast<std::int64_t>(lenPrev))) {
      res.descent[i].branch = 0;
      return finish(g.forest_majority, lenPrev, "claim-majority");
    }
    const std::uint64_t minC = count_in_prefix(g.forest_minority, lenCur);
    if (Ratio(static_cast<std::int64_t>(minC)) >=
        target * Ratio(static_cast<std::int64_t>(lenCur))) {
      res.descent[i].branch = 1;
      return finish(g.forest_minority, lenCur, "claim-minority");
    }
    res.descent[i].branch = 2;
    if (!(steps[i - 1].diff < steps[i].diff))
      throw InternalError("mpf_dense_forest: difference failed to increase on branch (iii)");
  }

  // final whole-host application
  GlpResult g = glp_max_forest(h, r0);
  const ForestWitness& f = g.forest_minority.vertex_count() >= g.forest_majority.vertex_count()
                               ? g.forest_minority
                               : g.forest_majority;
  return finish(f, h, "final");
}

}  // namespace rdl
