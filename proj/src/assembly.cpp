#include "rdl/assembly.hpp"

#include <algorithm>
#include <bit>
#include <unordered_set>

#include <nlohmann/json.hpp>

#include "rdl/engine_bipartite.hpp"
#include "rdl/engine_paths.hpp"
#include "rdl/parallel.hpp"
#include "rdl/rng.hpp"

namespace rdl {

nlohmann::json AssemblyTrace::to_json() const {
  nlohmann::json iv = nlohmann::json::array();
  for (const auto& a : intervals)
    iv.push_back({{"lo", a.lo},
                  {"hi", a.hi},
                  {"color", a.color},
                  {"size", a.artifact_size},
                  {"alpha_num", a.alpha.num},
                  {"alpha_den", a.alpha.den},
                  {"kind", a.kind}});
  nlohmann::json js = nlohmann::json::array();
  for (const auto& j : joins) js.push_back({{"from", j.from}, {"to", j.to}, {"via", j.via}});
  return nlohmann::json{{"case", case_tag},
                        {"intervals", iv},
                        {"joins", js},
                        {"notes", notes},
                        {"separator", separator}};
}

std::vector<std::uint8_t> residual_vertex_colors(const PrefixColoring& host, Ratio threshold,
                                                 unsigned threads) {
  const std::uint32_t N = host.n();
  std::vector<std::uint8_t> vcol(N, 0);
  parallel_for(
      1, static_cast<std::uint64_t>(N) + 1,
      [&](std::uint64_t v) {
        std::uint64_t reds = 0, total = 0;
        if (v < N) {
          for (Vertex w = static_cast<Vertex>(v) + 1; w <= N; ++w) {
            ++total;
            if (host.color(static_cast<Vertex>(v), w) == kRed) ++reds;
          }
        } else {
          for (Vertex w = 1; w < static_cast<Vertex>(v); ++w) {
            ++total;
            if (host.color(static_cast<Vertex>(v), w) == kRed) ++reds;
          }
        }
        bool red = Ratio(static_cast<std::int64_t>(reds)) >=
                   threshold * Ratio(static_cast<std::int64_t>(total));
        vcol[v - 1] = red ? kRed : kBlue;
      },
      threads);
  return vcol;
}

std::vector<std::uint64_t> schedule_34_boundaries(std::uint32_t N) {
  // eps_n = 1/(n+3), k_n = 3(n+3), a_n = 4 k_n / eps_n = 12 (n+3)^2
  std::vector<std::uint64_t> bounds;
  std::uint64_t acc = 0, n = 1;
  while (acc < N) {
    std::uint64_t a = 12 * (n + 3) * (n + 3);
    std::uint64_t k = 3 * (n + 3);
    acc += a;
    if (acc >= N) {
      // truncate; merge a too-short remainder into the previous interval
      if (!bounds.empty() && N - bounds.back() < k)
        bounds.back() = N;
      else
        bounds.push_back(N);
      break;
    }
    bounds.push_back(acc);
    ++n;
  }
  if (bounds.empty() || bounds.back() != N) bounds.push_back(N);
  return bounds;
}

std::vector<std::uint64_t> schedule_sud_boundaries(std::uint32_t N) {
  // local density of A_n at least 1 - 1/(n+3): a_n >= (n+2) * prefix
  std::vector<std::uint64_t> bounds;
  std::uint64_t acc = 0, n = 1;
  while (acc < N) {
    std::uint64_t a = n == 1 ? 32 : (n + 2) * acc;
    acc += a;
    if (acc >= N) {
      if (!bounds.empty() && N - bounds.back() < 24)
        bounds.back() = N;
      else
        bounds.push_back(N);
      break;
    }
    bounds.push_back(acc);
    ++n;
  }
  if (bounds.empty() || bounds.back() != N) bounds.push_back(N);
  return bounds;
}

namespace {

std::vector<std::pair<std::uint64_t, std::uint64_t>> intervals_from_bounds(
    const std::vector<std::uint64_t>& bounds) {
  std::vector<std::pair<std::uint64_t, std::uint64_t>> iv;
  std::uint64_t lo = 1;
  for (std::uint64_t b : bounds) {
    iv.emplace_back(lo, b);
    lo = b + 1;
  }
  return iv;
}

// ---------- case-1 obstruction detection ----------

struct Obstruction {
  Vertex x = 0, y = 0;
  ColorId chi = 0;
  VertexSet separator;
};

// max vertex-disjoint x,y-paths in the chi-colored subgraph, stopped at
// `limit`; on termination below the limit, fills `cut` with a separator
int bounded_vertex_flow(const PrefixColoring& host, const std::vector<std::uint8_t>& vcol,
                        ColorId chi, Vertex x, Vertex y, int limit, VertexSet& cut) {
  (void)vcol;
  const std::uint32_t N = host.n();
  // split nodes: in(v) = 2v, out(v) = 2v+1; arcs: in->out (cap 1),
  // out(u)->in(w) for chi edges (cap 1, effectively unlimited)
  auto chi_edge = [&](Vertex a, Vertex b) { return host.color(a, b) == chi; };
  std::vector<std::int8_t> vertex_used(N + 1, 0);  // interior flow through v
  // flow paths as successor maps on vertices
  std::vector<Vertex> succ(N + 1, 0), pred(N + 1, 0);
  int flow = 0;
  for (; flow < limit; ++flow) {
    // BFS in the residual graph over "states": (v, side) with side 0 = at
    // in(v), side 1 = at out(v)
    std::vector<std::int8_t> seen_in(N + 1, 0), seen_out(N + 1, 0);
    std::vector<std::pair<Vertex, std::int8_t>> parent_in(N + 1, {0, 0}),
        parent_out(N + 1, {0, 0});
    std::vector<std::pair<Vertex, std::int8_t>> queue;
    queue.push_back({x, 1});
    seen_out[x] = 1;
    bool reached = false;
    for (std::size_t qi = 0; qi < queue.size() && !reached; ++qi) {
      auto [v, side] = queue[qi];
      if (side == 1) {
        // out(v) -> in(w) forward over chi edges
        for (Vertex w = 1; w <= N && !reached; ++w) {
          if (w == v || seen_in[w] || !chi_edge(v, w)) continue;
          if (succ[v] == w) continue;  // that arc carries flow already
          seen_in[w] = 1;
          parent_in[w] = {v, 1};
          if (w == y) {
            reached = true;
            parent_out[y] = {w, 0};
            break;
          }
          queue.push_back({w, 0});
        }
      } else {
        // in(v): forward in->out if free; residual back along incoming flow
        if (!vertex_used[v] && !seen_out[v]) {
          seen_out[v] = 1;
          parent_out[v] = {v, 0};
          queue.push_back({v, 1});
        }
        if (pred[v] && !seen_out[pred[v]]) {
          // cancel the flow arc pred[v] -> v
          seen_out[pred[v]] = 1;
          parent_out[pred[v]] = {v, 0};
          queue.push_back({pred[v], 1});
        }
      }
    }
    if (!reached) {
      // separator = interior vertices whose in-side is reachable but out-side
      // is not
      cut.clear();
      for (Vertex v = 1; v <= N; ++v)
        if (v != x && v != y && seen_in[v] && !seen_out[v]) cut.push_back(v);
      return flow;
    }
    // augment: walk parents from y back to x, toggling succ/pred/vertex_used
    Vertex v = y;
    std::int8_t side = 0;
    std::vector<std::pair<Vertex, Vertex>> arcs;  // forward arcs used (u -> w)
    std::vector<std::pair<Vertex, Vertex>> cancels;
    while (!(v == x && side == 1)) {
      if (side == 0) {
        auto [pv, pside] = parent_in[v];
        arcs.push_back({pv, v});
        v = pv;
        side = 1;
      } else {
        auto [pv, pside] = parent_out[v];
        if (pv == v && pside == 0) {
          side = 0;  // came through in(v) -> out(v)
        } else {
          // residual: out(v) reached by cancelling arc v -> pv
          cancels.push_back({v, pv});
          v = pv;
          side = 0;
        }
      }
    }
    for (auto [u, w] : cancels) {
      succ[u] = 0;
      pred[w] = 0;
      vertex_used[w] = 0;  // w's interior re-freed; may be re-set below
    }
    for (auto [u, w] : arcs) {
      succ[u] = w;
      pred[w] = u;
      if (w != y && w != x) vertex_used[w] = 1;
    }
  }
  return flow;
}

std::optional<Obstruction> detect_case1(const PrefixColoring& host,
                                        const std::vector<std::uint8_t>& vcol,
                                        std::uint64_t first_boundary, int cap,
                                        std::vector<std::string>& notes) {
  const std::uint32_t N = host.n();
  const std::uint32_t F = static_cast<std::uint32_t>(std::min<std::uint64_t>(first_boundary, N));
  const std::uint32_t words = (N + 63) / 64;
  // chi-neighborhood bitsets for first-interval vertices
  std::vector<std::vector<std::uint64_t>> rows(F);
  for (Vertex v = 1; v <= F; ++v) {
    rows[v - 1].assign(words, 0);
    const ColorId chi = vcol[v - 1];
    for (Vertex w = 1; w <= N; ++w)
      if (w != v && host.color(v, w) == chi) rows[v - 1][(w - 1) >> 6] |= 1ull << ((w - 1) & 63);
  }
  int flow_budget = 24;
  for (Vertex x = 1; x <= F; ++x) {
    for (Vertex y = x + 1; y <= F; ++y) {
      if (vcol[x - 1] != vcol[y - 1]) continue;
      const ColorId chi = vcol[x - 1];
      // enough common chi-neighbors rule the pair out immediately
      int common = 0;
      for (std::uint32_t t = 0; t < words && common <= cap; ++t)
        common += std::popcount(rows[x - 1][t] & rows[y - 1][t]);
      if (common > cap) continue;
      if (host.color(x, y) == chi) continue;  // adjacent in chi: no separator works
      if (flow_budget-- <= 0) {
        notes.push_back("case-1 detection budget exhausted; proceeding with case 2");
        return std::nullopt;
      }
      VertexSet cut;
      int flow = bounded_vertex_flow(host, vcol, chi, x, y, cap + 1, cut);
      if (flow <= cap) return Obstruction{x, y, chi, cut};
    }
  }
  return std::nullopt;
}

// weave the largest part against the others; all cross-part edges carry the
// path color
PathWitness tripartite_weave(const PrefixColoring& host, ColorId c,
                             std::vector<VertexSet> parts) {
  std::sort(parts.begin(), parts.end(),
            [](const VertexSet& a, const VertexSet& b) { return a.size() > b.size(); });
  PathWitness w;
  w.color = c;
  int last = -1;
  for (;;) {
    int pick = -1;
    for (int i = 0; i < static_cast<int>(parts.size()); ++i) {
      if (i == last || parts[i].empty()) continue;
      if (pick < 0 || parts[i].size() > parts[pick].size()) pick = i;
    }
    if (pick < 0) break;
    w.order.push_back(parts[pick].back());
    parts[pick].pop_back();
    last = pick;
  }
  return w;
}

// ---------- per-interval forests and stitching ----------

ForestWitness interval_forest_for_color(const PrefixColoring& host, const VertexSet& verts,
                                        ColorId c, std::uint64_t seed) {
  ForestWitness forest;
  forest.color = c;
  if (verts.empty()) return forest;

  VertexSet c_verts;
  for (Vertex v : verts)
    if (host.vertex_color(v) == c) c_verts.push_back(v);

  // candidate 1: one long path with trimmed endpoints plus leftover singletons
  ForestWitness cand1;
  cand1.color = c;
  {
    HeuristicOptions opt;
    opt.seed = seed;
    opt.restarts = 3;
    PathWitness p = verts.size() <= 20 ? longest_mono_path_in(host, c, verts)
                                       : heuristic_long_path_in(host, c, verts, opt);
    VertexSeq path = p.order;
    while (!path.empty() && host.vertex_color(path.front()) != c) path.erase(path.begin());
    while (!path.empty() && host.vertex_color(path.back()) != c) path.pop_back();
    std::unordered_set<Vertex> used(path.begin(), path.end());
    if (path.size() >= 2) {
      cand1.paths.push_back(path);
    } else {
      used.clear();
    }
    for (Vertex v : c_verts)
      if (!used.count(v)) cand1.paths.push_back({v});
  }

  // candidate 2: the color class as singletons
  ForestWitness cand2;
  cand2.color = c;
  for (Vertex v : c_verts) cand2.paths.push_back({v});

  forest = cand1.vertex_count() >= cand2.vertex_count() ? cand1 : cand2;
  std::string why;
  if (!validate_forest(host, forest, true, &why))
    throw InternalError("interval forest invalid: " + why);
  return forest;
}

struct StitchResult {
  PathWitness path;
  std::vector<JoinRecord> joins;
  std::vector<std::string> notes;
  std::vector<IntervalArtifact> artifacts;
};

// connect the ordered forest pieces of consecutive intervals through unused
// vertices above the current interval
StitchResult stitch_forests(const PrefixColoring& host, ColorId c,
                            const std::vector<std::pair<std::uint64_t, std::uint64_t>>& intervals,
                            std::uint64_t seed) {
  const std::uint32_t N = host.n();
  StitchResult out;
  out.path.color = c;
  std::vector<std::uint8_t> used(N + 1, 0);
  (void)seed;

  auto join_to = [&](Vertex from, Vertex to, std::uint64_t above) -> std::optional<JoinRecord> {
    if (host.color(from, to) == c) return JoinRecord{from, to, {}};
    // one intermediate above the interval
    for (Vertex z = N; z > above; --z) {
      if (used[z] || z == from || z == to) continue;
      if (host.color(from, z) == c && host.color(z, to) == c) return JoinRecord{from, to, {z}};
    }
    // two intermediates, capped scan
    std::uint32_t tries = 0;
    for (Vertex z1 = N; z1 > above && tries < 4096; --z1) {
      if (used[z1] || z1 == from || z1 == to || host.color(from, z1) != c) continue;
      for (Vertex z2 = N; z2 > above && tries < 4096; --z2) {
        ++tries;
        if (used[z2] || z2 == z1 || z2 == from || z2 == to) continue;
        if (host.color(z1, z2) == c && host.color(z2, to) == c)
          return JoinRecord{from, to, {z1, z2}};
      }
    }
    return std::nullopt;
  };

  for (const auto& [lo, hi] : intervals) {
    VertexSet avail;
    for (Vertex v = static_cast<Vertex>(lo); v <= hi; ++v)
      if (!used[v]) avail.push_back(v);
    ForestWitness forest = interval_forest_for_color(host, avail, c, seed + lo);
    IntervalArtifact art;
    art.lo = lo;
    art.hi = hi;
    art.color = c;
    art.kind = "forest";
    std::size_t attached = 0;
    for (const VertexSeq& piece : forest.paths) {
      if (out.path.order.empty()) {
        for (Vertex v : piece) {
          out.path.order.push_back(v);
          used[v] = 1;
        }
        attached += piece.size();
        continue;
      }
      Vertex from = out.path.order.back();
      // try both orientations of the piece
      bool joined = false;
      for (int flip = 0; flip < 2 && !joined; ++flip) {
        Vertex entry = flip ? piece.back() : piece.front();
        auto j = join_to(from, entry, hi);
        if (!j) continue;
        for (Vertex z : j->via) {
          out.path.order.push_back(z);
          used[z] = 1;
        }
        if (flip) {
          for (auto it = piece.rbegin(); it != piece.rend(); ++it) {
            out.path.order.push_back(*it);
            used[*it] = 1;
          }
        } else {
          for (Vertex v : piece) {
            out.path.order.push_back(v);
            used[v] = 1;
          }
        }
        out.joins.push_back(*j);
        attached += piece.size();
        joined = true;
      }
      if (!joined)
        out.notes.push_back("piece skipped at interval [" + std::to_string(lo) + "," +
                            std::to_string(hi) + "]");
    }
    art.artifact_size = attached;
    out.artifacts.push_back(art);
  }
  if (!out.path.order.empty()) {
    std::string why;
    if (!validate_path(host, out.path, &why))
      throw InternalError("stitched path invalid: " + why);
  }
  return out;
}

DensityProfile upper_profile_of(const VertexSet& vs, const std::vector<std::uint64_t>& bounds) {
  return profile_set(vs, bounds, DensityKind::Upper);
}

}  // namespace

AssemblyResult assemble_34_path(const ColoringSpec& spec, std::uint32_t N, AssemblyOptions opt) {
  if (spec.directed || spec.num_colors != 2)
    throw ParamError("assemble_34_path: needs an undirected 2-coloring");
  auto bounds = schedule_34_boundaries(N);
  if (bounds.size() < 1) throw ParamError("assemble_34_path: prefix too short");
  auto base = materialize(spec, N);
  auto vcol = residual_vertex_colors(base, opt.red_threshold, opt.threads);
  auto host = base.with_vertex_colors(vcol);

  AssemblyResult res;
  std::vector<std::string> notes;
  auto obstruction = detect_case1(host, vcol, bounds.front(), opt.separator_cap, notes);
  if (obstruction) {
    // blue path on the complement of the separator: the reachability classes
    // of x and y and the rest form a cross-complete structure in the other
    // color
    const ColorId chi = obstruction->chi;
    const ColorId other = 1 - chi;
    const VertexSet& S = obstruction->separator;
    auto in_S = [&](Vertex v) { return std::binary_search(S.begin(), S.end(), v); };
    auto reach_from = [&](Vertex s) {
      VertexSet r;
      std::vector<std::uint8_t> seen(N + 1, 0);
      std::vector<Vertex> stack{s};
      seen[s] = 1;
      while (!stack.empty()) {
        Vertex v = stack.back();
        stack.pop_back();
        r.push_back(v);
        for (Vertex w = 1; w <= N; ++w)
          if (!seen[w] && !in_S(w) && host.color(v, w) == chi) {
            seen[w] = 1;
            stack.push_back(w);
          }
      }
      std::sort(r.begin(), r.end());
      return r;
    };
    VertexSet X = reach_from(obstruction->x);
    VertexSet Y = reach_from(obstruction->y);
    VertexSet Z;
    for (Vertex v = 1; v <= N; ++v)
      if (!in_S(v) && !std::binary_search(X.begin(), X.end(), v) &&
          !std::binary_search(Y.begin(), Y.end(), v))
        Z.push_back(v);
    res.path = tripartite_weave(host, other, {X, Y, Z});
    std::string why;
    if (!validate_path(host, res.path, &why))
      throw InternalError("case-1 weave invalid: " + why);
    res.trace.case_tag = "1";
    res.trace.separator = S;
    res.trace.notes = notes;
    res.profile = upper_profile_of(res.path.vertex_set(), bounds);
    return res;
  }

  // case 2: stitched dense forests, better color wins
  auto intervals = intervals_from_bounds(bounds);
  std::optional<AssemblyResult> best;
  for (ColorId c = 0; c < 2; ++c) {
    StitchResult st = stitch_forests(host, c, intervals, opt.seed);
    AssemblyResult cand;
    cand.path = st.path;
    cand.trace.case_tag = "2";
    cand.trace.intervals = st.artifacts;
    cand.trace.joins = st.joins;
    cand.trace.notes = notes;
    for (auto& n : st.notes) cand.trace.notes.push_back(n);
    cand.profile = upper_profile_of(cand.path.vertex_set(), bounds);
    if (!best || best->profile.record_upper() < cand.profile.record_upper()) best = std::move(cand);
  }
  return *best;
}

// ---------- bridges ----------

PathWitness bridge_no_matching(const PrefixColoring& host, const VertexSet& V1,
                               const VertexSet& V2, const VertexSet& X1,
                               const ConnectorWitness& X2, int endpoint_side,
                               std::uint64_t seed) {
  if (V1.empty() || V2.empty() || X1.empty()) throw ParamError("bridge_no_matching: empty input");
  if (V1.back() + 1 != V2.front())
    throw ParamError("bridge_no_matching: V1 must immediately precede V2");
  const ColorId blue = X2.color;
  const ColorId red = 1 - blue;
  if (endpoint_side != 1 && endpoint_side != 2)
    throw ParamError("bridge_no_matching: endpoint_side is 1 or 2");

  // no blue 2-matching from X1 to X2: the blue cross edges share a vertex
  Vertex cover = 0;
  {
    std::vector<std::pair<Vertex, Vertex>> blue_edges;
    for (Vertex a : X1) {
      for (Vertex b : X2.X)
        if (host.color(a, b) == blue) {
          blue_edges.emplace_back(a, b);
          if (blue_edges.size() > 1) {
            auto [a0, b0] = blue_edges[0];
            if (a0 != a && b0 != b)
              throw ContractError("bridge_no_matching: a blue 2-matching exists");
          }
        }
    }
    if (!blue_edges.empty()) {
      // common vertex of all blue cross edges
      auto [a0, b0] = blue_edges[0];
      bool all_a = true, all_b = true;
      for (auto& [a, b] : blue_edges) {
        all_a &= (a == a0);
        all_b &= (b == b0);
      }
      if (all_a)
        cover = a0;
      else if (all_b)
        cover = b0;
      else
        throw ContractError("bridge_no_matching: a blue 2-matching exists");
    }
  }

  // the balance point: initial segment I of V2 with |X1| + |(V2\X2) ∩ I| =
  // |X2 ∩ I|
  VertexSet Y1 = X1, Y2;
  {
    std::int64_t lhs = static_cast<std::int64_t>(X1.size()), rhs = 0;
    std::size_t taken = 0;
    VertexSet nonX;
    for (Vertex v : V2) {
      ++taken;
      if (std::binary_search(X2.X.begin(), X2.X.end(), v)) {
        Y2.push_back(v);
        ++rhs;
      } else {
        nonX.push_back(v);
        ++lhs;
      }
      if (lhs == rhs) break;
    }
    if (lhs != rhs)
      throw ContractError("bridge_no_matching: connector too small to balance the segment");
    (void)taken;
    Y1.insert(Y1.end(), nonX.begin(), nonX.end());
    std::sort(Y1.begin(), Y1.end());
  }

  // deletions: the blue cover vertex plus rebalancing, at most 3 in total
  std::vector<std::uint8_t> deleted_mark(host.n() + 1, 0);
  auto del = [&](Vertex v) { deleted_mark[v] = 1; };
  if (cover) del(cover);
  auto live_count = [&](const VertexSet& s) {
    std::size_t c = 0;
    for (Vertex v : s)
      if (!deleted_mark[v]) ++c;
    return c;
  };
  // want |Y1'| = |Y2'| + 1 for endpoints on side 1, the reverse for side 2
  auto rebalance = [&](VertexSet& donor, const VertexSet& protect) {
    for (Vertex v : donor) {
      if (deleted_mark[v]) continue;
      if (std::binary_search(protect.begin(), protect.end(), v)) continue;
      del(v);
      return true;
    }
    return false;
  };
  VertexSet protect1, protect2;  // candidate endpoints never deleted
  {
    const VertexSet& src = endpoint_side == 1 ? X1 : Y2;
    for (Vertex v : src) {
      if (deleted_mark[v]) continue;
      protect1.push_back(v);
      if (protect1.size() == 2) break;
    }
    if (protect1.size() < 2) throw ContractError("bridge_no_matching: not enough endpoints");
  }
  int guard = 0;
  for (;;) {
    if (++guard > 8) throw InternalError("bridge_no_matching: rebalance loop stuck");
    std::int64_t diff = static_cast<std::int64_t>(live_count(Y1)) -
                        static_cast<std::int64_t>(live_count(Y2));
    std::int64_t want = endpoint_side == 1 ? 1 : -1;
    if (diff == want) break;
    if (diff > want) {
      if (!rebalance(Y1, endpoint_side == 1 ? protect1 : VertexSet{}))
        throw ContractError("bridge_no_matching: cannot rebalance Y1");
    } else {
      if (!rebalance(Y2, endpoint_side == 2 ? protect1 : VertexSet{}))
        throw ContractError("bridge_no_matching: cannot rebalance Y2");
    }
  }

  // red bipartite graph on the live parts
  VertexSet L, R;
  for (Vertex v : Y1)
    if (!deleted_mark[v]) L.push_back(v);
  for (Vertex v : Y2)
    if (!deleted_mark[v]) R.push_back(v);
  BipGraph g;
  g.mL = static_cast<std::uint32_t>(L.size());
  g.mR = static_cast<std::uint32_t>(R.size());
  g.adj.assign(std::size_t(g.mL) * g.mR, 0);
  for (std::uint32_t i = 0; i < g.mL; ++i)
    for (std::uint32_t j = 0; j < g.mR; ++j)
      g.adj[std::size_t(i) * g.mR + j] = host.color(L[i], R[j]) == red ? 1 : 0;

  auto enc_of = [&](Vertex v) -> std::uint32_t {
    auto it = std::lower_bound(L.begin(), L.end(), v);
    if (it != L.end() && *it == v) return static_cast<std::uint32_t>(it - L.begin());
    auto jt = std::lower_bound(R.begin(), R.end(), v);
    return g.mL + static_cast<std::uint32_t>(jt - R.begin());
  };
  auto path = bip_ham_path_fixed_ends(g, enc_of(protect1[0]), enc_of(protect1[1]), seed);
  if (!path) throw SearchError("bridge_no_matching: no near-spanning red path found");

  PathWitness w;
  w.color = red;
  for (std::uint32_t e : *path) w.order.push_back(e < g.mL ? L[e] : R[e - g.mL]);
  std::string why;
  if (!validate_path(host, w, &why)) throw InternalError("bridge path invalid: " + why);
  return w;
}

BridgePair bridge_dual(const PrefixColoring& host, const VertexSet& V1, const VertexSet& V2,
                       const ConnectorWitness& X1, const ConnectorWitness& X2,
                       std::uint64_t seed) {
  if (X1.color == X2.color) throw ParamError("bridge_dual: connectors must have opposite colors");
  const ColorId blue = X2.color;
  BridgePair bp;

  // case 1: a blue 2-matching between the connectors
  std::optional<std::pair<std::pair<Vertex, Vertex>, std::pair<Vertex, Vertex>>> matching;
  {
    std::optional<std::pair<Vertex, Vertex>> first;
    for (Vertex a : X1.X) {
      for (Vertex b : X2.X) {
        if (host.color(a, b) != blue) continue;
        if (!first) {
          first = {a, b};
        } else if (first->first != a && first->second != b) {
          matching = {{first->first, first->second}, {a, b}};
          break;
        }
      }
      if (matching) break;
    }
  }

  if (matching) {
    auto [e, f] = *matching;
    Vertex u1 = e.first, u2 = e.second, v1 = f.first, v2 = f.second;
    bp.case_tag = 1;
    bp.u = u1;
    bp.v = v1;
    bp.red_path = connector_path(host, X1, u1, v1, seed);
    PathWitness inner = connector_path(host, X2, u2, v2, seed);
    if (bp.red_path.order.empty() || inner.order.empty())
      throw SearchError("bridge_dual: connector routing failed");
    bp.blue_path.color = blue;
    bp.blue_path.order.push_back(u1);
    bp.blue_path.order.insert(bp.blue_path.order.end(), inner.order.begin(), inner.order.end());
    bp.blue_path.order.push_back(v1);
    std::string why;
    if (!validate_path(host, bp.blue_path, &why))
      throw InternalError("bridge_dual blue path invalid: " + why);
    return bp;
  }

  // case 2: route the red path through the balanced segment, endpoints in X2
  bp.case_tag = 2;
  bp.red_path = bridge_no_matching(host, V1, V2, X1.X, X2, 2, seed);
  bp.u = bp.red_path.order.front();
  bp.v = bp.red_path.order.back();
  bp.blue_path = connector_path(host, X2, bp.u, bp.v, seed);
  if (bp.blue_path.order.empty()) throw SearchError("bridge_dual: blue routing failed");
  return bp;
}

// ---------- strong-density assembly ----------

namespace {

struct SudPiece {
  PathWitness path;
  std::size_t interval_index;
};

DensityProfile sud_profile_of(const VertexSeq& order, const std::vector<std::uint64_t>& bounds) {
  return profile_seq(order, bounds, DensityKind::StrongUpper);
}

// chain pieces with single join edges of the piece color; pieces may be
// flipped; returns the concatenated path (empty when no piece attaches)
PathWitness chain_pieces(const PrefixColoring& host, ColorId c, std::vector<SudPiece> pieces,
                         std::vector<JoinRecord>& joins, std::vector<std::string>& notes) {
  PathWitness out;
  out.color = c;
  for (auto& piece : pieces) {
    if (piece.path.order.empty()) continue;
    if (out.order.empty()) {
      out.order = piece.path.order;
      continue;
    }
    Vertex tail = out.order.back();
    bool joined = false;
    for (int flip = 0; flip < 2 && !joined; ++flip) {
      Vertex entry = flip ? piece.path.order.back() : piece.path.order.front();
      if (host.color(tail, entry) != c) continue;
      joins.push_back({tail, entry, {}});
      if (flip)
        out.order.insert(out.order.end(), piece.path.order.rbegin(), piece.path.order.rend());
      else
        out.order.insert(out.order.end(), piece.path.order.begin(), piece.path.order.end());
      joined = true;
    }
    if (!joined)
      notes.push_back("sud piece " + std::to_string(piece.interval_index) + " discarded (no join)");
  }
  return out;
}

}  // namespace

AssemblyResult assemble_23_sud_path(const ColoringSpec& spec, std::uint32_t N,
                                    AssemblyOptions opt) {
  if (spec.directed || spec.num_colors != 2)
    throw ParamError("assemble_23_sud_path: needs an undirected 2-coloring");
  auto bounds = schedule_sud_boundaries(N);
  auto intervals = intervals_from_bounds(bounds);
  auto host = materialize(spec, N);

  // per-interval connectors
  std::vector<ConnectorWitness> conns;
  std::vector<VertexSet> ivsets;
  for (auto& [lo, hi] : intervals) {
    VertexSet iv;
    for (Vertex v = static_cast<Vertex>(lo); v <= hi; ++v) iv.push_back(v);
    ivsets.push_back(iv);
    conns.push_back(find_alpha_connector(host, iv, opt.seed + lo));
  }

  struct Strategy {
    AssemblyResult result;
    bool ok = false;
  };
  std::vector<AssemblyResult> candidates;

  auto finalize = [&](PathWitness path, std::string tag, std::vector<JoinRecord> joins,
                      std::vector<std::string> notes) {
    if (path.order.empty()) return;
    std::string why;
    if (!validate_path(host, path, &why))
      throw InternalError("sud assembly path invalid: " + why);
    AssemblyResult r;
    r.path = std::move(path);
    r.trace.case_tag = std::move(tag);
    r.trace.joins = std::move(joins);
    r.trace.notes = std::move(notes);
    for (std::size_t i = 0; i < conns.size(); ++i)
      r.trace.intervals.push_back({intervals[i].first, intervals[i].second, conns[i].color,
                                   conns[i].X.size(), conns[i].alpha, "connector"});
    r.profile = sud_profile_of(r.path.order, bounds);
    candidates.push_back(std::move(r));
  };

  // strategy 1a: same-color chain through 2-matchings
  for (ColorId c = 0; c < 2; ++c) {
    std::vector<std::size_t> kept;
    for (std::size_t i = 0; i < conns.size(); ++i)
      if (conns[i].color == c && conns[i].X.size() >= 2) kept.push_back(i);
    if (kept.empty()) continue;
    std::vector<JoinRecord> joins;
    std::vector<std::string> notes;
    PathWitness chain;
    chain.color = c;
    Vertex entry = 0;
    for (std::size_t ki = 0; ki < kept.size(); ++ki) {
      const ConnectorWitness& cur = conns[kept[ki]];
      // 2-matching to the next kept connector, greedy first-fit
      std::optional<std::pair<std::pair<Vertex, Vertex>, std::pair<Vertex, Vertex>>> matching;
      std::size_t next = ki + 1;
      for (; next < kept.size() && !matching; ++next) {
        const ConnectorWitness& nxt = conns[kept[next]];
        std::optional<std::pair<Vertex, Vertex>> first;
        for (Vertex a : cur.X) {
          for (Vertex b : nxt.X) {
            if (host.color(a, b) != c) continue;
            if (!first)
              first = {a, b};
            else if (first->first != a && first->second != b) {
              matching = {{first->first, first->second}, {a, b}};
              break;
            }
          }
          if (matching) break;
        }
        if (matching) break;
      }
      Vertex exit = 0, next_entry = 0;
      if (matching) {
        auto [e, f] = *matching;
        exit = (e.first != entry) ? e.first : f.first;
        next_entry = (e.first != entry) ? e.second : f.second;
      } else {
        // last piece: exit anywhere
        for (Vertex x : cur.X)
          if (x != entry) {
            exit = x;
            break;
          }
      }
      if (!exit) break;
      Vertex u = entry ? entry : (exit != cur.X.front() ? cur.X.front() : cur.X.back());
      PathWitness piece = connector_path(host, cur, u, exit, opt.seed);
      if (piece.order.empty()) {
        notes.push_back("connector routing failed at interval " + std::to_string(kept[ki]));
        break;
      }
      if (chain.order.empty()) {
        chain.order = piece.order;
      } else {
        joins.push_back({chain.order.back(), piece.order.front(), {}});
        chain.order.insert(chain.order.end(), piece.order.begin(), piece.order.end());
      }
      if (!matching) break;
      entry = next_entry;
      ki = next - 1;
    }
    finalize(std::move(chain), "1a", std::move(joins), std::move(notes));
  }

  // strategy 1b: red bridge chain across intervals without 2-matchings
  for (ColorId blue = 0; blue < 2; ++blue) {
    const ColorId red = 1 - blue;
    std::vector<SudPiece> pieces;
    std::vector<std::string> notes;
    for (std::size_t i = 0; i + 1 < conns.size(); i += 2) {
      if (conns[i].color != blue || conns[i + 1].color != blue) continue;
      try {
        PathWitness p = bridge_no_matching(host, ivsets[i], ivsets[i + 1], conns[i].X,
                                           conns[i + 1], 1, opt.seed);
        pieces.push_back({std::move(p), i});
      } catch (const Error& e) {
        notes.push_back("bridge pair " + std::to_string(i) + ": " + e.what());
      }
    }
    std::vector<JoinRecord> joins;
    PathWitness chain = chain_pieces(host, red, std::move(pieces), joins, notes);
    finalize(std::move(chain), "1b", std::move(joins), std::move(notes));
  }

  // strategy 2: alternating connectors, pieces of one color joined by its
  // edges (finite pigeonhole replaces the Ramsey step)
  {
    std::vector<std::size_t> alt;
    for (std::size_t i = 0; i + 1 < conns.size(); ++i)
      if (conns[i].color != conns[i + 1].color) {
        if (alt.empty() || alt.back() + 1 < i) alt.push_back(i);
      }
    std::vector<BridgePair> bps;
    std::vector<std::string> base_notes;
    for (std::size_t i : alt) {
      try {
        // orient so that X1 is the red-role connector
        const ConnectorWitness& first = conns[i];
        const ConnectorWitness& second = conns[i + 1];
        bps.push_back(bridge_dual(host, ivsets[i], ivsets[i + 1], first, second, opt.seed));
      } catch (const Error& e) {
        base_notes.push_back("bridge_dual pair " + std::to_string(i) + ": " + e.what());
      }
    }
    for (ColorId rho = 0; rho < 2; ++rho) {
      std::vector<SudPiece> pieces;
      for (std::size_t b = 0; b < bps.size(); ++b) {
        const PathWitness& p =
            (bps[b].red_path.color == rho) ? bps[b].red_path : bps[b].blue_path;
        if (p.color == rho) pieces.push_back({p, b});
      }
      std::vector<JoinRecord> joins;
      std::vector<std::string> notes = base_notes;
      PathWitness chain = chain_pieces(host, rho, std::move(pieces), joins, notes);
      finalize(std::move(chain), "2", std::move(joins), std::move(notes));
    }
  }

  // baseline: the best single connector path
  {
    std::size_t best = 0;
    for (std::size_t i = 1; i < conns.size(); ++i)
      if (conns[i].X.size() > conns[best].X.size()) best = i;
    if (conns[best].X.size() >= 2) {
      PathWitness p =
          connector_path(host, conns[best], conns[best].X.front(), conns[best].X.back(), opt.seed);
      finalize(std::move(p), "single", {}, {});
    }
  }

  if (candidates.empty()) throw SearchError("assemble_23_sud_path: no strategy produced a path");
  std::size_t best = 0;
  for (std::size_t i = 1; i < candidates.size(); ++i)
    if (candidates[best].profile.record_upper() < candidates[i].profile.record_upper()) best = i;
  return candidates[best];
}

// ---------- construction-specific greedy builders ----------

PathWitness eg89_blue_greedy_path(const PrefixColoring& host) {
  if (host.spec().scheme != Scheme::EgUpper89)
    throw ParamError("eg89_blue_greedy_path: wrong scheme");
  const IntervalPartition* part = host.intervals();
  const std::uint32_t N = host.n();
  PathWitness w;
  w.color = kBlue;
  // walk odd intervals in order; between consecutive odd vertices insert the
  // next unused vertex of the following even interval (its blue edges go to
  // lower odd intervals)
  std::vector<Vertex> evens_pool;  // per even interval, next unused pointer
  std::size_t K = part->count();
  std::vector<std::uint64_t> next_even(K, 0);
  for (std::size_t k = 0; k < K; ++k) next_even[k] = part->begin(k);
  Vertex prev_odd = 0;
  for (std::size_t k = 1; k < K; k += 2) {
    const std::uint64_t lo = part->begin(k), hi = std::min<std::uint64_t>(part->end(k), N);
    if (lo > N) break;
    for (std::uint64_t v = lo; v <= hi; ++v) {
      if (prev_odd) {
        // even connector from the next even interval, if any remain
        std::size_t src = k + 1;
        if (src < K && next_even[src] <= std::min<std::uint64_t>(part->end(src), N)) {
          Vertex z = static_cast<Vertex>(next_even[src]++);
          w.order.push_back(z);
        }
      }
      w.order.push_back(static_cast<Vertex>(v));
      prev_odd = static_cast<Vertex>(v);
    }
  }
  std::string why;
  if (!validate_path(host, w, &why))
    throw InternalError("eg89 blue greedy path invalid: " + why);
  return w;
}

PathWitness eg23_blue_cover_path(const PrefixColoring& host) {
  if (host.spec().scheme != Scheme::EgStrong23)
    throw ParamError("eg23_blue_cover_path: wrong scheme");
  PathWitness w;
  w.color = kBlue;
  for (Vertex v = 1; v <= host.n(); ++v)
    if (v % 3 != 0) w.order.push_back(v);
  std::string why;
  if (!validate_path(host, w, &why)) throw InternalError("eg23 cover path invalid: " + why);
  return w;
}

}  // namespace rdl
