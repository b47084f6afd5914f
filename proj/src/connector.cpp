#include "rdl/connector.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <unordered_map>
#include <unordered_set>

#include "rdl/engine_paths.hpp"
#include "rdl/rng.hpp"

namespace rdl {

namespace {

// close a path into a cycle: direct edge, else a chord pair
// (back ~ p[i], front ~ p[i+1]) reorders the suffix; drops tail vertices as a
// last resort
VertexSeq close_into_cycle(const PrefixColoring& host, ColorId c, VertexSeq p) {
  auto edge = [&](Vertex a, Vertex b) { return host.color(a, b) == c; };
  while (p.size() >= 3) {
    if (edge(p.back(), p.front())) return p;
    for (std::size_t i = 0; i + 2 < p.size(); ++i) {
      if (edge(p.back(), p[i]) && edge(p.front(), p[i + 1])) {
        std::reverse(p.begin() + static_cast<std::ptrdiff_t>(i) + 1, p.end());
        return p;  // p[0..i], p[end..i+1] now cyclic
      }
    }
    p.pop_back();
  }
  return {};
}

VertexSeq long_mono_cycle(const PrefixColoring& host, ColorId c, const VertexSet& interval,
                          std::uint64_t seed) {
  if (interval.size() <= 20) {
    auto w = longest_mono_cycle_in(host, c, interval);
    return w.order;
  }
  HeuristicOptions opt;
  opt.seed = seed;
  opt.restarts = 4;
  auto path = heuristic_long_path_in(host, c, interval, opt);
  return close_into_cycle(host, c, path.order);
}

// any monochromatic edge as the degenerate 2-cycle base
VertexSeq fallback_edge(const PrefixColoring& host, ColorId c, const VertexSet& interval) {
  for (std::size_t i = 0; i < interval.size(); ++i)
    for (std::size_t j = i + 1; j < interval.size(); ++j)
      if (host.color(interval[i], interval[j]) == c) return {interval[i], interval[j]};
  return {};
}

}  // namespace

ConnectorWitness find_alpha_connector(const PrefixColoring& host, const VertexSet& interval,
                                      std::uint64_t seed) {
  if (interval.size() < 6) throw ParamError("find_alpha_connector: interval must have >= 6 vertices");
  ConnectorWitness best;
  bool have = false;
  for (ColorId c = 0; c < host.num_colors(); ++c) {
    ConnectorWitness w;
    w.color = c;
    w.interval = interval;
    w.base_cycle = long_mono_cycle(host, c, interval, seed + static_cast<std::uint64_t>(c));
    if (w.base_cycle.empty()) w.base_cycle = fallback_edge(host, c, interval);
    if (w.base_cycle.empty()) continue;  // color has no edge at all
    w.degraded = w.base_cycle.size() * 3 < interval.size();

    // closure to the fixpoint: X_{i+1} = X_i ∪ {v with >= 2 c-edges into X_i}
    VertexSet layer(w.base_cycle.begin(), w.base_cycle.end());
    std::sort(layer.begin(), layer.end());
    w.closure_layers.push_back(layer);
    for (;;) {
      const VertexSet& cur = w.closure_layers.back();
      VertexSet next = cur;
      bool grew = false;
      for (Vertex v : interval) {
        if (std::binary_search(cur.begin(), cur.end(), v)) continue;
        int hits = 0;
        for (Vertex x : cur) {
          if (host.color(v, x) == c && ++hits == 2) break;
        }
        if (hits >= 2) {
          next.push_back(v);
          grew = true;
        }
      }
      if (!grew) break;
      std::sort(next.begin(), next.end());
      w.closure_layers.push_back(next);
    }
    w.X = w.closure_layers.back();

    // certify alpha on exhaustive (small) or 50 sampled pairs
    if (w.X.size() >= 2) {
      std::vector<std::pair<Vertex, Vertex>> pairs;
      if (w.X.size() <= 10) {
        for (std::size_t i = 0; i < w.X.size(); ++i)
          for (std::size_t j = i + 1; j < w.X.size(); ++j) pairs.emplace_back(w.X[i], w.X[j]);
      } else {
        Rng rng(seed ^ 0x5eedc0de);
        while (pairs.size() < 50) {
          Vertex a = w.X[rng.below(w.X.size())];
          Vertex b = w.X[rng.below(w.X.size())];
          if (a != b) pairs.emplace_back(a, b);
        }
      }
      Ratio alpha(1);
      bool ok = true;
      for (auto [a, b] : pairs) {
        PathWitness p = connector_path(host, w, a, b, seed);
        if (p.order.empty()) {
          ok = false;
          break;
        }
        Ratio r(static_cast<std::int64_t>(p.size()), static_cast<std::int64_t>(interval.size()));
        if (r < alpha) alpha = r;
      }
      w.alpha = ok ? alpha : Ratio(0);
    }
    if (!have || best.alpha < w.alpha) {
      best = std::move(w);
      have = true;
    }
  }
  if (!have) throw SearchError("find_alpha_connector: interval has no monochromatic edge");
  return best;
}

namespace {

// chains from u down the closure layers to the base cycle, avoiding `used`;
// each non-cycle vertex has >= 2 anchors in the previous layer, so a small
// DFS suffices
bool descend(const PrefixColoring& host, const ConnectorWitness& conn, Vertex from,
             std::unordered_set<Vertex>& used, VertexSeq& chain) {
  const auto& layers = conn.closure_layers;
  auto layer_of = [&](Vertex v) -> std::size_t {
    for (std::size_t i = 0; i < layers.size(); ++i)
      if (std::binary_search(layers[i].begin(), layers[i].end(), v)) return i;
    return layers.size();
  };
  std::function<bool(Vertex)> rec = [&](Vertex v) -> bool {
    chain.push_back(v);
    used.insert(v);
    std::size_t li = layer_of(v);
    if (li == 0) return true;  // reached the base cycle
    const VertexSet& prev = layers[li - 1];
    for (Vertex a : prev) {
      if (used.count(a)) continue;
      if (host.color(v, a) != conn.color) continue;
      if (rec(a)) return true;
    }
    chain.pop_back();
    used.erase(v);
    return false;
  };
  return rec(from);
}

}  // namespace

PathWitness connector_path(const PrefixColoring& host, const ConnectorWitness& conn, Vertex u,
                           Vertex v, std::uint64_t seed) {
  if (u == v) throw ParamError("connector_path: endpoints must differ");
  if (!std::binary_search(conn.X.begin(), conn.X.end(), u) ||
      !std::binary_search(conn.X.begin(), conn.X.end(), v))
    throw ParamError("connector_path: endpoint outside the connector");

  PathWitness w;
  w.color = conn.color;

  // small connectors: exact endpoint-to-endpoint longest path
  if (conn.X.size() <= 16) {
    // subset DP anchored at u; best mask whose endpoint set contains v
    const std::size_t m = conn.X.size();
    std::vector<std::uint32_t> adj(m, 0);
    std::size_t ui = 0, vi = 0;
    for (std::size_t i = 0; i < m; ++i) {
      if (conn.X[i] == u) ui = i;
      if (conn.X[i] == v) vi = i;
      for (std::size_t j = i + 1; j < m; ++j)
        if (host.color(conn.X[i], conn.X[j]) == conn.color) {
          adj[i] |= 1u << j;
          adj[j] |= 1u << i;
        }
    }
    std::vector<std::uint32_t> reach(std::size_t(1) << m, 0);
    reach[1u << ui] = 1u << ui;
    std::uint32_t best_mask = 0;
    int best_pop = 0;
    for (std::uint32_t mask = 1; mask < (1u << m); ++mask) {
      if (!(mask & (1u << ui)) || std::popcount(mask) == 1) continue;
      std::uint32_t e = 0;
      for (std::uint32_t rest = mask & ~(1u << ui); rest;) {
        std::uint32_t x = static_cast<std::uint32_t>(std::countr_zero(rest));
        rest &= rest - 1;
        if (reach[mask ^ (1u << x)] & adj[x]) e |= 1u << x;
      }
      reach[mask] = e;
      if ((e >> vi) & 1u) {
        if (std::popcount(mask) > best_pop) {
          best_pop = std::popcount(mask);
          best_mask = mask;
        }
      }
    }
    if (!best_mask) return w;  // no u,v-path in this color
    std::uint32_t mask = best_mask, x = static_cast<std::uint32_t>(vi);
    VertexSeq rev;
    for (;;) {
      rev.push_back(conn.X[x]);
      std::uint32_t prev = mask ^ (1u << x);
      if (prev == (1u << ui)) {
        rev.push_back(conn.X[ui]);
        break;
      }
      std::uint32_t cands = reach[prev] & adj[x];
      x = static_cast<std::uint32_t>(std::countr_zero(cands));
      mask = prev;
    }
    w.order.assign(rev.rbegin(), rev.rend());
  } else {
    // descend both chains, then route the long way around the cycle
    std::unordered_set<Vertex> used;
    VertexSeq chain_u, chain_v;
    if (!descend(host, conn, u, used, chain_u)) return w;
    if (!descend(host, conn, v, used, chain_v)) return w;
    Vertex u0 = chain_u.back(), v0 = chain_v.back();
    const VertexSeq& cyc = conn.base_cycle;
    std::size_t pu = 0, pv = 0;
    for (std::size_t i = 0; i < cyc.size(); ++i) {
      if (cyc[i] == u0) pu = i;
      if (cyc[i] == v0) pv = i;
    }
    if (u0 == v0) return w;  // chains collided on the cycle; caller treats as miss
    const std::size_t L = cyc.size();
    // two arcs from pu to pv; take the longer (vertex counts include both ends)
    std::size_t fwd = (pv + L - pu) % L + 1;
    std::size_t bwd = (pu + L - pv) % L + 1;
    VertexSeq route;
    if (fwd >= bwd) {
      for (std::size_t s = 0; s < fwd; ++s) route.push_back(cyc[(pu + s) % L]);
    } else {
      for (std::size_t s = 0; s < bwd; ++s) route.push_back(cyc[(pu + L - s % L) % L]);
    }
    // assemble: chain_u down to u0, route (starting at u0), chain_v back up
    w.order = chain_u;
    w.order.insert(w.order.end(), route.begin() + 1, route.end());
    for (auto it = chain_v.rbegin() + 1; it != chain_v.rend(); ++it) w.order.push_back(*it);
    // re-absorb skipped X vertices where both bracket edges match
    std::unordered_set<Vertex> on_path(w.order.begin(), w.order.end());
    std::vector<Vertex> pool;
    for (Vertex x : conn.X)
      if (!on_path.count(x)) pool.push_back(x);
    absorb_pass(host, conn.color, w.order, std::move(pool), 512);
  }

  std::string why;
  if (!validate_path(host, w, &why))
    throw InternalError("connector_path produced an invalid path: " + why);
  return w;
}

}  // namespace rdl
