#include "rdl/engine_bipartite.hpp"

#include <algorithm>
#include <bit>

#include "rdl/rng.hpp"

namespace rdl {

namespace {
bool fail(std::string* why, const std::string& msg) {
  if (why) *why = msg;
  return false;
}
}  // namespace

bool validate_bip_partition(const Bip2Col& host, const BipPartition& p, std::string* why) {
  std::vector<std::uint8_t> seen(host.total(), 0);
  for (const BipPath& path : p.paths) {
    if (path.verts.empty()) return fail(why, "empty path");
    for (std::uint32_t v : path.verts) {
      if (v >= host.total()) return fail(why, "vertex out of range");
      if (seen[v]++) return fail(why, "vertex reused");
    }
    for (std::size_t i = 0; i + 1 < path.verts.size(); ++i) {
      std::uint32_t a = path.verts[i], b = path.verts[i + 1];
      if (host.left(a) == host.left(b)) return fail(why, "path does not alternate sides");
      if (path.color < 0) return fail(why, "multi-vertex path without a color");
      if (host.color_of(a, b) != path.color) return fail(why, "edge color mismatch");
    }
  }
  for (std::uint32_t v = 0; v < host.total(); ++v)
    if (!seen[v]) return fail(why, "vertex not covered");
  return true;
}

namespace {

// ---- exhaustive subset DP (small hosts) ----

struct CoverTables {
  std::uint32_t N = 0;
  std::vector<std::uint32_t> reach[2];  // per color: endpoint sets per mask
  std::vector<std::uint32_t> adj[2];    // per color: adjacency bitmask per vertex

  bool cover1(std::uint32_t mask) const {
    return std::popcount(mask) == 1 || reach[0][mask] != 0 || reach[1][mask] != 0;
  }
};

CoverTables build_tables(const Bip2Col& host) {
  CoverTables t;
  const std::uint32_t N = host.total();
  t.N = N;
  for (int c = 0; c < 2; ++c) {
    t.adj[c].assign(N, 0);
    for (std::uint32_t l = 0; l < host.mL; ++l)
      for (std::uint32_t r = 0; r < host.mR; ++r)
        if (host.at(l, r) == c) {
          t.adj[c][l] |= 1u << (host.mL + r);
          t.adj[c][host.mL + r] |= 1u << l;
        }
    t.reach[c].assign(std::size_t(1) << N, 0);
    for (std::uint32_t mask = 1; mask < (1u << N); ++mask) {
      std::uint32_t e = 0;
      if (std::popcount(mask) == 1) {
        e = mask;
      } else {
        for (std::uint32_t rest = mask; rest;) {
          std::uint32_t v = static_cast<std::uint32_t>(std::countr_zero(rest));
          rest &= rest - 1;
          if (t.reach[c][mask ^ (1u << v)] & t.adj[c][v]) e |= 1u << v;
        }
      }
      t.reach[c][mask] = e;
    }
  }
  return t;
}

BipPath reconstruct_path(const CoverTables& t, std::uint32_t mask) {
  BipPath p;
  if (std::popcount(mask) == 1) {
    p.verts.push_back(static_cast<std::uint32_t>(std::countr_zero(mask)));
    p.color = -1;
    return p;
  }
  int c = t.reach[0][mask] ? 0 : 1;
  std::uint32_t v = static_cast<std::uint32_t>(std::countr_zero(t.reach[c][mask]));
  std::vector<std::uint32_t> rev;
  std::uint32_t cur = mask;
  for (;;) {
    rev.push_back(v);
    std::uint32_t prev = cur ^ (1u << v);
    if (!prev) break;
    std::uint32_t cands = t.reach[c][prev] & t.adj[c][v];
    v = static_cast<std::uint32_t>(std::countr_zero(cands));
    cur = prev;
  }
  p.verts.assign(rev.rbegin(), rev.rend());
  p.color = c;
  return p;
}

std::optional<BipPartition> exhaustive_partition(const Bip2Col& host) {
  const std::uint32_t N = host.total();
  CoverTables t = build_tables(host);
  const std::uint32_t full = (N == 32) ? 0xffffffffu : ((1u << N) - 1);
  if (t.cover1(full)) {
    BipPartition p;
    p.paths.push_back(reconstruct_path(t, full));
    return p;
  }
  // two paths: any 1-coverable complementary split
  for (std::uint32_t a = (full - 1) & full; a; a = (a - 1) & full) {
    if (t.cover1(a) && t.cover1(full ^ a)) {
      BipPartition p;
      p.paths.push_back(reconstruct_path(t, a));
      p.paths.push_back(reconstruct_path(t, full ^ a));
      return p;
    }
  }
  // three paths: cover2 over all masks, then split
  std::vector<std::uint8_t> cover2(std::size_t(1) << N, 0);
  for (std::uint32_t m = 1; m < (1u << N); ++m) {
    for (std::uint32_t a = (m - 1) & m; a; a = (a - 1) & m) {
      if (t.cover1(a) && t.cover1(m ^ a)) {
        cover2[m] = 1;
        break;
      }
    }
  }
  for (std::uint32_t a = full & (full - 1); a; a = (a - 1) & full) {
    if (!t.cover1(a) || !cover2[full ^ a]) continue;
    std::uint32_t rest = full ^ a;
    for (std::uint32_t b = (rest - 1) & rest; b; b = (b - 1) & rest) {
      if (t.cover1(b) && t.cover1(rest ^ b)) {
        BipPartition p;
        p.paths.push_back(reconstruct_path(t, a));
        p.paths.push_back(reconstruct_path(t, b));
        p.paths.push_back(reconstruct_path(t, rest ^ b));
        return p;
      }
    }
  }
  return std::nullopt;
}

// ---- insertion/merge/rotation local search (any size) ----

struct LocalSearch {
  const Bip2Col& host;
  Rng rng;
  std::vector<BipPath> paths;

  LocalSearch(const Bip2Col& h, std::uint64_t seed) : host(h), rng(seed) {}

  int edge_color(std::uint32_t a, std::uint32_t b) const { return host.color_of(a, b); }
  bool opposite(std::uint32_t a, std::uint32_t b) const { return host.left(a) != host.left(b); }

  bool try_attach(BipPath& p, std::uint32_t v) {
    if (p.verts.size() == 1) {
      std::uint32_t w = p.verts[0];
      if (!opposite(w, v)) return false;
      p.color = edge_color(w, v);
      p.verts.push_back(v);
      return true;
    }
    if (opposite(p.verts.back(), v) && edge_color(p.verts.back(), v) == p.color) {
      p.verts.push_back(v);
      return true;
    }
    if (opposite(p.verts.front(), v) && edge_color(p.verts.front(), v) == p.color) {
      p.verts.insert(p.verts.begin(), v);
      return true;
    }
    return false;
  }

  void insert_all(const std::vector<std::uint32_t>& order) {
    paths.clear();
    for (std::uint32_t v : order) {
      bool placed = false;
      for (BipPath& p : paths)
        if (try_attach(p, v)) {
          placed = true;
          break;
        }
      if (!placed) paths.push_back(BipPath{{v}, -1});
    }
  }

  static void flip(BipPath& p) { std::reverse(p.verts.begin(), p.verts.end()); }

  // join q onto the back of p when an edge of a compatible color connects
  bool try_merge(std::size_t i, std::size_t j) {
    BipPath& p = paths[i];
    BipPath& q = paths[j];
    for (int pf = 0; pf < 2; ++pf) {
      for (int qf = 0; qf < 2; ++qf) {
        std::uint32_t pe = pf ? p.verts.front() : p.verts.back();
        std::uint32_t qs = qf ? q.verts.back() : q.verts.front();
        if (!opposite(pe, qs)) continue;
        int c = edge_color(pe, qs);
        if (p.color >= 0 && p.color != c) continue;
        if (q.color >= 0 && q.color != c) continue;
        BipPath merged;
        merged.color = c;
        merged.verts = p.verts;
        if (pf) std::reverse(merged.verts.begin(), merged.verts.end());
        std::vector<std::uint32_t> qv = q.verts;
        if (qf) std::reverse(qv.begin(), qv.end());
        merged.verts.insert(merged.verts.end(), qv.begin(), qv.end());
        paths[i] = std::move(merged);
        paths.erase(paths.begin() + static_cast<std::ptrdiff_t>(j));
        return true;
      }
    }
    return false;
  }

  bool merge_pass() {
    for (std::size_t i = 0; i < paths.size(); ++i)
      for (std::size_t j = 0; j < paths.size(); ++j)
        if (i != j && try_merge(i < j ? i : j, i < j ? j : i)) return true;
    return false;
  }

  // Posa rotation at the back of path i (in its own color)
  bool rotate(std::size_t i) {
    BipPath& p = paths[i];
    if (p.verts.size() < 3 || p.color < 0) return false;
    if (rng.below(2)) flip(p);
    std::uint32_t e = p.verts.back();
    std::size_t span = p.verts.size() - 2;
    std::size_t start = rng.below(span);
    for (std::size_t t = 0; t < span; ++t) {
      std::size_t k = (start + t) % span;
      std::uint32_t w = p.verts[k];
      if (opposite(e, w) && edge_color(e, w) == p.color) {
        std::reverse(p.verts.begin() + static_cast<std::ptrdiff_t>(k) + 1, p.verts.end());
        return true;
      }
    }
    return false;
  }

  // move an endpoint of path i onto a compatible end of path j
  bool transfer(std::size_t i, std::size_t j) {
    BipPath& p = paths[i];
    BipPath& q = paths[j];
    for (int pf = 0; pf < 2; ++pf) {
      std::uint32_t e = pf ? p.verts.front() : p.verts.back();
      for (int qf = 0; qf < 2; ++qf) {
        std::uint32_t t = qf ? q.verts.front() : q.verts.back();
        if (!opposite(e, t)) continue;
        int c = edge_color(e, t);
        if (q.color >= 0 && q.color != c) continue;
        // detach e from p
        if (pf)
          p.verts.erase(p.verts.begin());
        else
          p.verts.pop_back();
        if (p.verts.size() <= 1) p.color = -1;
        if (qf)
          q.verts.insert(q.verts.begin(), e);
        else
          q.verts.push_back(e);
        q.color = c;
        if (p.verts.empty()) paths.erase(paths.begin() + static_cast<std::ptrdiff_t>(i));
        return true;
      }
    }
    return false;
  }

  bool run(std::uint32_t step_cap) {
    while (merge_pass()) {
    }
    std::uint32_t steps = 0;
    while (paths.size() > 3 && steps < step_cap) {
      ++steps;
      std::size_t i = rng.below(paths.size());
      if (paths[i].verts.size() >= 3 && rng.below(2) == 0) {
        rotate(i);
      } else {
        std::size_t j = rng.below(paths.size());
        if (i != j && paths[i].verts.size() >= 2) transfer(i, j);
      }
      while (merge_pass()) {
      }
    }
    return paths.size() <= 3;
  }
};

}  // namespace

BipPartition bipartite_3path_partition(const Bip2Col& host, std::uint64_t seed) {
  if (host.mL != host.mR || host.mL == 0)
    throw ParamError("bipartite_3path_partition: host must be a balanced K_{m,m}, m >= 1");
  const std::uint32_t N = host.total();

  auto finish = [&](BipPartition p) {
    // give singletons a concrete color
    for (BipPath& path : p.paths)
      if (path.color < 0) path.color = 0;
    std::string why;
    if (!validate_bip_partition(host, p, &why))
      throw InternalError("bipartite_3path_partition produced an invalid partition: " + why);
    if (p.paths.size() > 3)
      throw InternalError("bipartite_3path_partition returned more than 3 paths");
    return p;
  };

  if (N <= 12) {
    auto p = exhaustive_partition(host);
    if (!p)
      throw InternalError(
          "no partition into <= 3 monochromatic paths exists; counterexample to the contract");
    return finish(std::move(*p));
  }

  LocalSearch ls(host, seed);
  std::vector<std::uint32_t> order;
  const std::uint32_t side = std::max(host.mL, host.mR);
  for (std::uint32_t i = 0; i < side; ++i) {
    if (i < host.mL) order.push_back(i);
    if (i < host.mR) order.push_back(host.mL + i);
  }
  for (std::uint32_t attempt = 0; attempt < 40; ++attempt) {
    ls.insert_all(order);
    if (ls.run(400 + 40 * N)) {
      BipPartition p;
      p.paths = ls.paths;
      return finish(std::move(p));
    }
    ls.rng.shuffle(order);
  }
  throw SearchError("bipartite_3path_partition: local search failed to reach 3 paths");
}

// ---- bipartite Hamiltonian paths with prescribed endpoints ----

std::uint32_t BipGraph::degree(std::uint32_t v) const {
  std::uint32_t d = 0;
  if (left(v)) {
    for (std::uint32_t r = 0; r < mR; ++r) d += at(v, r);
  } else {
    for (std::uint32_t l = 0; l < mL; ++l) d += at(l, v - mL);
  }
  return d;
}

LvCondition las_vergnas_condition(const BipGraph& g) {
  if (g.mL != g.mR || g.mL < 2) throw ParamError("las_vergnas_condition: needs balanced sides, m >= 2");
  const std::uint32_t m = g.mL;
  std::vector<std::uint32_t> du, dv;
  for (std::uint32_t l = 0; l < m; ++l) du.push_back(g.degree(l));
  for (std::uint32_t r = 0; r < m; ++r) dv.push_back(g.degree(m + r));
  std::sort(du.begin(), du.end());
  std::sort(dv.begin(), dv.end());
  LvCondition c;
  for (std::uint32_t j = 1; j <= m; ++j)
    if (du[j - 1] <= j + 1) {
      c.j_defined = true;
      c.j = j;
      c.duj = du[j - 1];
      break;
    }
  for (std::uint32_t k = 1; k <= m; ++k)
    if (dv[k - 1] <= k + 1) {
      c.k_defined = true;
      c.k = k;
      c.dvk = dv[k - 1];
      break;
    }
  c.holds = !(c.j_defined && c.k_defined) || (c.duj + c.dvk >= m + 2);
  return c;
}

namespace {

std::optional<std::vector<std::uint32_t>> ham_fixed_ends_dp(const BipGraph& g, std::uint32_t a,
                                                            std::uint32_t b) {
  const std::uint32_t N = g.total();
  std::vector<std::uint32_t> adj(N, 0);
  for (std::uint32_t l = 0; l < g.mL; ++l)
    for (std::uint32_t r = 0; r < g.mR; ++r)
      if (g.at(l, r)) {
        adj[l] |= 1u << (g.mL + r);
        adj[g.mL + r] |= 1u << l;
      }
  std::vector<std::uint32_t> reach(std::size_t(1) << N, 0);
  reach[1u << a] = 1u << a;
  for (std::uint32_t mask = 1; mask < (1u << N); ++mask) {
    if (!(mask & (1u << a))) continue;
    if (std::popcount(mask) == 1) continue;
    std::uint32_t e = 0;
    for (std::uint32_t rest = mask & ~(1u << a); rest;) {
      std::uint32_t v = static_cast<std::uint32_t>(std::countr_zero(rest));
      rest &= rest - 1;
      if (reach[mask ^ (1u << v)] & adj[v]) e |= 1u << v;
    }
    reach[mask] = e;
  }
  const std::uint32_t full = (1u << N) - 1;
  if (!(reach[full] & (1u << b))) return std::nullopt;
  std::vector<std::uint32_t> rev;
  std::uint32_t mask = full, v = b;
  for (;;) {
    rev.push_back(v);
    std::uint32_t prev = mask ^ (1u << v);
    if (prev == (1u << a)) {
      rev.push_back(a);
      break;
    }
    std::uint32_t cands = reach[prev] & adj[v];
    v = static_cast<std::uint32_t>(std::countr_zero(cands));
    mask = prev;
  }
  return std::vector<std::uint32_t>(rev.rbegin(), rev.rend());
}

std::optional<std::vector<std::uint32_t>> ham_fixed_ends_rotation(const BipGraph& g,
                                                                  std::uint32_t a, std::uint32_t b,
                                                                  std::uint64_t seed) {
  const std::uint32_t N = g.total();
  Rng rng(seed);
  for (std::uint32_t attempt = 0; attempt < 30; ++attempt) {
    std::vector<std::uint32_t> path{a};
    std::vector<std::uint8_t> used(N, 0);
    used[a] = 1;
    used[b] = 1;  // reserved for the final hop
    std::vector<std::uint32_t> pool;
    for (std::uint32_t v = 0; v < N; ++v)
      if (!used[v]) pool.push_back(v);
    rng.shuffle(pool);
    std::uint32_t rotations = 0;
    const std::uint32_t rotation_cap = 50 + 10 * N;
    for (;;) {
      if (path.size() == std::size_t(N) - 1 && g.adjacent(path.back(), b)) {
        path.push_back(b);
        return path;
      }
      bool extended = false;
      for (std::size_t t = 0; t < pool.size(); ++t) {
        if (g.adjacent(path.back(), pool[t])) {
          path.push_back(pool[t]);
          pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(t));
          extended = true;
          break;
        }
      }
      if (extended) continue;
      if (rotations++ >= rotation_cap || path.size() < 3) break;
      // rotate the free end, keeping a pinned
      std::uint32_t e = path.back();
      bool rotated = false;
      std::size_t span = path.size() - 2;
      std::size_t start = span ? rng.below(span) : 0;
      for (std::size_t t = 0; t < span; ++t) {
        std::size_t k = (start + t) % span;
        if (g.adjacent(e, path[k])) {
          std::reverse(path.begin() + static_cast<std::ptrdiff_t>(k) + 1, path.end());
          rotated = true;
          break;
        }
      }
      if (!rotated) break;
    }
  }
  return std::nullopt;
}

}  // namespace

std::optional<std::vector<std::uint32_t>> bip_ham_path_fixed_ends(const BipGraph& g,
                                                                  std::uint32_t a, std::uint32_t b,
                                                                  std::uint64_t seed) {
  if (a == b || a >= g.total() || b >= g.total()) throw ParamError("bip_ham_path: bad endpoints");
  // alternation parity: opposite-side endpoints need balanced sides; same-side
  // endpoints need that side one larger
  const bool la = g.left(a), lb = g.left(b);
  if (la != lb && g.mL != g.mR) return std::nullopt;
  if (la && lb && g.mL != g.mR + 1) return std::nullopt;
  if (!la && !lb && g.mR != g.mL + 1) return std::nullopt;
  if (g.total() <= 20) return ham_fixed_ends_dp(g, a, b);
  return ham_fixed_ends_rotation(g, a, b, seed);
}

LvResult las_vergnas_path(const BipGraph& g, std::uint32_t u_left, std::uint32_t v_right,
                          std::uint64_t seed) {
  if (g.mL != g.mR || g.mL < 2) throw ParamError("las_vergnas_path: needs balanced sides, m >= 2");
  if (u_left >= g.mL || v_right >= g.mR) throw ParamError("las_vergnas_path: endpoints out of range");
  LvResult res;
  res.cond = las_vergnas_condition(g);
  if (!res.cond.holds) return res;
  auto path = bip_ham_path_fixed_ends(g, u_left, g.mL + v_right, seed);
  if (!path) {
    if (g.total() <= 20)
      throw InternalError(
          "las_vergnas_path: degree condition holds but no Hamiltonian path exists "
          "(contradicts the theorem)");
    throw SearchError("las_vergnas_path: rotation search failed on a large instance");
  }
  res.path = std::move(path);
  return res;
}

}  // namespace rdl
