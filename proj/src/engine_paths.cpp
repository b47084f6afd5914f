#include "rdl/engine_paths.hpp"

#include <algorithm>
#include <bit>
#include <functional>

#include "rdl/rng.hpp"

namespace rdl {

namespace {

VertexSet full_prefix(const PrefixColoring& host) {
  VertexSet v(host.n());
  for (std::uint32_t i = 0; i < host.n(); ++i) v[i] = i + 1;
  return v;
}

// adjacency bitmasks over local indices (m <= 32)
std::vector<std::uint32_t> mono_adjacency(const PrefixColoring& host, ColorId color,
                                          const VertexSet& verts) {
  const std::size_t m = verts.size();
  std::vector<std::uint32_t> adj(m, 0);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j) {
      bool edge = host.directed()
                      ? (host.color(verts[i], verts[j]) == color ||
                         host.color(verts[j], verts[i]) == color)
                      : (host.color(verts[i], verts[j]) == color);
      if (edge) {
        adj[i] |= 1u << j;
        adj[j] |= 1u << i;
      }
    }
  return adj;
}

std::string all_forward_word(std::size_t path_len) {
  return path_len >= 2 ? std::string(path_len - 1, 'F') : std::string();
}

}  // namespace

PathWitness longest_mono_path(const PrefixColoring& host, ColorId color, SearchBudgets budgets) {
  return longest_mono_path_in(host, color, full_prefix(host), budgets);
}

PathWitness longest_mono_path_in(const PrefixColoring& host, ColorId color, const VertexSet& verts,
                                 SearchBudgets budgets) {
  const std::size_t m = verts.size();
  if (m == 0) throw ParamError("longest_mono_path: empty vertex set");
  if (m > budgets.undirected_dp)
    throw BudgetError("longest_mono_path: n exceeds the DP budget; use heuristic_long_path");
  auto adj = mono_adjacency(host, color, verts);

  // reach[mask] = set of endpoints of paths spanning exactly mask
  std::vector<std::uint32_t> reach(std::size_t(1) << m, 0);
  std::uint32_t best_mask = 1;
  int best_pop = 1;
  for (std::uint32_t mask = 1; mask < (1u << m); ++mask) {
    std::uint32_t e = 0;
    if (std::popcount(mask) == 1) {
      e = mask;
    } else {
      for (std::uint32_t rest = mask; rest;) {
        std::uint32_t v = static_cast<std::uint32_t>(std::countr_zero(rest));
        rest &= rest - 1;
        if (reach[mask ^ (1u << v)] & adj[v]) e |= 1u << v;
      }
    }
    reach[mask] = e;
    if (e && std::popcount(mask) > best_pop) {
      best_pop = std::popcount(mask);
      best_mask = mask;
    }
  }

  // reconstruct from (best_mask, lowest endpoint)
  PathWitness w;
  w.color = color;
  std::uint32_t mask = best_mask;
  std::uint32_t v = static_cast<std::uint32_t>(std::countr_zero(reach[best_mask]));
  VertexSeq rev;
  for (;;) {
    rev.push_back(verts[v]);
    std::uint32_t prev_mask = mask ^ (1u << v);
    if (!prev_mask) break;
    std::uint32_t cands = reach[prev_mask] & adj[v];
    v = static_cast<std::uint32_t>(std::countr_zero(cands));
    mask = prev_mask;
  }
  w.order.assign(rev.rbegin(), rev.rend());
  if (host.directed()) {
    std::string pat;
    for (std::size_t i = 0; i + 1 < w.order.size(); ++i)
      pat += host.color(w.order[i], w.order[i + 1]) == color ? 'F' : 'B';
    w.pattern = pat;
  }
  return w;
}

PathWitness longest_mono_cycle_in(const PrefixColoring& host, ColorId color, const VertexSet& verts,
                                  SearchBudgets budgets) {
  const std::size_t m = verts.size();
  if (m == 0) throw ParamError("longest_mono_cycle: empty vertex set");
  if (m > budgets.undirected_dp) throw BudgetError("longest_mono_cycle: past DP budget");
  auto adj = mono_adjacency(host, color, verts);
  // paths anchored at the lowest vertex of their mask; a cycle closes with an
  // edge from the endpoint back to the anchor
  std::vector<std::uint32_t> reach(std::size_t(1) << m, 0);
  std::uint32_t best_mask = 0, best_end = 0;
  int best_pop = 0;
  for (std::uint32_t mask = 1; mask < (1u << m); ++mask) {
    const std::uint32_t anchor = static_cast<std::uint32_t>(std::countr_zero(mask));
    std::uint32_t e = 0;
    if (std::popcount(mask) == 1) {
      e = mask;
    } else {
      for (std::uint32_t rest = mask & ~(1u << anchor); rest;) {
        std::uint32_t v = static_cast<std::uint32_t>(std::countr_zero(rest));
        rest &= rest - 1;
        if (reach[mask ^ (1u << v)] & adj[v]) e |= 1u << v;
      }
    }
    reach[mask] = e;
    if (std::popcount(mask) >= 3 && std::popcount(mask) > best_pop) {
      std::uint32_t closers = e & adj[anchor] & ~(1u << anchor);
      if (closers) {
        best_pop = std::popcount(mask);
        best_mask = mask;
        best_end = static_cast<std::uint32_t>(std::countr_zero(closers));
      }
    }
  }
  PathWitness w;
  w.color = color;
  if (!best_mask) return w;  // acyclic in this color
  std::uint32_t mask = best_mask, v = best_end;
  const std::uint32_t anchor = static_cast<std::uint32_t>(std::countr_zero(best_mask));
  VertexSeq rev;
  for (;;) {
    rev.push_back(verts[v]);
    std::uint32_t prev_mask = mask ^ (1u << v);
    if (prev_mask == (1u << anchor)) {
      rev.push_back(verts[anchor]);
      break;
    }
    std::uint32_t cands = reach[prev_mask] & adj[v];
    v = static_cast<std::uint32_t>(std::countr_zero(cands));
    mask = prev_mask;
  }
  w.order.assign(rev.rbegin(), rev.rend());
  return w;
}

namespace {

// dir_at(arc_index): +1 the arc must run earlier->later along the traversal,
// -1 the reverse, 0 either
PathWitness oriented_dp(const PrefixColoring& host, ColorId color, const VertexSet& verts,
                        const std::function<int(std::size_t)>& dir_at, std::size_t max_len) {
  const std::size_t m = verts.size();
  std::vector<std::uint32_t> in(m, 0), out(m, 0);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      if (i == j) continue;
      if (host.color(verts[i], verts[j]) == color) {
        out[i] |= 1u << j;
        in[j] |= 1u << i;
      }
    }
  std::vector<std::uint32_t> reach(std::size_t(1) << m, 0);
  std::uint32_t best_mask = 1;
  int best_pop = 1;
  for (std::uint32_t mask = 1; mask < (1u << m); ++mask) {
    std::uint32_t e = 0;
    const int pop = std::popcount(mask);
    if (pop == 1) {
      e = mask;
    } else if (static_cast<std::size_t>(pop) <= max_len) {
      const int dir = dir_at(static_cast<std::size_t>(pop) - 2);
      for (std::uint32_t rest = mask; rest;) {
        std::uint32_t v = static_cast<std::uint32_t>(std::countr_zero(rest));
        rest &= rest - 1;
        std::uint32_t prev = reach[mask ^ (1u << v)];
        bool ok = false;
        if (dir >= 0 && (prev & in[v])) ok = true;          // arc prev -> v
        if (!ok && dir <= 0 && (prev & out[v])) ok = true;  // arc v -> prev
        if (ok) e |= 1u << v;
      }
    }
    reach[mask] = e;
    if (e && pop > best_pop) {
      best_pop = pop;
      best_mask = mask;
    }
  }
  // reconstruct
  std::uint32_t mask = best_mask;
  std::uint32_t v = static_cast<std::uint32_t>(std::countr_zero(reach[best_mask]));
  VertexSeq rev;
  std::string rev_pat;
  for (;;) {
    rev.push_back(verts[v]);
    std::uint32_t prev_mask = mask ^ (1u << v);
    if (!prev_mask) break;
    const int dir = dir_at(static_cast<std::size_t>(std::popcount(mask)) - 2);
    std::uint32_t cands_f = dir >= 0 ? (reach[prev_mask] & in[v]) : 0;
    std::uint32_t cands_b = dir <= 0 ? (reach[prev_mask] & out[v]) : 0;
    if (cands_f) {
      v = static_cast<std::uint32_t>(std::countr_zero(cands_f));
      rev_pat += 'F';
    } else {
      v = static_cast<std::uint32_t>(std::countr_zero(cands_b));
      rev_pat += 'B';
    }
    mask = prev_mask;
  }
  PathWitness w;
  w.color = color;
  w.order.assign(rev.rbegin(), rev.rend());
  w.pattern.assign(rev_pat.rbegin(), rev_pat.rend());
  return w;
}

}  // namespace

PathWitness longest_oriented_path(const PrefixColoring& host, ColorId color, OrientPattern pat,
                                  const std::string& word, SearchBudgets budgets) {
  return longest_oriented_path_in(host, color, pat, full_prefix(host), word, budgets);
}

PathWitness longest_oriented_path_in(const PrefixColoring& host, ColorId color, OrientPattern pat,
                                     const VertexSet& verts, const std::string& word,
                                     SearchBudgets budgets) {
  if (!host.directed()) throw ParamError("longest_oriented_path: host must be directed");
  const std::size_t m = verts.size();
  if (m == 0) throw ParamError("longest_oriented_path: empty vertex set");
  if (m > budgets.directed_dp) throw BudgetError("longest_oriented_path: n exceeds the DP budget");
  switch (pat) {
    case OrientPattern::Consistent:
      return oriented_dp(host, color, verts, [](std::size_t) { return +1; }, m);
    case OrientPattern::Unconstrained:
      return oriented_dp(host, color, verts, [](std::size_t) { return 0; }, m);
    case OrientPattern::Word: {
      if (word.empty()) throw ParamError("longest_oriented_path: empty word");
      for (char c : word)
        if (c != 'F' && c != 'B') throw ParamError("longest_oriented_path: bad word letter");
      return oriented_dp(
          host, color, verts,
          [&word](std::size_t i) { return word[std::min(i, word.size() - 1)] == 'F' ? +1 : -1; },
          word.size() + 1);
    }
    case OrientPattern::AntiDirected: {
      auto run = [&](char first) {
        return oriented_dp(
            host, color, verts,
            [first](std::size_t i) {
              char c = (i % 2 == 0) ? first : (first == 'F' ? 'B' : 'F');
              return c == 'F' ? +1 : -1;
            },
            m);
      };
      PathWitness a = run('F'), b = run('B');
      return a.size() >= b.size() ? a : b;
    }
  }
  throw ParamError("bad pattern");
}

void absorb_pass(const PrefixColoring& host, ColorId color, VertexSeq& order,
                 std::vector<Vertex> pool, std::uint32_t scan_cap) {
  auto edge = [&](Vertex a, Vertex b) {
    return host.directed() ? (host.color(a, b) == color || host.color(b, a) == color)
                           : (host.color(a, b) == color);
  };
  bool grew = true;
  while (grew && !pool.empty()) {
    grew = false;
    for (std::size_t pi = pool.size(); pi-- > 0;) {
      Vertex w = pool[pi];
      std::size_t scans = std::min<std::size_t>(order.size() > 0 ? order.size() - 1 : 0, scan_cap);
      for (std::size_t i = 0; i < scans; ++i) {
        if (edge(order[i], w) && edge(w, order[i + 1])) {
          order.insert(order.begin() + static_cast<std::ptrdiff_t>(i) + 1, w);
          pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(pi));
          grew = true;
          break;
        }
      }
    }
  }
}

namespace {

PathWitness rotation_extension(const PrefixColoring& host, ColorId color, const VertexSet& verts,
                               const HeuristicOptions& opt) {
  const std::size_t m = verts.size();
  auto edge = [&](Vertex a, Vertex b) {
    return host.directed() ? (host.color(a, b) == color || host.color(b, a) == color)
                           : (host.color(a, b) == color);
  };
  VertexSeq best;
  Rng rng(opt.seed);
  for (std::uint32_t attempt = 0; attempt < opt.restarts; ++attempt) {
    std::vector<Vertex> pool = verts;
    rng.shuffle(pool);
    VertexSeq path;
    path.push_back(pool.back());
    pool.pop_back();
    std::uint32_t rotations = 0;
    bool progress = true;
    while (progress) {
      progress = false;
      for (int side = 0; side < 2 && !pool.empty(); ++side) {
        Vertex end = side == 0 ? path.back() : path.front();
        std::size_t scans = std::min<std::size_t>(pool.size(), opt.scan_cap);
        for (std::size_t t = 0; t < scans; ++t) {
          std::size_t idx = pool.size() - 1 - t;
          if (edge(end, pool[idx])) {
            Vertex v = pool[idx];
            pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(idx));
            if (side == 0)
              path.push_back(v);
            else
              path.insert(path.begin(), v);
            progress = true;
            break;
          }
        }
      }
      if (progress || pool.empty()) continue;
      if (rotations >= opt.rotation_cap || path.size() < 3) break;
      // Posa rotation: an edge from the endpoint back into the path pivots
      // the suffix and exposes a fresh endpoint
      bool rotated = false;
      for (int side = 0; side < 2 && !rotated; ++side) {
        Vertex e = path.back();
        std::size_t len = path.size();
        std::size_t span = len - 2;
        std::size_t start = span ? rng.below(span) : 0;
        for (std::size_t t = 0; t < span; ++t) {
          std::size_t i = (start + t) % span;
          if (edge(e, path[i])) {
            std::reverse(path.begin() + static_cast<std::ptrdiff_t>(i) + 1, path.end());
            rotated = true;
            break;
          }
        }
        if (!rotated) std::reverse(path.begin(), path.end());
      }
      if (!rotated) break;
      ++rotations;
      progress = true;
    }
    if (opt.absorb && !pool.empty()) absorb_pass(host, color, path, pool, opt.scan_cap);
    if (path.size() > best.size()) best = path;
    if (best.size() == m) break;
  }
  PathWitness w;
  w.color = color;
  w.order = best;
  if (host.directed()) {
    std::string pat;
    for (std::size_t i = 0; i + 1 < w.order.size(); ++i)
      pat += host.color(w.order[i], w.order[i + 1]) == color ? 'F' : 'B';
    w.pattern = pat;
  }
  std::string why;
  if (!validate_path(host, w, &why)) throw InternalError("heuristic produced invalid path: " + why);
  return w;
}

}  // namespace

PathWitness heuristic_long_path(const PrefixColoring& host, ColorId color, HeuristicOptions opt) {
  return heuristic_long_path_in(host, color, full_prefix(host), opt);
}

PathWitness heuristic_long_path_in(const PrefixColoring& host, ColorId color,
                                   const VertexSet& verts, HeuristicOptions opt) {
  if (verts.empty()) throw ParamError("heuristic_long_path: empty vertex set");
  return rotation_extension(host, color, verts, opt);
}

PathWitness heuristic_consistent_path(const PrefixColoring& host, ColorId color,
                                      HeuristicOptions opt) {
  if (!host.directed()) throw ParamError("heuristic_consistent_path: host must be directed");
  const std::uint32_t n = host.n();
  Rng rng(opt.seed);
  VertexSeq best;
  for (std::uint32_t attempt = 0; attempt < opt.restarts; ++attempt) {
    std::vector<Vertex> pool(n);
    for (std::uint32_t i = 0; i < n; ++i) pool[i] = i + 1;
    rng.shuffle(pool);
    std::vector<std::uint8_t> used(n + 1, 0);
    VertexSeq path;
    path.push_back(pool[0]);
    used[pool[0]] = 1;
    bool progress = true;
    while (progress) {
      progress = false;
      Vertex tail = path.back();
      std::size_t scans = 0;
      for (Vertex cand : pool) {
        if (used[cand]) continue;
        if (++scans > opt.scan_cap) break;
        if (host.color(tail, cand) == color) {
          path.push_back(cand);
          used[cand] = 1;
          progress = true;
          break;
        }
      }
      if (progress) continue;
      Vertex head = path.front();
      scans = 0;
      for (Vertex cand : pool) {
        if (used[cand]) continue;
        if (++scans > opt.scan_cap) break;
        if (host.color(cand, head) == color) {
          path.insert(path.begin(), cand);
          used[cand] = 1;
          progress = true;
          break;
        }
      }
    }
    if (path.size() > best.size()) best = path;
  }
  PathWitness w;
  w.color = color;
  w.order = best;
  w.pattern = all_forward_word(best.size());
  std::string why;
  if (!validate_path(host, w, &why))
    throw InternalError("heuristic consistent path invalid: " + why);
  return w;
}

PathWitness best_long_path_in(const PrefixColoring& host, ColorId color, const VertexSet& verts,
                              SearchBudgets budgets, HeuristicOptions opt) {
  if (!host.directed() && verts.size() <= budgets.undirected_dp)
    return longest_mono_path_in(host, color, verts, budgets);
  if (host.directed() && verts.size() <= budgets.directed_dp)
    return longest_oriented_path_in(host, color, OrientPattern::Unconstrained, verts, "", budgets);
  return heuristic_long_path_in(host, color, verts, opt);
}

}  // namespace rdl
