#include "rdl/connected.hpp"

#include <algorithm>
#include <array>
#include <map>

#include <nlohmann/json.hpp>

#include "rdl/engine_component.hpp"

namespace rdl {

namespace {

bool fail(std::string* why, const std::string& msg) {
  if (why) *why = msg;
  return false;
}

bool color_connected(const PrefixColoring& host, const VertexSet& verts, ColorId c) {
  if (verts.size() <= 1) return true;
  std::vector<std::uint8_t> seen(verts.size(), 0);
  std::vector<std::size_t> stack{0};
  seen[0] = 1;
  std::size_t reached = 1;
  while (!stack.empty()) {
    std::size_t i = stack.back();
    stack.pop_back();
    for (std::size_t j = 0; j < verts.size(); ++j)
      if (!seen[j] && host.color(verts[i], verts[j]) == c) {
        seen[j] = 1;
        ++reached;
        stack.push_back(j);
      }
  }
  return reached == verts.size();
}

bool block_complete(const PrefixColoring& host, const VertexSet& A, const VertexSet& B, ColorId c,
                    std::size_t& checked) {
  for (Vertex a : A)
    for (Vertex b : B) {
      ++checked;
      if (host.color(a, b) != c) return false;
    }
  return true;
}

bool block_avoids(const PrefixColoring& host, const VertexSet& A, const VertexSet& B, ColorId c,
                  std::size_t& checked) {
  for (Vertex a : A)
    for (Vertex b : B) {
      ++checked;
      if (host.color(a, b) == c) return false;
    }
  return true;
}

VertexSet set_minus(const VertexSet& a, const VertexSet& b) {
  VertexSet out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

VertexSet set_and(const VertexSet& a, const VertexSet& b) {
  VertexSet out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

VertexSet set_or(const VertexSet& a, const VertexSet& b) {
  VertexSet out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

}  // namespace

TrichotomyCertificate trichotomy(const PrefixColoring& host) {
  if (host.num_colors() != 3 || host.directed())
    throw ParamError("trichotomy: needs an undirected 3-coloring");
  if (host.n() < 2) throw ParamError("trichotomy: n >= 2");
  const std::uint32_t n = host.n();
  VertexSet all;
  for (Vertex v = 1; v <= n; ++v) all.push_back(v);

  // maximal monochromatic component of largest size (size-maximal implies
  // maximal); ties by color order then lowest vertex
  ComponentResult bigB = largest_mono_component(host);
  TrichotomyCertificate cert;
  cert.blue = bigB.color;
  VertexSet B = bigB.members;
  VertexSet U = set_minus(all, B);
  if (U.empty()) {
    cert.case_tag = 1;
    cert.W = B;
    cert.red = (cert.blue + 1) % 3;
    cert.green = (cert.blue + 2) % 3;
    return cert;
  }

  // maximal component meeting both B and U; its color cannot be blue
  VertexSet R;
  ColorId red = -1;
  for (ColorId c = 0; c < 3; ++c) {
    if (c == cert.blue) continue;
    for (const VertexSet& comp : color_components(host, c)) {
      if (set_and(comp, B).empty() || set_and(comp, U).empty()) continue;
      if (comp.size() > R.size()) {
        R = comp;
        red = c;
      }
    }
  }
  if (red < 0) throw InternalError("trichotomy: no component meets both B and its complement");
  cert.red = red;
  cert.green = 3 - cert.blue - cert.red;

  VertexSet UminusR = set_minus(U, R);
  if (!UminusR.empty()) {
    cert.case_tag = 2;
    cert.W = set_and(B, R);
    cert.X = set_minus(B, R);
    cert.Y = set_and(U, R);
    cert.Z = UminusR;
  } else {
    // U ⊆ R: the green component swallowing U ∪ (B \ R)
    VertexSet G;
    for (const VertexSet& comp : color_components(host, cert.green))
      if (!set_and(comp, U).empty() && comp.size() > G.size()) G = comp;
    cert.case_tag = 3;
    cert.W = set_and(set_and(B, R), G);
    cert.X = set_minus(B, G);
    cert.Y = set_minus(B, R);
    cert.Z = U;
  }
  std::string why;
  if (!validate_trichotomy(host, cert, &why))
    throw InternalError("trichotomy certificate failed validation: " + why);
  return cert;
}

bool validate_trichotomy(const PrefixColoring& host, TrichotomyCertificate& cert,
                         std::string* why) {
  cert.transcript.clear();
  const std::uint32_t n = host.n();
  auto all_parts = [&]() {
    VertexSet u = set_or(set_or(cert.W, cert.X), set_or(cert.Y, cert.Z));
    return u;
  };
  // parts must partition [n]
  VertexSet u = all_parts();
  if (u.size() != cert.W.size() + cert.X.size() + cert.Y.size() + cert.Z.size())
    return fail(why, "parts overlap");
  if (u.size() != n || (n && (u.front() != 1 || u.back() != n)))
    return fail(why, "parts do not cover the prefix");

  std::size_t checked = 0;
  auto record = [&](const std::string& label, std::size_t c) { cert.transcript.emplace_back(label, c); };

  switch (cert.case_tag) {
    case 1: {
      if (cert.W.size() != n) return fail(why, "case 1 needs a spanning part");
      if (!color_connected(host, cert.W, cert.blue)) return fail(why, "case 1 color does not span");
      record("spanning", n);
      return true;
    }
    case 2: {
      if (cert.W.empty() || cert.X.empty() || cert.Y.empty() || cert.Z.empty())
        return fail(why, "case 2 needs all parts nonempty");
      struct Blk {
        const VertexSet *A, *B;
        ColorId c;
        const char* label;
      };
      const Blk blocks[6] = {
          {&cert.W, &cert.X, cert.blue, "[W,X] blue"},  {&cert.Y, &cert.Z, cert.blue, "[Y,Z] blue"},
          {&cert.W, &cert.Y, cert.red, "[W,Y] red"},    {&cert.X, &cert.Z, cert.red, "[X,Z] red"},
          {&cert.W, &cert.Z, cert.green, "[W,Z] green"}, {&cert.X, &cert.Y, cert.green, "[X,Y] green"}};
      for (const Blk& b : blocks) {
        checked = 0;
        if (!block_complete(host, *b.A, *b.B, b.c, checked))
          return fail(why, std::string("case 2 block not complete: ") + b.label);
        record(b.label, checked);
      }
      return true;
    }
    case 3: {
      if (cert.X.empty() || cert.Y.empty() || cert.Z.empty())
        return fail(why, "case 3 needs X, Y, Z nonempty");
      checked = 0;
      if (!block_complete(host, cert.X, cert.Y, cert.blue, checked))
        return fail(why, "case 3: [X,Y] not blue");
      record("[X,Y] blue", checked);
      checked = 0;
      if (!block_complete(host, cert.X, cert.Z, cert.red, checked))
        return fail(why, "case 3: [X,Z] not red");
      record("[X,Z] red", checked);
      checked = 0;
      if (!block_complete(host, cert.Y, cert.Z, cert.green, checked))
        return fail(why, "case 3: [Y,Z] not green");
      record("[Y,Z] green", checked);
      checked = 0;
      if (!block_avoids(host, cert.W, cert.X, cert.green, checked))
        return fail(why, "case 3: green edge in [W,X]");
      record("[W,X] no green", checked);
      checked = 0;
      if (!block_avoids(host, cert.W, cert.Y, cert.red, checked))
        return fail(why, "case 3: red edge in [W,Y]");
      record("[W,Y] no red", checked);
      checked = 0;
      if (!block_avoids(host, cert.W, cert.Z, cert.blue, checked))
        return fail(why, "case 3: blue edge in [W,Z]");
      record("[W,Z] no blue", checked);
      VertexSet Bset = set_or(set_or(cert.W, cert.X), cert.Y);
      VertexSet Rset = set_or(set_or(cert.W, cert.X), cert.Z);
      VertexSet Gset = set_or(set_or(cert.W, cert.Y), cert.Z);
      if (!color_connected(host, Bset, cert.blue)) return fail(why, "case 3: W∪X∪Y not blue-connected");
      if (!color_connected(host, Rset, cert.red)) return fail(why, "case 3: W∪X∪Z not red-connected");
      if (!color_connected(host, Gset, cert.green)) return fail(why, "case 3: W∪Y∪Z not green-connected");
      record("connectivity", Bset.size() + Rset.size() + Gset.size());
      return true;
    }
    default:
      return fail(why, "bad case tag");
  }
}

std::vector<int> trichotomy_case_probe(const PrefixColoring& host) {
  std::vector<int> valid;
  TrichotomyCertificate base = trichotomy(host);
  valid.push_back(base.case_tag);
  return valid;
}

nlohmann::json TrichotomyCertificate::to_json() const {
  nlohmann::json t = nlohmann::json::array();
  for (auto& [label, count] : transcript) t.push_back({{"block", label}, {"checked", count}});
  return nlohmann::json{{"case", case_tag},
                        {"W", W},
                        {"X", X},
                        {"Y", Y},
                        {"Z", Z},
                        {"blue", blue},
                        {"red", red},
                        {"green", green},
                        {"w_empty", W.empty()},
                        {"validation", t}};
}

int case2_extension_fit(const PrefixColoring& host_np1, const TrichotomyCertificate& cert) {
  const Vertex v = host_np1.n();
  // escape into case 1: some color spans [n+1]
  VertexSet all;
  for (Vertex x = 1; x <= v; ++x) all.push_back(x);
  for (ColorId c = 0; c < 3; ++c)
    if (color_connected(host_np1, all, c)) return -1;

  int fits = 0;
  const VertexSet* parts[4] = {&cert.W, &cert.X, &cert.Y, &cert.Z};
  for (int pi = 0; pi < 4; ++pi) {
    TrichotomyCertificate ext = cert;
    VertexSet* tgt[4] = {&ext.W, &ext.X, &ext.Y, &ext.Z};
    tgt[pi]->push_back(v);
    std::sort(tgt[pi]->begin(), tgt[pi]->end());
    ext.case_tag = 2;
    std::string why;
    if (validate_trichotomy(host_np1, ext, &why)) ++fits;
  }
  (void)parts;
  return fits;
}

namespace {

// connectivity flags of each prefix of [N] per color, computed incrementally
std::vector<std::vector<std::uint8_t>> prefix_connects(const PrefixColoring& host,
                                                       const std::vector<std::uint64_t>& cps) {
  const std::uint32_t N = host.n();
  const int r = host.num_colors();
  std::vector<std::vector<std::uint8_t>> flags(static_cast<std::size_t>(r),
                                               std::vector<std::uint8_t>(cps.size(), 0));
  for (int c = 0; c < r; ++c) {
    DisjointSets ds(N);
    std::uint32_t comps = 0;
    std::size_t ci = 0;
    for (Vertex v = 1; v <= N && ci < cps.size(); ++v) {
      ++comps;
      for (Vertex u = 1; u < v; ++u)
        if (host.color(u, v) == c && ds.find(u) != ds.find(v)) {
          ds.unite(u, v);
          --comps;
        }
      while (ci < cps.size() && cps[ci] == v) {
        flags[static_cast<std::size_t>(c)][ci] = (comps == 1 || v == 1) ? 1 : 0;
        ++ci;
      }
    }
  }
  return flags;
}

}  // namespace

SudTreeResult sud_tree_2col(const ColoringSpec& spec, std::uint32_t N,
                            const std::vector<std::uint64_t>& checkpoints) {
  if (spec.num_colors != 2 || spec.directed) throw ParamError("sud_tree_2col: undirected 2-coloring");
  auto host = materialize(spec, N);
  auto flags = prefix_connects(host, checkpoints);
  // a prefix complete graph is connected in some color at every checkpoint
  std::array<std::size_t, 2> hits{0, 0};
  for (std::size_t i = 0; i < checkpoints.size(); ++i) {
    if (!flags[0][i] && !flags[1][i])
      throw InternalError("sud_tree_2col: no color connects a prefix (contradicts the remark)");
    hits[0] += flags[0][i];
    hits[1] += flags[1][i];
  }
  SudTreeResult res;
  res.color = hits[0] >= hits[1] ? 0 : 1;
  for (Vertex v = 1; v <= N; ++v) res.component.push_back(v);
  res.profile.kind = DensityKind::StrongUpper;
  res.profile.checkpoints = checkpoints;
  res.profile.tail_start = default_tail_start(checkpoints.size());
  for (std::size_t i = 0; i < checkpoints.size(); ++i) {
    res.profile.values.push_back(Ratio(1));
    res.profile.flagged.push_back(flags[static_cast<std::size_t>(res.color)][i]);
  }
  res.note = "majority-connected-color";
  return res;
}

SudTreeResult sud_tree_3col(const ColoringSpec& spec, std::uint32_t N,
                            const std::vector<std::uint64_t>& checkpoints) {
  if (spec.num_colors != 3 || spec.directed) throw ParamError("sud_tree_3col: undirected 3-coloring");
  auto host = materialize(spec, N);

  struct Entry {
    std::uint64_t n;
    TrichotomyCertificate cert;
  };
  std::vector<Entry> entries;
  for (std::uint64_t n : checkpoints) {
    if (n < 2 || n > N) continue;
    auto sub = materialize(spec, static_cast<std::uint32_t>(n));
    entries.push_back({n, trichotomy(sub)});
  }
  if (entries.empty()) throw ParamError("sud_tree_3col: no usable checkpoints");

  auto finish_with_component = [&](ColorId c, const VertexSet& T, const std::string& note) {
    SudTreeResult out;
    out.color = c;
    out.component = T;
    out.note = note;
    out.profile.kind = DensityKind::StrongUpper;
    out.profile.checkpoints = checkpoints;
    out.profile.tail_start = default_tail_start(checkpoints.size());
    for (std::uint64_t n : checkpoints) {
      VertexSet pref(T.begin(), std::upper_bound(T.begin(), T.end(), n));
      bool conn = color_connected(host, pref, c) && !pref.empty();
      out.profile.values.push_back(
          Ratio(static_cast<std::int64_t>(pref.size()), static_cast<std::int64_t>(n)));
      out.profile.flagged.push_back(conn ? 1 : 0);
    }
    return out;
  };

  // regime 1: a recurring spanning color
  std::array<std::size_t, 3> span_hits{0, 0, 0};
  std::uint64_t best_span_n[3] = {0, 0, 0};
  for (const Entry& e : entries)
    if (e.cert.case_tag == 1) {
      ++span_hits[static_cast<std::size_t>(e.cert.blue)];
      best_span_n[e.cert.blue] = std::max(best_span_n[e.cert.blue], e.n);
    }
  std::size_t total_span = span_hits[0] + span_hits[1] + span_hits[2];
  if (2 * total_span >= entries.size()) {
    ColorId c = 0;
    for (ColorId d = 1; d < 3; ++d)
      if (span_hits[d] > span_hits[c]) c = d;
    VertexSet T;
    for (Vertex v = 1; v <= best_span_n[c]; ++v) T.push_back(v);
    if (!T.empty()) return finish_with_component(c, T, "recurring-spanning-color");
  }

  // regime 2: a case-2 checkpoint extends vertex by vertex; the largest block
  // pair of one color has at least half the vertices
  for (const Entry& e : entries) {
    if (e.cert.case_tag != 2) continue;
    TrichotomyCertificate cur = e.cert;
    std::uint64_t n = e.n;
    bool ok = true;
    for (Vertex v = static_cast<Vertex>(n) + 1; v <= N && ok; ++v) {
      auto sub = materialize(spec, v);
      int fit = case2_extension_fit(sub, cur);
      if (fit == -1 || fit == 0) {
        ok = false;  // prefix left the case-2 regime
        break;
      }
      // apply the unique (or first) fitting part
      for (int pi = 0; pi < 4; ++pi) {
        TrichotomyCertificate ext = cur;
        VertexSet* tgt[4] = {&ext.W, &ext.X, &ext.Y, &ext.Z};
        tgt[pi]->push_back(v);
        std::sort(tgt[pi]->begin(), tgt[pi]->end());
        std::string why;
        if (validate_trichotomy(sub, ext, &why)) {
          cur = ext;
          break;
        }
      }
    }
    if (!ok) continue;
    // pick the densest block pair among the three colors
    struct Cand {
      ColorId c;
      VertexSet T;
    };
    std::vector<Cand> cands = {{cur.blue, set_or(cur.W, cur.X)}, {cur.blue, set_or(cur.Y, cur.Z)},
                               {cur.red, set_or(cur.W, cur.Y)},  {cur.red, set_or(cur.X, cur.Z)},
                               {cur.green, set_or(cur.W, cur.Z)}, {cur.green, set_or(cur.X, cur.Y)}};
    std::size_t best = 0;
    for (std::size_t i = 1; i < cands.size(); ++i)
      if (cands[i].T.size() > cands[best].T.size()) best = i;
    return finish_with_component(cands[best].c, cands[best].T, "case-2-block-pair");
  }

  // regime 3: case-3 bookkeeping over the recorded checkpoints
  struct Piece {
    std::uint64_t n;
    ColorId c;
    VertexSet S;
  };
  std::vector<Piece> pieces;
  for (const Entry& e : entries) {
    if (e.cert.case_tag != 3) continue;
    const auto& ct = e.cert;
    const std::pair<ColorId, VertexSet> sets[3] = {
        {ct.blue, set_or(set_or(ct.W, ct.X), ct.Y)},
        {ct.red, set_or(set_or(ct.W, ct.X), ct.Z)},
        {ct.green, set_or(set_or(ct.W, ct.Y), ct.Z)}};
    int big = 0;
    for (const auto& [c, S] : sets) {
      if (2 * S.size() >= e.n) {
        ++big;
        pieces.push_back({e.n, c, S});
      }
    }
    if (big < 2)
      throw InternalError("sud_tree_3col: fewer than two half-size components at a case-3 checkpoint");
  }
  if (pieces.empty()) {
    // no regime matched (e.g. single tiny checkpoint); return the largest
    // monochromatic component of the full prefix
    auto comp = largest_mono_component(host);
    return finish_with_component(comp.color, comp.members, "fallback-largest-component");
  }

  // best glued chain per color, and the best single certified piece
  SudTreeResult best;
  bool have = false;
  auto consider = [&](SudTreeResult cand) {
    if (!have || best.profile.record_upper() < cand.profile.record_upper()) {
      best = std::move(cand);
      have = true;
    }
  };
  for (ColorId c = 0; c < 3; ++c) {
    VertexSet glued;
    bool started = false;
    for (const Piece& p : pieces) {
      if (p.c != c) continue;
      if (!started) {
        glued = p.S;
        started = true;
        continue;
      }
      bool touch = !set_and(glued, p.S).empty();
      if (!touch) {
        // a c-colored edge between the pieces also glues them
        for (Vertex a : glued) {
          for (Vertex b : p.S)
            if (a != b && host.color(a, b) == c) {
              touch = true;
              break;
            }
          if (touch) break;
        }
      }
      if (touch) glued = set_or(glued, p.S);
    }
    if (!started) continue;
    consider(finish_with_component(c, glued, "case-3-glued-chain"));
  }
  for (const Piece& p : pieces)
    consider(finish_with_component(p.c, p.S, "case-3-single-piece"));
  return best;
}

}  // namespace rdl
