#include "rdl/coloring.hpp"

#include <algorithm>

#include <nlohmann/json.hpp>

#include "rdl/rng.hpp"

namespace rdl {

std::string scheme_name(Scheme s) {
  switch (s) {
    case Scheme::DirectedResidue: return "directed-residue-k";
    case Scheme::DirectedGrowth: return "directed-growth";
    case Scheme::Affine: return "affine";
    case Scheme::StrongLower: return "strong-lower";
    case Scheme::AffineLower3: return "affine-lower-3";
    case Scheme::EgStrong23: return "eg-strong-2-3";
    case Scheme::EgUpper89: return "eg-upper-8-9";
    case Scheme::BoundedIndependence: return "bounded-independence";
    case Scheme::Explicit: return "explicit";
    case Scheme::SeededRandom: return "seeded-random";
  }
  throw ParamError("bad scheme");
}

Scheme scheme_from_name(const std::string& name) {
  static const std::pair<const char*, Scheme> table[] = {
      {"directed-residue-k", Scheme::DirectedResidue},
      {"directed-growth", Scheme::DirectedGrowth},
      {"affine", Scheme::Affine},
      {"strong-lower", Scheme::StrongLower},
      {"affine-lower-3", Scheme::AffineLower3},
      {"eg-strong-2-3", Scheme::EgStrong23},
      {"eg-upper-8-9", Scheme::EgUpper89},
      {"bounded-independence", Scheme::BoundedIndependence},
      {"explicit", Scheme::Explicit},
      {"seeded-random", Scheme::SeededRandom},
  };
  for (auto& [n, s] : table)
    if (name == n) return s;
  throw ParamError("unknown scheme: " + name);
}

std::uint64_t GrowthFn::operator()(std::uint64_t n) const {
  switch (kind) {
    case Kind::Identity: return n;
    case Kind::Constant: return static_cast<std::uint64_t>(a);
    case Kind::Linear: return static_cast<std::uint64_t>(a) * n;
    case Kind::Power: {
      std::uint64_t r = 1;
      for (std::int64_t i = 0; i < a; ++i) r *= n;
      return r;
    }
  }
  throw ParamError("bad growth fn");
}

nlohmann::json GrowthFn::to_json() const {
  nlohmann::json j;
  switch (kind) {
    case Kind::Identity: j["name"] = "identity"; break;
    case Kind::Constant: j["name"] = "constant"; j["a"] = a; break;
    case Kind::Linear: j["name"] = "linear"; j["a"] = a; break;
    case Kind::Power: j["name"] = "power"; j["a"] = a; break;
  }
  return j;
}

GrowthFn GrowthFn::from_json(const nlohmann::json& j) {
  GrowthFn f;
  const std::string name = j.at("name").get<std::string>();
  if (name == "identity") f.kind = Kind::Identity;
  else if (name == "constant") f.kind = Kind::Constant;
  else if (name == "linear") f.kind = Kind::Linear;
  else if (name == "power") f.kind = Kind::Power;
  else throw ParamError("unknown growth fn: " + name);
  if (j.contains("a")) f.a = j.at("a").get<std::int64_t>();
  if (f.a < 1) throw ParamError("growth fn parameter must be >= 1");
  return f;
}

bool is_prime(std::int64_t q) {
  if (q < 2) return false;
  for (std::int64_t d = 2; d * d <= q; ++d)
    if (q % d == 0) return false;
  return true;
}

void ColoringSpec::validate() const {
  if (num_colors < 1) throw ParamError("num_colors must be >= 1");
  switch (scheme) {
    case Scheme::DirectedResidue:
      if (k < 2) throw ParamError("directed-residue-k needs k >= 2");
      if (!directed || num_colors != 2) throw ParamError("directed-residue-k is a directed 2-coloring");
      break;
    case Scheme::DirectedGrowth:
      if (!h.increasing_unbounded()) throw ParamError("directed-growth needs an increasing unbounded h");
      if (!directed || num_colors != 3) throw ParamError("directed-growth is a directed 3-coloring");
      break;
    case Scheme::Affine:
      if (!is_prime(q)) throw ParamError("affine needs a prime q");
      if (directed || num_colors != q + 1) throw ParamError("affine is an undirected (q+1)-coloring");
      break;
    case Scheme::StrongLower:
      if (directed || num_colors != 2) throw ParamError("strong-lower is an undirected 2-coloring");
      break;
    case Scheme::AffineLower3:
      if (directed || num_colors != 3) throw ParamError("affine-lower-3 is an undirected 3-coloring");
      break;
    case Scheme::EgStrong23:
    case Scheme::EgUpper89:
      if (directed || num_colors != 2) throw ParamError("scheme is an undirected 2-coloring");
      break;
    case Scheme::BoundedIndependence:
      if (!h.increasing_unbounded()) throw ParamError("bounded-independence needs an increasing unbounded h");
      if (directed || num_colors != 2) throw ParamError("bounded-independence is an undirected 2-coloring");
      break;
    case Scheme::Explicit: {
      if (explicit_n < 1) throw ParamError("explicit scheme needs n >= 1");
      std::size_t want = directed ? std::size_t(explicit_n) * explicit_n
                                  : std::size_t(explicit_n) * (explicit_n - 1) / 2;
      if (matrix.size() != want) throw ParamError("explicit matrix has wrong length");
      for (std::uint8_t c : matrix)
        if (c >= num_colors) throw ParamError("explicit matrix color out of range");
      if (!vertex_colors.empty() && vertex_colors.size() != explicit_n)
        throw ParamError("explicit vertex_colors has wrong length");
      break;
    }
    case Scheme::SeededRandom:
      break;
  }
}

ColoringSpec gen_directed_residue(std::int64_t k) {
  ColoringSpec s;
  s.scheme = Scheme::DirectedResidue;
  s.directed = true;
  s.num_colors = 2;
  s.k = k;
  s.validate();
  return s;
}

ColoringSpec gen_directed_growth(GrowthFn h) {
  ColoringSpec s;
  s.scheme = Scheme::DirectedGrowth;
  s.directed = true;
  s.num_colors = 3;
  s.h = h;
  s.validate();
  return s;
}

ColoringSpec gen_affine(std::int64_t q) {
  ColoringSpec s;
  s.scheme = Scheme::Affine;
  s.directed = false;
  s.q = q;
  s.num_colors = static_cast<int>(q + 1);
  s.validate();
  return s;
}

ColoringSpec gen_strong_lower(PartitionDesc partition) {
  ColoringSpec s;
  s.scheme = Scheme::StrongLower;
  s.num_colors = 2;
  s.partition = std::move(partition);
  s.validate();
  return s;
}

ColoringSpec gen_affine_lower3(PartitionDesc partition) {
  ColoringSpec s;
  s.scheme = Scheme::AffineLower3;
  s.num_colors = 3;
  s.partition = std::move(partition);
  s.validate();
  return s;
}

ColoringSpec gen_eg_strong_2_3() {
  ColoringSpec s;
  s.scheme = Scheme::EgStrong23;
  s.num_colors = 2;
  s.validate();
  return s;
}

ColoringSpec gen_eg_upper_8_9() {
  ColoringSpec s;
  s.scheme = Scheme::EgUpper89;
  s.num_colors = 2;
  s.validate();
  return s;
}

ColoringSpec gen_bounded_independence(GrowthFn h) {
  ColoringSpec s;
  s.scheme = Scheme::BoundedIndependence;
  s.num_colors = 2;
  s.h = h;
  s.validate();
  return s;
}

ColoringSpec gen_explicit(std::uint32_t n, bool directed, int num_colors,
                          std::vector<std::uint8_t> matrix,
                          std::vector<std::uint8_t> vertex_colors) {
  ColoringSpec s;
  s.scheme = Scheme::Explicit;
  s.directed = directed;
  s.num_colors = num_colors;
  s.explicit_n = n;
  s.matrix = std::move(matrix);
  s.vertex_colors = std::move(vertex_colors);
  s.validate();
  return s;
}

ColoringSpec gen_seeded_random(std::uint64_t seed, int num_colors, bool directed, bool total) {
  ColoringSpec s;
  s.scheme = Scheme::SeededRandom;
  s.directed = directed;
  s.num_colors = num_colors;
  s.seed = seed;
  s.total = total;
  s.validate();
  return s;
}

ColoringSpec gen_all_one_color(std::uint32_t n, ColorId c, int num_colors) {
  std::vector<std::uint8_t> m(std::size_t(n) * (n - 1) / 2, static_cast<std::uint8_t>(c));
  return gen_explicit(n, false, num_colors, std::move(m));
}

nlohmann::json ColoringSpec::to_json() const {
  nlohmann::json j;
  j["scheme"] = scheme_name(scheme);
  j["directed"] = directed;
  j["num_colors"] = num_colors;
  nlohmann::json p = nlohmann::json::object();
  switch (scheme) {
    case Scheme::DirectedResidue: p["k"] = k; break;
    case Scheme::DirectedGrowth: case Scheme::BoundedIndependence: p["h"] = h.to_json(); break;
    case Scheme::Affine: p["q"] = q; break;
    case Scheme::StrongLower: case Scheme::AffineLower3: p["partition"] = partition.to_json(); break;
    case Scheme::EgStrong23: case Scheme::EgUpper89: break;
    case Scheme::Explicit:
      p["n"] = explicit_n;
      p["matrix"] = matrix;
      if (!vertex_colors.empty()) p["vertex_colors"] = vertex_colors;
      break;
    case Scheme::SeededRandom:
      p["seed"] = seed;
      p["total"] = total;
      break;
  }
  j["params"] = std::move(p);
  return j;
}

ColoringSpec ColoringSpec::from_json(const nlohmann::json& j) {
  ColoringSpec s;
  s.scheme = scheme_from_name(j.at("scheme").get<std::string>());
  s.directed = j.at("directed").get<bool>();
  s.num_colors = j.at("num_colors").get<int>();
  const nlohmann::json& p = j.value("params", nlohmann::json::object());
  switch (s.scheme) {
    case Scheme::DirectedResidue: s.k = p.at("k").get<std::int64_t>(); break;
    case Scheme::DirectedGrowth: case Scheme::BoundedIndependence:
      s.h = GrowthFn::from_json(p.at("h"));
      break;
    case Scheme::Affine: s.q = p.at("q").get<std::int64_t>(); break;
    case Scheme::StrongLower: case Scheme::AffineLower3:
      s.partition = PartitionDesc::from_json(p.at("partition"));
      break;
    case Scheme::EgStrong23: case Scheme::EgUpper89: break;
    case Scheme::Explicit:
      s.explicit_n = p.at("n").get<std::uint32_t>();
      s.matrix = p.at("matrix").get<std::vector<std::uint8_t>>();
      if (p.contains("vertex_colors"))
        s.vertex_colors = p.at("vertex_colors").get<std::vector<std::uint8_t>>();
      break;
    case Scheme::SeededRandom:
      s.seed = p.at("seed").get<std::uint64_t>();
      s.total = p.value("total", false);
      break;
  }
  s.validate();
  return s;
}

namespace {

// AG(2,q) over the prime field: classes are points (c mod q, c div q); the
// q+1 parallel classes are the q slopes plus the vertical class q. Two
// distinct points lie on a common line of exactly one parallel class.
std::vector<std::uint8_t> affine_pair_table(std::int64_t q) {
  const std::int64_t q2 = q * q;
  std::vector<std::uint8_t> tab(static_cast<std::size_t>(q2) * q2, 0);
  auto inv_mod = [&](std::int64_t x) {
    // q prime; Fermat
    std::int64_t r = 1, b = x % q, e = q - 2;
    while (e) {
      if (e & 1) r = r * b % q;
      b = b * b % q;
      e >>= 1;
    }
    return r;
  };
  for (std::int64_t c1 = 0; c1 < q2; ++c1) {
    for (std::int64_t c2 = 0; c2 < q2; ++c2) {
      if (c1 == c2) continue;
      std::int64_t x1 = c1 % q, y1 = c1 / q, x2 = c2 % q, y2 = c2 / q;
      std::int64_t cls;
      if (x1 == x2) {
        cls = q;  // vertical lines
      } else {
        std::int64_t dx = ((x2 - x1) % q + q) % q;
        std::int64_t dy = ((y2 - y1) % q + q) % q;
        cls = dy * inv_mod(dx) % q;
      }
      tab[static_cast<std::size_t>(c1) * q2 + c2] = static_cast<std::uint8_t>(cls);
    }
  }
  return tab;
}

}  // namespace

PrefixColoring materialize(const ColoringSpec& spec, std::uint32_t n) {
  spec.validate();
  if (n < 1) throw ParamError("materialize: n must be >= 1");
  PrefixColoring c;
  c.spec_ = std::make_shared<const ColoringSpec>(spec);
  c.n_ = n;

  auto fill_interval_aux = [&](const IntervalPartition& part) {
    c.aux_.resize(n);
    std::size_t idx = 0;
    for (Vertex v = 1; v <= n; ++v) {
      while (v > part.end(idx)) ++idx;
      c.aux_[v - 1] = static_cast<std::uint32_t>(idx);
    }
  };

  switch (spec.scheme) {
    case Scheme::DirectedResidue: {
      c.aux_.resize(n);
      for (Vertex v = 1; v <= n; ++v) c.aux_[v - 1] = static_cast<std::uint32_t>(v % spec.k);
      break;
    }
    case Scheme::DirectedGrowth: {
      // consecutive intervals with |A_i| = max(h(i), 1), i >= 1
      std::vector<std::uint64_t> sizes;
      std::uint64_t acc = 0, i = 1;
      while (acc < n) {
        std::uint64_t s = std::max<std::uint64_t>(spec.h(i), 1);
        sizes.push_back(s);
        acc += s;
        ++i;
      }
      c.part_ = IntervalPartition::from_sizes(std::move(sizes));
      fill_interval_aux(c.part_);
      break;
    }
    case Scheme::Affine: {
      c.aux_.resize(n);
      const std::uint32_t q2 = static_cast<std::uint32_t>(spec.q * spec.q);
      for (Vertex v = 1; v <= n; ++v) c.aux_[v - 1] = v % q2;
      c.affine_tab_ = affine_pair_table(spec.q);
      break;
    }
    case Scheme::StrongLower:
    case Scheme::AffineLower3: {
      c.part_ = spec.partition.instantiate(n);
      fill_interval_aux(c.part_);
      break;
    }
    case Scheme::EgStrong23:
      break;  // rule needs only v % 3
    case Scheme::EgUpper89: {
      // |A_i| = 2^i starting from A_0 = {1}
      std::vector<std::uint64_t> sizes;
      std::uint64_t acc = 0, cur = 1;
      while (acc < n) {
        sizes.push_back(cur);
        acc += cur;
        cur *= 2;
      }
      c.part_ = IntervalPartition::from_sizes(std::move(sizes));
      fill_interval_aux(c.part_);
      break;
    }
    case Scheme::BoundedIndependence: {
      // |A_i| = i * h(i), i >= 1
      std::vector<std::uint64_t> sizes;
      std::uint64_t acc = 0, i = 1;
      while (acc < n) {
        std::uint64_t s = std::max<std::uint64_t>(i * spec.h(i), 1);
        sizes.push_back(s);
        acc += s;
        ++i;
      }
      c.part_ = IntervalPartition::from_sizes(std::move(sizes));
      fill_interval_aux(c.part_);
      break;
    }
    case Scheme::Explicit: {
      if (n > spec.explicit_n) throw ParamError("materialize: explicit matrix smaller than prefix");
      if (!spec.vertex_colors.empty())
        c.vcol_.assign(spec.vertex_colors.begin(), spec.vertex_colors.begin() + n);
      break;
    }
    case Scheme::SeededRandom: {
      if (spec.total) {
        c.vcol_.resize(n);
        for (Vertex v = 1; v <= n; ++v)
          c.vcol_[v - 1] =
              static_cast<std::uint8_t>(mix3(spec.seed, 0x766572746578ULL, v) % spec.num_colors);
      }
      break;
    }
  }
  return c;
}

ColorId PrefixColoring::color(Vertex u, Vertex v) const {
  if (u == v || u < 1 || v < 1 || u > n_ || v > n_)
    throw ParamError("color: pair must be two distinct vertices of the prefix");
  const ColoringSpec& s = *spec_;
  switch (s.scheme) {
    case Scheme::DirectedResidue: {
      std::uint32_t cu = aux_[u - 1], cv = aux_[v - 1];
      if (cu == cv) return u < v ? kRed : kBlue;
      return cu < cv ? kBlue : kRed;
    }
    case Scheme::DirectedGrowth: {
      std::uint32_t iu = aux_[u - 1], iv = aux_[v - 1];
      if (iu == iv) return kGreen;
      return iu < iv ? kRed : kBlue;
    }
    case Scheme::Affine: {
      std::uint32_t cu = aux_[u - 1], cv = aux_[v - 1];
      if (cu == cv) return 0;
      return affine_tab_[static_cast<std::size_t>(cu) * (s.q * s.q) + cv];
    }
    case Scheme::StrongLower: {
      // the later-indexed endpoint decides; storage index i is paper A_{i+1}
      std::uint32_t j = std::max(aux_[u - 1], aux_[v - 1]);
      return ((j + 1) % 2 == 1) ? kRed : kBlue;
    }
    case Scheme::AffineLower3: {
      std::uint32_t bu = aux_[u - 1] % 4, bv = aux_[v - 1] % 4;
      if (bu == bv) return 0;
      std::uint32_t lo = std::min(bu, bv), hi = std::max(bu, bv);
      if ((lo == 0 && hi == 3) || (lo == 1 && hi == 2)) return kRed;
      if ((lo == 0 && hi == 2) || (lo == 1 && hi == 3)) return kBlue;
      return kGreen;  // {0,1} and {2,3}
    }
    case Scheme::EgStrong23: {
      bool au = (u % 3 == 0), av = (v % 3 == 0);
      return au != av ? kRed : kBlue;
    }
    case Scheme::EgUpper89: {
      std::uint32_t lo = std::min(aux_[u - 1], aux_[v - 1]);
      return (lo % 2 == 0) ? kRed : kBlue;
    }
    case Scheme::BoundedIndependence: {
      return aux_[u - 1] == aux_[v - 1] ? kBlue : kRed;
    }
    case Scheme::Explicit: {
      if (s.directed)
        return s.matrix[static_cast<std::size_t>(u - 1) * s.explicit_n + (v - 1)];
      Vertex a = std::max(u, v), b = std::min(u, v);
      return s.matrix[static_cast<std::size_t>(a - 1) * (a - 2) / 2 + (b - 1)];
    }
    case Scheme::SeededRandom: {
      if (s.directed) return static_cast<ColorId>(mix3(s.seed, u, v) % s.num_colors);
      Vertex a = std::min(u, v), b = std::max(u, v);
      return static_cast<ColorId>(mix3(s.seed, a, b) % s.num_colors);
    }
  }
  throw ParamError("bad scheme");
}

PrefixColoring PrefixColoring::with_vertex_colors(std::vector<std::uint8_t> vcol) const {
  if (vcol.size() != n_) throw ParamError("with_vertex_colors: wrong length");
  for (std::uint8_t c : vcol)
    if (c >= spec_->num_colors) throw ParamError("with_vertex_colors: color out of range");
  PrefixColoring copy = *this;
  copy.vcol_ = std::move(vcol);
  return copy;
}

std::vector<std::uint64_t> default_checkpoints(const PrefixColoring& c) {
  std::vector<std::uint64_t> cps;
  if (const IntervalPartition* p = c.intervals()) {
    for (std::size_t i = 0; i < p->count() && p->end(i) <= c.n(); ++i) cps.push_back(p->end(i));
    if (cps.empty() || cps.back() != c.n()) cps.push_back(c.n());
  } else {
    for (std::uint64_t v = 2; v < c.n(); v *= 2) cps.push_back(v);
    cps.push_back(c.n());
  }
  return cps;
}

}  // namespace rdl
