#include <doctest.h>

#include <nlohmann/json.hpp>

#include "rdl/coloring.hpp"

using namespace rdl;

TEST_CASE("eg-strong-2-3 rule on [6]") {
  auto c = materialize(gen_eg_strong_2_3(), 6);
  CHECK(c.color(3, 6) == kBlue);  // both divisible by 3
  CHECK(c.color(3, 4) == kRed);
  CHECK(c.color(1, 2) == kBlue);
  CHECK(c.color(6, 3) == kBlue);
}

TEST_CASE("explicit all-red on [4]") {
  auto c = materialize(gen_all_one_color(4, kRed), 4);
  for (Vertex u = 1; u <= 4; ++u)
    for (Vertex v = 1; v <= 4; ++v)
      if (u != v) CHECK(c.color(u, v) == kRed);
}

TEST_CASE("eg-upper-8-9 rule on [7]") {
  auto c = materialize(gen_eg_upper_8_9(), 7);
  // A_0 = {1}, A_1 = {2,3}, A_2 = {4..7}
  const IntervalPartition* p = c.intervals();
  REQUIRE(p != nullptr);
  CHECK(p->end(0) == 1);
  CHECK(p->end(1) == 3);
  CHECK(p->end(2) == 7);
  // inside A_0 ∪ A_2 and between them: red
  CHECK(c.color(1, 4) == kRed);
  CHECK(c.color(4, 7) == kRed);
  CHECK(c.color(5, 6) == kRed);
  // edges touching A_1 from A_1 or later: blue
  CHECK(c.color(2, 3) == kBlue);
  CHECK(c.color(2, 4) == kBlue);
  CHECK(c.color(3, 7) == kBlue);
  // A_0 to A_1 is decided by A_0 (even): red
  CHECK(c.color(1, 2) == kRed);
}

TEST_CASE("directed residue classes") {
  auto spec = gen_directed_residue(3);
  auto c = materialize(spec, 6);
  CHECK(c.color(1, 4) == kRed);  // same class, forward
  CHECK(c.color(4, 1) == kBlue);
  CHECK(c.color(1, 2) == kBlue);  // class 1 -> class 2
  CHECK(c.color(2, 1) == kRed);
  CHECK_THROWS_AS(c.color(2, 2), ParamError);
  CHECK_THROWS_AS(gen_directed_residue(1), ParamError);

  auto c2 = materialize(gen_directed_residue(2), 4);
  // classes: 1 -> class 1, 2 -> class 0; class(2) < class(1)
  CHECK(c2.color(2, 1) == kBlue);
  CHECK(c2.color(1, 2) == kRed);
}

TEST_CASE("directed growth intervals") {
  auto c = materialize(gen_directed_growth(GrowthFn{GrowthFn::Kind::Identity, 1}), 10);
  // intervals: {1}, {2,3}, {4,5,6}, {7..10}
  CHECK(c.color(2, 4) == kRed);   // A_2 -> A_3
  CHECK(c.color(4, 2) == kBlue);  // A_3 -> A_2
  CHECK(c.color(5, 6) == kGreen);
  CHECK(c.color(6, 5) == kGreen);

  CHECK_THROWS_AS(gen_directed_growth(GrowthFn{GrowthFn::Kind::Constant, 1}), ParamError);

  auto c3 = materialize(gen_directed_growth(GrowthFn{GrowthFn::Kind::Linear, 1}), 3);
  CHECK(c3.color(3, 1) == kBlue);  // intervals {1},{2,3}: A_2 -> A_1
}

TEST_CASE("affine plane coloring") {
  CHECK_THROWS_AS(gen_affine(4), ParamError);
  auto spec = gen_affine(2);
  CHECK(spec.num_colors == 3);
  auto c = materialize(spec, 8);
  CHECK(c.color(1, 5) == 0);  // same class (1 mod 4 == 5 mod 4): intra color 0
  // symmetric
  for (Vertex u = 1; u <= 8; ++u)
    for (Vertex v = u + 1; v <= 8; ++v) CHECK(c.color(u, v) == c.color(v, u));
}

TEST_CASE("affine q=3 pairwise balance against an independent line enumeration") {
  const int q = 3;
  auto c = materialize(gen_affine(q), 18);
  // independent oracle: all 12 lines of AG(2,3) built directly
  struct Line {
    int cls;
    std::vector<int> pts;  // class ids 0..8, id = x + q*y
  };
  std::vector<Line> lines;
  for (int m = 0; m < q; ++m)
    for (int b = 0; b < q; ++b) {
      Line L;
      L.cls = m;
      for (int x = 0; x < q; ++x) L.pts.push_back(x + q * ((m * x + b) % q));
      lines.push_back(L);
    }
  for (int x = 0; x < q; ++x) {
    Line L;
    L.cls = q;
    for (int y = 0; y < q; ++y) L.pts.push_back(x + q * y);
    lines.push_back(L);
  }
  REQUIRE(lines.size() == 12);
  // every pair of distinct points on exactly one line; the coloring must use
  // that line's parallel class
  for (int p1 = 0; p1 < q * q; ++p1)
    for (int p2 = p1 + 1; p2 < q * q; ++p2) {
      int found = 0, cls = -1;
      for (const Line& L : lines) {
        bool h1 = false, h2 = false;
        for (int p : L.pts) {
          h1 |= (p == p1);
          h2 |= (p == p2);
        }
        if (h1 && h2) {
          ++found;
          cls = L.cls;
        }
      }
      CHECK(found == 1);
      // vertices with classes p1, p2 (class of v is v mod 9)
      Vertex u = static_cast<Vertex>(p1 + 9);
      Vertex v = static_cast<Vertex>(p2 + 9);
      CHECK(c.color(u, v) == cls);
    }
}

TEST_CASE("strong-lower rule") {
  PartitionDesc d;
  d.kind = PartitionDesc::Kind::Sizes;
  d.sizes = {1, 2, 4};
  auto c = materialize(gen_strong_lower(d), 7);
  // A_1 = {1}, A_2 = {2,3}, A_3 = {4..7}
  CHECK(c.color(2, 3) == kBlue);  // within A_2, decided by even paper index
  CHECK(c.color(1, 2) == kBlue);  // between A_2 and A_1: A_2 endpoint decides
  CHECK(c.color(1, 7) == kRed);   // 7 in A_3, odd paper index
  CHECK(c.color(4, 5) == kRed);   // within A_3
}

TEST_CASE("affine-lower-3 rule") {
  PartitionDesc d;
  d.kind = PartitionDesc::Kind::Sizes;
  d.sizes = {1, 1, 1, 1, 1, 1, 1, 1};
  auto c = materialize(gen_affine_lower3(d), 8);
  // vertex v is interval A_{v-1}; B_q = intervals with index ≡ q (mod 4)
  CHECK(c.color(1, 4) == kRed);    // B_0 vs B_3
  CHECK(c.color(2, 3) == kRed);    // B_1 vs B_2
  CHECK(c.color(1, 3) == kBlue);   // B_0 vs B_2
  CHECK(c.color(2, 4) == kBlue);   // B_1 vs B_3
  CHECK(c.color(1, 2) == kGreen);  // B_0 vs B_1
  CHECK(c.color(3, 4) == kGreen);  // B_2 vs B_3
  CHECK(c.color(3, 7) == 0);       // inside B_2
}

TEST_CASE("bounded independence rule") {
  auto c = materialize(gen_bounded_independence(GrowthFn{GrowthFn::Kind::Identity, 1}), 10);
  // |A_n| = n*n: A_1 = {1}, A_2 = {2..5}, A_3 = {6..14}
  CHECK(c.color(2, 3) == kBlue);
  CHECK(c.color(1, 2) == kRed);
  CHECK(c.color(5, 6) == kRed);
}

TEST_CASE("seeded random coloring is deterministic and symmetric") {
  auto c1 = materialize(gen_seeded_random(42, 2, false, true), 50);
  auto c2 = materialize(gen_seeded_random(42, 2, false, true), 50);
  for (Vertex u = 1; u <= 50; ++u) {
    if (u > 1)
      for (Vertex v = 1; v < u; ++v) {
        CHECK(c1.color(u, v) == c2.color(u, v));
        CHECK(c1.color(u, v) == c1.color(v, u));
      }
    CHECK(c1.vertex_color(u) == c2.vertex_color(u));
  }
}

TEST_CASE("restriction determinism across prefix lengths") {
  for (const ColoringSpec& spec :
       {gen_eg_upper_8_9(), gen_eg_strong_2_3(), gen_seeded_random(7, 3),
        gen_affine(2)}) {
    auto big = materialize(spec, 40);
    auto small = materialize(spec, 17);
    for (Vertex u = 1; u <= 17; ++u)
      for (Vertex v = 1; v <= 17; ++v)
        if (u != v) CHECK(big.color(u, v) == small.color(u, v));
  }
}

TEST_CASE("spec json round trip") {
  for (const ColoringSpec& spec :
       {gen_directed_residue(5), gen_eg_upper_8_9(), gen_seeded_random(99, 2, false, true),
        gen_affine(3), gen_bounded_independence(GrowthFn{GrowthFn::Kind::Identity, 1})}) {
    auto j = spec.to_json();
    auto back = ColoringSpec::from_json(j);
    CHECK(back.to_json() == j);
    auto a = materialize(spec, 12);
    auto b = materialize(back, 12);
    for (Vertex u = 1; u <= 12; ++u)
      for (Vertex v = 1; v <= 12; ++v)
        if (u != v) CHECK(a.color(u, v) == b.color(u, v));
  }
  PartitionDesc d;
  d.kind = PartitionDesc::Kind::Factorial;
  d.scale = 2;
  auto spec = gen_strong_lower(d);
  auto back = ColoringSpec::from_json(spec.to_json());
  CHECK(back.to_json() == spec.to_json());
}

TEST_CASE("explicit matrix storage") {
  // directed full matrix on [3]
  std::vector<std::uint8_t> full(9, 0);
  full[0 * 3 + 1] = 1;  // (1,2) blue
  auto cd = materialize(gen_explicit(3, true, 2, full), 3);
  CHECK(cd.color(1, 2) == kBlue);
  CHECK(cd.color(2, 1) == kRed);
  // undirected lower-triangular on [4]: rows (2,1) (3,1)(3,2) (4,1)(4,2)(4,3)
  std::vector<std::uint8_t> tri = {1, 0, 1, 0, 0, 1};
  auto cu = materialize(gen_explicit(4, false, 2, tri), 4);
  CHECK(cu.color(2, 1) == kBlue);
  CHECK(cu.color(1, 2) == kBlue);
  CHECK(cu.color(3, 2) == kBlue);
  CHECK(cu.color(4, 3) == kBlue);
  CHECK(cu.color(4, 2) == kRed);
  CHECK_THROWS_AS(gen_explicit(3, false, 2, {0, 1}), ParamError);
}

TEST_CASE("fast growing check at materialized scale") {
  PartitionDesc fact;
  fact.kind = PartitionDesc::Kind::Factorial;
  fact.scale = 1;
  CHECK(fact.instantiate(150).fast_growing_at_scale());
  PartitionDesc geo;
  geo.kind = PartitionDesc::Kind::Geometric;
  geo.first = 1;
  geo.ratio = 2;
  CHECK_FALSE(geo.instantiate(100).fast_growing_at_scale());
}
