#include <doctest.h>

#include <algorithm>

#include "rdl/engine_forest.hpp"
#include "rdl/rng.hpp"

using namespace rdl;

namespace {

ColoringSpec random_total_spec(std::uint32_t n, std::uint64_t seed) {
  return gen_seeded_random(seed, 2, false, true);
}

PrefixColoring host_with_vcols(std::uint32_t n, std::uint64_t seed) {
  return materialize(random_total_spec(n, seed), n);
}

}  // namespace

TEST_CASE("glp bound on every K_4 total coloring with two red vertices") {
  // exhaustive: 6 vertex classes x 2^6 edge colorings
  std::vector<std::vector<std::uint8_t>> vcols;
  for (int a = 0; a < 4; ++a)
    for (int b = a + 1; b < 4; ++b) {
      std::vector<std::uint8_t> vc(4, 1);
      vc[a] = vc[b] = 0;
      vcols.push_back(vc);
    }
  for (const auto& vc : vcols) {
    for (std::uint32_t bits = 0; bits < (1u << 6); ++bits) {
      std::vector<std::uint8_t> m(6);
      for (int e = 0; e < 6; ++e) m[e] = (bits >> e) & 1;
      auto host = materialize(gen_explicit(4, false, 2, m), 4).with_vertex_colors(vc);
      VertexSet hostv{1, 2, 3, 4};
      auto bp = default_bprime(host, hostv, 0);
      auto res = glp_path_forests(host, bp);
      CHECK(validate_forest(host, res.forest_minority, true));
      CHECK(validate_forest(host, res.forest_majority, true));
      // |F_R| ⊆ R ∪ B'
      for (const auto& p : res.forest_minority.paths)
        for (Vertex v : p) {
          bool in_R = host.vertex_color(v) == 0;
          bool in_bp = std::binary_search(bp.begin(), bp.end(), v);
          CHECK((in_R || in_bp));
        }
      CHECK(res.forest_minority.vertex_count() + res.forest_majority.vertex_count() >= 4 + 2 - 3);
      CHECK(res.defect <= 3);
    }
  }
}

TEST_CASE("glp bound on seeded random total colorings") {
  for (std::uint64_t seed = 1; seed <= 300; ++seed) {
    std::uint32_t n = 4 + static_cast<std::uint32_t>(seed % 57);
    auto host = host_with_vcols(n, seed * 1337);
    VertexSet hostv;
    for (Vertex v = 1; v <= n; ++v) hostv.push_back(v);
    std::size_t reds = 0;
    for (Vertex v = 1; v <= n; ++v)
      if (host.vertex_color(v) == 0) ++reds;
    ColorId minority = (2 * reds <= n) ? 0 : 1;
    auto bp = default_bprime(host, hostv, minority);
    auto res = glp_path_forests_in(host, hostv, bp, minority, seed);
    std::size_t r = std::min(reds, n - reds);
    CHECK(res.forest_minority.vertex_count() + res.forest_majority.vertex_count() >= n + r - 3);
    CHECK(validate_forest(host, res.forest_minority, true));
    CHECK(validate_forest(host, res.forest_majority, true));
    CHECK(res.defect <= 3);
  }
}

TEST_CASE("glp guards") {
  auto host = host_with_vcols(10, 3);
  VertexSet hostv;
  for (Vertex v = 1; v <= 10; ++v) hostv.push_back(v);
  CHECK_THROWS_AS(glp_path_forests_in(host, hostv, {}, 0, 1), ContractError);
}

TEST_CASE("all-blue total coloring: forest covers everything") {
  auto base = materialize(gen_all_one_color(40, kBlue), 40);
  auto host = base.with_vertex_colors(std::vector<std::uint8_t>(40, kBlue));
  auto res = mpf_dense_forest(host, Ratio(1, 4), 12);
  CHECK(res.ell == 40);
  CHECK(res.forest.vertex_count() == 40);
  CHECK(res.achieved == Ratio(1));
  CHECK(res.forest.color == kBlue);
}

TEST_CASE("mpf bound and trace invariants on seeded random total colorings") {
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    auto host = host_with_vcols(200, seed * 29);
    auto res = mpf_dense_forest(host, Ratio(1, 5), 15, seed);
    CHECK(res.ell >= 15);
    CHECK(res.achieved >= Ratio(3, 4) - Ratio(1, 5));
    CHECK(validate_forest(host, res.forest, true));
    // interval sizes strictly decrease
    for (std::size_t i = 1; i < res.descent.size(); ++i)
      CHECK(res.descent[i].J < res.descent[i - 1].J);
    // differences increase along branch (iii)
    for (std::size_t i = 1; i < res.descent.size(); ++i)
      if (res.descent[i].branch == 2) CHECK(res.descent[i - 1].diff < res.descent[i].diff);
  }
}

TEST_CASE("mpf parameter guards") {
  auto host = host_with_vcols(200, 1);
  CHECK_THROWS_AS(mpf_dense_forest(host, Ratio(1, 5), 3), ParamError);   // k < 3/eps
  CHECK_THROWS_AS(mpf_dense_forest(host, Ratio(0), 15), ParamError);    // eps out of range
  CHECK_THROWS_AS(mpf_dense_forest_in(host, {1, 2, 3, 4, 5, 6, 7, 8, 9, 10}, Ratio(1, 8), 24),
                  ParamError);  // host too short for the target
}

TEST_CASE("mpf on an interval host") {
  auto host = host_with_vcols(400, 77);
  VertexSet interval;
  for (Vertex v = 151; v <= 350; ++v) interval.push_back(v);
  auto res = mpf_dense_forest_in(host, interval, Ratio(1, 5), 15, 2);
  CHECK(res.ell >= 15);
  CHECK(res.ell <= 200);
  CHECK(res.achieved >= Ratio(11, 20));
  CHECK(validate_forest(host, res.forest, true));
  // forest lives inside the interval
  for (const auto& p : res.forest.paths)
    for (Vertex v : p) {
      CHECK(v >= 151);
      CHECK(v <= 350);
    }
}
