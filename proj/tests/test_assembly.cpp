#include <doctest.h>

#include <algorithm>

#include <nlohmann/json.hpp>

#include "rdl/assembly.hpp"
#include "rdl/connector.hpp"

using namespace rdl;

namespace {

VertexSet range_set(Vertex lo, Vertex hi) {
  VertexSet v;
  for (Vertex x = lo; x <= hi; ++x) v.push_back(x);
  return v;
}

// within V2 all blue, everything else red
ColoringSpec cross_red_spec(std::uint32_t n, Vertex v2lo) {
  std::vector<std::uint8_t> m(std::size_t(n) * (n - 1) / 2);
  std::size_t idx = 0;
  for (Vertex u = 2; u <= n; ++u)
    for (Vertex v = 1; v < u; ++v) m[idx++] = (v >= v2lo && u >= v2lo) ? kBlue : kRed;
  return gen_explicit(n, false, 2, m);
}

}  // namespace

TEST_CASE("bridge with no blue matching spans the balanced segment") {
  const std::uint32_t n = 110;
  auto host = materialize(cross_red_spec(n, 11), n);
  VertexSet V1 = range_set(1, 10), V2 = range_set(11, 110);
  auto conn = find_alpha_connector(host, V2);
  REQUIRE(conn.color == kBlue);
  REQUIRE(conn.X.size() == 100);

  auto p = bridge_no_matching(host, V1, V2, V1, conn, 1);
  CHECK(validate_path(host, p));
  CHECK(p.color == kRed);
  // both endpoints in X1 = V1
  CHECK(p.order.front() <= 10);
  CHECK(p.order.back() <= 10);
  // misses at most 3 of X1 ∪ I (|I| = 10 here)
  CHECK(p.size() >= 10 + 10 - 3);
  // local density >= (1-eps)^2 * alpha1 with alpha1 = 1, eps = 1 - 100/110
  Ratio eps = Ratio(1) - Ratio(100, 110);
  Ratio bound = (Ratio(1) - eps) * (Ratio(1) - eps);
  CHECK(local_density(p.vertex_set()) >= bound);

  auto q = bridge_no_matching(host, V1, V2, V1, conn, 2);
  CHECK(validate_path(host, q));
  CHECK(std::binary_search(conn.X.begin(), conn.X.end(), q.order.front()));
  CHECK(std::binary_search(conn.X.begin(), conn.X.end(), q.order.back()));
}

TEST_CASE("bridge rejects hosts with a blue 2-matching") {
  const std::uint32_t n = 40;
  // within V2 blue, cross edges blue too: plenty of blue matchings
  std::vector<std::uint8_t> m(std::size_t(n) * (n - 1) / 2, kBlue);
  auto host = materialize(gen_explicit(n, false, 2, m), n);
  VertexSet V1 = range_set(1, 8), V2 = range_set(9, 40);
  auto conn = find_alpha_connector(host, V2);
  CHECK_THROWS_AS(bridge_no_matching(host, V1, V2, V1, conn, 1), ContractError);
}

TEST_CASE("bridge_dual case 1: a 2-matching routes through both connectors") {
  const std::uint32_t n = 140;
  // V1 = [1..20] red inside; V2 = [21..140] blue inside; cross blue
  std::vector<std::uint8_t> m(std::size_t(n) * (n - 1) / 2);
  std::size_t idx = 0;
  for (Vertex u = 2; u <= n; ++u)
    for (Vertex v = 1; v < u; ++v) {
      bool in1 = u <= 20 && v <= 20;
      m[idx++] = in1 ? kRed : kBlue;
    }
  auto host = materialize(gen_explicit(n, false, 2, m), n);
  VertexSet V1 = range_set(1, 20), V2 = range_set(21, 140);
  auto c1 = find_alpha_connector(host, V1);
  auto c2 = find_alpha_connector(host, V2);
  REQUIRE(c1.color == kRed);
  REQUIRE(c2.color == kBlue);
  auto bp = bridge_dual(host, V1, V2, c1, c2);
  CHECK(bp.case_tag == 1);
  CHECK(validate_path(host, bp.red_path));
  CHECK(validate_path(host, bp.blue_path));
  CHECK(bp.red_path.order.front() == bp.blue_path.order.front());
  CHECK(bp.red_path.order.back() == bp.blue_path.order.back());
  // case 1 paths share exactly their endpoints
  VertexSet rs = bp.red_path.vertex_set(), bs = bp.blue_path.vertex_set();
  VertexSet inter;
  std::set_intersection(rs.begin(), rs.end(), bs.begin(), bs.end(), std::back_inserter(inter));
  CHECK(inter.size() == 2);
}

TEST_CASE("bridge_dual case 2: no matching falls back to the segment route") {
  const std::uint32_t n = 140;
  // V1 = [1..20] red inside; V2 blue inside; cross RED (no blue matching)
  std::vector<std::uint8_t> m(std::size_t(n) * (n - 1) / 2);
  std::size_t idx = 0;
  for (Vertex u = 2; u <= n; ++u)
    for (Vertex v = 1; v < u; ++v) {
      bool in2 = u >= 21 && v >= 21;
      m[idx++] = in2 ? kBlue : kRed;
    }
  auto host = materialize(gen_explicit(n, false, 2, m), n);
  VertexSet V1 = range_set(1, 20), V2 = range_set(21, 140);
  auto c1 = find_alpha_connector(host, V1);
  auto c2 = find_alpha_connector(host, V2);
  REQUIRE(c2.color == kBlue);
  auto bp = bridge_dual(host, V1, V2, c1, c2);
  CHECK(bp.case_tag == 2);
  CHECK(validate_path(host, bp.red_path));
  CHECK(validate_path(host, bp.blue_path));
  CHECK(bp.red_path.order.front() == bp.blue_path.order.front());
  CHECK(bp.red_path.order.back() == bp.blue_path.order.back());
}

TEST_CASE("assemble_34: all-red spec is a spanning path") {
  auto res = assemble_34_path(gen_all_one_color(400, kRed), 400, {});
  CHECK(res.path.size() == 400);
  CHECK(res.profile.record_upper() == Ratio(1));
}

TEST_CASE("assemble_34: parity cliques trigger the obstruction case") {
  const std::uint32_t n = 61;
  std::vector<std::uint8_t> m(std::size_t(n) * (n - 1) / 2);
  std::size_t idx = 0;
  for (Vertex u = 2; u <= n; ++u)
    for (Vertex v = 1; v < u; ++v) m[idx++] = ((u % 2) == (v % 2)) ? kRed : kBlue;
  AssemblyOptions opt;
  opt.red_threshold = Ratio(1, 4);  // every vertex counts as red
  auto res = assemble_34_path(gen_explicit(n, false, 2, m), n, opt);
  CHECK(res.trace.case_tag == "1");
  CHECK(res.trace.separator.empty());
  CHECK(res.path.size() == n);  // the weave covers everything
  CHECK(res.path.color == kBlue);
}

TEST_CASE("assemble_34: seeded random specs keep a dense record") {
  for (std::uint64_t seed = 5; seed <= 7; ++seed) {
    AssemblyOptions opt;
    opt.seed = seed;
    auto res = assemble_34_path(gen_seeded_random(seed, 2), 2000, opt);
    CHECK(res.profile.record_upper() >= Ratio(7, 10));
    // byte-level determinism of the witness
    auto res2 = assemble_34_path(gen_seeded_random(seed, 2), 2000, opt);
    CHECK(res.path.order == res2.path.order);
  }
}

TEST_CASE("assemble_34: doubling construction stays within the ceiling") {
  auto res = assemble_34_path(gen_eg_upper_8_9(), 4096, {});
  auto rec = res.profile.record_upper();
  CHECK(rec >= Ratio(7, 10));
  CHECK(rec <= Ratio(8, 9) + Ratio(1, 100));
}

TEST_CASE("assemble_23: all-blue spec is fully dense") {
  auto res = assemble_23_sud_path(gen_all_one_color(200, kBlue), 200, {});
  CHECK(res.profile.record_upper() == Ratio(1));
  CHECK(res.path.color == kBlue);
}

TEST_CASE("assemble_23: mod-3 construction meets its strong-density ceiling") {
  auto res = assemble_23_sud_path(gen_eg_strong_2_3(), 2187, {});
  auto rec = res.profile.record_upper();
  CHECK(rec <= Ratio(2, 3) + Ratio(1, 100));
  CHECK(rec >= Ratio(60, 100));
}

TEST_CASE("assemble_23: seeded random specs clear the floor") {
  for (std::uint64_t seed = 11; seed <= 12; ++seed) {
    AssemblyOptions opt;
    opt.seed = seed;
    auto res = assemble_23_sud_path(gen_seeded_random(seed, 2), 3000, opt);
    CHECK(res.profile.record_upper() >= Ratio(6, 10));
  }
}

TEST_CASE("construction-specific greedy builders") {
  auto host89 = materialize(gen_eg_upper_8_9(), 16384);
  auto p89 = eg89_blue_greedy_path(host89);
  CHECK(validate_path(host89, p89));
  auto bounds = default_checkpoints(host89);
  auto prof = profile_set(p89.vertex_set(), bounds);
  // boundary record sits at exactly 5/6 (the structural cap at boundaries)
  CHECK(prof.record_upper() == Ratio(5, 6));
  // between boundaries, at c_k = 6*4^k, the record approaches 8/9
  std::vector<std::uint64_t> mids;
  for (std::uint64_t c = 6; c <= 16384; c *= 4) mids.push_back(c);
  auto prof2 = profile_set(p89.vertex_set(), mids);
  CHECK(prof2.record_upper() >= Ratio(8, 9) - Ratio(2, 100));
  CHECK(prof2.record_upper() <= Ratio(8, 9) + Ratio(1, 100));

  auto host23 = materialize(gen_eg_strong_2_3(), 2187);
  auto p23 = eg23_blue_cover_path(host23);
  CHECK(validate_path(host23, p23));
  auto prof3 = profile_seq(p23.order, default_checkpoints(host23));
  CHECK(prof3.record_upper() >= Ratio(2, 3) - Ratio(2, 100));
  CHECK(prof3.record_upper() <= Ratio(2, 3) + Ratio(2, 100));
}

TEST_CASE("assembly traces serialize") {
  auto res = assemble_34_path(gen_seeded_random(3, 2), 1000, {});
  auto j = res.trace.to_json();
  CHECK(j.contains("case"));
  CHECK(j.contains("intervals"));
  CHECK(j.contains("joins"));
}
