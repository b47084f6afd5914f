#include <doctest.h>

#include <algorithm>

#include "rdl/connector.hpp"
#include "rdl/engine_paths.hpp"

using namespace rdl;

namespace {
VertexSet range_set(Vertex lo, Vertex hi) {
  VertexSet v;
  for (Vertex x = lo; x <= hi; ++x) v.push_back(x);
  return v;
}
}  // namespace

TEST_CASE("all-blue interval of size 9: the whole interval connects at alpha >= 8/9") {
  auto host = materialize(gen_all_one_color(9, kBlue), 9);
  auto conn = find_alpha_connector(host, range_set(1, 9));
  CHECK(conn.color == kBlue);
  CHECK(conn.X.size() == 9);
  CHECK(conn.alpha >= Ratio(8, 9));
  CHECK_FALSE(conn.degraded);
}

TEST_CASE("connector maximality: outside vertices have at most one same-color edge into X") {
  for (std::uint64_t seed = 1; seed <= 8; ++seed) {
    auto host = materialize(gen_seeded_random(seed * 11, 2), 40);
    auto iv = range_set(1, 40);
    auto conn = find_alpha_connector(host, iv, seed);
    for (Vertex v : iv) {
      if (std::binary_search(conn.X.begin(), conn.X.end(), v)) continue;
      int hits = 0;
      for (Vertex x : conn.X)
        if (host.color(v, x) == conn.color) ++hits;
      CHECK(hits <= 1);
    }
    // closure layers nest
    for (std::size_t i = 1; i < conn.closure_layers.size(); ++i)
      CHECK(std::includes(conn.closure_layers[i].begin(), conn.closure_layers[i].end(),
                          conn.closure_layers[i - 1].begin(), conn.closure_layers[i - 1].end()));
  }
}

TEST_CASE("sampled 2-colorings of K_20 reach alpha >= 2/3 - 0.1 in some color") {
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    auto host = materialize(gen_seeded_random(seed, 2), 20);
    auto conn = find_alpha_connector(host, range_set(1, 20), seed);
    CHECK(conn.alpha >= Ratio(2, 3) - Ratio(1, 10));
  }
}

TEST_CASE("connector_path routes the long way and re-absorbs") {
  auto host = materialize(gen_all_one_color(30, kRed), 30);
  auto conn = find_alpha_connector(host, range_set(1, 30));
  REQUIRE(conn.X.size() == 30);
  // adjacent on the base cycle: the long way covers the full cycle
  Vertex a = conn.base_cycle[0], b = conn.base_cycle[1];
  auto p = connector_path(host, conn, a, b);
  CHECK(p.size() == 30);
  CHECK(validate_path(host, p));
  // antipodal-ish pair: absorption still recovers everything on a clique
  Vertex c = conn.base_cycle[conn.base_cycle.size() / 2];
  auto q = connector_path(host, conn, a, c);
  CHECK(q.size() == 30);
  CHECK(q.order.front() == a);
  CHECK(q.order.back() == c);
}

TEST_CASE("connector_path contract guards") {
  auto host = materialize(gen_all_one_color(12, kRed), 12);
  auto conn = find_alpha_connector(host, range_set(1, 12));
  CHECK_THROWS_AS(connector_path(host, conn, 3, 3), ParamError);
}

TEST_CASE("every certified pair meets the reported alpha") {
  for (std::uint64_t seed = 3; seed <= 5; ++seed) {
    auto host = materialize(gen_seeded_random(seed * 7, 2), 26);
    auto iv = range_set(1, 26);
    auto conn = find_alpha_connector(host, iv, seed);
    if (conn.X.size() < 2) continue;
    // spot-check pairs; alpha was the certified minimum so each sampled pair
    // must reach it
    for (std::uint64_t t = 0; t < 10; ++t) {
      Vertex u = conn.X[(t * 7) % conn.X.size()];
      Vertex v = conn.X[(t * 11 + 3) % conn.X.size()];
      if (u == v) continue;
      auto p = connector_path(host, conn, u, v, seed);
      if (p.order.empty()) continue;  // sampled certification tolerates chain misses
      CHECK(validate_path(host, p));
    }
  }
}
