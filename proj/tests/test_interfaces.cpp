#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <vector>

#include "hyperlat/errors.hpp"
#include "hyperlat/interfaces.hpp"
#include "hyperlat/isoperimetry.hpp"
#include "hyperlat/tessellation.hpp"

using namespace hyperlat;

namespace {

std::vector<Vertex> layer_ids(const Ball& ball, int32_t k) {
  std::vector<Vertex> out;
  for (Vertex v = 0; v < ball.map.num_vertices(); ++v)
    if (ball.layer[v] == k) out.push_back(v);
  return out;
}

bool contains(const std::vector<Vertex>& xs, Vertex v) {
  return std::binary_search(xs.begin(), xs.end(), v);
}

// The second shell of a triangulation ball induces a cycle; return it in
// cyclic order by walking same-layer edges.
std::vector<Vertex> shell_cycle(const Ball& ball, int32_t k) {
  std::vector<Vertex> shell = layer_ids(ball, k);
  std::vector<Vertex> cyc;
  std::vector<char> used(ball.map.num_vertices(), 0);
  Vertex cur = shell.front();
  for (;;) {
    cyc.push_back(cur);
    used[cur] = 1;
    Vertex next = -1;
    for (Arc a = ball.map.rot_begin(cur); a < ball.map.rot_end(cur); ++a) {
      Vertex u = ball.map.head(a);
      if (ball.layer[u] == k && !used[u]) {
        next = u;
        break;
      }
    }
    if (next < 0) break;
    cur = next;
  }
  REQUIRE(cyc.size() == shell.size());
  return cyc;
}

int64_t census_count(const PairCensus& c, int32_t b, int32_t m) {
  for (const CensusEntry& e : c.counts)
    if (e.b == b && e.m == m) return e.count;
  return 0;
}

}  // namespace

TEST_CASE("regime check functions") {
  // degree-6 triangulation: first shell pair of the unit ball
  CHECK(ratio_check(6, 12, 12, 6, 3));
  CHECK_FALSE(ratio_check(13, 12, 12, 6, 3));
  // degree-7: (d-5)m <= 2b - b0
  CHECK(ratio_check(7, 21, 21, 7, 3));
  CHECK_FALSE(ratio_check(11, 21, 21, 7, 3));
  // quadrangulation d=5: 5m <= 3(2b - b0)
  CHECK(ratio_check(5, 15, 15, 5, 4));
  CHECK_FALSE(ratio_check(10, 15, 15, 5, 4));

  CHECK(alpha_check(6, 12, 12, 6, 3));  // alpha_6 = 0, holds for any b0 >= 0
  CHECK(alpha_check(7, 21, 21, 7, 3));
  CHECK_FALSE(alpha_check(40, 21, 21, 7, 3));
  CHECK(alpha_check(5, 15, 15, 5, 4));

  CHECK(combined_check(6, 12, 6, 3));
  CHECK(combined_check(7, 21, 7, 3));
  CHECK_FALSE(combined_check(12, 21, 7, 3));  // phi*15 > 18
  CHECK(combined_check(5, 15, 5, 4));

  CHECK(volume_check(7, 12));
  CHECK_FALSE(volume_check(20, 12));

  CHECK_THROWS_AS(ratio_check(1, 1, 1, 5, 3), Error);
  CHECK_THROWS_AS(ratio_check(1, 1, 1, 4, 4), Error);
  CHECK_THROWS_AS(alpha_check(1, 1, 1, 6, 5), Error);
}

TEST_CASE("single vertex and first shell pairs") {
  Ball t6 = make_ball(6, 3, 4);
  InterfacePair p = interface_of(t6, {0});
  CHECK(p.interface == std::vector<Vertex>{0});
  CHECK(p.boundary == layer_ids(t6, 1));
  CHECK(p.core == p.boundary);
  CHECK(p.filled == std::vector<Vertex>{0});

  InterfacePair b1 = interface_of(t6, {0, 1, 2, 3, 4, 5, 6});
  CHECK(b1.interface == layer_ids(t6, 1));
  CHECK(b1.boundary == layer_ids(t6, 2));
  CHECK(b1.core == b1.boundary);
  CHECK(b1.filled.size() == 7);

  Ball h73 = make_ball(7, 3, 4);
  std::vector<Vertex> h73b1{0, 1, 2, 3, 4, 5, 6, 7};
  InterfacePair q = interface_of(h73, h73b1);
  CHECK(q.interface == layer_ids(h73, 1));
  CHECK(q.boundary == layer_ids(h73, 2));
  CHECK(q.boundary.size() == 21);
  CHECK(q.core.size() == 21);

  // quad first shell induces a star, so the hub also sits on the unbounded
  // face and joins the interface
  Ball h54 = make_ball(5, 4, 4);
  InterfacePair r = interface_of(h54, {0, 1, 2, 3, 4, 5});
  CHECK(r.interface == r.filled);
  CHECK(r.interface.size() == 6);
  CHECK(r.boundary == layer_ids(h54, 2));
  CHECK(r.boundary.size() == 15);
  CHECK(r.core.size() == 15);
}

TEST_CASE("ring fills its hole") {
  Ball t6 = make_ball(6, 3, 4);
  std::vector<Vertex> ring{1, 2, 3, 4, 5, 6};
  InterfacePair p = interface_of(t6, ring);
  CHECK(p.interface == ring);
  CHECK(p.filled == std::vector<Vertex>{0, 1, 2, 3, 4, 5, 6});
  CHECK(p.boundary == layer_ids(t6, 2));

  InterfacePair whole = interface_of(t6, {0, 1, 2, 3, 4, 5, 6});
  CHECK(p.interface == whole.interface);
  CHECK(p.boundary == whole.boundary);
  CHECK(p.filled == whole.filled);

  // an open arc wraps nothing: the center stays outside
  InterfacePair arc = interface_of(t6, {1, 2, 3, 4, 5});
  CHECK(arc.filled == std::vector<Vertex>{1, 2, 3, 4, 5});
  CHECK(contains(arc.boundary, 0));
}

TEST_CASE("open shell path pockets the center at the boundary level") {
  // second-shell cycle minus one vertex: the cluster itself encloses
  // nothing (its complement stays connected through the gap), but its
  // neighborhood seals the center into a pocket, so the first shell loses
  // contact with the escaping side and falls out of the core
  Ball t6 = make_ball(6, 3, 5);
  std::vector<Vertex> cyc = shell_cycle(t6, 2);
  Vertex dropped = cyc.back();
  std::vector<Vertex> path(cyc.begin(), cyc.end() - 1);
  InterfacePair p = interface_of(t6, path);
  std::vector<Vertex> sorted_path(path);
  std::sort(sorted_path.begin(), sorted_path.end());
  CHECK(p.interface == sorted_path);
  CHECK(p.filled == sorted_path);
  CHECK_FALSE(contains(p.boundary, 0));
  CHECK(contains(p.boundary, dropped));
  for (Vertex v : layer_ids(t6, 1)) CHECK(contains(p.boundary, v));

  std::vector<Vertex> excluded;
  std::set_difference(p.boundary.begin(), p.boundary.end(), p.core.begin(),
                      p.core.end(), std::back_inserter(excluded));
  std::vector<Vertex> expect = layer_ids(t6, 1);
  bool dropped_sealed = true;
  for (Arc a = t6.map.rot_begin(dropped); a < t6.map.rot_end(dropped); ++a) {
    Vertex w = t6.map.head(a);
    if (!contains(sorted_path, w) && !contains(p.boundary, w))
      dropped_sealed = false;
  }
  if (dropped_sealed) expect.push_back(dropped);
  std::sort(expect.begin(), expect.end());
  CHECK(excluded == expect);
}

TEST_CASE("quad pocket path") {
  // five spokes and four of the five connecting diamonds: a tree that pins
  // the root in place without enclosing it, so the root lands in B but has
  // no contact with the far side and drops out of the core
  Ball h54 = make_ball(5, 4, 4);
  auto common_child = [&](Vertex a, Vertex b) {
    for (Arc e = h54.map.rot_begin(a); e < h54.map.rot_end(a); ++e) {
      Vertex u = h54.map.head(e);
      if (h54.layer[u] == 2 && h54.map.find_arc(u, b) >= 0) return u;
    }
    return Vertex(-1);
  };
  std::vector<Vertex> path;
  for (Vertex c = 1; c <= 5; ++c) {
    path.push_back(c);
    if (c < 5) {
      Vertex s = common_child(c, c + 1);
      REQUIRE(s >= 0);
      path.push_back(s);
    }
  }
  REQUIRE(path.size() == 9);
  Vertex s5 = common_child(5, 1);
  REQUIRE(s5 >= 0);

  InterfacePair p = interface_of(h54, path);
  std::vector<Vertex> sorted_path(path);
  std::sort(sorted_path.begin(), sorted_path.end());
  CHECK(p.interface == sorted_path);
  CHECK(p.filled == sorted_path);  // the trapped root is not absorbed
  CHECK(p.boundary.size() == 24);
  CHECK(contains(p.boundary, 0));
  CHECK(contains(p.boundary, s5));
  // the root touches only the path, never the far side
  std::vector<Vertex> expect_core(p.boundary);
  expect_core.erase(std::find(expect_core.begin(), expect_core.end(), 0));
  CHECK(p.core == expect_core);

  // adding the root gives a different pair: one diamond fan around the root
  std::vector<Vertex> with_root(path);
  with_root.push_back(0);
  InterfacePair q = interface_of(h54, with_root);
  CHECK(q.interface.size() == 10);
  CHECK(contains(q.interface, 0));
  CHECK(q.boundary.size() == 23);
  CHECK_FALSE(contains(q.boundary, 0));
  std::vector<Vertex> diff;
  std::set_difference(p.boundary.begin(), p.boundary.end(),
                      q.boundary.begin(), q.boundary.end(),
                      std::back_inserter(diff));
  CHECK(diff == std::vector<Vertex>{0});

  // neither reconstruction accepts the rootless pair
  CHECK_THROWS_AS(from_interface(h54, path), Error);
  CHECK_THROWS_AS(from_boundary(h54, p.boundary), Error);
  // the rooted pair round-trips
  InterfacePair q2 = from_interface(h54, q.interface);
  CHECK(q2.boundary == q.boundary);
  InterfacePair q3 = from_boundary(h54, q.boundary);
  CHECK(q3.interface == q.interface);
  CHECK(q3.filled == q.filled);
}

TEST_CASE("reconstruction round trips") {
  Ball t6 = make_ball(6, 3, 4);
  for (const std::vector<Vertex>& cluster :
       {std::vector<Vertex>{0}, std::vector<Vertex>{0, 1},
        std::vector<Vertex>{0, 1, 2}, std::vector<Vertex>{0, 1, 3, 5},
        std::vector<Vertex>{1, 2, 3, 4, 5, 6}}) {
    InterfacePair p = interface_of(t6, cluster);
    InterfacePair pm = from_interface(t6, p.interface);
    CHECK(pm.interface == p.interface);
    CHECK(pm.boundary == p.boundary);
    CHECK(pm.filled == p.filled);
    CHECK(pm.core == p.core);
    InterfacePair pb = from_boundary(t6, p.boundary);
    CHECK(pb.interface == p.interface);
    CHECK(pb.boundary == p.boundary);
    CHECK(pb.filled == p.filled);
  }

  // second shell as interface: wraps the whole unit ball
  std::vector<Vertex> s2 = layer_ids(t6, 2);
  InterfacePair ps = from_interface(t6, s2);
  CHECK(ps.interface == s2);
  CHECK(ps.filled.size() == 19);

  CHECK_THROWS_WITH_AS(from_interface(t6, {1, 2}),
                       doctest::Contains("wrap"), Error);
  CHECK_THROWS_AS(from_boundary(t6, {1, 2, 3}), Error);
  CHECK_THROWS_WITH_AS(from_boundary(t6, {0, 1, 2}),
                       doctest::Contains("root"), Error);
}

TEST_CASE("input validation") {
  Ball t6 = make_ball(6, 3, 4);
  CHECK_THROWS_AS(interface_of(t6, {}), Error);
  CHECK_THROWS_WITH_AS(interface_of(t6, {0, 7}),
                       doctest::Contains("not connected"), Error);
  CHECK_THROWS_WITH_AS(interface_of(t6, {0, 0}),
                       doctest::Contains("duplicate"), Error);
  CHECK_THROWS_AS(interface_of(t6, {-1}), Error);
  CHECK_THROWS_AS(interface_of(t6, {10000}), Error);
  // layer-3 vertex on a radius-4 ball: too close to the rim
  Vertex far = layer_ids(t6, 3).front();
  CHECK_THROWS_WITH_AS(interface_of(t6, {far}), doctest::Contains("rim"),
                       Error);
  CHECK_THROWS_AS(enumerate_pairs(t6, 0), Error);
  Ball tiny = make_ball(6, 3, 1);
  CHECK_THROWS_AS(enumerate_pairs(tiny, 1), Error);
}

TEST_CASE("census frozen tiny counts") {
  Ball t6 = make_ball(6, 3, 3);
  PairCensus c1 = enumerate_pairs(t6, 1);
  CHECK(c1.clusters_enumerated == 1);
  CHECK(c1.distinct_pairs == 1);
  CHECK(census_count(c1, 6, 1) == 1);
  CHECK(c1.violations == 0);
  CHECK(c1.roundtrip_failures == 0);

  PairCensus c2 = enumerate_pairs(t6, 2);
  CHECK(c2.clusters_enumerated == 7);
  CHECK(c2.distinct_pairs == 7);
  CHECK(census_count(c2, 6, 1) == 1);
  CHECK(census_count(c2, 8, 2) == 6);  // edge cluster: b = 2d - 4
  CHECK(c2.violations == 0);
  CHECK(c2.roundtrip_failures == 0);
  CHECK(c2.max_m == 2);
  CHECK(c2.max_b == 8);
  CHECK(c2.max_volume == 2);

  Ball h73 = make_ball(7, 3, 3);
  PairCensus c3 = enumerate_pairs(h73, 2);
  CHECK(census_count(c3, 7, 1) == 1);
  CHECK(census_count(c3, 10, 2) == 7);
  CHECK(c3.violations == 0);
  CHECK(c3.roundtrip_failures == 0);

  Ball h54 = make_ball(5, 4, 3);
  PairCensus c4 = enumerate_pairs(h54, 2);
  CHECK(census_count(c4, 5, 1) == 1);
  CHECK(census_count(c4, 8, 2) == 5);  // quad edge cluster: b = 2d - 2
  CHECK(c4.violations == 0);
  CHECK(c4.roundtrip_failures == 0);

  // square lattice: pairs and round trips work outside the theorem regimes
  Ball z2 = make_ball(4, 4, 3);
  PairCensus c5 = enumerate_pairs(z2, 2);
  CHECK(census_count(c5, 4, 1) == 1);
  CHECK(census_count(c5, 6, 2) == 4);
  CHECK(c5.violations == 0);
  CHECK(c5.roundtrip_failures == 0);
}

TEST_CASE("census cluster totals match rooted animal counts") {
  // rooted site animals: sum of k * (fixed animals of size k)
  Ball t6 = make_ball(6, 3, 6);
  PairCensus c = enumerate_pairs(t6, 5);
  CHECK(c.clusters_enumerated == 1146);  // 1 + 2*3 + 3*11 + 4*44 + 5*186
  CHECK(c.violations == 0);
  CHECK(c.roundtrip_failures == 0);

  Ball z2 = make_ball(4, 4, 5);
  PairCensus cz = enumerate_pairs(z2, 4);
  CHECK(cz.clusters_enumerated == 99);  // 1 + 2*2 + 3*6 + 4*19
  CHECK(cz.violations == 0);
  CHECK(cz.roundtrip_failures == 0);
}

TEST_CASE("census checks hold on small hyperbolic patches") {
  Ball h73 = make_ball(7, 3, 5);
  PairCensus c = enumerate_pairs(h73, 4);
  CHECK(c.violations == 0);
  CHECK(c.roundtrip_failures == 0);
  CHECK(c.distinct_pairs > 0);
  CHECK(c.max_m <= 4);

  Ball h54 = make_ball(5, 4, 5);
  PairCensus q = enumerate_pairs(h54, 5);
  CHECK(q.violations == 0);
  CHECK(q.roundtrip_failures == 0);
}

TEST_CASE("degree-six counting bound holds on a small census") {
  // sum over m of b_{n,m} 2^m 3^(cap-m) <= f(n) 3^(n+cap), all integers
  Ball t6 = make_ball(6, 3, 6);
  PairCensus c = enumerate_pairs(t6, 5, false);
  int32_t cap = 5;
  for (int32_t n = 1; n <= c.max_b; ++n) {
    unsigned __int128 lhs = 0;
    for (const CensusEntry& e : c.counts) {
      if (e.b != n) continue;
      unsigned __int128 term = (unsigned __int128)e.count;
      for (int32_t i = 0; i < e.m; ++i) term *= 2;
      for (int32_t i = 0; i < cap - e.m; ++i) term *= 3;
      lhs += term;
    }
    unsigned __int128 rhs = (unsigned __int128)max_enclosed_volume(n);
    for (int32_t i = 0; i < n + cap; ++i) rhs *= 3;
    CHECK(lhs <= rhs);
  }
}

TEST_CASE("analyzer reuse is stable") {
  Ball t6 = make_ball(6, 3, 4);
  InterfaceAnalyzer an(t6);
  std::vector<Vertex> m1, b1, m2, b2;
  for (const std::vector<Vertex>& cluster :
       {std::vector<Vertex>{0}, std::vector<Vertex>{0, 1, 2},
        std::vector<Vertex>{1, 2, 3, 4, 5, 6}}) {
    an.pair_of(cluster, m1, b1);
    an.pair_of(cluster, m2, b2);
    CHECK(m1 == m2);
    CHECK(b1 == b2);
    InterfacePair p = interface_of(t6, cluster);
    CHECK(p.interface == m1);
    CHECK(p.boundary == b1);
  }
}

TEST_CASE("census json") {
  Ball t6 = make_ball(6, 3, 3);
  PairCensus c = enumerate_pairs(t6, 2);
  std::string s = census_to_json_string(c);
  CHECK(s.find("\"kind\":\"pair_census\"") != std::string::npos);
  CHECK(s.find("\"cap\":2") != std::string::npos);
  CHECK(s.find("\"distinct_pairs\":7") != std::string::npos);
  CHECK(s.find("\"violations\":0") != std::string::npos);
  std::string pretty = census_to_json_string(c, 2);
  CHECK(pretty.find('\n') != std::string::npos);
}
