#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "hyperlat/isoperimetry.hpp"

using namespace hyperlat;

static std::vector<Vertex> rim_of(const Ball& b) {
  std::vector<Vertex> rim;
  for (Vertex v = 0; v < b.map.num_vertices(); ++v)
    if (b.layer[v] == b.radius) rim.push_back(v);
  return rim;
}

// True when removing `cut` leaves no path from root to the rim.
static bool separates(const Ball& b, const std::vector<Vertex>& cut) {
  auto comps = components_after_removal(b.map, cut);
  for (const auto& c : comps) {
    bool has_root = false, has_rim = false;
    for (Vertex v : c.members) {
      if (v == b.map.root()) has_root = true;
      if (b.layer[v] == b.radius) has_rim = true;
    }
    if (has_root) return !has_rim;
  }
  return true;  // root itself removed
}

TEST_CASE("alpha closed forms") {
  CHECK(alpha(6) == 0.0);
  CHECK(std::abs(alpha(7) - (1 + std::sqrt(5.0)) / 2) <= 1e-12);
  CHECK(std::abs(alpha(8) - (1 + std::sqrt(3.0))) <= 1e-12);
  CHECK_THROWS_AS(alpha(5), Error);
}

TEST_CASE("alpha fixed point identity") {
  for (int32_t d = 7; d <= 30; ++d) {
    double a = alpha(d);
    CHECK(std::abs(a - (d - 6 + a / (1 + a))) < 1e-10);
  }
  // Quadrangulation phrasing: degree-d quads grow like alpha(d+2), which
  // satisfies a = d - 4 + a/(1+a).
  for (int32_t d = 5; d <= 28; ++d) {
    double a = alpha(d + 2);
    CHECK(std::abs(a - (d - 4 + a / (1 + a))) < 1e-10);
  }
}

TEST_CASE("threshold bounds") {
  const double s5 = std::sqrt(5.0);
  CHECK(pc_degree6() == 2.0 / 3.0);
  CHECK(pc_degree6_rational() == std::pair<int64_t, int64_t>{2, 3});
  CHECK(pc_nonamenable(1.0) == 0.5);
  CHECK(bs_bound(1.0) == 0.5);
  CHECK(std::abs(pc_hyperbolic(7) - (5 - s5) / 8) <= 1e-15);
  CHECK(std::abs(pc_quad(5) - 3 * (5 - s5) / 22) <= 1e-15);
  CHECK(std::abs(bs_bound(alpha(7)) - (3 - s5) / 2) <= 1e-15);
  CHECK(std::abs(pc_hyperbolic(7) - 0.3454915028) <= 1e-9);
  CHECK(std::abs(pc_quad(5) - 0.3768998213) <= 1e-9);
  CHECK(std::abs(bs_bound(alpha(7)) - 0.3819660113) <= 1e-9);

  ThresholdBounds flat = threshold_bounds(6, 3);
  CHECK(flat.exact);
  CHECK(flat.lower == 2.0 / 3.0);
  CHECK(flat.upper == 2.0 / 3.0);

  ThresholdBounds h7 = threshold_bounds(7, 3);
  CHECK_FALSE(h7.exact);
  CHECK(h7.lower == pc_hyperbolic(7));
  CHECK(h7.upper == bs_bound(alpha(7)));

  ThresholdBounds q5 = threshold_bounds(5, 4);
  CHECK(q5.lower == pc_quad(5));
  CHECK(q5.upper == bs_bound(alpha(7)));

  for (int32_t d = 7; d <= 30; ++d) {
    ThresholdBounds tb = threshold_bounds(d, 3);
    CHECK(tb.lower < tb.upper);
  }
  for (int32_t d = 5; d <= 28; ++d) {
    ThresholdBounds tb = threshold_bounds(d, 4);
    CHECK(tb.lower < tb.upper);
  }

  CHECK_THROWS_AS(threshold_bounds(4, 4), Error);
  CHECK_THROWS_AS(threshold_bounds(5, 3), Error);
  CHECK_THROWS_AS(threshold_bounds(6, 5), Error);
}

TEST_CASE("exact alpha comparator") {
  CHECK(sign_alpha_comb(0, 0, 7) == 0);
  CHECK(sign_alpha_comb(1, 1, 7) == 1);   // phi > 1
  CHECK(sign_alpha_comb(1, 2, 7) == -1);  // phi < 2
  CHECK(sign_alpha_comb(2, 3, 7) == 1);   // 2 phi > 3
  CHECK(sign_alpha_comb(-1, -2, 7) == 1); // 2 - phi > 0
  CHECK(sign_alpha_comb(-2, -3, 7) == -1);
  for (int32_t d : {7, 8, 9, 11, 30}) {
    double a = alpha(d);
    for (int64_t A = -5; A <= 5; ++A)
      for (int64_t C = -8; C <= 8; ++C) {
        double val = A * a - C;
        if (A == 0 && C == 0) {
          CHECK(sign_alpha_comb(A, C, d) == 0);
        } else {
          REQUIRE(std::abs(val) > 1e-9);
          CHECK(sign_alpha_comb(A, C, d) == (val > 0 ? 1 : -1));
        }
      }
  }
}

TEST_CASE("enclosed volume bound") {
  CHECK(max_enclosed_volume(6) == 7);
  CHECK(max_enclosed_volume(7) == 8);
  CHECK(max_enclosed_volume(8) == 10);
  CHECK(max_enclosed_volume(9) == 12);
  CHECK(max_enclosed_volume(10) == 14);
  CHECK(max_enclosed_volume(12) == 19);
}

TEST_CASE("cheeger rows approach the growth constant") {
  auto h73 = cheeger_sequence(7, 3, 8);
  CHECK(h73[8].ball == 11173);
  CHECK(h73[8].boundary == 18088);
  CHECK(h73[8].abs_err <= 0.01);

  auto h54 = cheeger_sequence(5, 4, 8);
  CHECK(h54[8].ball == 7981);
  CHECK(h54[8].boundary == 12920);
  CHECK(h54[8].abs_err <= 0.01);

  auto t6 = cheeger_sequence(6, 3, 10);
  CHECK(t6[10].target == 0.0);
  CHECK(t6[10].ratio == doctest::Approx(66.0 / 331.0));
}

TEST_CASE("layer inequality on generated spheres") {
  CHECK(layer_inequality_check(21, 7, 1, 7));
  CHECK_FALSE(layer_inequality_check(19, 7, 1, 7));
  for (auto [d, r] : {std::pair{7, 8}, {8, 6}, {6, 8}, {9, 5}}) {
    Ball b = make_ball(d, 3, r);
    for (int32_t n = 2; n <= r; ++n) {
      int64_t x = b.sphere_size(n);
      int64_t y = b.sphere_size(n - 1);
      int64_t z = b.layer_sizes[n - 2];
      CHECK(layer_inequality_check(x, y, z, d));
    }
  }
}

TEST_CASE("minimum vertex cuts in balls") {
  for (auto [d, g, want] : {std::tuple{7, 3, 7}, {6, 3, 6}, {5, 4, 5}, {4, 4, 4}}) {
    CAPTURE(d);
    CAPTURE(g);
    Ball b = make_ball(d, g, 3);
    VertexCut cut = min_vertex_cut(b.map, 0, rim_of(b));
    CHECK(cut.size == want);
    // Nearest-root canonical cut is the first sphere.
    std::vector<Vertex> s1;
    for (Vertex v = 1; v <= d; ++v) s1.push_back(v);
    CHECK(cut.members == s1);
    CHECK(separates(b, cut.members));
    // Inclusion minimal: dropping any one vertex reconnects.
    for (size_t i = 0; i < cut.members.size(); ++i) {
      std::vector<Vertex> smaller = cut.members;
      smaller.erase(smaller.begin() + i);
      CHECK_FALSE(separates(b, smaller));
    }
  }
}

TEST_CASE("layer cuts are sphere separators") {
  Ball b = make_ball(7, 3, 4);
  auto cut = make_layer_cut(b, 2);
  CHECK(cut.size() == b.sphere_size(2));
  for (Vertex v : cut) CHECK(b.layer[v] == 2);
  CHECK(separates(b, cut));
  CHECK_THROWS_AS(make_layer_cut(b, 0), Error);
  CHECK_THROWS_AS(make_layer_cut(b, 4), Error);
}

TEST_CASE("cut input guards") {
  Ball b = make_ball(6, 3, 2);
  CHECK_THROWS_AS(min_vertex_cut(b.map, 0, {}), Error);
  CHECK_THROWS_AS(min_vertex_cut(b.map, 0, {0}), Error);
  CHECK_THROWS_AS(min_vertex_cut(b.map, 0, {1}), Error);  // adjacent
}
