#pragma once

#include "hyperlat/planar_map.hpp"

namespace hyperlat {

struct Ball {
  PlanarMap map;
  std::vector<int32_t> layer;        // graph distance from the root
  std::vector<int64_t> layer_sizes;  // cumulative: layer_sizes[n] = |B_n|
  int32_t d = 0;
  int32_t face_degree = 0;  // 3 or 4
  int32_t radius = 0;

  int64_t sphere_size(int32_t n) const {
    return n == 0 ? 1 : layer_sizes[n] - layer_sizes[n - 1];
  }
};

// Exact vertex count of the radius-r ball, by the sphere recurrence; no
// construction. Throws BudgetExceeded once the count passes 2^40.
int64_t ball_size(int32_t d, int32_t face_degree, int32_t r);

// Radius-r ball of the d-regular tessellation by triangles (face_degree 3,
// d >= 6) or quadrilaterals (face_degree 4, d >= 4). d = 6 resp. 4 give the
// euclidean lattices, larger d the hyperbolic ones. A negative budget reads
// HYPERLAT_BUDGET (vertices, default 20000000).
Ball make_ball(int32_t d, int32_t face_degree, int32_t r, int64_t budget = -1);

std::string ball_to_json_string(const Ball& ball, int indent = -1);
Ball ball_from_json_string(const std::string& text);
void save_ball(const Ball& ball, const std::string& path);
Ball load_ball(const std::string& path);

}  // namespace hyperlat
