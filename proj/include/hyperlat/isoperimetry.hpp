#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "hyperlat/tessellation.hpp"

namespace hyperlat {

// Growth constant of the degree-d triangulation, d >= 6:
//   alpha(d) = (d - 6 + sqrt((d-2)(d-6))) / 2,
// the positive root of a^2 - (d-6)a - (d-6) ... satisfying
// a = d - 6 + a/(1+a). alpha(6) = 0, alpha(7) = golden ratio,
// alpha(8) = 1 + sqrt(3). Quadrangulations of degree d grow like alpha(d+2).
double alpha(int32_t d);

double pc_degree6();  // 2/3, the exact threshold in the flat triangulation
std::pair<int64_t, int64_t> pc_degree6_rational();

// Lower bound for triangulations with vertex-boundary expansion >= beta.
double pc_nonamenable(double beta);

// Lower bounds from the interface counting argument.
double pc_hyperbolic(int32_t d);  // triangulation, d >= 7
double pc_quad(int32_t d);        // quadrangulation, d >= 5

// Upper bound 1/(1+h) from growth h.
double bs_bound(double h);

struct ThresholdBounds {
  double lower;
  double upper;
  bool exact;  // lower == upper == the true threshold
};
// (d, 3) with d >= 6 or (d, 4) with d >= 5; anything else RegimeMismatch.
ThresholdBounds threshold_bounds(int32_t d, int32_t face_degree);

// Sign of A*alpha(d) - C, exactly (integer arithmetic; the discriminant
// (d-2)(d-6) is never a square for d >= 7, so ties need A = 0).
int sign_alpha_comb(int64_t A, int64_t C, int32_t d);

// Largest volume a closed degree-6 interface of size n can enclose:
// floor((n^2 + 6n + 12) / 12).
int64_t max_enclosed_volume(int64_t n);

struct CheegerRow {
  int32_t n;
  int64_t ball;      // |B_n|
  int64_t boundary;  // |S_{n+1}|
  double ratio;
  double target;     // alpha(d) resp. alpha(d+2)
  double abs_err;
};
std::vector<CheegerRow> cheeger_sequence(int32_t d, int32_t face_degree,
                                         int32_t n_max);

// Sphere partition test for a triangulation layer: a cut X with inner parts
// Y (adjacent to X) and Z (the rest) needs |X| >= (d-5)|Y| + (d-6)|Z| + 5.
bool layer_inequality_check(int64_t x, int64_t y, int64_t z, int32_t d);

struct VertexCut {
  int32_t size;
  std::vector<Vertex> members;  // sorted; the residual cut nearest the source
};
// Minimum set of vertices (excluding src and sinks) whose removal separates
// src from every sink. src must not be adjacent to a sink.
VertexCut min_vertex_cut(const PlanarMap& map, Vertex src,
                         const std::vector<Vertex>& sinks);

// Sphere n as a root/rim separator, 1 <= n < radius.
std::vector<Vertex> make_layer_cut(const Ball& ball, int32_t n);

}  // namespace hyperlat
