#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "hyperlat/planar_map.hpp"
#include "hyperlat/tessellation.hpp"

namespace hyperlat {

// Brute-force reference implementations kept deliberately separate from the
// modules they certify: a full configuration sweep for site percolation, a
// frontier-grown subgraph enumerator, and a small disc-triangulation
// generator. Everything here is exact integer work.

// counts[j] = occupancy patterns with j occupied vertices whose open set
// joins the center to the outermost layer. at(p) folds in the weights.
struct ExactPercolation {
  int32_t vertices = 0;
  std::vector<int64_t> counts;
  double at(double p) const;
};

// Full 2^V sweep; BudgetExceeded above 22 vertices.
ExactPercolation exhaustive_percolation(const Ball& patch);

// Every connected induced subgraph containing o with at most size_max
// vertices, as sorted vertex sets in lexicographic order. Grown level by
// level with set dedup, unrelated to the census recursion it cross-checks.
// BudgetExceeded once more than max_sets accumulate.
std::vector<std::vector<Vertex>> enumerate_connected_subgraphs(
    const PlanarMap& g, Vertex o, int32_t size_max,
    int64_t max_sets = 2000000);

// A triangulated disc: simple boundary cycle, bounded faces all triangles,
// internal vertices at or above the configured degree minimum.
struct DiscTriangulation {
  PlanarMap map;
  int32_t boundary_length = 0;       // degree of the outer face
  std::vector<Vertex> internal;      // vertices off the boundary, sorted
  int32_t total_vertices = 0;
  int32_t hull_boundary_length = 0;  // summed outer walks of the internal
                                     // components, bridges counted twice
};

// All isomorphism classes with boundary length 3..n_boundary_max and at most
// k_max vertices, each exactly once (canonical-code dedup over rotations and
// reflections of the marked boundary), streamed in generation order. Returns
// the number emitted. BudgetExceeded beyond n_boundary_max 10 / k_max 16.
int64_t enumerate_disc_triangulations(
    int32_t n_boundary_max, int32_t k_max, int32_t min_internal_degree,
    const std::function<void(const DiscTriangulation&)>& sink);

}  // namespace hyperlat
