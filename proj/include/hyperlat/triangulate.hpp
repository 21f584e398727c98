#pragma once

#include <cstdint>
#include <vector>

#include "hyperlat/interfaces.hpp"
#include "hyperlat/planar_map.hpp"
#include "hyperlat/tessellation.hpp"

namespace hyperlat {

// Disc triangulation spanning an interface pair: the boundary, the region it
// wraps, and every pocket it seals off. The rim is closed into a simple cycle
// through the core vertices; bounded faces are host triangles plus the fans
// that seal rim pockets, so internal vertices keep their host degrees.
struct HullTriangulation {
  PlanarMap map;
  std::vector<Vertex> host_of;  // local id -> host id, ascending
  std::vector<Vertex> rim;      // outer cycle in walk order, local ids
  int64_t added_edges = 0;      // rim chords and pocket fan diagonals
};

// Requires a triangulation host (RegimeMismatch otherwise) and a pair that
// fits it, as produced by interface_of on the same ball (DomainError when the
// fields do not match).
HullTriangulation triangulate_hull(const Ball& host, const InterfacePair& pair);

// Cut the hull open along the face left by removing the wrapped region: each
// visit of a boundary vertex on that face walk becomes its own copy, so the
// wrapped region ends up inside a disc triangulation with a simple rim. The
// rim has at most 2b - b0 vertices for boundary size b and core size b0, and
// wrapped vertices keep their host degrees.
struct UnzippedDisc {
  PlanarMap map;
  std::vector<Vertex> host_of;  // rim copies repeat their boundary host id
  std::vector<Vertex> rim;      // outer cycle, local ids in wrap order
  int32_t region_vertices = 0;  // local ids below this are the wrapped region
};

UnzippedDisc unzip_boundary(const Ball& host, const HullTriangulation& hull,
                            const InterfacePair& pair);

}  // namespace hyperlat
