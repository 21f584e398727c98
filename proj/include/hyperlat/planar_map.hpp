#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hyperlat/errors.hpp"

namespace hyperlat {

using Vertex = int32_t;
using Arc = int32_t;

struct Face {
  Arc first_arc;   // smallest arc id on the walk, -1 for the arcless face of K1
  int32_t degree;  // arcs on the walk; a bridge is counted from both sides
};

// Immutable combinatorial embedding of a connected simple graph in the plane.
//
// Rotation lists are clockwise. The face recorded for an arc u->v is the face
// on the left of the arc, so the walk rule is face_next(a) = rot_next(twin(a)).
// With that convention a triangle whose vertices sit in counterclockwise
// geometric order has its bounded face traversed 0->1->2 (see the unit test
// that pins this down).
//
// Arcs of a vertex are contiguous: vertex v owns arcs rot_begin(v) ..
// rot_begin(v)+degree(v)-1 in rotation order, which makes neighbor scans and
// rotation stepping branch-light.
class PlanarMap {
 public:
  // Empty placeholder, only good for assigning into. Every populated map goes
  // through from_rotation.
  PlanarMap() = default;

  // nbrs[v] is the clockwise neighbor list of v. Requires a connected simple
  // graph whose rotation system has genus 0. outer_arc = (u, v) marks
  // face_of(u->v) as the outer face; without it the outer face defaults to a
  // face of maximum degree (lowest face id on ties).
  static PlanarMap from_rotation(
      const std::vector<std::vector<Vertex>>& nbrs, Vertex root = 0,
      std::optional<std::pair<Vertex, Vertex>> outer_arc = std::nullopt);

  int32_t num_vertices() const { return V_; }
  int64_t num_edges() const { return static_cast<int64_t>(head_.size()) / 2; }
  int32_t num_faces() const { return static_cast<int32_t>(faces_.size()); }
  int64_t num_arcs() const { return static_cast<int64_t>(head_.size()); }
  Vertex root() const { return root_; }
  int32_t outer_face() const { return outer_face_; }

  int32_t degree(Vertex v) const { return rot_off_[v + 1] - rot_off_[v]; }
  Arc rot_begin(Vertex v) const { return rot_off_[v]; }
  Arc rot_end(Vertex v) const { return rot_off_[v + 1]; }
  Vertex tail(Arc a) const { return tail_[a]; }
  Vertex head(Arc a) const { return head_[a]; }
  Arc twin(Arc a) const { return twin_[a]; }
  int32_t face_of(Arc a) const { return face_of_[a]; }
  const Face& face(int32_t f) const { return faces_[f]; }
  bool on_outer_face(Vertex v) const { return on_outer_[v] != 0; }

  Arc rot_next(Arc a) const {
    Vertex v = tail_[a];
    return a + 1 == rot_off_[v + 1] ? rot_off_[v] : a + 1;
  }
  Arc rot_prev(Arc a) const {
    Vertex v = tail_[a];
    return a == rot_off_[v] ? rot_off_[v + 1] - 1 : a - 1;
  }
  Arc face_next(Arc a) const { return rot_next(twin_[a]); }

  // First arc u->v in rotation order, or -1.
  Arc find_arc(Vertex u, Vertex v) const;

  std::vector<Vertex> neighbors(Vertex v) const;

  // All arcs of face f in walk order.
  std::vector<Arc> face_arcs(int32_t f) const;

 private:
  int32_t V_ = 0;
  Vertex root_ = 0;
  int32_t outer_face_ = 0;
  std::vector<int32_t> rot_off_;   // V+1
  std::vector<Vertex> head_;       // per arc
  std::vector<Vertex> tail_;       // per arc
  std::vector<Arc> twin_;          // per arc
  std::vector<int32_t> face_of_;   // per arc
  std::vector<Face> faces_;
  std::vector<uint8_t> on_outer_;  // per vertex
};

struct RemovalComponent {
  std::vector<Vertex> members;  // sorted
  bool touches_outer;           // contains a vertex incident to the outer face
};

// Connected components of the graph minus `removed`, each tagged with whether
// it touches the outer face of the host drawing. Components are ordered by
// smallest member.
std::vector<RemovalComponent> components_after_removal(
    const PlanarMap& map, const std::vector<Vertex>& removed);

struct SubMap {
  PlanarMap map;
  std::vector<Vertex> orig_ids;  // local id -> host id
};

// Induced submaps on `selection`, one per connected component, ordered by
// smallest host member. Each component keeps the host rotation order and gets
// the outer face of its own drawing inside the host (a face region containing
// the host outer face once every vertex outside the component is erased).
std::vector<SubMap> induced_components(const PlanarMap& map,
                                       const std::vector<Vertex>& selection);

// Single-component convenience wrapper; throws Disconnected if the selection
// induces more than one component, EmptySelection if none.
SubMap induced_submap(const PlanarMap& map,
                      const std::vector<Vertex>& selection);

// Assemble a map from its face walks. Every face, the outer one included, is
// given as its vertex cycle with the face on the left of each step; corner
// (pred, succ) pairs then chain into the clockwise rotation of each vertex.
// Throws NotTriangulable when the cycles do not fit together into a map.
PlanarMap map_from_face_cycles(int32_t n,
                               const std::vector<std::vector<Vertex>>& cycles,
                               Vertex root, Vertex outer_u, Vertex outer_v);

// JSON interchange: {"schema_version":1, "vertices":[{"id":..,
// "neighbors_cyclic":[..]},..], "root":.., "outer_arc":[u,v]}.
std::string map_to_json_string(const PlanarMap& map, int indent = -1);
PlanarMap map_from_json_string(const std::string& text);
void save_map(const PlanarMap& map, const std::string& path);
PlanarMap load_map(const std::string& path);

}  // namespace hyperlat
