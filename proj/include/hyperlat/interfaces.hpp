#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hyperlat/tessellation.hpp"

namespace hyperlat {

// Outer interface pair of a finite cluster. M is the set of filled-cluster
// vertices on the unbounded face of the cluster's drawing, B the complement
// neighbors of the filled cluster. Components of the complement count as
// outside when they lie in the unbounded face, which keeps cluster -> pair
// extraction and the two reconstructions mutually inverse; a finite component
// trapped by a tree-shaped cluster is outside under this rule even though it
// cannot reach far. core is the subset of B adjacent to the far component.
struct InterfacePair {
  std::vector<Vertex> interface;  // M, sorted
  std::vector<Vertex> boundary;   // B, sorted
  std::vector<Vertex> core;       // B-vertices adjacent to the far side, sorted
  std::vector<Vertex> filled;     // cluster with enclosed pockets absorbed
};

// Exact integer checks of the interface inequalities, selected by host type.
// Triangulations (face_degree 3, d >= 6):
//   ratio     (d-5) m <= 2 b - b0
//   alpha     alpha_d (m + b - b0) <= b0
//   combined  alpha_d ((d-4) m - b) <= 2 b - (d-5) m
// Quadrangulations (face_degree 4, d >= 5), with Q = (d-4)(d-2) + (d-3) and
// growth alpha_{d+2}:
//   ratio     Q m <= (d-2)(2 b - b0)
//   alpha     alpha_{d+2} (m + b - b0) <= b0
//   combined  alpha_{d+2} (((d-2)+Q) m - (d-2) b) <= 2 (d-2) b - Q m
bool ratio_check(int64_t m, int64_t b, int64_t b_core, int32_t d,
                 int32_t face_degree);
bool alpha_check(int64_t m, int64_t b, int64_t b_core, int32_t d,
                 int32_t face_degree);
bool combined_check(int64_t m, int64_t b, int32_t d, int32_t face_degree);

// Triangulation hosts: the filled cluster volume is at most
// max_enclosed_volume(b) (the degree-6 disc is the worst case).
bool volume_check(int64_t volume, int64_t b);

// Reusable extraction engine. All scratch state lives here, so a census can
// run millions of extractions without allocating. Not thread safe; one
// analyzer per thread.
class InterfaceAnalyzer {
 public:
  explicit InterfaceAnalyzer(const Ball& host);

  // M and B of a connected cluster staying at least two layers off the rim
  // (sorted outputs, buffers overwritten). With trusted = true the
  // connectivity/layer validation is skipped.
  void pair_of(const std::vector<Vertex>& cluster, std::vector<Vertex>& m_out,
               std::vector<Vertex>& b_out, bool trusted = false);

  struct CoreResult {
    int64_t volume = 0;       // size of the component holding inner_seed
    bool inner_escaped = false;  // that component reached the rim or overflowed
  };
  // B0 of a boundary set plus the enclosed volume at inner_seed. inner_members
  // receives that component; trapped receives every vertex the boundary pins
  // in place (all components that stay put), the disc interior used by the
  // triangulation builder. Either sink may be null.
  CoreResult core_of(const std::vector<Vertex>& boundary, Vertex inner_seed,
                     std::vector<Vertex>& core_out,
                     std::vector<Vertex>* inner_members = nullptr,
                     std::vector<Vertex>* trapped = nullptr);

  // Filled cluster of the most recent pair_of call (cluster plus enclosed
  // components), sorted. Valid until the next analyzer call.
  void last_filled(std::vector<Vertex>& filled_out) const;

  // Filled cluster of `cluster`: the cluster plus enclosed components.
  void filled_of(const std::vector<Vertex>& cluster,
                 std::vector<Vertex>& filled_out, bool trusted = false);

  const Ball& host() const { return *host_; }

 private:
  struct CompInfo {
    uint8_t certain;    // reached the rim, overflowed, or merged: far side
    uint8_t exterior;   // final classification
    Vertex attach_vertex;
    int32_t attach_slot;  // host rotation slot of the first attachment arc
    int32_t members_off, members_len;  // filled only for completed components
  };

  void stamp_set(const std::vector<Vertex>& a);
  void validate_set(int32_t max_layer, bool need_connected);
  void find_components(int64_t budget);
  void build_local_submap();
  void classify_components();
  int32_t sector_face(Vertex c, int32_t host_slot) const;

  const Ball* host_;
  int32_t max_layer_cluster_, max_layer_boundary_;
  int32_t epoch_ = 0;
  std::vector<int32_t> in_set_, set_slot_;
  std::vector<int32_t> visit_, comp_, taken_;
  std::vector<Vertex> set_;  // current A, sorted
  std::vector<Vertex> bfs_;
  std::vector<CompInfo> comps_;
  std::vector<Vertex> comp_members_;
  // local induced submap of A (host rotation order preserved)
  std::vector<int32_t> loff_, lnbr_, lslot_, ltail_, ltwin_, lface_;
  std::vector<uint8_t> lmark_;
  int32_t lfaces_ = 0, louter_ = -1;
};

// Public wrappers. interface_of validates the cluster; the reconstructions
// throw NotAnInterface when the input is not the M (resp. B) of any cluster
// containing the root.
InterfacePair interface_of(const Ball& host, const std::vector<Vertex>& cluster);
InterfacePair from_interface(const Ball& host, const std::vector<Vertex>& m);
InterfacePair from_boundary(const Ball& host, const std::vector<Vertex>& b);

struct CensusEntry {
  int32_t b, m;   // boundary and interface size
  int64_t count;  // distinct pairs with these sizes
};

struct PairCensus {
  int32_t d = 0, face_degree = 0, radius = 0, cap = 0;
  int64_t clusters_enumerated = 0;
  int64_t distinct_pairs = 0;
  std::vector<CensusEntry> counts;  // sorted by (b, m)
  int64_t violations = 0;
  std::vector<std::string> violation_notes;  // first few, for reports
  int64_t roundtrip_failures = 0;
  int32_t max_m = 0, max_b = 0;
  int64_t max_volume = 0;
  std::vector<Vertex> widest_interface;  // an M realizing max_m
  std::vector<Vertex> widest_boundary;   // its B
};

// Exhaustive census: every connected induced cluster containing the root with
// at most cap vertices (kept two layers off the rim), deduplicated to
// distinct (M, B) pairs. Runs the regime checks on every distinct pair and,
// when roundtrip is set, both reconstructions.
PairCensus enumerate_pairs(const Ball& host, int32_t cap, bool roundtrip = true);

std::string census_to_json_string(const PairCensus& census, int indent = -1);

}  // namespace hyperlat
