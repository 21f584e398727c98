#include "hyperlat/triangulate.hpp"

#include <algorithm>
#include <cstdint>
#include <unordered_set>
#include <utility>
#include <vector>

#include "hyperlat/errors.hpp"

namespace hyperlat {

namespace {

int64_t edge_key(int32_t n, Vertex a, Vertex b) {
  if (a > b) std::swap(a, b);
  return static_cast<int64_t>(a) * n + b;
}

// Triangulate the polygon between a skipped rim stretch and its closing
// chord, interior on the left of the given cycle. The stretch may pinch
// (repeated vertices), so split there first; what remains is simple and is
// clipped ear by ear, refusing any diagonal that already exists.
void fill_pocket(std::vector<Vertex> cyc, std::unordered_set<int64_t>& edges,
                 int32_t n, std::vector<std::vector<Vertex>>& faces,
                 int64_t& added) {
  if (cyc.size() < 3) return;  // a doubled edge bounds no area
  for (size_t i = 0; i < cyc.size(); ++i)
    for (size_t j = i + 1; j < cyc.size(); ++j)
      if (cyc[i] == cyc[j]) {
        std::vector<Vertex> a(cyc.begin() + i, cyc.begin() + j);
        std::vector<Vertex> b;
        b.insert(b.end(), cyc.begin() + j, cyc.end());
        b.insert(b.end(), cyc.begin(), cyc.begin() + i);
        fill_pocket(std::move(a), edges, n, faces, added);
        fill_pocket(std::move(b), edges, n, faces, added);
        return;
      }
  while (cyc.size() > 3) {
    size_t r = cyc.size();
    bool clipped = false;
    for (size_t i = 0; i < r; ++i) {
      Vertex p = cyc[(i + r - 1) % r];
      Vertex v = cyc[i];
      Vertex nx = cyc[(i + 1) % r];
      int64_t key = edge_key(n, p, nx);
      if (edges.count(key)) continue;
      faces.push_back({p, v, nx});
      edges.insert(key);
      ++added;
      cyc.erase(cyc.begin() + i);
      clipped = true;
      break;
    }
    if (!clipped)
      fail(ErrorCode::NotTriangulable, "no free diagonal closes a rim pocket");
  }
  faces.push_back({cyc[0], cyc[1], cyc[2]});
}

}  // namespace

HullTriangulation triangulate_hull(const Ball& host, const InterfacePair& pair) {
  if (host.face_degree != 3)
    fail(ErrorCode::RegimeMismatch,
         "hull triangulation needs a triangulation host");
  if (pair.filled.empty() || pair.boundary.empty())
    fail(ErrorCode::EmptySelection, "empty interface pair");

  // Check the pair against the host and collect what the boundary pins down.
  InterfaceAnalyzer an(host);
  std::vector<Vertex> core, inner, trapped;
  auto cr = an.core_of(pair.boundary, pair.filled.front(), core, &inner, &trapped);
  if (cr.inner_escaped || inner != pair.filled || core != pair.core)
    fail(ErrorCode::DomainError, "pair fields do not match the host");
  {
    // The boundary must be the exact neighborhood of the wrapped region.
    std::vector<Vertex> nb;
    std::vector<char> mark(host.map.num_vertices(), 0);
    for (Vertex v : pair.filled) mark[v] = 1;
    for (Vertex v : pair.filled)
      for (Arc a = host.map.rot_begin(v); a < host.map.rot_end(v); ++a) {
        Vertex w = host.map.head(a);
        if (!mark[w]) {
          mark[w] = 1;
          nb.push_back(w);
        }
      }
    std::sort(nb.begin(), nb.end());
    if (nb != pair.boundary)
      fail(ErrorCode::DomainError, "pair fields do not match the host");
  }

  // Hull vertex set: the boundary plus every component it keeps in place.
  std::vector<Vertex> w_set(trapped);
  w_set.insert(w_set.end(), pair.boundary.begin(), pair.boundary.end());
  std::sort(w_set.begin(), w_set.end());
  SubMap sub = induced_submap(host.map, w_set);
  const PlanarMap& g = sub.map;
  int32_t n = g.num_vertices();

  // Rim walk: the far side borders exactly the core, with multiplicity.
  std::vector<Arc> walk = g.face_arcs(g.outer_face());
  size_t len = walk.size();
  if (len < 3) fail(ErrorCode::NotTriangulable, "degenerate rim walk");
  std::vector<Vertex> occ(len);
  for (size_t i = 0; i < len; ++i) occ[i] = g.tail(walk[i]);
  {
    std::vector<Vertex> rim_hosts;
    rim_hosts.reserve(len);
    for (Vertex v : occ) rim_hosts.push_back(sub.orig_ids[v]);
    std::sort(rim_hosts.begin(), rim_hosts.end());
    rim_hosts.erase(std::unique(rim_hosts.begin(), rim_hosts.end()),
                    rim_hosts.end());
    if (rim_hosts != core)
      fail(ErrorCode::NotTriangulable, "rim walk disagrees with the core");
  }

  // Keep the first visit of each rim vertex; later visits become pockets
  // sealed against the kept cycle by one chord each.
  std::vector<int32_t> first_pos(n, -1);
  for (size_t i = 0; i < len; ++i)
    if (first_pos[occ[i]] < 0) first_pos[occ[i]] = static_cast<int32_t>(i);
  std::unordered_set<int64_t> edges;
  for (Arc a = 0; a < g.num_arcs(); ++a)
    if (g.tail(a) < g.head(a)) edges.insert(edge_key(n, g.tail(a), g.head(a)));
  std::vector<std::vector<Vertex>> faces;
  std::vector<Vertex> rim;
  rim.reserve(len);
  std::vector<Vertex> pending;
  int64_t added = 0;
  auto close_stretch = [&](Vertex from, Vertex to) {
    if (pending.empty()) return;
    int64_t key = edge_key(n, from, to);
    if (edges.count(key))
      fail(ErrorCode::NotTriangulable, "rim chord already present");
    edges.insert(key);
    ++added;
    std::vector<Vertex> cyc;
    cyc.reserve(pending.size() + 2);
    cyc.push_back(from);
    cyc.insert(cyc.end(), pending.begin(), pending.end());
    cyc.push_back(to);
    fill_pocket(std::move(cyc), edges, n, faces, added);
    pending.clear();
  };
  for (size_t i = 0; i < len; ++i) {
    Vertex v = occ[i];
    if (first_pos[v] == static_cast<int32_t>(i)) {
      if (!rim.empty()) close_stretch(rim.back(), v);
      rim.push_back(v);
    } else {
      pending.push_back(v);
    }
  }
  close_stretch(rim.back(), rim.front());
  if (rim.size() < 3) fail(ErrorCode::NotTriangulable, "rim shorter than three");

  // Bounded faces of the hull set are host triangles; keep them as they are.
  for (int32_t f = 0; f < g.num_faces(); ++f) {
    if (f == g.outer_face()) continue;
    std::vector<Arc> fa = g.face_arcs(f);
    if (fa.size() != 3)
      fail(ErrorCode::NotTriangulable, "pinned region has a non-triangular face");
    faces.push_back({g.tail(fa[0]), g.tail(fa[1]), g.tail(fa[2])});
  }
  faces.push_back(rim);  // outer face

  HullTriangulation out;
  out.map = map_from_face_cycles(n, faces, 0, rim[0], rim[1]);
  out.host_of = sub.orig_ids;
  out.rim = rim;
  out.added_edges = added;

  const PlanarMap& t = out.map;
  if (t.face(t.outer_face()).degree != static_cast<int32_t>(rim.size()))
    fail(ErrorCode::NotTriangulable, "rim does not bound the outer face");
  for (int32_t f = 0; f < t.num_faces(); ++f)
    if (f != t.outer_face() && t.face(f).degree != 3)
      fail(ErrorCode::NotTriangulable, "hull face left untriangulated");
  std::vector<char> on_rim(n, 0);
  for (Vertex v : rim) on_rim[v] = 1;
  for (Vertex v = 0; v < n; ++v)
    if (!on_rim[v] && t.degree(v) < 6)
      fail(ErrorCode::NotTriangulable, "internal degree dropped below six");
  return out;
}

UnzippedDisc unzip_boundary(const Ball& host, const HullTriangulation& hull,
                            const InterfacePair& pair) {
  if (host.face_degree != 3)
    fail(ErrorCode::RegimeMismatch, "unzipping needs a triangulation host");
  const PlanarMap& t = hull.map;
  int32_t n = t.num_vertices();
  if (static_cast<int32_t>(hull.host_of.size()) != n || hull.rim.empty())
    fail(ErrorCode::DomainError, "hull fields do not fit its map");

  std::vector<char> in_reg(n, 0);
  std::vector<Vertex> reg_local(n, -1);
  int32_t nreg = 0;
  for (Vertex v = 0; v < n; ++v)
    if (std::binary_search(pair.filled.begin(), pair.filled.end(),
                           hull.host_of[v])) {
      in_reg[v] = 1;
      reg_local[v] = nreg++;
    }
  if (nreg != static_cast<int32_t>(pair.filled.size()) || nreg == 0)
    fail(ErrorCode::DomainError, "hull does not carry the wrapped region");

  // Start on the face left by removing the region: an arc between two kept
  // vertices whose triangle has its apex inside the region.
  Arc start = -1;
  for (Arc a = 0; a < t.num_arcs() && start < 0; ++a) {
    if (in_reg[t.tail(a)] || in_reg[t.head(a)]) continue;
    if (in_reg[t.head(t.face_next(a))]) start = a;
  }
  if (start < 0)
    fail(ErrorCode::DomainError, "hull does not touch the wrapped region");

  // Walk that face. At each corner, the clockwise scan from the arrival arc
  // crosses the fan of region edges seen from this boundary vertex; those
  // sectors become the triangles glued to the vertex copy.
  std::vector<Vertex> visits;
  std::vector<std::vector<Vertex>> sector;
  Arc cur = start;
  int64_t guard = 0;
  do {
    if (++guard > 2 * t.num_arcs())
      fail(ErrorCode::NotTriangulable, "face walk does not close");
    Vertex v = t.head(cur);
    std::vector<Vertex> sec;
    Arc s = t.rot_next(t.twin(cur));
    while (in_reg[t.head(s)]) {
      sec.push_back(reg_local[t.head(s)]);
      s = t.rot_next(s);
    }
    if (sec.empty())
      fail(ErrorCode::NotTriangulable, "face walk corner misses the region");
    visits.push_back(v);
    sector.push_back(std::move(sec));
    cur = s;
  } while (cur != start);

  size_t len = visits.size();
  {
    std::vector<Vertex> vhosts;
    vhosts.reserve(len);
    for (Vertex v : visits) vhosts.push_back(hull.host_of[v]);
    std::sort(vhosts.begin(), vhosts.end());
    vhosts.erase(std::unique(vhosts.begin(), vhosts.end()), vhosts.end());
    if (vhosts != pair.boundary)
      fail(ErrorCode::NotTriangulable, "face walk misses part of the boundary");
  }
  if (static_cast<int64_t>(len) > 2 * static_cast<int64_t>(pair.boundary.size()) -
                                      static_cast<int64_t>(pair.core.size()))
    fail(ErrorCode::NotTriangulable, "split rim exceeds its bound");

  // Faces: per corner, the arrival triangle plus the fan inside the sector.
  // The triangle flanking the departure edge is the next corner's arrival.
  std::vector<std::vector<Vertex>> faces;
  for (size_t i = 0; i < len; ++i) {
    Vertex prev_copy = nreg + static_cast<Vertex>((i + len - 1) % len);
    Vertex copy = nreg + static_cast<Vertex>(i);
    const std::vector<Vertex>& sec = sector[i];
    faces.push_back({prev_copy, copy, sec[0]});
    for (size_t j = 0; j + 1 < sec.size(); ++j)
      faces.push_back({sec[j], copy, sec[j + 1]});
  }
  for (int32_t f = 0; f < t.num_faces(); ++f) {
    if (f == t.outer_face()) continue;
    std::vector<Arc> fa = t.face_arcs(f);
    Vertex a = t.tail(fa[0]), b = t.tail(fa[1]), c = t.tail(fa[2]);
    if (in_reg[a] && in_reg[b] && in_reg[c])
      faces.push_back({reg_local[a], reg_local[b], reg_local[c]});
  }
  std::vector<Vertex> outer;
  outer.reserve(len);
  for (size_t i = len; i-- > 0;) outer.push_back(nreg + static_cast<Vertex>(i));
  faces.push_back(outer);

  UnzippedDisc out;
  out.map = map_from_face_cycles(nreg + static_cast<int32_t>(len), faces, 0,
                           outer[0], outer[1]);
  out.host_of.resize(nreg + len);
  for (Vertex v = 0; v < n; ++v)
    if (in_reg[v]) out.host_of[reg_local[v]] = hull.host_of[v];
  for (size_t i = 0; i < len; ++i)
    out.host_of[nreg + i] = hull.host_of[visits[i]];
  out.rim.reserve(len);
  for (size_t i = 0; i < len; ++i)
    out.rim.push_back(nreg + static_cast<Vertex>(i));
  out.region_vertices = nreg;

  const PlanarMap& u = out.map;
  for (Vertex v = 0; v < nreg; ++v)
    if (u.degree(v) != host.map.degree(out.host_of[v]))
      fail(ErrorCode::NotTriangulable, "wrapped region degree changed");
  if (u.face(u.outer_face()).degree != static_cast<int32_t>(len))
    fail(ErrorCode::NotTriangulable, "rim does not bound the outer face");
  for (int32_t f = 0; f < u.num_faces(); ++f)
    if (f != u.outer_face() && u.face(f).degree != 3)
      fail(ErrorCode::NotTriangulable, "unzipped face left untriangulated");
  {
    // The interface must be exactly the outer rim of the region's own drawing.
    std::vector<Vertex> internals(nreg);
    for (int32_t i = 0; i < nreg; ++i) internals[i] = i;
    SubMap reg = induced_submap(u, internals);
    std::vector<Vertex> m;
    for (Vertex v = 0; v < reg.map.num_vertices(); ++v)
      if (reg.map.on_outer_face(v))
        m.push_back(out.host_of[reg.orig_ids[v]]);
    std::sort(m.begin(), m.end());
    if (m != pair.interface)
      fail(ErrorCode::NotTriangulable, "region rim disagrees with the interface");
  }
  return out;
}

}  // namespace hyperlat
