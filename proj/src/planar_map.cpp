#include "hyperlat/planar_map.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <sstream>

#include "json_detail.hpp"

namespace hyperlat {

PlanarMap PlanarMap::from_rotation(
    const std::vector<std::vector<Vertex>>& nbrs, Vertex root,
    std::optional<std::pair<Vertex, Vertex>> outer_arc) {
  const int32_t V = static_cast<int32_t>(nbrs.size());
  if (V == 0) fail(ErrorCode::DomainError, "empty vertex set");
  if (root < 0 || root >= V) fail(ErrorCode::DomainError, "root out of range");

  PlanarMap m;
  m.V_ = V;
  m.root_ = root;
  m.rot_off_.assign(V + 1, 0);
  for (Vertex v = 0; v < V; ++v)
    m.rot_off_[v + 1] = m.rot_off_[v] + static_cast<int32_t>(nbrs[v].size());
  const int32_t A = m.rot_off_[V];
  if (A % 2 != 0) fail(ErrorCode::DomainError, "odd total arc count");

  m.head_.resize(A);
  m.tail_.resize(A);
  for (Vertex v = 0; v < V; ++v) {
    Arc a = m.rot_off_[v];
    for (Vertex w : nbrs[v]) {
      if (w < 0 || w >= V)
        fail(ErrorCode::DomainError, "neighbor id out of range");
      if (w == v) fail(ErrorCode::DomainError, "loop edges not supported");
      m.tail_[a] = v;
      m.head_[a] = w;
      ++a;
    }
  }

  // Twin pairing: sort arcs by unordered edge, then direction. A simple
  // symmetric adjacency gives exactly one u->v / v->u pair per key; anything
  // else (parallel entries, one-sided edges) breaks the pattern.
  std::vector<Arc> order(A);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&m](Arc x, Arc y) {
    Vertex lx = std::min(m.tail_[x], m.head_[x]);
    Vertex hx = std::max(m.tail_[x], m.head_[x]);
    Vertex ly = std::min(m.tail_[y], m.head_[y]);
    Vertex hy = std::max(m.tail_[y], m.head_[y]);
    if (lx != ly) return lx < ly;
    if (hx != hy) return hx < hy;
    return m.tail_[x] < m.tail_[y];
  });
  m.twin_.assign(A, -1);
  for (int32_t i = 0; i < A; i += 2) {
    Arc x = order[i];
    Arc y = order[i + 1];
    if (m.tail_[x] != m.head_[y] || m.head_[x] != m.tail_[y])
      fail(ErrorCode::DomainError,
           "adjacency is not a simple symmetric neighbor relation");
    m.twin_[x] = y;
    m.twin_[y] = x;
  }

  // Connectivity from the root.
  {
    std::vector<uint8_t> seen(V, 0);
    std::vector<Vertex> stack{root};
    seen[root] = 1;
    int32_t cnt = 1;
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      for (Arc a = m.rot_off_[v]; a < m.rot_off_[v + 1]; ++a) {
        Vertex w = m.head_[a];
        if (!seen[w]) {
          seen[w] = 1;
          ++cnt;
          stack.push_back(w);
        }
      }
    }
    if (cnt != V) fail(ErrorCode::Disconnected, "map is not connected");
  }

  // Face orbits of face_next, then the genus check.
  m.face_of_.assign(A, -1);
  for (Arc a0 = 0; a0 < A; ++a0) {
    if (m.face_of_[a0] >= 0) continue;
    int32_t f = static_cast<int32_t>(m.faces_.size());
    int32_t deg = 0;
    Arc a = a0;
    do {
      m.face_of_[a] = f;
      ++deg;
      a = m.face_next(a);
    } while (a != a0);
    m.faces_.push_back(Face{a0, deg});
  }
  if (m.faces_.empty()) m.faces_.push_back(Face{-1, 0});  // K1
  const int64_t E = A / 2;
  if (V - E + static_cast<int64_t>(m.faces_.size()) != 2)
    fail(ErrorCode::NonPlanarRotation, "rotation system has positive genus");

  if (outer_arc) {
    Arc a = m.find_arc(outer_arc->first, outer_arc->second);
    if (a < 0) fail(ErrorCode::DomainError, "outer_arc is not an arc of the map");
    m.outer_face_ = m.face_of_[a];
  } else {
    int32_t best = 0;
    for (int32_t f = 1; f < static_cast<int32_t>(m.faces_.size()); ++f)
      if (m.faces_[f].degree > m.faces_[best].degree) best = f;
    m.outer_face_ = best;
  }

  m.on_outer_.assign(V, 0);
  const Face& of = m.faces_[m.outer_face_];
  if (of.first_arc < 0) {
    m.on_outer_[root] = 1;
  } else {
    Arc a = of.first_arc;
    do {
      m.on_outer_[m.tail_[a]] = 1;
      a = m.face_next(a);
    } while (a != of.first_arc);
  }
  return m;
}

Arc PlanarMap::find_arc(Vertex u, Vertex v) const {
  if (u < 0 || u >= V_ || v < 0 || v >= V_) return -1;
  for (Arc a = rot_off_[u]; a < rot_off_[u + 1]; ++a)
    if (head_[a] == v) return a;
  return -1;
}

std::vector<Vertex> PlanarMap::neighbors(Vertex v) const {
  return std::vector<Vertex>(head_.begin() + rot_off_[v],
                             head_.begin() + rot_off_[v + 1]);
}

std::vector<Arc> PlanarMap::face_arcs(int32_t f) const {
  std::vector<Arc> out;
  Arc a0 = faces_[f].first_arc;
  if (a0 < 0) return out;
  Arc a = a0;
  do {
    out.push_back(a);
    a = face_next(a);
  } while (a != a0);
  return out;
}

std::vector<RemovalComponent> components_after_removal(
    const PlanarMap& map, const std::vector<Vertex>& removed) {
  const int32_t V = map.num_vertices();
  std::vector<uint8_t> gone(V, 0);
  for (Vertex v : removed) {
    if (v < 0 || v >= V) fail(ErrorCode::DomainError, "removed id out of range");
    gone[v] = 1;
  }
  std::vector<RemovalComponent> out;
  std::vector<uint8_t> seen(V, 0);
  std::vector<Vertex> stack;
  for (Vertex s = 0; s < V; ++s) {
    if (gone[s] || seen[s]) continue;
    RemovalComponent comp;
    comp.touches_outer = false;
    stack.assign(1, s);
    seen[s] = 1;
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      comp.members.push_back(v);
      if (map.on_outer_face(v)) comp.touches_outer = true;
      for (Arc a = map.rot_begin(v); a < map.rot_end(v); ++a) {
        Vertex w = map.head(a);
        if (!gone[w] && !seen[w]) {
          seen[w] = 1;
          stack.push_back(w);
        }
      }
    }
    std::sort(comp.members.begin(), comp.members.end());
    out.push_back(std::move(comp));
  }
  return out;
}

namespace {

// Tiny union-find over face ids, path halving.
struct FaceUf {
  std::vector<int32_t> p;
  explicit FaceUf(int32_t n) : p(n) { std::iota(p.begin(), p.end(), 0); }
  int32_t find(int32_t x) {
    while (p[x] != x) {
      p[x] = p[p[x]];
      x = p[x];
    }
    return x;
  }
  void join(int32_t a, int32_t b) { p[find(a)] = find(b); }
};

}  // namespace

std::vector<SubMap> induced_components(const PlanarMap& map,
                                       const std::vector<Vertex>& selection) {
  const int32_t V = map.num_vertices();
  std::vector<uint8_t> in(V, 0);
  for (Vertex v : selection) {
    if (v < 0 || v >= V)
      fail(ErrorCode::DomainError, "selection id out of range");
    in[v] = 1;
  }
  std::vector<Vertex> sel;
  for (Vertex v = 0; v < V; ++v)
    if (in[v]) sel.push_back(v);
  if (sel.empty()) fail(ErrorCode::EmptySelection, "empty selection");

  // Components of the induced graph, seeds in id order.
  std::vector<int32_t> comp(V, -1);
  int32_t ncomp = 0;
  {
    std::vector<Vertex> stack;
    for (Vertex s : sel) {
      if (comp[s] >= 0) continue;
      comp[s] = ncomp;
      stack.assign(1, s);
      while (!stack.empty()) {
        Vertex v = stack.back();
        stack.pop_back();
        for (Arc a = map.rot_begin(v); a < map.rot_end(v); ++a) {
          Vertex w = map.head(a);
          if (in[w] && comp[w] < 0) {
            comp[w] = ncomp;
            stack.push_back(w);
          }
        }
      }
      ++ncomp;
    }
  }

  std::vector<SubMap> out(ncomp);
  for (int32_t c = 0; c < ncomp; ++c) {
    // Host face regions once everything outside this component is erased:
    // adjacent host faces merge across every edge the component does not keep.
    FaceUf uf(map.num_faces());
    for (Arc a = 0; a < map.num_arcs(); ++a) {
      if (a > map.twin(a)) continue;
      bool kept = comp[map.tail(a)] == c && comp[map.head(a)] == c;
      if (!kept) uf.join(map.face_of(a), map.face_of(map.twin(a)));
    }
    int32_t outer_region = uf.find(map.outer_face());

    std::vector<Vertex> members;
    for (Vertex v : sel)
      if (comp[v] == c) members.push_back(v);
    std::vector<int32_t> local(V, -1);
    for (size_t i = 0; i < members.size(); ++i)
      local[members[i]] = static_cast<int32_t>(i);

    std::vector<std::vector<Vertex>> nbrs(members.size());
    std::optional<std::pair<Vertex, Vertex>> outer_arc;
    for (size_t i = 0; i < members.size(); ++i) {
      Vertex v = members[i];
      for (Arc a = map.rot_begin(v); a < map.rot_end(v); ++a) {
        Vertex w = map.head(a);
        if (comp[w] != c) continue;
        nbrs[i].push_back(local[w]);
        if (!outer_arc && uf.find(map.face_of(a)) == outer_region)
          outer_arc = std::make_pair(local[v], local[w]);
      }
    }
    Vertex sub_root =
        comp[map.root()] == c ? local[map.root()] : 0;
    out[c].map = PlanarMap::from_rotation(nbrs, sub_root, outer_arc);
    out[c].orig_ids = std::move(members);
  }
  return out;
}

SubMap induced_submap(const PlanarMap& map,
                      const std::vector<Vertex>& selection) {
  auto comps = induced_components(map, selection);
  if (comps.size() > 1)
    fail(ErrorCode::Disconnected, "selection induces " +
                                      std::to_string(comps.size()) +
                                      " components");
  return std::move(comps[0]);
}

using nlohmann::json;

json map_to_json(const PlanarMap& map) {
  json j;
  j["schema_version"] = 1;
  json verts = json::array();
  for (Vertex v = 0; v < map.num_vertices(); ++v) {
    json nv;
    nv["id"] = v;
    nv["neighbors_cyclic"] = map.neighbors(v);
    verts.push_back(std::move(nv));
  }
  j["vertices"] = std::move(verts);
  j["root"] = map.root();
  const Face& of = map.face(map.outer_face());
  if (of.first_arc >= 0)
    j["outer_arc"] = {map.tail(of.first_arc), map.head(of.first_arc)};
  else
    j["outer_arc"] = json::array();
  return j;
}

PlanarMap map_from_json(const json& j) {
  try {
    const auto& verts = j.at("vertices");
    const int32_t V = static_cast<int32_t>(verts.size());
    std::vector<std::vector<Vertex>> nbrs(V);
    std::vector<uint8_t> seen(V, 0);
    for (const auto& nv : verts) {
      int32_t id = nv.at("id").get<int32_t>();
      if (id < 0 || id >= V || seen[id])
        fail(ErrorCode::DomainError, "vertex ids must be 0..V-1, unique");
      seen[id] = 1;
      nbrs[id] = nv.at("neighbors_cyclic").get<std::vector<Vertex>>();
    }
    Vertex root = j.value("root", 0);
    std::optional<std::pair<Vertex, Vertex>> outer_arc;
    if (j.contains("outer_arc") && j["outer_arc"].size() == 2)
      outer_arc = std::make_pair(j["outer_arc"][0].get<Vertex>(),
                                 j["outer_arc"][1].get<Vertex>());
    return PlanarMap::from_rotation(nbrs, root, outer_arc);
  } catch (const json::exception& e) {
    fail(ErrorCode::DomainError, std::string("bad map json: ") + e.what());
  }
}

std::string map_to_json_string(const PlanarMap& map, int indent) {
  json j = map_to_json(map);
  return indent >= 0 ? j.dump(indent) : j.dump();
}

PlanarMap map_from_json_string(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    fail(ErrorCode::DomainError, std::string("bad json: ") + e.what());
  }
  return map_from_json(j);
}

void save_map(const PlanarMap& map, const std::string& path) {
  std::ofstream f(path);
  if (!f) fail(ErrorCode::DomainError, "cannot open " + path);
  f << map_to_json_string(map, 1) << '\n';
}

PlanarMap load_map(const std::string& path) {
  std::ifstream f(path);
  if (!f) fail(ErrorCode::DomainError, "cannot open " + path);
  std::stringstream ss;
  ss << f.rdbuf();
  return map_from_json_string(ss.str());
}

PlanarMap map_from_face_cycles(int32_t n,
                               const std::vector<std::vector<Vertex>>& cycles,
                               Vertex root, Vertex outer_u, Vertex outer_v) {
  std::vector<std::vector<std::pair<Vertex, Vertex>>> corner(n);
  for (const std::vector<Vertex>& cyc : cycles) {
    size_t r = cyc.size();
    for (size_t i = 0; i < r; ++i) {
      Vertex p = cyc[(i + r - 1) % r];
      Vertex v = cyc[i];
      Vertex nx = cyc[(i + 1) % r];
      corner[v].push_back({p, nx});
    }
  }
  std::vector<std::vector<Vertex>> rot(n);
  for (Vertex v = 0; v < n; ++v) {
    const auto& cs = corner[v];
    size_t k = cs.size();
    if (k == 0) fail(ErrorCode::NotTriangulable, "vertex left out of every face");
    for (size_t a = 0; a < k; ++a)
      for (size_t b = a + 1; b < k; ++b)
        if (cs[a].first == cs[b].first)
          fail(ErrorCode::NotTriangulable, "corner used by two faces");
    Vertex start = cs[0].first;
    for (const auto& pr : cs) start = std::min(start, pr.first);
    std::vector<Vertex>& out = rot[v];
    out.reserve(k);
    std::vector<char> used(k, 0);
    Vertex at = start;
    for (size_t step = 0; step < k; ++step) {
      out.push_back(at);
      int hit = -1;
      for (size_t t = 0; t < k; ++t)
        if (!used[t] && cs[t].first == at) {
          hit = static_cast<int>(t);
          break;
        }
      if (hit < 0) fail(ErrorCode::NotTriangulable, "corner chain breaks");
      used[hit] = 1;
      at = cs[hit].second;
    }
    if (at != start)
      fail(ErrorCode::NotTriangulable, "corner chain does not close");
  }
  return PlanarMap::from_rotation(rot, root, std::make_pair(outer_u, outer_v));
}

}  // namespace hyperlat
