#include "hyperlat/oracle.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <cstdint>
#include <set>
#include <utility>
#include <vector>

#include "hyperlat/errors.hpp"

namespace hyperlat {

double ExactPercolation::at(double p) const {
  double total = 0;
  for (int32_t j = 0; j <= vertices; ++j)
    if (counts[j])
      total += static_cast<double>(counts[j]) * std::pow(p, j) *
               std::pow(1.0 - p, vertices - j);
  return total;
}

ExactPercolation exhaustive_percolation(const Ball& patch) {
  int32_t v = patch.map.num_vertices();
  if (v > 22)
    fail(ErrorCode::BudgetExceeded, "patch too large for a full sweep");
  std::vector<uint32_t> adj(v, 0);
  for (Arc a = 0; a < patch.map.num_arcs(); ++a)
    adj[patch.map.tail(a)] |= 1u << patch.map.head(a);
  uint32_t rim = 0;
  for (Vertex x = 0; x < v; ++x)
    if (patch.layer[x] == patch.radius) rim |= 1u << x;
  if (!rim) fail(ErrorCode::DomainError, "patch has no rim layer");

  ExactPercolation out;
  out.vertices = v;
  out.counts.assign(v + 1, 0);
  // the center is vertex 0; configurations without it never connect
  for (uint32_t cfg = 1; cfg < (1u << v); cfg += 2) {
    uint32_t comp = 1u, frontier = 1u;
    while (frontier && !(comp & rim)) {
      uint32_t grow = 0;
      for (uint32_t f = frontier; f;) {
        int b = std::countr_zero(f);
        f &= f - 1;
        grow |= adj[b];
      }
      frontier = grow & cfg & ~comp;
      comp |= frontier;
    }
    if (comp & rim) ++out.counts[std::popcount(cfg)];
  }
  return out;
}

std::vector<std::vector<Vertex>> enumerate_connected_subgraphs(
    const PlanarMap& g, Vertex o, int32_t size_max, int64_t max_sets) {
  if (o < 0 || o >= g.num_vertices())
    fail(ErrorCode::DomainError, "seed vertex out of range");
  if (size_max < 1) fail(ErrorCode::DomainError, "size cap below one");
  std::vector<std::vector<Vertex>> out;
  std::vector<std::vector<Vertex>> level{{o}};
  out.push_back({o});
  for (int32_t s = 2; s <= size_max && !level.empty(); ++s) {
    std::set<std::vector<Vertex>> next;
    for (const std::vector<Vertex>& cur : level)
      for (Vertex x : cur)
        for (Arc a = g.rot_begin(x); a < g.rot_end(x); ++a) {
          Vertex w = g.head(a);
          if (std::binary_search(cur.begin(), cur.end(), w)) continue;
          std::vector<Vertex> grown(cur);
          grown.insert(std::lower_bound(grown.begin(), grown.end(), w), w);
          next.insert(std::move(grown));
        }
    if (static_cast<int64_t>(out.size() + next.size()) > max_sets)
      fail(ErrorCode::BudgetExceeded, "subgraph count passed the cap");
    level.assign(next.begin(), next.end());
    out.insert(out.end(), next.begin(), next.end());
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

// State of the boundary-first generator. Polygons list their cycle with the
// unfilled region on the left of the first edge; the processed edge is always
// the first edge of the top polygon, so every labeled triangulation arises
// through exactly one candidate sequence.
struct GenState {
  int32_t nv = 0;
  std::vector<uint32_t> adj;                // bitmask adjacency
  std::vector<int32_t> deg;
  std::vector<int32_t> mem;                 // active polygons holding v
  std::vector<std::vector<Vertex>> polys;
  std::vector<std::array<Vertex, 3>> tris;
};

struct DiscGen {
  int32_t n_boundary = 0;
  int32_t k_max = 0;
  int32_t min_deg = 0;
  int64_t nodes = 0;
  std::set<std::vector<int32_t>>* seen = nullptr;
  const std::function<void(const DiscTriangulation&)>* sink = nullptr;
  int64_t emitted = 0;

  bool has_edge(const GenState& st, Vertex a, Vertex b) const {
    return (st.adj[a] >> b) & 1u;
  }
  static void add_edge(GenState& st, Vertex a, Vertex b) {
    st.adj[a] |= 1u << b;
    st.adj[b] |= 1u << a;
    ++st.deg[a];
    ++st.deg[b];
  }

  // Final degree of an internal vertex is fixed once no active polygon holds
  // it; a polygon with s corners can hand out at most 2s - 6 further degree
  // to vertices it holds exclusively once every new vertex inside has taken
  // its own minimum.
  bool polygon_feasible(const GenState& st, const std::vector<Vertex>& p) const {
    if (min_deg < 6) return true;  // the 2s-6 budget needs new vertices to
                                   // absorb at least six degree each
    int64_t debt = 0;
    for (Vertex x : p)
      if (x >= n_boundary && st.mem[x] == 1 && st.deg[x] < min_deg)
        debt += min_deg - st.deg[x];
    return debt <= 2 * static_cast<int64_t>(p.size()) - 6;
  }

  void finish(const GenState& st) {
    std::vector<std::vector<Vertex>> cycles;
    cycles.reserve(st.tris.size() + 1);
    for (const auto& t : st.tris) cycles.push_back({t[0], t[1], t[2]});
    std::vector<Vertex> outer;
    for (Vertex x = n_boundary; x-- > 0;) outer.push_back(x);
    cycles.push_back(outer);
    PlanarMap m =
        map_from_face_cycles(st.nv, cycles, 0, n_boundary - 1, n_boundary - 2);
    if (!seen->insert(canonical_code(m)).second) return;

    DiscTriangulation disc;
    disc.boundary_length = n_boundary;
    disc.total_vertices = st.nv;
    for (Vertex x = n_boundary; x < st.nv; ++x) disc.internal.push_back(x);
    if (!disc.internal.empty())
      for (const SubMap& comp : induced_components(m, disc.internal))
        disc.hull_boundary_length +=
            comp.map.face(comp.map.outer_face()).degree;
    disc.map = std::move(m);
    ++emitted;
    (*sink)(disc);
  }

  // Traversal signature from one marked boundary arc; the minimum over all
  // starts and both orientations is the isomorphism-class code.
  std::vector<int32_t> signature(const PlanarMap& m, Vertex root, Vertex first,
                                 bool reflected) const {
    std::vector<int32_t> label(m.num_vertices(), -1);
    std::vector<Vertex> entry(m.num_vertices(), -1), order;
    label[root] = 0;
    entry[root] = first;
    order.push_back(root);
    auto rotation = [&](Vertex v) {
      std::vector<Vertex> nb;
      for (Arc a = m.rot_begin(v); a < m.rot_end(v); ++a)
        nb.push_back(m.head(a));
      if (reflected) std::reverse(nb.begin(), nb.end());
      auto it = std::find(nb.begin(), nb.end(), entry[v]);
      std::rotate(nb.begin(), it, nb.end());
      return nb;
    };
    for (size_t i = 0; i < order.size(); ++i) {
      Vertex v = order[i];
      for (Vertex w : rotation(v))
        if (label[w] < 0) {
          label[w] = static_cast<int32_t>(order.size());
          entry[w] = v;
          order.push_back(w);
        }
    }
    std::vector<int32_t> sig;
    for (Vertex v : order) {
      std::vector<Vertex> nb = rotation(v);
      sig.push_back(static_cast<int32_t>(nb.size()));
      for (Vertex w : nb) sig.push_back(label[w]);
    }
    return sig;
  }

  std::vector<int32_t> canonical_code(const PlanarMap& m) const {
    std::vector<Arc> walk = m.face_arcs(m.outer_face());
    std::vector<int32_t> best;
    for (Arc a : walk) {
      for (bool ref : {false, true}) {
        Vertex root = ref ? m.head(a) : m.tail(a);
        Vertex first = ref ? m.tail(a) : m.head(a);
        std::vector<int32_t> sig = signature(m, root, first, ref);
        if (best.empty() || sig < best) best = std::move(sig);
      }
    }
    return best;
  }

  // Close the region transition: pop the processed polygon, push what the
  // triangle leaves, then check every vertex whose last region vanished.
  bool apply(GenState& st, const std::vector<Vertex>& closed,
             const std::vector<std::vector<Vertex>>& pushed) const {
    for (Vertex x : closed) --st.mem[x];
    for (const auto& p : pushed)
      for (Vertex x : p) ++st.mem[x];
    for (Vertex x : closed)
      if (st.mem[x] == 0 && x >= n_boundary && st.deg[x] < min_deg)
        return false;
    for (const auto& p : pushed) {
      if (!polygon_feasible(st, p)) return false;
      st.polys.push_back(p);
    }
    return true;
  }

  void rec(const GenState& cur) {
    if (++nodes > 50000000)
      fail(ErrorCode::BudgetExceeded, "generation budget exhausted");
    if (cur.polys.empty()) {
      finish(cur);
      return;
    }
    std::vector<Vertex> p = cur.polys.back();
    size_t s = p.size();
    Vertex u = p[0], v = p[1];

    // apex is a fresh internal vertex
    if (cur.nv < k_max) {
      GenState st = cur;
      st.polys.pop_back();
      Vertex w = st.nv++;
      st.adj.resize(st.nv, 0);
      st.deg.resize(st.nv, 0);
      st.mem.resize(st.nv, 0);
      add_edge(st, u, w);
      add_edge(st, w, v);
      st.tris.push_back({u, v, w});
      std::vector<Vertex> grown;
      grown.reserve(s + 1);
      grown.push_back(u);
      grown.push_back(w);
      grown.insert(grown.end(), p.begin() + 1, p.end());
      if (apply(st, p, {grown})) rec(st);
    }

    // apex is another corner of the polygon
    for (size_t j = 2; j < s; ++j) {
      Vertex w = p[j];
      bool new_vw = j != 2, new_wu = j != s - 1;
      if ((new_vw && has_edge(cur, v, w)) || (new_wu && has_edge(cur, w, u)))
        continue;
      GenState st = cur;
      st.polys.pop_back();
      if (new_vw) add_edge(st, v, w);
      if (new_wu) add_edge(st, w, u);
      st.tris.push_back({u, v, w});
      std::vector<std::vector<Vertex>> pushed;
      if (j > 2) pushed.emplace_back(p.begin() + 1, p.begin() + j + 1);
      if (j < s - 1) {
        std::vector<Vertex> rest(p.begin() + j, p.end());
        rest.push_back(u);
        pushed.push_back(std::move(rest));
      }
      if (apply(st, p, pushed)) rec(st);
    }
  }
};

}  // namespace

int64_t enumerate_disc_triangulations(
    int32_t n_boundary_max, int32_t k_max, int32_t min_internal_degree,
    const std::function<void(const DiscTriangulation&)>& sink) {
  if (n_boundary_max < 3 || k_max < 3)
    fail(ErrorCode::DomainError, "need at least a triangle");
  if (n_boundary_max > 10 || k_max > 16)
    fail(ErrorCode::BudgetExceeded, "generation caps are 10 and 16");
  int64_t total = 0;
  for (int32_t n = 3; n <= std::min(n_boundary_max, k_max); ++n) {
    std::set<std::vector<int32_t>> seen;
    DiscGen gen;
    gen.n_boundary = n;
    gen.k_max = k_max;
    gen.min_deg = min_internal_degree;
    gen.seen = &seen;
    gen.sink = &sink;
    GenState st;
    st.nv = n;
    st.adj.assign(n, 0);
    st.deg.assign(n, 0);
    st.mem.assign(n, 1);
    std::vector<Vertex> poly(n);
    for (Vertex x = 0; x < n; ++x) poly[x] = x;
    for (Vertex x = 0; x < n; ++x)
      DiscGen::add_edge(st, x, (x + 1) % n);
    st.polys.push_back(poly);
    gen.rec(st);
    total += gen.emitted;
  }
  return total;
}

}  // namespace hyperlat
