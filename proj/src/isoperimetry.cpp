#include "hyperlat/isoperimetry.hpp"

#include <algorithm>
#include <cmath>

namespace hyperlat {

double alpha(int32_t d) {
  if (d < 6) fail(ErrorCode::RegimeMismatch, "alpha needs d >= 6");
  double dd = d;
  return (dd - 6 + std::sqrt((dd - 2) * (dd - 6))) / 2;
}

double pc_degree6() { return 2.0 / 3.0; }

std::pair<int64_t, int64_t> pc_degree6_rational() { return {2, 3}; }

double pc_nonamenable(double beta) {
  if (beta <= 0) fail(ErrorCode::DomainError, "expansion must be positive");
  return (2 + beta) / (3 + 3 * beta);
}

double pc_hyperbolic(int32_t d) {
  if (d < 7) fail(ErrorCode::RegimeMismatch, "pc_hyperbolic needs d >= 7");
  double a = alpha(d);
  return (2 + a) / ((d - 3) * (1 + a));
}

double pc_quad(int32_t d) {
  if (d < 5) fail(ErrorCode::RegimeMismatch, "pc_quad needs d >= 5");
  double a = alpha(d + 2);
  double dd = d;
  return ((2 + a) * (dd - 2)) / ((dd * dd - 3 * dd + 1) * (1 + a));
}

double bs_bound(double h) {
  if (h <= 0) fail(ErrorCode::DomainError, "growth must be positive");
  return 1 / (1 + h);
}

ThresholdBounds threshold_bounds(int32_t d, int32_t face_degree) {
  if (face_degree == 3) {
    if (d < 6) fail(ErrorCode::RegimeMismatch, "triangulation bounds need d >= 6");
    if (d == 6) return {2.0 / 3.0, 2.0 / 3.0, true};
    return {pc_hyperbolic(d), bs_bound(alpha(d)), false};
  }
  if (face_degree == 4) {
    if (d < 5) fail(ErrorCode::RegimeMismatch, "quadrangulation bounds need d >= 5");
    return {pc_quad(d), bs_bound(alpha(d + 2)), false};
  }
  fail(ErrorCode::RegimeMismatch, "face_degree must be 3 or 4");
}

int sign_alpha_comb(int64_t A, int64_t C, int32_t d) {
  if (d < 7) fail(ErrorCode::RegimeMismatch, "sign_alpha_comb needs d >= 7");
  // A*alpha - C  <>  0   <=>   A*sqrt(D)  <>  2C - A(d-6),  D = (d-2)(d-6).
  const __int128 D = static_cast<__int128>(d - 2) * (d - 6);
  const __int128 R = 2 * static_cast<__int128>(C) -
                     static_cast<__int128>(A) * (d - 6);
  const __int128 lhs2 = static_cast<__int128>(A) * A * D;
  const __int128 rhs2 = R * R;
  if (A >= 0) {
    if (R < 0) return 1;
    // both sides nonnegative
    if (lhs2 > rhs2) return 1;
    if (lhs2 < rhs2) return -1;
    return A == 0 ? 0 : 1;  // tie in squares with A != 0 cannot happen (D not
                            // a square); A == 0 forces R == 0, a true zero
  }
  if (R >= 0) return -1;
  // both sides negative: larger magnitude means smaller value
  if (lhs2 > rhs2) return -1;
  if (lhs2 < rhs2) return 1;
  return -1;  // unreachable for d >= 7
}

int64_t max_enclosed_volume(int64_t n) {
  if (n < 0) fail(ErrorCode::DomainError, "negative interface size");
  return (n * n + 6 * n + 12) / 12;
}

std::vector<CheegerRow> cheeger_sequence(int32_t d, int32_t face_degree,
                                         int32_t n_max) {
  if (n_max < 0) fail(ErrorCode::DomainError, "negative n_max");
  double target = face_degree == 3 ? alpha(d) : alpha(d + 2);
  ball_size(d, face_degree, n_max + 1);  // validates regime and growth budget
  std::vector<CheegerRow> rows;
  rows.reserve(n_max + 1);
  for (int32_t n = 0; n <= n_max; ++n) {
    CheegerRow row;
    row.n = n;
    row.ball = ball_size(d, face_degree, n);
    row.boundary = ball_size(d, face_degree, n + 1) - row.ball;
    row.ratio = static_cast<double>(row.boundary) / static_cast<double>(row.ball);
    row.target = target;
    row.abs_err = std::abs(row.ratio - target);
    rows.push_back(row);
  }
  return rows;
}

bool layer_inequality_check(int64_t x, int64_t y, int64_t z, int32_t d) {
  if (d < 6) fail(ErrorCode::RegimeMismatch, "layer inequality needs d >= 6");
  if (x < 0 || y < 0 || z < 0) fail(ErrorCode::DomainError, "negative part size");
  return x >= (d - 5) * y + (d - 6) * z + 5;
}

namespace {

struct Dinic {
  struct E {
    int32_t to, cap, rev;
  };
  std::vector<std::vector<E>> g;
  std::vector<int32_t> level, it;
  explicit Dinic(int32_t n) : g(n), level(n), it(n) {}
  void add(int32_t a, int32_t b, int32_t cap) {
    g[a].push_back({b, cap, static_cast<int32_t>(g[b].size())});
    g[b].push_back({a, 0, static_cast<int32_t>(g[a].size()) - 1});
  }
  bool bfs(int32_t s, int32_t t) {
    std::fill(level.begin(), level.end(), -1);
    std::vector<int32_t> q{s};
    level[s] = 0;
    for (size_t i = 0; i < q.size(); ++i) {
      int32_t v = q[i];
      for (const E& e : g[v])
        if (e.cap > 0 && level[e.to] < 0) {
          level[e.to] = level[v] + 1;
          q.push_back(e.to);
        }
    }
    return level[t] >= 0;
  }
  int32_t dfs(int32_t v, int32_t t, int32_t f) {
    if (v == t) return f;
    for (int32_t& i = it[v]; i < static_cast<int32_t>(g[v].size()); ++i) {
      E& e = g[v][i];
      if (e.cap > 0 && level[e.to] == level[v] + 1) {
        int32_t got = dfs(e.to, t, std::min(f, e.cap));
        if (got > 0) {
          e.cap -= got;
          g[e.to][e.rev].cap += got;
          return got;
        }
      }
    }
    return 0;
  }
  int32_t maxflow(int32_t s, int32_t t) {
    int32_t flow = 0;
    while (bfs(s, t)) {
      std::fill(it.begin(), it.end(), 0);
      while (int32_t f = dfs(s, t, 1 << 30)) flow += f;
    }
    return flow;
  }
};

}  // namespace

VertexCut min_vertex_cut(const PlanarMap& map, Vertex src,
                         const std::vector<Vertex>& sinks) {
  const int32_t V = map.num_vertices();
  if (src < 0 || src >= V) fail(ErrorCode::DomainError, "bad source");
  if (sinks.empty()) fail(ErrorCode::EmptySelection, "no sinks");
  std::vector<uint8_t> is_sink(V, 0);
  for (Vertex s : sinks) {
    if (s < 0 || s >= V) fail(ErrorCode::DomainError, "bad sink");
    is_sink[s] = 1;
  }
  if (is_sink[src]) fail(ErrorCode::DomainError, "source is a sink");
  for (Arc a = map.rot_begin(src); a < map.rot_end(src); ++a)
    if (is_sink[map.head(a)])
      fail(ErrorCode::DomainError, "source adjacent to a sink: no vertex cut");

  const int32_t INF = 1 << 30;
  const int32_t T = 2 * V;
  Dinic din(2 * V + 1);
  for (Vertex v = 0; v < V; ++v) {
    int32_t cap = (v == src || is_sink[v]) ? INF : 1;
    din.add(2 * v, 2 * v + 1, cap);
    if (is_sink[v]) din.add(2 * v + 1, T, INF);
    for (Arc a = map.rot_begin(v); a < map.rot_end(v); ++a)
      din.add(2 * v + 1, 2 * map.head(a), INF);
  }
  VertexCut cut;
  cut.size = din.maxflow(2 * src + 1, T);

  // Residual reachability from the source side; the cut vertices are the ones
  // whose split edge is crossed.
  std::vector<uint8_t> reach(2 * V + 1, 0);
  std::vector<int32_t> stack{2 * src + 1};
  reach[2 * src + 1] = 1;
  while (!stack.empty()) {
    int32_t n = stack.back();
    stack.pop_back();
    for (const Dinic::E& e : din.g[n])
      if (e.cap > 0 && !reach[e.to]) {
        reach[e.to] = 1;
        stack.push_back(e.to);
      }
  }
  for (Vertex v = 0; v < V; ++v)
    if (reach[2 * v] && !reach[2 * v + 1]) cut.members.push_back(v);
  if (static_cast<int32_t>(cut.members.size()) != cut.size)
    fail(ErrorCode::DomainError, "internal: residual cut size mismatch");
  return cut;
}

std::vector<Vertex> make_layer_cut(const Ball& ball, int32_t n) {
  if (n < 1 || n >= ball.radius)
    fail(ErrorCode::DomainError, "layer cut needs 1 <= n < radius");
  std::vector<Vertex> out;
  out.reserve(ball.layer_sizes[n] - ball.layer_sizes[n - 1]);
  for (Vertex v = static_cast<Vertex>(ball.layer_sizes[n - 1]);
       v < static_cast<Vertex>(ball.layer_sizes[n]); ++v)
    out.push_back(v);
  return out;
}

}  // namespace hyperlat
