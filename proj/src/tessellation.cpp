#include "hyperlat/tessellation.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "json_detail.hpp"

namespace hyperlat {

namespace {

int64_t default_budget() {
  if (const char* s = std::getenv("HYPERLAT_BUDGET")) {
    char* end = nullptr;
    long long v = std::strtoll(s, &end, 10);
    if (end != s && v > 0) return v;
  }
  return 20'000'000;
}

void check_regime(int32_t d, int32_t g) {
  if (g == 3) {
    if (d < 6) fail(ErrorCode::RegimeMismatch, "triangulations need d >= 6");
  } else if (g == 4) {
    if (d < 4) fail(ErrorCode::RegimeMismatch, "quadrangulations need d >= 4");
  } else {
    fail(ErrorCode::RegimeMismatch, "face_degree must be 3 or 4");
  }
}

// One sphere of the growing ball. Vertex ids inside a sphere are contiguous
// and listed counterclockwise; pi is the parent count (shared children have
// two, consecutive in the sphere below: par1 on the clockwise side).
struct Sphere {
  Vertex first = 0;
  int32_t size = 0;
  std::vector<int8_t> pi;
  std::vector<Vertex> par1, par2;
  std::vector<int32_t> child_off;  // into child; [shared_prev, excl..., shared_next]
  std::vector<Vertex> child;
};

}  // namespace

int64_t ball_size(int32_t d, int32_t g, int32_t r) {
  check_regime(d, g);
  if (r < 0) fail(ErrorCode::DomainError, "negative radius");
  if (r == 0) return 1;
  const int64_t mul = g == 3 ? d - 4 : d - 2;
  const int64_t add = g == 3 ? 6 : 4;
  int64_t prev = 1, cur = d + 1;
  for (int32_t n = 1; n < r; ++n) {
    int64_t next = mul * cur - prev + add;
    prev = cur;
    cur = next;
    if (cur > (int64_t{1} << 40))
      fail(ErrorCode::BudgetExceeded, "ball size beyond 2^40 vertices");
  }
  return cur;
}

Ball make_ball(int32_t d, int32_t g, int32_t r, int64_t budget) {
  const int64_t V64 = ball_size(d, g, r);  // also validates d, g, r
  if (budget < 0) budget = default_budget();
  if (V64 > budget)
    fail(ErrorCode::BudgetExceeded,
         "ball needs " + std::to_string(V64) + " vertices, budget " +
             std::to_string(budget));
  const int32_t V = static_cast<int32_t>(V64);
  const bool tri = g == 3;

  Ball ball;
  ball.d = d;
  ball.face_degree = g;
  ball.radius = r;
  ball.layer.assign(V, 0);
  ball.layer_sizes.assign(r + 1, 1);
  if (r == 0) {
    ball.map = PlanarMap::from_rotation({{}});
    return ball;
  }

  std::vector<Sphere> sph(r + 1);
  sph[1].first = 1;
  sph[1].size = d;
  sph[1].pi.assign(d, 1);
  sph[1].par1.assign(d, 0);
  sph[1].par2.assign(d, -1);
  for (int32_t n = 1; n < r; ++n) {
    Sphere& L = sph[n];
    Sphere& N = sph[n + 1];
    const int32_t m = L.size;
    N.first = L.first + m;
    L.child_off.assign(m + 1, 0);
    int64_t nsz = 0;
    for (int32_t j = 0; j < m; ++j) {
      int32_t excl = d - L.pi[j] - (tri ? 4 : 2);
      L.child_off[j + 1] = L.child_off[j] + excl + 2;
      nsz += excl + 1;
    }
    N.size = static_cast<int32_t>(nsz);
    N.pi.reserve(nsz);
    N.par1.reserve(nsz);
    N.par2.reserve(nsz);
    L.child.assign(L.child_off[m], -1);
    Vertex next_id = N.first;
    for (int32_t j = 0; j < m; ++j) {
      Vertex vj = L.first + j;
      Vertex vnext = L.first + (j + 1) % m;
      int32_t slot = L.child_off[j] + 1;
      const int32_t excl = L.child_off[j + 1] - L.child_off[j] - 2;
      for (int32_t e = 0; e < excl; ++e) {
        N.pi.push_back(1);
        N.par1.push_back(vj);
        N.par2.push_back(-1);
        L.child[slot++] = next_id++;
      }
      N.pi.push_back(2);
      N.par1.push_back(vj);
      N.par2.push_back(vnext);
      Vertex sj = next_id++;
      L.child[slot] = sj;                            // shared_next of vj
      L.child[L.child_off[(j + 1) % m]] = sj;        // shared_prev of vnext
    }
  }

  // Clockwise rotations, read off the counterclockwise drawing:
  //   root            [c_{d-1} .. c_0]
  //   triangulation   [par, next_sib, children reversed, prev_sib]      pi=1
  //                   [par2, next_sib, children reversed, prev_sib, par1]
  //   quadrangulation [par, children reversed]                          pi=1
  //                   [par2, children reversed, par1]
  // with children omitted on the rim.
  std::vector<std::vector<Vertex>> nbrs(V);
  nbrs[0].resize(d);
  for (int32_t j = 0; j < d; ++j) nbrs[0][j] = d - j;
  for (int32_t n = 1; n <= r; ++n) {
    const Sphere& L = sph[n];
    const bool rim = n == r;
    for (int32_t j = 0; j < L.size; ++j) {
      Vertex v = L.first + j;
      std::vector<Vertex>& rot = nbrs[v];
      ball.layer[v] = n;
      if (L.pi[j] == 2) rot.push_back(L.par2[j]);
      else rot.push_back(L.par1[j]);
      if (tri) rot.push_back(L.first + (j + 1) % L.size);
      if (!rim)
        for (int32_t c = L.child_off[j + 1] - 1; c >= L.child_off[j]; --c)
          rot.push_back(L.child[c]);
      if (tri) rot.push_back(L.first + (j + L.size - 1) % L.size);
      if (L.pi[j] == 2) rot.push_back(L.par1[j]);
    }
    ball.layer_sizes[n] = ball.layer_sizes[n - 1] + L.size;
  }
  if (ball.layer_sizes[r] != V64)
    fail(ErrorCode::DomainError, "internal: sphere sizes disagree with recurrence");

  ball.map = PlanarMap::from_rotation(nbrs, 0);
  return ball;
}

using nlohmann::json;

std::string ball_to_json_string(const Ball& ball, int indent) {
  json j = map_to_json(ball.map);
  j["kind"] = "ball";
  j["meta"] = {{"d", ball.d},
               {"face_degree", ball.face_degree},
               {"radius", ball.radius},
               {"schema_version", 1}};
  j["layers"] = ball.layer;
  j["layer_sizes"] = ball.layer_sizes;
  return indent >= 0 ? j.dump(indent) : j.dump();
}

Ball ball_from_json_string(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    fail(ErrorCode::DomainError, std::string("bad json: ") + e.what());
  }
  Ball ball;
  try {
    ball.map = map_from_json(j);
    const auto& meta = j.at("meta");
    ball.d = meta.at("d").get<int32_t>();
    ball.face_degree = meta.at("face_degree").get<int32_t>();
    ball.radius = meta.at("radius").get<int32_t>();
    ball.layer = j.at("layers").get<std::vector<int32_t>>();
    ball.layer_sizes = j.at("layer_sizes").get<std::vector<int64_t>>();
  } catch (const json::exception& e) {
    fail(ErrorCode::DomainError, std::string("bad ball json: ") + e.what());
  }
  if (static_cast<int32_t>(ball.layer.size()) != ball.map.num_vertices() ||
      static_cast<int32_t>(ball.layer_sizes.size()) != ball.radius + 1)
    fail(ErrorCode::DomainError, "ball json: inconsistent layer data");
  std::vector<int64_t> counts(ball.radius + 1, 0);
  for (int32_t l : ball.layer) {
    if (l < 0 || l > ball.radius)
      fail(ErrorCode::DomainError, "ball json: layer out of range");
    ++counts[l];
  }
  int64_t cum = 0;
  for (int32_t n = 0; n <= ball.radius; ++n) {
    cum += counts[n];
    if (cum != ball.layer_sizes[n])
      fail(ErrorCode::DomainError, "ball json: layer_sizes mismatch");
  }
  return ball;
}

void save_ball(const Ball& ball, const std::string& path) {
  std::ofstream f(path);
  if (!f) fail(ErrorCode::DomainError, "cannot open " + path);
  f << ball_to_json_string(ball, 1) << '\n';
}

Ball load_ball(const std::string& path) {
  std::ifstream f(path);
  if (!f) fail(ErrorCode::DomainError, "cannot open " + path);
  std::stringstream ss;
  ss << f.rdbuf();
  return ball_from_json_string(ss.str());
}

}  // namespace hyperlat
