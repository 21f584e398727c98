#include "hyperlat/percolation.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <cstdio>
#include <map>
#include <string>
#include <vector>

#include "hyperlat/errors.hpp"
#include "hyperlat/interfaces.hpp"

namespace hyperlat {

namespace {

// Philox 4x32-10. One call turns (seed, trial, block) into four words; vertex
// v consumes word v mod 4 of block v div 4. The trial index spans two counter
// lanes, the last lane is a fixed tag so other draws from the same seed can
// never collide with occupancy words.
struct Block {
  uint32_t w[4];
};

Block philox(uint64_t seed, int64_t trial, uint32_t block) {
  uint32_t c0 = static_cast<uint32_t>(trial);
  uint32_t c1 = static_cast<uint32_t>(static_cast<uint64_t>(trial) >> 32);
  uint32_t c2 = block;
  uint32_t c3 = 0x0cca51f5u;
  uint32_t k0 = static_cast<uint32_t>(seed);
  uint32_t k1 = static_cast<uint32_t>(seed >> 32);
  for (int round = 0; round < 10; ++round) {
    uint64_t m0 = uint64_t{0xD2511F53u} * c0;
    uint64_t m1 = uint64_t{0xCD9E8D57u} * c2;
    uint32_t n0 = static_cast<uint32_t>(m1 >> 32) ^ c1 ^ k0;
    uint32_t n1 = static_cast<uint32_t>(m1);
    uint32_t n2 = static_cast<uint32_t>(m0 >> 32) ^ c3 ^ k1;
    uint32_t n3 = static_cast<uint32_t>(m0);
    c0 = n0;
    c1 = n1;
    c2 = n2;
    c3 = n3;
    k0 += 0x9E3779B9u;
    k1 += 0xBB67AE85u;
  }
  return {{c0, c1, c2, c3}};
}

// Occupied iff the vertex word falls below this; 2^32 at p = 1 so the
// comparison is taken in 64 bits.
uint64_t threshold_of(double p) {
  return static_cast<uint64_t>(std::llround(p * 4294967296.0));
}

void fill_occupancy(int32_t n, uint64_t seed, int64_t trial, uint64_t threshold,
                    std::vector<uint64_t>& bits) {
  bits.assign((n + 63) >> 6, 0);
  for (int32_t base = 0; base < n; base += 4) {
    Block blk = philox(seed, trial, static_cast<uint32_t>(base >> 2));
    int32_t top = std::min(n - base, 4);
    for (int32_t i = 0; i < top; ++i)
      if (blk.w[i] < threshold)
        bits[(base + i) >> 6] |= uint64_t{1} << ((base + i) & 63);
  }
}

void check_common(double p, int64_t trials) {
  if (!(p >= 0.0 && p <= 1.0))
    fail(ErrorCode::DomainError, "intensity outside [0,1]");
  if (trials < 1) fail(ErrorCode::DomainError, "need at least one trial");
}

std::vector<int32_t> checkpoints_of(const Ball& ball,
                                    const std::vector<int32_t>& custom) {
  if (ball.radius < 2)
    fail(ErrorCode::DomainError, "connection runs need radius at least two");
  if (!custom.empty()) {
    for (size_t i = 0; i < custom.size(); ++i)
      if (custom[i] < 1 || custom[i] > ball.radius ||
          (i && custom[i] <= custom[i - 1]))
        fail(ErrorCode::DomainError,
             "checkpoints must increase inside [1, radius]");
    return custom;
  }
  std::vector<int32_t> cps;
  for (int32_t rho = 2; rho < ball.radius; rho += 2) cps.push_back(rho);
  cps.push_back(ball.radius);
  return cps;
}

// Largest layer the center's occupied cluster reaches, -1 when the center is
// vacant. Union by size with path halving; scratch arrays are written only at
// occupied slots, so they carry stale values between trials harmlessly.
int32_t center_reach(const Ball& ball, const std::vector<uint64_t>& bits,
                     std::vector<int32_t>& parent, std::vector<int32_t>& sz,
                     std::vector<int32_t>& reach) {
  if (!(bits[0] & 1)) return -1;
  const PlanarMap& map = ball.map;
  auto occupied = [&](Vertex v) -> bool {
    return (bits[v >> 6] >> (v & 63)) & 1;
  };
  auto find = [&](int32_t x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  };
  int32_t words = static_cast<int32_t>(bits.size());
  for (int32_t w = 0; w < words; ++w) {
    uint64_t word = bits[w];
    while (word) {
      Vertex v = (w << 6) + std::countr_zero(word);
      word &= word - 1;
      parent[v] = v;
      sz[v] = 1;
      reach[v] = ball.layer[v];
      // neighbors below v are already rooted, so one ascending pass suffices
      for (Arc a = map.rot_begin(v); a < map.rot_end(v); ++a) {
        Vertex h = map.head(a);
        if (h >= v || !occupied(h)) continue;
        int32_t ra = find(v), rb = find(h);
        if (ra == rb) continue;
        if (sz[ra] < sz[rb]) std::swap(ra, rb);
        parent[rb] = ra;
        sz[ra] += sz[rb];
        reach[ra] = std::max(reach[ra], reach[rb]);
      }
    }
  }
  return reach[find(0)];
}

void run_point(const Ball& ball, double p, int64_t trials, uint64_t seed,
               const std::vector<int32_t>& cps, SweepResult& out) {
  uint64_t threshold = threshold_of(p);
  int32_t n = ball.map.num_vertices();
  std::vector<int64_t> hits(cps.size(), 0);
  std::vector<uint64_t> bits;
  std::vector<int32_t> parent(n), sz(n), reach(n);
  for (int64_t t = 0; t < trials; ++t) {
    fill_occupancy(n, seed, t, threshold, bits);
    int32_t far = center_reach(ball, bits, parent, sz, reach);
    for (size_t i = 0; i < cps.size(); ++i)
      if (far >= cps[i]) ++hits[i];
  }
  for (size_t i = 0; i < cps.size(); ++i) {
    SweepRow row;
    row.p = p;
    row.radius = cps[i];
    row.trials = trials;
    row.hits = hits[i];
    row.estimate = static_cast<double>(hits[i]) / static_cast<double>(trials);
    row.std_err =
        std::sqrt(row.estimate * (1 - row.estimate) / static_cast<double>(trials));
    out.rows.push_back(row);
  }
}

}  // namespace

PercolationInstance sample_instance(const Ball& patch, double p, uint64_t seed,
                                    int64_t trial) {
  if (!(p >= 0.0 && p <= 1.0))
    fail(ErrorCode::DomainError, "intensity outside [0,1]");
  PercolationInstance inst;
  inst.vertices = patch.map.num_vertices();
  inst.p = p;
  inst.seed = seed;
  inst.trial = trial;
  fill_occupancy(inst.vertices, seed, trial, threshold_of(p), inst.occupancy);
  return inst;
}

SweepResult connection_probability(const Ball& ball, double p, int64_t trials,
                                   uint64_t seed,
                                   const std::vector<int32_t>& checkpoints) {
  check_common(p, trials);
  std::vector<int32_t> cps = checkpoints_of(ball, checkpoints);
  SweepResult out;
  out.d = ball.d;
  out.face_degree = ball.face_degree;
  out.seed = seed;
  run_point(ball, p, trials, seed, cps, out);
  return out;
}

SweepResult sweep(const Ball& ball, const std::vector<double>& p_grid,
                  int64_t trials, uint64_t seed,
                  const std::vector<int32_t>& checkpoints) {
  if (p_grid.empty()) fail(ErrorCode::DomainError, "sweep grid is empty");
  for (size_t i = 0; i < p_grid.size(); ++i) {
    if (!(p_grid[i] > 0.0 && p_grid[i] < 1.0))
      fail(ErrorCode::DomainError, "sweep grid must stay inside (0,1)");
    if (i && p_grid[i] < p_grid[i - 1])
      fail(ErrorCode::DomainError, "sweep grid must be sorted");
  }
  if (trials < 1) fail(ErrorCode::DomainError, "need at least one trial");
  std::vector<int32_t> cps = checkpoints_of(ball, checkpoints);
  int64_t cells =
      static_cast<int64_t>(p_grid.size()) * ball.map.num_vertices();
  if (trials > kSweepBudget / cells)
    fail(ErrorCode::BudgetExceeded, "sweep budget exhausted");
  SweepResult out;
  out.d = ball.d;
  out.face_degree = ball.face_degree;
  out.seed = seed;
  for (double p : p_grid) run_point(ball, p, trials, seed, cps, out);
  return out;
}

std::string sweep_to_csv(const SweepResult& result) {
  std::string out = "p,radius,trials,hits,estimate,std_err\n";
  char line[160];
  for (const SweepRow& r : result.rows) {
    std::snprintf(line, sizeof line, "%.10g,%d,%lld,%lld,%.10g,%.10g\n", r.p,
                  r.radius, static_cast<long long>(r.trials),
                  static_cast<long long>(r.hits), r.estimate, r.std_err);
    out += line;
  }
  return out;
}

InterfaceStats cluster_interface_stats(const Ball& ball, double p,
                                       int64_t trials, uint64_t seed) {
  check_common(p, trials);
  if (ball.radius < 2)
    fail(ErrorCode::DomainError, "interface runs need radius at least two");
  const PlanarMap& map = ball.map;
  InterfaceAnalyzer analyzer(ball);
  InterfaceStats out;
  out.d = ball.d;
  out.face_degree = ball.face_degree;
  out.p = p;
  out.seed = seed;
  out.trials = trials;
  uint64_t threshold = threshold_of(p);
  int32_t n = map.num_vertices();
  int32_t margin = ball.radius - 1;
  std::vector<uint64_t> bits;
  std::vector<int64_t> seen(n, -1);
  std::vector<Vertex> stack, cluster, m_out, b_out;
  std::map<std::array<int32_t, 3>, int64_t> hist;
  for (int64_t t = 0; t < trials; ++t) {
    fill_occupancy(n, seed, t, threshold, bits);
    if (!(bits[0] & 1)) {
      ++out.vacant;
      continue;
    }
    auto occupied = [&](Vertex v) -> bool {
      return (bits[v >> 6] >> (v & 63)) & 1;
    };
    // flood the center's cluster, giving up as soon as it enters the margin
    bool hit_margin = false;
    cluster.clear();
    stack.assign(1, 0);
    seen[0] = t;
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      cluster.push_back(v);
      for (Arc a = map.rot_begin(v); a < map.rot_end(v); ++a) {
        Vertex h = map.head(a);
        if (seen[h] == t || !occupied(h)) continue;
        seen[h] = t;
        if (ball.layer[h] >= margin) {
          hit_margin = true;
          break;
        }
        stack.push_back(h);
      }
      if (hit_margin) break;
    }
    if (hit_margin) {
      ++out.censored;
      continue;
    }
    std::sort(cluster.begin(), cluster.end());
    analyzer.pair_of(cluster, m_out, b_out, true);
    ++out.recorded;
    int32_t m = static_cast<int32_t>(m_out.size());
    int32_t b = static_cast<int32_t>(b_out.size());
    if (!combined_check(m, b, ball.d, ball.face_degree)) ++out.violations;
    out.max_ratio = std::max(out.max_ratio,
                             static_cast<double>(m) / static_cast<double>(b));
    ++hist[{static_cast<int32_t>(cluster.size()), m, b}];
  }
  for (const auto& [key, count] : hist)
    out.rows.push_back({key[0], key[1], key[2], count});
  return out;
}

}  // namespace hyperlat
