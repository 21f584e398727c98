#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hyperlat/tessellation.hpp"

namespace hyperlat {

// One Bernoulli site configuration: a bit per vertex, fully determined by
// (p, seed, trial). Bits come from a counter-based generator keyed by seed
// with the (trial, vertex) pair as counter, so any configuration can be
// regenerated in isolation and trials share no generator state.
struct PercolationInstance {
  int32_t vertices = 0;
  double p = 0;
  uint64_t seed = 0;
  int64_t trial = 0;
  std::vector<uint64_t> occupancy;  // little-endian 64-bit words

  bool occupied(Vertex v) const {
    return (occupancy[v >> 6] >> (v & 63)) & 1;
  }
};

PercolationInstance sample_instance(const Ball& patch, double p, uint64_t seed,
                                    int64_t trial = 0);

struct SweepRow {
  double p = 0;
  int32_t radius = 0;
  int64_t trials = 0;
  int64_t hits = 0;
  double estimate = 0;  // hits / trials
  double std_err = 0;   // sqrt(estimate (1 - estimate) / trials)
};

struct SweepResult {
  int32_t d = 0;
  int32_t face_degree = 0;
  uint64_t seed = 0;
  std::vector<SweepRow> rows;
};

// Work cap for a sweep call, in vertex-trials across the whole grid.
constexpr int64_t kSweepBudget = int64_t{1} << 40;

// Frequency of the event "the center's occupied cluster reaches layer rho",
// one row per checkpoint. The default checkpoint list is rho = 2, 4, ...
// with the full radius always last; a custom list must increase inside
// [1, radius]. Union-find over occupied adjacency per trial.
SweepResult connection_probability(const Ball& ball, double p, int64_t trials,
                                   uint64_t seed,
                                   const std::vector<int32_t>& checkpoints = {});

// connection_probability across a grid of intensities, rows grid-major. The
// grid must be sorted inside (0,1). Every grid point replays the same
// (seed, trial) word stream, so occupied sets are nested along the grid and
// estimates are monotone in p sample by sample, not merely on average.
SweepResult sweep(const Ball& ball, const std::vector<double>& p_grid,
                  int64_t trials, uint64_t seed,
                  const std::vector<int32_t>& checkpoints = {});

std::string sweep_to_csv(const SweepResult& result);

struct InterfaceStatsRow {
  int32_t cluster = 0;  // occupied cluster size
  int32_t m = 0;
  int32_t b = 0;
  int64_t count = 0;
};

// Interface statistics of the center's occupied cluster. A trial with a
// vacant center records nothing; a cluster reaching within one layer of the
// rim is censored, since its interface would be shaped by the patch edge
// rather than the lattice. Recorded samples are grouped by (cluster, m, b)
// and every one is tested against the regime inequality for the host.
struct InterfaceStats {
  int32_t d = 0;
  int32_t face_degree = 0;
  double p = 0;
  uint64_t seed = 0;
  int64_t trials = 0;
  int64_t vacant = 0;
  int64_t censored = 0;
  int64_t recorded = 0;
  int64_t violations = 0;
  double max_ratio = 0;                 // largest m / b among recorded samples
  std::vector<InterfaceStatsRow> rows;  // sorted by (cluster, m, b)
};

InterfaceStats cluster_interface_stats(const Ball& ball, double p,
                                       int64_t trials, uint64_t seed);

}  // namespace hyperlat
