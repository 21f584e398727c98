// Command line front end. Subcommands: gen, cheeger, pairs, perc, bounds,
// verify. Exit codes: 0 clean, 1 a theorem-backed check failed, 2 usage or
// malformed input, 3 a work budget was exhausted.

#include <cinttypes>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "hyperlat/errors.hpp"
#include "hyperlat/interfaces.hpp"
#include "hyperlat/isoperimetry.hpp"
#include "hyperlat/oracle.hpp"
#include "hyperlat/percolation.hpp"
#include "hyperlat/planar_map.hpp"
#include "hyperlat/tessellation.hpp"

namespace hl = hyperlat;
using nlohmann::json;

namespace {

constexpr uint64_t kDefaultSeed = 20260822;

// Subcommands that consume a patch accept either a file from gen or the
// (degree, face-degree, radius) triple, never both.
struct PatchSource {
  std::string path;
  int32_t d = 0, g = 0, r = 0;
};

void add_patch_options(CLI::App* sub, PatchSource& src) {
  auto* path =
      sub->add_option("--patch", src.path, "patch file written by gen");
  auto* d = sub->add_option("--degree", src.d, "vertex degree");
  auto* g = sub->add_option("--face-degree", src.g, "3 or 4");
  auto* r = sub->add_option("--radius", src.r, "ball radius");
  d->needs(g)->needs(r);
  g->needs(d);
  r->needs(d);
  path->excludes(d)->excludes(g)->excludes(r);
}

hl::Ball load_patch(const PatchSource& src) {
  if (!src.path.empty()) return hl::load_ball(src.path);
  if (src.d == 0)
    hl::fail(hl::ErrorCode::UsageError,
             "need --patch FILE or --degree/--face-degree/--radius");
  return hl::make_ball(src.d, src.g, src.r);
}

void write_text(const std::string& out, const std::string& text) {
  if (out.empty()) {
    std::fputs(text.c_str(), stdout);
    return;
  }
  std::ofstream f(out);
  if (!f) hl::fail(hl::ErrorCode::UsageError, "cannot open " + out);
  f << text;
}

std::string cheeger_csv(const hl::Ball& ball) {
  double target =
      ball.face_degree == 3 ? hl::alpha(ball.d) : hl::alpha(ball.d + 2);
  std::string out = "n,ball,boundary,ratio,target,abs_err\n";
  char line[160];
  for (int32_t n = 0; n + 1 <= ball.radius; ++n) {
    int64_t vol = ball.layer_sizes[n];
    int64_t bnd = ball.sphere_size(n + 1);
    double ratio = static_cast<double>(bnd) / static_cast<double>(vol);
    std::snprintf(line, sizeof line,
                  "%d,%" PRId64 ",%" PRId64 ",%.10g,%.10g,%.10g\n", n, vol,
                  bnd, ratio, target, std::abs(ratio - target));
    out += line;
  }
  return out;
}

std::string regime_of(const hl::Ball& ball) {
  if (ball.face_degree == 4) return "quad";
  return ball.d == 6 ? "deg6" : "hyper";
}

struct VerifyOpts {
  std::string suite;
  PatchSource src;
  int32_t boundary_max = 9, vertex_max = 14, min_degree = 6;
  int32_t max_cluster = 6;
  std::vector<double> ps = {0.2, 0.5, 0.8};
  int64_t trials = 100000;
  uint64_t seed = kDefaultSeed;
  double sigmas = 4.0;
  std::string out;
};

// Returns 1 when any violation was found; the report fixtures carry enough
// of each offender to replay it.
int run_verify(const VerifyOpts& o) {
  json report;
  report["schema_version"] = 1;
  report["suite"] = o.suite;
  json fixtures = json::array();
  int64_t checked = 0, violations = 0;
  if (o.suite == "disc") {
    if (o.min_degree < 6)
      hl::fail(hl::ErrorCode::UsageError,
               "--min-degree below six leaves nothing to verify");
    hl::enumerate_disc_triangulations(
        o.boundary_max, o.vertex_max, o.min_degree,
        [&](const hl::DiscTriangulation& t) {
          ++checked;
          bool layer_ok = t.internal.empty() ||
                          t.hull_boundary_length <= t.boundary_length - 6;
          bool volume_ok =
              t.total_vertices <= hl::max_enclosed_volume(t.boundary_length);
          if (layer_ok && volume_ok) return;
          ++violations;
          if (fixtures.size() < 32)
            fixtures.push_back(
                {{"n", t.boundary_length},
                 {"k", t.total_vertices},
                 {"m", t.hull_boundary_length},
                 {"layer_ok", layer_ok},
                 {"volume_ok", volume_ok},
                 {"map", json::parse(hl::map_to_json_string(t.map))}});
        });
    report["params"] = {{"boundary_max", o.boundary_max},
                        {"vertex_max", o.vertex_max},
                        {"min_degree", o.min_degree}};
  } else if (o.suite == "pairs") {
    hl::Ball ball = load_patch(o.src);
    hl::PairCensus census = hl::enumerate_pairs(ball, o.max_cluster);
    checked = census.distinct_pairs;
    violations = census.violations + census.roundtrip_failures;
    report["census"] = json::parse(hl::census_to_json_string(census));
    for (const std::string& note : census.violation_notes)
      fixtures.push_back(note);
  } else {  // perc-oracle
    hl::Ball ball = load_patch(o.src);
    hl::ExactPercolation exact = hl::exhaustive_percolation(ball);
    for (double p : o.ps) {
      hl::SweepResult res =
          hl::connection_probability(ball, p, o.trials, o.seed);
      const hl::SweepRow& full = res.rows.back();
      double want = exact.at(p);
      double tol = o.sigmas * full.std_err + 1e-12;
      ++checked;
      if (std::abs(full.estimate - want) <= tol) continue;
      ++violations;
      fixtures.push_back({{"p", p},
                          {"exact", want},
                          {"estimate", full.estimate},
                          {"std_err", full.std_err},
                          {"sigmas", o.sigmas}});
    }
    report["params"] = {{"trials", o.trials}, {"seed", o.seed}};
  }
  report["checked"] = checked;
  report["violations"] = violations;
  report["fixtures"] = fixtures;
  write_text(o.out, report.dump(1) + "\n");
  return violations > 0 ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "finite patches of regular planar and hyperbolic tessellations: "
      "generation, isoperimetric ratios, interface censuses, percolation"};
  app.require_subcommand(1);
  int32_t threads =
      std::max(1, static_cast<int32_t>(std::thread::hardware_concurrency()));
  app.add_option("--threads", threads,
                 "worker cap; results are identical for any value")
      ->check(CLI::PositiveNumber);
  app.footer(
      "HYPERLAT_BUDGET caps generated ball sizes in vertices (default "
      "20000000).\nAll randomness flows from --seed (default 20260822); "
      "nothing reads the clock.");

  int exit_status = 0;

  struct {
    int32_t d = 0, g = 0, r = 0;
    std::string out;
  } gen;
  auto* sub_gen =
      app.add_subcommand("gen", "generate a tessellation ball as JSON");
  sub_gen->add_option("--degree", gen.d, "vertex degree")->required();
  sub_gen->add_option("--face-degree", gen.g, "3 (triangles) or 4 (squares)")
      ->required();
  sub_gen->add_option("--radius", gen.r, "ball radius")->required();
  sub_gen->add_option("--out", gen.out, "output file")->required();
  sub_gen->callback([&] {
    hl::Ball ball = hl::make_ball(gen.d, gen.g, gen.r);
    hl::save_ball(ball, gen.out);
    std::printf("wrote %s: %d vertices, %" PRId64 " edges, radius %d\n",
                gen.out.c_str(), ball.map.num_vertices(),
                ball.map.num_edges(), ball.radius);
  });

  struct {
    PatchSource src;
    std::string out;
  } ch;
  auto* sub_ch = app.add_subcommand(
      "cheeger", "layer-by-layer isoperimetric ratio and its target");
  add_patch_options(sub_ch, ch.src);
  sub_ch->add_option("--out", ch.out, "output CSV (stdout when omitted)");
  sub_ch->callback(
      [&] { write_text(ch.out, cheeger_csv(load_patch(ch.src))); });

  struct {
    PatchSource src;
    int32_t cap = 0;
    std::string regime, out;
  } pr;
  auto* sub_pr = app.add_subcommand(
      "pairs", "exhaustive interface census over small clusters");
  add_patch_options(sub_pr, pr.src);
  sub_pr->add_option("--max-cluster", pr.cap, "largest cluster enumerated")
      ->required();
  sub_pr
      ->add_option("--regime", pr.regime,
                   "cross-check of the patch regime: deg6, hyper or quad")
      ->check(CLI::IsMember({"deg6", "hyper", "quad"}));
  sub_pr->add_option("--out", pr.out, "census JSON (stdout when omitted)");
  sub_pr->callback([&] {
    hl::Ball ball = load_patch(pr.src);
    if (!pr.regime.empty() && pr.regime != regime_of(ball))
      hl::fail(hl::ErrorCode::UsageError,
               "patch regime is " + regime_of(ball));
    hl::PairCensus census = hl::enumerate_pairs(ball, pr.cap);
    write_text(pr.out, hl::census_to_json_string(census, 1) + "\n");
    if (census.violations || census.roundtrip_failures) exit_status = 1;
  });

  struct {
    PatchSource src;
    std::vector<double> ps;
    std::vector<int32_t> cps;
    int64_t trials = 10000;
    uint64_t seed = kDefaultSeed;
    std::string out;
  } pc;
  auto* sub_pc = app.add_subcommand(
      "perc", "Monte Carlo connection probabilities across intensities");
  add_patch_options(sub_pc, pc.src);
  sub_pc->add_option("--p", pc.ps, "intensity list")
      ->required()
      ->delimiter(',');
  sub_pc
      ->add_option("--radius-checkpoints", pc.cps,
                   "layers to test (default 2,4,... and the full radius)")
      ->delimiter(',');
  sub_pc->add_option("--trials", pc.trials, "trials per intensity");
  sub_pc->add_option("--seed", pc.seed, "counter-based generator key");
  sub_pc->add_option("--out", pc.out, "sweep CSV (stdout when omitted)");
  sub_pc->callback([&] {
    hl::Ball ball = load_patch(pc.src);
    for (double p : pc.ps)
      if (!(p >= 0.0 && p <= 1.0))
        hl::fail(hl::ErrorCode::UsageError, "intensity outside [0,1]");
    int64_t cells = static_cast<int64_t>(pc.ps.size()) *
                    std::max(1, ball.map.num_vertices());
    if (pc.trials > hl::kSweepBudget / cells)
      hl::fail(hl::ErrorCode::BudgetExceeded, "sweep budget exhausted");
    hl::SweepResult all;
    for (double p : pc.ps) {
      hl::SweepResult one =
          hl::connection_probability(ball, p, pc.trials, pc.seed, pc.cps);
      all.d = one.d;
      all.face_degree = one.face_degree;
      all.seed = one.seed;
      all.rows.insert(all.rows.end(), one.rows.begin(), one.rows.end());
    }
    write_text(pc.out, hl::sweep_to_csv(all));
  });

  struct {
    int32_t d = 0, g = 0;
    double beta = 0;
    std::string out;
  } bo;
  auto* sub_bo = app.add_subcommand(
      "bounds", "critical-intensity bounds for a degree and face degree");
  sub_bo->add_option("--degree", bo.d, "vertex degree")->required();
  sub_bo->add_option("--face-degree", bo.g, "3 or 4")->required();
  auto* beta_opt = sub_bo->add_option(
      "--beta", bo.beta, "also report the expansion-based lower bound");
  sub_bo->add_option("--out", bo.out, "bounds JSON (stdout when omitted)");
  sub_bo->callback([&] {
    hl::ThresholdBounds tb = hl::threshold_bounds(bo.d, bo.g);
    json j;
    j["schema_version"] = 1;
    j["kind"] = "threshold_bounds";
    j["degree"] = bo.d;
    j["face_degree"] = bo.g;
    j["growth"] = bo.g == 3 ? hl::alpha(bo.d) : hl::alpha(bo.d + 2);
    j["lower_bound"] = tb.lower;
    j["upper_bound"] = tb.upper;
    j["exact"] = tb.exact;
    if (tb.exact) {
      auto frac = hl::pc_degree6_rational();
      j["exact_value"] =
          std::to_string(frac.first) + "/" + std::to_string(frac.second);
    }
    if (beta_opt->count()) j["nonamenable_lower"] = hl::pc_nonamenable(bo.beta);
    write_text(bo.out, j.dump(1) + "\n");
  });

  VerifyOpts ve;
  auto* sub_ve = app.add_subcommand(
      "verify", "re-check theorem-backed properties, exit 1 on any violation");
  sub_ve->add_option("--suite", ve.suite, "disc, pairs or perc-oracle")
      ->required()
      ->check(CLI::IsMember({"disc", "pairs", "perc-oracle"}));
  add_patch_options(sub_ve, ve.src);
  sub_ve->add_option("--boundary-max", ve.boundary_max,
                     "disc: largest boundary length (default 9)");
  sub_ve->add_option("--vertex-max", ve.vertex_max,
                     "disc: largest vertex count (default 14)");
  sub_ve->add_option("--min-degree", ve.min_degree,
                     "disc: internal degree floor (default 6)");
  sub_ve->add_option("--max-cluster", ve.max_cluster,
                     "pairs: largest cluster enumerated (default 6)");
  sub_ve->add_option("--p", ve.ps, "perc-oracle: intensities (default 0.2,0.5,0.8)")
      ->delimiter(',');
  sub_ve->add_option("--trials", ve.trials,
                     "perc-oracle: trials per intensity (default 100000)");
  sub_ve->add_option("--seed", ve.seed, "perc-oracle: generator key");
  sub_ve->add_option("--sigmas", ve.sigmas,
                     "perc-oracle: allowed deviation (default 4)");
  sub_ve->add_option("--out", ve.out, "report JSON (stdout when omitted)");
  sub_ve->callback([&] { exit_status = run_verify(ve); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const hl::Error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return e.code() == hl::ErrorCode::BudgetExceeded ? 3 : 2;
  }
  return exit_status;
}
