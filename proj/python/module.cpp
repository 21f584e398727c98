// Python bindings for the main operations: ball generation, isoperimetric
// constants and bounds, interface pairs and censuses, the disc machinery,
// exhaustive oracles, and Monte Carlo percolation.

#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <cstdint>
#include <vector>

#include "hyperlat/errors.hpp"
#include "hyperlat/interfaces.hpp"
#include "hyperlat/isoperimetry.hpp"
#include "hyperlat/oracle.hpp"
#include "hyperlat/percolation.hpp"
#include "hyperlat/planar_map.hpp"
#include "hyperlat/tessellation.hpp"
#include "hyperlat/triangulate.hpp"

namespace py = pybind11;
using namespace hyperlat;

namespace {

void check_vertex(const Ball& b, Vertex v) {
  if (v < 0 || v >= b.map.num_vertices())
    fail(ErrorCode::DomainError, "vertex id out of range");
}

}  // namespace

PYBIND11_MODULE(hyperlat, m) {
  m.doc() =
      "finite patches of regular planar and hyperbolic tessellations: "
      "isoperimetry, interface censuses, percolation";

  py::register_exception<Error>(m, "Error");

  py::class_<Ball>(m, "Ball")
      .def_property_readonly(
          "num_vertices", [](const Ball& b) { return b.map.num_vertices(); })
      .def_property_readonly("num_edges",
                             [](const Ball& b) { return b.map.num_edges(); })
      .def_readonly("d", &Ball::d)
      .def_readonly("face_degree", &Ball::face_degree)
      .def_readonly("radius", &Ball::radius)
      .def_readonly("layer", &Ball::layer)
      .def_readonly("layer_sizes", &Ball::layer_sizes)
      .def("sphere_size", &Ball::sphere_size, py::arg("n"))
      .def("degree",
           [](const Ball& b, Vertex v) {
             check_vertex(b, v);
             return b.map.degree(v);
           },
           py::arg("v"))
      .def("neighbors",
           [](const Ball& b, Vertex v) {
             check_vertex(b, v);
             return b.map.neighbors(v);
           },
           py::arg("v"))
      .def("on_outer_face",
           [](const Ball& b, Vertex v) {
             check_vertex(b, v);
             return b.map.on_outer_face(v);
           },
           py::arg("v"))
      .def("to_json", [](const Ball& b) { return ball_to_json_string(b); });

  m.def("ball_size", &ball_size, py::arg("d"), py::arg("face_degree"),
        py::arg("r"));
  m.def("make_ball", &make_ball, py::arg("d"), py::arg("face_degree"),
        py::arg("r"), py::arg("budget") = -1);
  m.def("ball_from_json", &ball_from_json_string, py::arg("text"));
  m.def("save_ball", &save_ball, py::arg("ball"), py::arg("path"));
  m.def("load_ball", &load_ball, py::arg("path"));

  m.def("alpha", &alpha, py::arg("d"));
  m.def("pc_degree6", &pc_degree6);
  m.def("pc_degree6_rational", &pc_degree6_rational);
  m.def("pc_nonamenable", &pc_nonamenable, py::arg("beta"));
  m.def("pc_hyperbolic", &pc_hyperbolic, py::arg("d"));
  m.def("pc_quad", &pc_quad, py::arg("d"));
  m.def("bs_bound", &bs_bound, py::arg("h"));
  m.def("max_enclosed_volume", &max_enclosed_volume, py::arg("n"));
  m.def("sign_alpha_comb", &sign_alpha_comb, py::arg("a"), py::arg("c"),
        py::arg("d"));
  m.def("layer_inequality_check", &layer_inequality_check, py::arg("x"),
        py::arg("y"), py::arg("z"), py::arg("d"));

  py::class_<ThresholdBounds>(m, "ThresholdBounds")
      .def_readonly("lower", &ThresholdBounds::lower)
      .def_readonly("upper", &ThresholdBounds::upper)
      .def_readonly("exact", &ThresholdBounds::exact);
  m.def("threshold_bounds", &threshold_bounds, py::arg("d"),
        py::arg("face_degree"));

  py::class_<CheegerRow>(m, "CheegerRow")
      .def_readonly("n", &CheegerRow::n)
      .def_readonly("ball", &CheegerRow::ball)
      .def_readonly("boundary", &CheegerRow::boundary)
      .def_readonly("ratio", &CheegerRow::ratio)
      .def_readonly("target", &CheegerRow::target)
      .def_readonly("abs_err", &CheegerRow::abs_err);
  m.def("cheeger_sequence", &cheeger_sequence, py::arg("d"),
        py::arg("face_degree"), py::arg("n_max"));

  m.def("make_layer_cut", &make_layer_cut, py::arg("ball"), py::arg("n"));
  m.def("min_vertex_cut",
        [](const Ball& b, Vertex src, const std::vector<Vertex>& sinks) {
          VertexCut cut = min_vertex_cut(b.map, src, sinks);
          return py::make_tuple(cut.size, cut.members);
        },
        py::arg("ball"), py::arg("src"), py::arg("sinks"));

  py::class_<InterfacePair>(m, "InterfacePair")
      .def_readonly("interface", &InterfacePair::interface)
      .def_readonly("boundary", &InterfacePair::boundary)
      .def_readonly("core", &InterfacePair::core)
      .def_readonly("filled", &InterfacePair::filled);
  m.def("interface_of", &interface_of, py::arg("ball"), py::arg("cluster"));
  m.def("from_interface", &from_interface, py::arg("ball"), py::arg("m"));
  m.def("from_boundary", &from_boundary, py::arg("ball"), py::arg("b"));
  m.def("ratio_check", &ratio_check, py::arg("m"), py::arg("b"),
        py::arg("b_core"), py::arg("d"), py::arg("face_degree"));
  m.def("alpha_check", &alpha_check, py::arg("m"), py::arg("b"),
        py::arg("b_core"), py::arg("d"), py::arg("face_degree"));
  m.def("combined_check", &combined_check, py::arg("m"), py::arg("b"),
        py::arg("d"), py::arg("face_degree"));
  m.def("volume_check", &volume_check, py::arg("volume"), py::arg("b"));

  py::class_<PairCensus>(m, "PairCensus")
      .def_readonly("d", &PairCensus::d)
      .def_readonly("face_degree", &PairCensus::face_degree)
      .def_readonly("radius", &PairCensus::radius)
      .def_readonly("cap", &PairCensus::cap)
      .def_readonly("clusters_enumerated", &PairCensus::clusters_enumerated)
      .def_readonly("distinct_pairs", &PairCensus::distinct_pairs)
      .def_readonly("violations", &PairCensus::violations)
      .def_readonly("violation_notes", &PairCensus::violation_notes)
      .def_readonly("roundtrip_failures", &PairCensus::roundtrip_failures)
      .def_readonly("max_m", &PairCensus::max_m)
      .def_readonly("max_b", &PairCensus::max_b)
      .def_readonly("max_volume", &PairCensus::max_volume)
      .def_property_readonly("counts",
                             [](const PairCensus& c) {
                               py::list out;
                               for (const CensusEntry& e : c.counts)
                                 out.append(
                                     py::make_tuple(e.b, e.m, e.count));
                               return out;
                             })
      .def("to_json",
           [](const PairCensus& c) { return census_to_json_string(c); });
  m.def("enumerate_pairs", &enumerate_pairs, py::arg("ball"), py::arg("cap"),
        py::arg("roundtrip") = true);

  py::class_<HullTriangulation>(m, "HullTriangulation")
      .def_readonly("host_of", &HullTriangulation::host_of)
      .def_readonly("rim", &HullTriangulation::rim)
      .def_readonly("added_edges", &HullTriangulation::added_edges)
      .def("map_json", [](const HullTriangulation& h) {
        return map_to_json_string(h.map);
      });
  m.def("triangulate_hull", &triangulate_hull, py::arg("ball"),
        py::arg("pair"));

  py::class_<UnzippedDisc>(m, "UnzippedDisc")
      .def_readonly("host_of", &UnzippedDisc::host_of)
      .def_readonly("rim", &UnzippedDisc::rim)
      .def_readonly("region_vertices", &UnzippedDisc::region_vertices)
      .def("map_json", [](const UnzippedDisc& u) {
        return map_to_json_string(u.map);
      });
  m.def("unzip_boundary", &unzip_boundary, py::arg("ball"), py::arg("hull"),
        py::arg("pair"));

  py::class_<ExactPercolation>(m, "ExactPercolation")
      .def_readonly("vertices", &ExactPercolation::vertices)
      .def_readonly("counts", &ExactPercolation::counts)
      .def("at", &ExactPercolation::at, py::arg("p"));
  m.def("exhaustive_percolation", &exhaustive_percolation, py::arg("patch"));
  m.def("enumerate_connected_subgraphs",
        [](const Ball& b, Vertex origin, int32_t size_max, int64_t max_sets) {
          return enumerate_connected_subgraphs(b.map, origin, size_max,
                                               max_sets);
        },
        py::arg("ball"), py::arg("origin"), py::arg("size_max"),
        py::arg("max_sets") = 2000000);
  m.def("enumerate_disc_triangulations",
        [](int32_t n_max, int32_t k_max, int32_t min_deg,
           const py::function& sink) {
          return enumerate_disc_triangulations(
              n_max, k_max, min_deg, [&](const DiscTriangulation& t) {
                py::dict inst;
                inst["n"] = t.boundary_length;
                inst["k"] = t.total_vertices;
                inst["m"] = t.hull_boundary_length;
                inst["internal"] = t.internal;
                sink(inst);
              });
        },
        py::arg("n_boundary_max"), py::arg("k_max"),
        py::arg("min_internal_degree"), py::arg("sink"));
  m.def("count_disc_triangulations",
        [](int32_t n_max, int32_t k_max, int32_t min_deg) {
          return enumerate_disc_triangulations(n_max, k_max, min_deg,
                                               [](const DiscTriangulation&) {});
        },
        py::arg("n_boundary_max"), py::arg("k_max"),
        py::arg("min_internal_degree"));

  py::class_<PercolationInstance>(m, "PercolationInstance")
      .def_readonly("vertices", &PercolationInstance::vertices)
      .def_readonly("p", &PercolationInstance::p)
      .def_readonly("seed", &PercolationInstance::seed)
      .def_readonly("trial", &PercolationInstance::trial)
      .def("occupied",
           [](const PercolationInstance& inst, Vertex v) {
             if (v < 0 || v >= inst.vertices)
               fail(ErrorCode::DomainError, "vertex id out of range");
             return inst.occupied(v);
           },
           py::arg("v"))
      .def("occupied_vertices", [](const PercolationInstance& inst) {
        std::vector<Vertex> out;
        for (Vertex v = 0; v < inst.vertices; ++v)
          if (inst.occupied(v)) out.push_back(v);
        return out;
      });
  m.def("sample_instance", &sample_instance, py::arg("patch"), py::arg("p"),
        py::arg("seed"), py::arg("trial") = 0);

  py::class_<SweepRow>(m, "SweepRow")
      .def_readonly("p", &SweepRow::p)
      .def_readonly("radius", &SweepRow::radius)
      .def_readonly("trials", &SweepRow::trials)
      .def_readonly("hits", &SweepRow::hits)
      .def_readonly("estimate", &SweepRow::estimate)
      .def_readonly("std_err", &SweepRow::std_err);
  py::class_<SweepResult>(m, "SweepResult")
      .def_readonly("d", &SweepResult::d)
      .def_readonly("face_degree", &SweepResult::face_degree)
      .def_readonly("seed", &SweepResult::seed)
      .def_readonly("rows", &SweepResult::rows);
  m.def("connection_probability", &connection_probability, py::arg("ball"),
        py::arg("p"), py::arg("trials"), py::arg("seed"),
        py::arg("checkpoints") = std::vector<int32_t>{});
  m.def("sweep", &sweep, py::arg("ball"), py::arg("p_grid"), py::arg("trials"),
        py::arg("seed"), py::arg("checkpoints") = std::vector<int32_t>{});
  m.def("sweep_to_csv", &sweep_to_csv, py::arg("result"));

  py::class_<InterfaceStatsRow>(m, "InterfaceStatsRow")
      .def_readonly("cluster", &InterfaceStatsRow::cluster)
      .def_readonly("m", &InterfaceStatsRow::m)
      .def_readonly("b", &InterfaceStatsRow::b)
      .def_readonly("count", &InterfaceStatsRow::count);
  py::class_<InterfaceStats>(m, "InterfaceStats")
      .def_readonly("d", &InterfaceStats::d)
      .def_readonly("face_degree", &InterfaceStats::face_degree)
      .def_readonly("p", &InterfaceStats::p)
      .def_readonly("seed", &InterfaceStats::seed)
      .def_readonly("trials", &InterfaceStats::trials)
      .def_readonly("vacant", &InterfaceStats::vacant)
      .def_readonly("censored", &InterfaceStats::censored)
      .def_readonly("recorded", &InterfaceStats::recorded)
      .def_readonly("violations", &InterfaceStats::violations)
      .def_readonly("max_ratio", &InterfaceStats::max_ratio)
      .def_readonly("rows", &InterfaceStats::rows);
  m.def("cluster_interface_stats", &cluster_interface_stats, py::arg("ball"),
        py::arg("p"), py::arg("trials"), py::arg("seed"));
}
