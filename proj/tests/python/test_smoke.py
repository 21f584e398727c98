"""Smoke checks for the python module: every exposed family of operations is
exercised once against small patches with independently known answers."""

import json
import math

import hyperlat as hl

GOLDEN = (1 + math.sqrt(5)) / 2


def check_constants():
    assert abs(hl.alpha(7) - GOLDEN) < 1e-12
    assert hl.alpha(6) == 0.0
    assert hl.pc_degree6_rational() == (2, 3)
    assert hl.max_enclosed_volume(6) == 7
    assert hl.sign_alpha_comb(1, 1, 7) > 0  # alpha(7) > 1

    tb = hl.threshold_bounds(7, 3)
    assert not tb.exact
    assert abs(tb.lower - (5 - math.sqrt(5)) / 8) < 1e-12
    assert abs(tb.upper - hl.bs_bound(GOLDEN)) < 1e-15
    assert hl.threshold_bounds(6, 3).exact
    assert abs(hl.pc_nonamenable(1.0) - 0.5) < 1e-15
    try:
        hl.threshold_bounds(4, 3)
    except hl.Error as err:
        assert "RegimeMismatch" in str(err)
    else:
        raise AssertionError("threshold_bounds accepted a spherical pair")


def check_balls():
    ball = hl.make_ball(7, 3, 4)
    assert ball.num_vertices == 232 and ball.radius == 4 and ball.d == 7
    assert ball.layer_sizes == [1, 8, 29, 85, 232]
    assert ball.sphere_size(4) == 147
    assert len(ball.neighbors(0)) == 7 and ball.degree(0) == 7
    assert not ball.on_outer_face(0)
    assert ball.layer[0] == 0 and ball.layer[-1] == 4
    assert hl.ball_size(7, 3, 4) == 232

    back = hl.ball_from_json(ball.to_json())
    assert back.num_vertices == ball.num_vertices
    assert back.layer == ball.layer
    assert json.loads(ball.to_json())["kind"] == "ball"

    try:
        hl.make_ball(5, 3, 2)
    except hl.Error as err:
        assert "RegimeMismatch" in str(err)
    else:
        raise AssertionError("make_ball accepted a spherical pair")


def check_isoperimetry():
    rows = hl.cheeger_sequence(5, 4, 8)
    assert len(rows) == 9
    assert rows[-1].n == 8 and rows[-1].ball == 7981 and rows[-1].boundary == 12920
    assert abs(rows[-1].ratio - GOLDEN) < 0.02
    assert abs(rows[-1].target - GOLDEN) < 1e-12
    assert rows[-1].abs_err == abs(rows[-1].ratio - rows[-1].target)

    ball = hl.make_ball(7, 3, 4)
    cut = hl.make_layer_cut(ball, 2)
    assert len(cut) == ball.sphere_size(2) == 21
    size, members = hl.min_vertex_cut(ball, 0, cut)
    assert size == len(members) <= 21
    assert hl.layer_inequality_check(8, 1, 0, 7)


def check_interfaces():
    t6 = hl.make_ball(6, 3, 6)
    pair = hl.interface_of(t6, [0])
    assert pair.interface == [0] and len(pair.boundary) == 6
    assert pair.core == pair.boundary and pair.filled == [0]
    assert hl.from_interface(t6, pair.interface).boundary == pair.boundary
    assert hl.from_boundary(t6, pair.boundary).interface == pair.interface
    assert hl.combined_check(1, 6, 6, 3)
    assert hl.volume_check(1, 6)

    census = hl.enumerate_pairs(t6, 4)
    assert census.clusters_enumerated == 216
    assert census.violations == 0 and census.roundtrip_failures == 0
    assert sum(c for _, _, c in census.counts) == census.distinct_pairs
    assert json.loads(census.to_json())["cap"] == 4

    hull = hl.triangulate_hull(t6, pair)
    assert len(hull.rim) == 6 and hull.added_edges >= 0
    assert len(json.loads(hull.map_json())["vertices"]) == len(hull.host_of)
    disc = hl.unzip_boundary(t6, hull, pair)
    assert disc.region_vertices == 1 and len(disc.rim) == 6


def check_oracles():
    assert hl.count_disc_triangulations(6, 16, 6) == 7
    seen = []
    total = hl.enumerate_disc_triangulations(6, 16, 6, seen.append)
    assert total == 7 and len(seen) == 7
    assert all(inst["m"] <= inst["n"] - 6 or inst["internal"] == []
               for inst in seen)
    assert sum(1 for inst in seen if inst["n"] == 6) == 4
    wheels = [inst for inst in seen if inst["n"] == 6 and inst["k"] == 7]
    assert len(wheels) == 1 and wheels[0]["internal"] == [6]

    t6 = hl.make_ball(6, 3, 6)
    subs = hl.enumerate_connected_subgraphs(t6, 0, 2)
    assert len(subs) == 7 and subs[0] == [0]

    z2 = hl.make_ball(4, 4, 2)
    exact = hl.exhaustive_percolation(z2)
    assert exact.vertices == 13 and len(exact.counts) == 14
    assert exact.at(1.0) == 1.0 and exact.at(0.0) == 0.0
    return z2, exact


def check_percolation(z2, exact):
    inst = hl.sample_instance(z2, 1.0, seed=7)
    assert inst.occupied_vertices() == list(range(13))
    assert all(inst.occupied(v) for v in range(13))

    res = hl.connection_probability(z2, 0.7, 20000, seed=7)
    assert res.d == 4 and res.face_degree == 4
    row = res.rows[-1]
    assert row.radius == 2 and row.trials == 20000
    assert abs(row.estimate - exact.at(0.7)) <= 4 * row.std_err + 1e-9

    grid = hl.sweep(z2, [0.3, 0.5, 0.7], 2000, seed=11)
    hits = [r.hits for r in grid.rows if r.radius == 2]
    assert hits == sorted(hits)
    csv = hl.sweep_to_csv(grid)
    assert csv.startswith("p,radius,trials,hits,estimate,std_err")
    assert len(csv.strip().split("\n")) == 1 + len(grid.rows)

    stats = hl.cluster_interface_stats(hl.make_ball(6, 3, 4), 0.4, 500, seed=1)
    assert stats.vacant + stats.censored + stats.recorded == 500
    assert stats.violations == 0
    assert all(row.count > 0 for row in stats.rows)


def main():
    check_constants()
    check_balls()
    check_isoperimetry()
    check_interfaces()
    z2, exact = check_oracles()
    check_percolation(z2, exact)
    print("python smoke passed")


if __name__ == "__main__":
    main()
