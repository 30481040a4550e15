"""Graph parsing, haversine, and shortest-path behavior."""

from __future__ import annotations

import math
import random

import pytest

from urbanflow import graphgen, routing

import oracles
import routing_harness


# ---------------------------------------------------------------- haversine


def test_haversine_antipodal_quarter():
    half = routing.haversine((0.0, 0.0), (0.0, 180.0))
    assert half == pytest.approx(math.pi * routing.EARTH_RADIUS_M, rel=1e-12)
    quarter = routing.haversine((0.0, 0.0), (90.0, 0.0))
    assert quarter == pytest.approx(math.pi / 2 * routing.EARTH_RADIUS_M, rel=1e-12)


def test_haversine_zero_and_symmetry():
    p = (40.7580, -73.9855)
    q = (40.7074, -74.0113)
    assert routing.haversine(p, p) == 0.0
    assert routing.haversine(p, q) == routing.haversine(q, p)


def test_haversine_matches_independent_formula():
    rng = random.Random(7)
    for _ in range(200):
        p = (rng.uniform(-89, 89), rng.uniform(-179, 179))
        q = (rng.uniform(-89, 89), rng.uniform(-179, 179))
        got = routing.haversine(p, q)
        want = oracles.great_circle_mp(p, q)
        assert got == pytest.approx(want, rel=1e-9, abs=1e-6)


def test_haversine_triangle_inequality():
    rng = random.Random(11)
    for _ in range(100):
        a, b, c = (
            (rng.uniform(-80, 80), rng.uniform(-179, 179)) for _ in range(3)
        )
        ab = routing.haversine(a, b)
        bc = routing.haversine(b, c)
        ac = routing.haversine(a, c)
        assert ac <= ab + bc + 1e-6


def test_haversine_clamps_rounding_noise():
    # antipodal-ish points can push the asin argument past 1 by an ulp
    d = routing.haversine((45.0, 10.0), (-45.0, -170.0))
    assert math.isfinite(d)
    assert d <= math.pi * routing.EARTH_RADIUS_M * (1 + 1e-12)


# ---------------------------------------------------------------- parsing


GOOD = """\
# comment line
node A 40.70 -74.00
node B 40.71 -74.00

edge e1 A B 1200 10 1
edge e2 B A 1300 12.5 0
"""


def test_parse_graph_basics():
    g = routing.parse_graph(GOOD)
    assert set(g.nodes) == {"A", "B"}
    assert g.nodes["A"] == (40.70, -74.00)
    # one-way e1 plus two-way e2 expands to three directed edges
    assert set(g.edges) == {"e1", "e2", "e2#rev"}
    assert g.edges["e2#rev"].src == "A" and g.edges["e2#rev"].dst == "B"
    assert g.component_count == 1


@pytest.mark.parametrize(
    "line,fragment",
    [
        ("node A 91.0 -74.0", "out of range"),
        ("node A 40.7 -190.0", "out of range"),
        ("node A 40.7", "node line needs"),
        ("edge e1 A B 1000 10 1", "missing node"),
        ("frob A B", "unknown record"),
    ],
)
def test_parse_graph_rejects_bad_lines(line, fragment):
    with pytest.raises(routing.GraphFormatError) as err:
        routing.parse_graph(line + "\n")
    assert fragment in str(err.value)
    assert err.value.line_no == 1


def test_parse_graph_duplicate_ids_and_bad_numbers():
    with pytest.raises(routing.GraphFormatError):
        routing.parse_graph("node A 1 2\nnode A 3 4\n")
    with pytest.raises(routing.GraphFormatError) as err:
        routing.parse_graph("node A 1 2\nnode B 1 3\nedge e A B -5 10 1\n")
    assert err.value.line_no == 3
    with pytest.raises(routing.GraphFormatError):
        routing.parse_graph("node A 1 2\nnode B 1 3\nedge e A B 100 0 1\n")
    with pytest.raises(routing.GraphFormatError):
        routing.parse_graph("node A 1 2\nnode B 1 3\nedge e A B 100 10 2\n")


def test_component_count_disconnected():
    text = (
        "node A 1 1\nnode B 1 2\nnode C 5 5\nnode D 5 6\n"
        "edge e1 A B 100 10 0\nedge e2 C D 100 10 0\n"
    )
    assert routing.parse_graph(text).component_count == 2


def test_generated_graphs_parse_and_connect():
    for seed in (1, 2, 3):
        g = routing.load_graph(graphgen.random_graph(80, seed=seed))
        assert len(g.nodes) == 80
        assert g.component_count >= 1
    grid = routing.load_graph(graphgen.grid_graph(4, 5))
    assert len(grid.nodes) == 20
    assert grid.component_count == 1


def test_generated_edges_at_least_great_circle():
    """Admissibility premise: nominal length >= straight-line distance."""
    g = routing.load_graph(graphgen.random_graph(120, seed=9))
    for e in g.edges.values():
        crow = routing.haversine(g.nodes[e.src], g.nodes[e.dst])
        assert e.length_m >= crow * 0.999


# ---------------------------------------------------------------- costs


def test_edge_cost_uses_snapshot_factor(free_flow):
    e = routing.Edge("e", "A", "B", 1000.0, 10.0, True)
    assert routing.edge_cost(e, free_flow) == 100.0
    slow = routing.TrafficSnapshot(version=2, speed_factor={"e": 0.5})
    assert routing.edge_cost(e, slow) == 200.0
    # unknown edges stay free flow
    other = routing.TrafficSnapshot(version=2, speed_factor={"x": 0.5})
    assert routing.edge_cost(e, other) == 100.0


def test_snapshot_is_immutable():
    snap = routing.TrafficSnapshot(version=1, speed_factor={"e": 0.5})
    with pytest.raises(TypeError):
        snap.speed_factor["e"] = 0.9  # type: ignore[index]


# ---------------------------------------------------------------- search


def test_trivial_routes(diamond_graph, free_flow):
    r = routing.dijkstra(diamond_graph, free_flow, "S", "S")
    assert isinstance(r, routing.Route)
    assert r.cost_sec == 0.0 and r.nodes == ("S",) and r.edges == ()

    r = routing.dijkstra(diamond_graph, free_flow, "S", "T")
    assert isinstance(r, routing.Route)
    assert r.nodes == ("S", "A", "T")
    assert r.cost_sec == 600.0


def test_unknown_endpoints_raise(diamond_graph, free_flow):
    with pytest.raises(ValueError):
        routing.dijkstra(diamond_graph, free_flow, "S", "nope")
    with pytest.raises(ValueError):
        routing.dijkstra(diamond_graph, free_flow, "nope", "T")


def test_no_route_reports_settled_count():
    g = routing.parse_graph(
        "node A 1 1\nnode B 1 2\nnode C 5 5\nedge e1 A B 100 10 0\n"
    )
    res = routing.dijkstra(g, routing.free_flow_snapshot(), "A", "C")
    assert isinstance(res, routing.NoRoute)
    assert res.settled == 2  # A and B exhaust the component


def test_oneway_asymmetry(free_flow):
    g = routing.parse_graph(
        "node A 40.70 -74.00\nnode B 40.71 -74.00\nedge e A B 1000 10 1\n"
    )
    forward = routing.dijkstra(g, free_flow, "A", "B")
    assert isinstance(forward, routing.Route)
    back = routing.dijkstra(g, free_flow, "B", "A")
    assert isinstance(back, routing.NoRoute)


def test_route_cost_is_path_fold(diamond_graph, free_flow):
    r = routing.astar(diamond_graph, free_flow, "S", "T")
    assert isinstance(r, routing.Route)
    acc_cost = 0.0
    acc_dist = 0.0
    for e in r.edges:
        acc_cost += routing.edge_cost(e, free_flow)
        acc_dist += e.length_m
    assert r.cost_sec == acc_cost
    assert r.distance_m == acc_dist
    assert len(r.nodes) == len(r.edges) + 1
    for e, (u, v) in zip(r.edges, zip(r.nodes, r.nodes[1:])):
        assert (e.src, e.dst) == (u, v)


def test_traffic_shifts_optimal_route(diamond_graph):
    slow = routing.TrafficSnapshot(
        version=2, speed_factor={"eSA": 0.4, "eAT": 0.4}
    )
    r = routing.dijkstra(diamond_graph, slow, "S", "T")
    assert isinstance(r, routing.Route)
    assert r.nodes == ("S", "B", "T")
    assert r.cost_sec == 720.0
    assert r.snapshot_version == 2


def test_astar_equals_dijkstra_small_batch():
    stats = routing_harness.run_equivalence(6, master_seed=505)
    assert stats.reachable > 100
    assert stats.astar_strictly_fewer > 0


def test_astar_heuristic_admissible_on_settled_nodes():
    """h(n) <= true remaining cost for sampled nodes of a random graph."""
    g = routing.load_graph(graphgen.random_graph(100, seed=31))
    snap = routing.free_flow_snapshot()
    node_ids = sorted(g.nodes)
    cost_edges = [
        (e.src, e.dst, oracles.edge_travel_cost(e.length_m, e.speed_mps, 1.0))
        for e in g.edges.values()
    ]
    vmax = g.vmax()
    rng = random.Random(3)
    for dst in rng.sample(node_ids, 5):
        # oracle distances TO dst: reverse every edge
        rev = [(b, a, c) for a, b, c in cost_edges]
        true_cost = oracles.bellman_ford(node_ids, rev, dst)
        for n in node_ids:
            if true_cost[n] == float("inf"):
                continue
            h = routing.haversine(g.nodes[n], g.nodes[dst]) / vmax
            assert h <= true_cost[n] + 1e-9 * max(1.0, true_cost[n])


def test_search_determinism(diamond_graph):
    snap = routing.TrafficSnapshot(version=3, speed_factor={"eSA": 0.7})
    a = routing.astar(diamond_graph, snap, "S", "T")
    b = routing.astar(diamond_graph, snap, "S", "T")
    assert a == b


# ---------------------------------------------------------------- snapping


def test_snap_nearest_and_ties(diamond_graph):
    assert routing.snap((40.700001, -74.0), diamond_graph) == "S"
    # exact tie needs coincident nodes; lowest id wins
    g = routing.parse_graph(
        "node Q 40.70 -74.00\nnode P 40.70 -74.00\nnode Z 41.00 -74.00\n"
    )
    assert routing.snap((40.701, -74.0), g) == "P"


def test_compute_route_end_to_end(diamond_graph, free_flow):
    plan = routing.compute_route(
        (40.7001, -74.0001), (40.7099, -73.9901), diamond_graph, free_flow
    )
    assert plan.origin_node == "S" and plan.dest_node == "T"
    assert isinstance(plan.result, routing.Route)
    assert plan.crow_flight_m == routing.haversine(plan.origin, plan.dest)


def test_compute_route_same_snap_is_zero_cost(diamond_graph, free_flow):
    plan = routing.compute_route(
        (40.700001, -74.0), (40.699999, -74.0), diamond_graph, free_flow
    )
    assert isinstance(plan.result, routing.Route)
    assert plan.result.cost_sec == 0.0
    assert plan.result.nodes == ("S",)
