"""Generated road networks: parse validity, geometry, and the diamond fixture."""

from __future__ import annotations

import math

import pytest

from urbanflow import graphgen, routing
from urbanflow.routing import haversine


def test_grid_graph_counts():
    g = routing.load_graph(graphgen.grid_graph(4, 5))
    assert len(g.nodes) == 20
    assert g.component_count == 1
    # 4-neighbor lattice: 4*4 horizontal + 3*5 vertical records, both ways
    assert len(g.edges) == 2 * (4 * 4 + 3 * 5)


def test_grid_graph_one_way_variant():
    g = routing.load_graph(graphgen.grid_graph(3, 3, two_way=False))
    assert len(g.edges) == 2 * 3 + 2 * 3
    res = routing.dijkstra(g, routing.free_flow_snapshot(), "n2_2", "n0_0")
    assert isinstance(res, routing.NoRoute)  # arrows all point down/right


def test_grid_graph_spacing_matches_geometry():
    g = routing.load_graph(graphgen.grid_graph(2, 2, spacing_m=250.0))
    a = g.nodes["n0_0"]
    b = g.nodes["n0_1"]
    assert haversine(a, b) == pytest.approx(250.0, rel=0.01)


def test_grid_graph_validation():
    with pytest.raises(ValueError):
        graphgen.grid_graph(0, 3)


def test_random_graph_deterministic_and_parsable():
    text1 = graphgen.random_graph(120, seed=9)
    text2 = graphgen.random_graph(120, seed=9)
    assert text1 == text2
    assert graphgen.random_graph(120, seed=10) != text1
    g = routing.load_graph(text1)
    assert len(g.nodes) == 120
    assert g.component_count == 1  # generator stitches components together


def test_random_graph_edges_respect_geometry():
    g = routing.load_graph(graphgen.random_graph(80, seed=3))
    for edge in g.edges.values():
        a = g.nodes[edge.src]
        b = g.nodes[edge.dst]
        crow = haversine(a, b)
        # road length must never undercut the straight line
        assert edge.length_m >= crow * 0.999
        assert 0 < edge.speed_mps <= 40.0


def test_random_graph_sizes_scale():
    for n in (10, 50, 200):
        g = routing.load_graph(graphgen.random_graph(n, seed=1))
        assert len(g.nodes) == n


def test_diamond_costs_are_canonical(diamond_graph, free_flow):
    fast = routing.dijkstra(diamond_graph, free_flow, "S", "T")
    assert fast.cost_sec == 600.0
    assert fast.nodes == ("S", "A", "T")
    slow_snap = routing.TrafficSnapshot(version=2, speed_factor={"eSA": 0.4, "eAT": 0.4})
    alt = routing.dijkstra(diamond_graph, slow_snap, "S", "T")
    assert alt.cost_sec == 720.0
    assert alt.nodes == ("S", "B", "T")


def test_diamond_scenario_shape():
    doc = graphgen.diamond_scenario(poll_interval=15.0, seed=7)
    assert doc["poll_interval"] == 15.0
    assert doc["seed"] == 7
    assert [e["edge"] for e in doc["events"]] == ["eSA", "eAT"]
    assert all(e["t"] == 150.0 and e["factor"] == 0.4 for e in doc["events"])
