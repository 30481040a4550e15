"""Road graph storage, great-circle geometry, and shortest-path search.

Graphs and traffic snapshots are immutable once built, so any number of
concurrent route computations may share them.  Edge costs are travel
seconds derived from edge length, free-flow speed, and a per-edge
congestion factor.  Dijkstra and A* share one search core, which makes
their tie-breaking (by node id) and cost arithmetic identical by
construction.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from heapq import heappop, heappush
from types import MappingProxyType
from typing import Callable, Mapping, Optional, Union

EARTH_RADIUS_M = 6_371_000.0

LatLon = tuple[float, float]


def haversine(p1: LatLon, p2: LatLon) -> float:
    """Great-circle distance in meters between two (lat, lon) points."""
    lat1, lon1 = math.radians(p1[0]), math.radians(p1[1])
    lat2, lon2 = math.radians(p2[0]), math.radians(p2[1])
    dlat = lat2 - lat1
    dlon = lon2 - lon1
    a = math.sin(dlat / 2.0) ** 2 + math.cos(lat1) * math.cos(lat2) * math.sin(dlon / 2.0) ** 2
    # clamp guards rounding at antipodal points
    return 2.0 * EARTH_RADIUS_M * math.asin(min(1.0, math.sqrt(a)))


class GraphFormatError(ValueError):
    """Raised on malformed graph text; carries the offending line number."""

    def __init__(self, line_no: int, message: str):
        super().__init__(f"line {line_no}: {message}")
        self.line_no = line_no


@dataclass(frozen=True)
class Edge:
    id: str
    src: str
    dst: str
    length_m: float
    speed_mps: float
    oneway: bool


@dataclass(frozen=True)
class RoadGraph:
    nodes: Mapping[str, LatLon]
    edges: Mapping[str, Edge]
    adjacency: Mapping[str, tuple[Edge, ...]]
    component_count: int

    def vmax(self) -> float:
        """Largest free-flow speed over all edges, m/s."""
        if not self.edges:
            raise ValueError("graph has no edges")
        return max(e.speed_mps for e in self.edges.values())


@dataclass(frozen=True)
class TrafficSnapshot:
    """Versioned map of per-edge speed factors; 1.0 means free flow.

    Unknown edges are implicitly at factor 1.0.  Instances are immutable;
    feeds publish a replacement snapshot instead of mutating.
    """

    version: int
    speed_factor: Mapping[str, float]
    timestamp: float = 0.0

    def __post_init__(self):
        object.__setattr__(self, "speed_factor", MappingProxyType(dict(self.speed_factor)))


def free_flow_snapshot(version: int = 1, timestamp: float = 0.0) -> TrafficSnapshot:
    return TrafficSnapshot(version=version, speed_factor={}, timestamp=timestamp)


@dataclass(frozen=True)
class Route:
    nodes: tuple[str, ...]
    edges: tuple[Edge, ...]
    cost_sec: float
    distance_m: float
    snapshot_version: int
    expanded: int


@dataclass(frozen=True)
class NoRoute:
    src: str
    dst: str
    settled: int
    snapshot_version: int


SearchResult = Union[Route, NoRoute]


@dataclass(frozen=True)
class HeuristicSpec:
    """A* heuristic choice.

    haversine-over-vmax never overestimates remaining travel time as long
    as every edge is at least as long as the great circle between its
    endpoints (true for road geometry) and factors stay in (0, 1].
    """

    kind: str  # "zero" | "haversine-over-vmax"
    vmax: Optional[float] = None

    @classmethod
    def zero(cls) -> "HeuristicSpec":
        return cls(kind="zero")

    @classmethod
    def for_graph(cls, graph: RoadGraph) -> "HeuristicSpec":
        if not graph.edges:
            return cls.zero()
        return cls(kind="haversine-over-vmax", vmax=graph.vmax())


def parse_graph(text: Union[str, bytes]) -> RoadGraph:
    """Parse the plain-text graph format.

    `node <id> <lat> <lon>` lines declare nodes, then
    `edge <id> <from> <to> <length_m> <speed_mps> <oneway 0|1>` lines
    declare roads.  `#` starts a comment.  Two-way roads expand into a
    pair of directed edges; the reverse direction gets the id suffix
    `#rev` so traffic feeds can address each direction separately.
    """
    if isinstance(text, bytes):
        text = text.decode("utf-8")
    nodes: dict[str, LatLon] = {}
    edges: dict[str, Edge] = {}
    adjacency: dict[str, list[Edge]] = {}

    def add_edge(line_no: int, eid: str, src: str, dst: str, length: float, speed: float, oneway: bool):
        if eid in edges:
            raise GraphFormatError(line_no, f"duplicate edge id {eid!r}")
        e = Edge(eid, src, dst, length, speed, oneway)
        edges[eid] = e
        adjacency.setdefault(src, []).append(e)

    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        kind = parts[0]
        if kind == "node":
            if len(parts) != 4:
                raise GraphFormatError(line_no, "node line needs: node <id> <lat> <lon>")
            nid = parts[1]
            if nid in nodes:
                raise GraphFormatError(line_no, f"duplicate node id {nid!r}")
            try:
                lat, lon = float(parts[2]), float(parts[3])
            except ValueError:
                raise GraphFormatError(line_no, "node coordinates must be numeric") from None
            if not (-90.0 <= lat <= 90.0 and -180.0 <= lon <= 180.0):
                raise GraphFormatError(line_no, f"node {nid!r} coordinates out of range")
            nodes[nid] = (lat, lon)
        elif kind == "edge":
            if len(parts) != 7:
                raise GraphFormatError(
                    line_no, "edge line needs: edge <id> <from> <to> <length_m> <speed_mps> <oneway 0|1>"
                )
            eid, src, dst = parts[1], parts[2], parts[3]
            for endpoint in (src, dst):
                if endpoint not in nodes:
                    raise GraphFormatError(line_no, f"edge {eid!r} references missing node {endpoint!r}")
            try:
                length, speed = float(parts[4]), float(parts[5])
            except ValueError:
                raise GraphFormatError(line_no, "edge length and speed must be numeric") from None
            if length <= 0.0:
                raise GraphFormatError(line_no, f"edge {eid!r} has nonpositive length")
            if speed <= 0.0:
                raise GraphFormatError(line_no, f"edge {eid!r} has nonpositive speed")
            if parts[6] not in ("0", "1"):
                raise GraphFormatError(line_no, "oneway flag must be 0 or 1")
            oneway = parts[6] == "1"
            add_edge(line_no, eid, src, dst, length, speed, oneway)
            if not oneway:
                add_edge(line_no, eid + "#rev", dst, src, length, speed, oneway)
        else:
            raise GraphFormatError(line_no, f"unknown record type {kind!r}")

    components = _count_components(nodes, edges)
    adj = {n: tuple(lst) for n, lst in adjacency.items()}
    return RoadGraph(
        nodes=MappingProxyType(nodes),
        edges=MappingProxyType(edges),
        adjacency=MappingProxyType(adj),
        component_count=components,
    )


def load_graph(source) -> RoadGraph:
    """Load a graph from bytes/str content or a readable file object."""
    if isinstance(source, (str, bytes)):
        return parse_graph(source)
    return parse_graph(source.read())


def _count_components(nodes: Mapping[str, LatLon], edges: Mapping[str, Edge]) -> int:
    # union-find over undirected reachability; isolated nodes count too
    parent = {n: n for n in nodes}

    def find(x: str) -> str:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for e in edges.values():
        ra, rb = find(e.src), find(e.dst)
        if ra != rb:
            parent[ra] = rb
    return len({find(n) for n in nodes})


def edge_cost(edge: Edge, snapshot: TrafficSnapshot) -> float:
    """Travel seconds for one edge under the snapshot's speed factor."""
    factor = snapshot.speed_factor.get(edge.id, 1.0)
    return edge.length_m / (edge.speed_mps * factor)


def _make_heuristic(spec: HeuristicSpec, graph: RoadGraph, dst: str) -> Optional[Callable[[str], float]]:
    if spec.kind == "zero":
        return None
    if spec.kind == "haversine-over-vmax":
        vmax = spec.vmax if spec.vmax is not None else graph.vmax()
        if vmax <= 0.0:
            raise ValueError("vmax must be positive")
        target = graph.nodes[dst]
        nodes = graph.nodes
        cache: dict[str, float] = {}

        def h(n: str) -> float:
            v = cache.get(n)
            if v is None:
                v = haversine(nodes[n], target) / vmax
                cache[n] = v
            return v

        return h
    raise ValueError(f"unknown heuristic kind {spec.kind!r}")


def _search(
    graph: RoadGraph,
    snapshot: TrafficSnapshot,
    src: str,
    dst: str,
    h: Optional[Callable[[str], float]],
) -> tuple[SearchResult, list[str]]:
    """Shared best-first core: Dijkstra when h is None, A* otherwise.

    Heap entries are (priority, node id) so cost ties always break toward
    the smaller node id.  Returns the result plus the settle order.
    """
    for endpoint in (src, dst):
        if endpoint not in graph.nodes:
            raise ValueError(f"unknown node {endpoint!r}")
    dist: dict[str, float] = {src: 0.0}
    prev: dict[str, tuple[str, Edge]] = {}
    settled: set[str] = set()
    order: list[str] = []
    heap: list[tuple[float, str]] = [((h(src) if h else 0.0), src)]
    adjacency = graph.adjacency

    while heap:
        _, u = heappop(heap)
        if u in settled:
            continue
        settled.add(u)
        order.append(u)
        if u == dst:
            return _build_route(graph, snapshot, src, dst, prev, len(order)), order
        g_u = dist[u]
        for e in adjacency.get(u, ()):
            v = e.dst
            if v in settled:
                continue
            g_v = g_u + edge_cost(e, snapshot)
            if g_v < dist.get(v, math.inf):
                dist[v] = g_v
                prev[v] = (u, e)
                heappush(heap, (g_v + (h(v) if h else 0.0), v))

    return NoRoute(src=src, dst=dst, settled=len(order), snapshot_version=snapshot.version), order


def _build_route(
    graph: RoadGraph,
    snapshot: TrafficSnapshot,
    src: str,
    dst: str,
    prev: Mapping[str, tuple[str, Edge]],
    expanded: int,
) -> Route:
    path_edges: list[Edge] = []
    node = dst
    while node != src:
        p, e = prev[node]
        path_edges.append(e)
        node = p
    path_edges.reverse()
    nodes = [src] + [e.dst for e in path_edges]
    # in-order fold matches the accumulation done during the search
    cost = 0.0
    distance = 0.0
    for e in path_edges:
        cost += edge_cost(e, snapshot)
        distance += e.length_m
    return Route(
        nodes=tuple(nodes),
        edges=tuple(path_edges),
        cost_sec=cost,
        distance_m=distance,
        snapshot_version=snapshot.version,
        expanded=expanded,
    )


def dijkstra(graph: RoadGraph, snapshot: TrafficSnapshot, src: str, dst: str) -> SearchResult:
    """Least-travel-time route; exits as soon as dst settles."""
    result, _ = _search(graph, snapshot, src, dst, h=None)
    return result


def astar(
    graph: RoadGraph,
    snapshot: TrafficSnapshot,
    src: str,
    dst: str,
    h: Optional[HeuristicSpec] = None,
) -> SearchResult:
    """Heuristic-guided search; cost-equivalent to dijkstra for admissible h."""
    spec = h if h is not None else HeuristicSpec.for_graph(graph)
    result, _ = _search(graph, snapshot, src, dst, h=_make_heuristic(spec, graph, dst))
    return result


def snap(point: LatLon, graph: RoadGraph) -> str:
    """Nearest node by great-circle distance; ties go to the lowest id."""
    if not graph.nodes:
        raise ValueError("graph has no nodes")
    best_id: Optional[str] = None
    best_d = math.inf
    for nid in graph.nodes:
        d = haversine(point, graph.nodes[nid])
        if d < best_d or (d == best_d and (best_id is None or nid < best_id)):
            best_d = d
            best_id = nid
    assert best_id is not None
    return best_id


@dataclass(frozen=True)
class RoutePlan:
    """compute_route output: snapped endpoints, crow-flight, and the route."""

    origin: LatLon
    dest: LatLon
    origin_node: str
    dest_node: str
    crow_flight_m: float
    result: SearchResult


def compute_route(
    origin: LatLon,
    dest: LatLon,
    graph: RoadGraph,
    snapshot: TrafficSnapshot,
    h: Optional[HeuristicSpec] = None,
) -> RoutePlan:
    """Snap both endpoints to nodes and run the heuristic search between them."""
    crow = haversine(origin, dest)
    src = snap(origin, graph)
    dst = snap(dest, graph)
    result = astar(graph, snapshot, src, dst, h=h)
    return RoutePlan(
        origin=origin,
        dest=dest,
        origin_node=src,
        dest_node=dst,
        crow_flight_m=crow,
        result=result,
    )
