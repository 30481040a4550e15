"""Live traffic updates, deviation detection, and reroute simulation.

A single writer folds update batches into fresh immutable snapshots;
readers keep using whatever version they started with.  Vehicles move
along their route between polls; position is always a route node, with
fractional progress into the next edge tracked for exact time
accounting.  The deviation check compares the remaining route re-costed
under the latest snapshot against the remaining time promised when the
route was assigned, and a reroute is adopted only when it is strictly
better than sticking to the current route.
"""

from __future__ import annotations

import json
import logging
import math
from dataclasses import dataclass, field
from typing import Optional, Sequence, Union

from .routing import (
    HeuristicSpec,
    NoRoute,
    RoadGraph,
    Route,
    TrafficSnapshot,
    astar,
    edge_cost,
    free_flow_snapshot,
    snap,
)

log = logging.getLogger(__name__)

DEFAULT_THRESHOLD = 0.20
DEFAULT_POLL_INTERVAL = 30.0


@dataclass(frozen=True)
class TrafficUpdate:
    edge_id: str
    observed_speed_factor: float
    timestamp: float


def apply_updates(
    snapshot: TrafficSnapshot, updates: Sequence[TrafficUpdate]
) -> tuple[TrafficSnapshot, int]:
    """Fold a batch into a new snapshot (version + 1).

    Out-of-range factors are rejected and counted; the rest of the batch
    still applies.  Returns (new snapshot, rejected count).
    """
    factors = dict(snapshot.speed_factor)
    rejected = 0
    ts = snapshot.timestamp
    for u in updates:
        if not (0.0 < u.observed_speed_factor <= 1.0):
            rejected += 1
            continue
        factors[u.edge_id] = u.observed_speed_factor
        if u.timestamp > ts:
            ts = u.timestamp
    return TrafficSnapshot(version=snapshot.version + 1, speed_factor=factors, timestamp=ts), rejected


@dataclass
class ActiveTrip:
    """A vehicle following a route; mutated only by its owning engine."""

    trip_id: str
    destination: str
    route: Route
    predicted_eta: float  # full cost of the current route when assigned
    started_at: float
    position_node: str
    origin_node: str = ""
    edge_index: int = 0
    edge_frac: float = 0.0  # progress into route.edges[edge_index]
    assigned_costs: tuple[float, ...] = ()
    realized_sec: float = 0.0
    initial_eta: float = 0.0
    arrived: bool = False
    unreachable: bool = False
    reroute_count: int = 0
    last_report: Optional["DeviationReport"] = None

    @property
    def predicted_remaining(self) -> float:
        """Remaining travel time promised by the assignment-time costing."""
        total = 0.0
        for c in self.assigned_costs[self.edge_index :]:
            total += c
        return total

    @property
    def status(self) -> str:
        if self.arrived:
            return "arrived"
        if self.unreachable:
            return "unreachable"
        return "active"


@dataclass(frozen=True)
class DeviationReport:
    trip_id: str
    predicted_eta: float  # remaining per assignment-time costs
    live_eta: float  # remaining re-costed under the latest snapshot
    ratio: float
    threshold: float
    triggered: bool


def start_trip(
    trip_id: str, route: Route, snapshot: TrafficSnapshot, started_at: float = 0.0
) -> ActiveTrip:
    costs = tuple(edge_cost(e, snapshot) for e in route.edges)
    return ActiveTrip(
        trip_id=trip_id,
        destination=route.nodes[-1],
        route=route,
        predicted_eta=route.cost_sec,
        started_at=started_at,
        position_node=route.nodes[0],
        origin_node=route.nodes[0],
        assigned_costs=costs,
        initial_eta=route.cost_sec,
    )


def live_eta(trip: ActiveTrip, snapshot: TrafficSnapshot) -> float:
    """Remaining whole-edge travel time under the given snapshot."""
    total = 0.0
    for e in trip.route.edges[trip.edge_index :]:
        total += edge_cost(e, snapshot)
    return total


def check_deviation(trip: ActiveTrip, snapshot: TrafficSnapshot, threshold: float) -> DeviationReport:
    """Triggered exactly when live > predicted * (1 + threshold)."""
    if threshold <= 0:
        raise ValueError("threshold must be positive")
    predicted = trip.predicted_remaining
    live = live_eta(trip, snapshot)
    if predicted > 0:
        ratio = live / predicted
    else:
        ratio = 1.0 if live == 0.0 else math.inf
    triggered = live > predicted * (1.0 + threshold)
    return DeviationReport(
        trip_id=trip.trip_id,
        predicted_eta=predicted,
        live_eta=live,
        ratio=ratio,
        threshold=threshold,
        triggered=triggered,
    )


def recalculate(
    trip: ActiveTrip,
    graph: RoadGraph,
    snapshot: TrafficSnapshot,
    h: Optional[HeuristicSpec] = None,
) -> tuple[Route, bool]:
    """Search again from the current position; adopt only a strict win.

    Returns (route in effect after the call, adopted flag).  If the
    destination is unreachable the old route is kept and the trip is
    flagged; a candidate is adopted only when its cost beats the current
    remainder's live ETA, which prevents flapping between equal routes.
    """
    candidate = astar(graph, snapshot, trip.position_node, trip.destination, h=h)
    if isinstance(candidate, NoRoute):
        trip.unreachable = True
        log.info("trip %s: destination unreachable from %s, keeping old route", trip.trip_id, trip.position_node)
        return trip.route, False
    old_live = live_eta(trip, snapshot)
    if candidate.cost_sec < old_live:
        trip.route = candidate
        trip.edge_index = 0
        trip.edge_frac = 0.0
        trip.assigned_costs = tuple(edge_cost(e, snapshot) for e in candidate.edges)
        trip.predicted_eta = candidate.cost_sec
        trip.position_node = candidate.nodes[0]
        trip.unreachable = False
        trip.reroute_count += 1
        return candidate, True
    return trip.route, False


def _advance(trip: ActiveTrip, dt: float, snapshot: TrafficSnapshot) -> None:
    """Move a vehicle dt seconds along its route under one snapshot.

    Remaining time on the in-progress edge re-scales with the snapshot:
    progress is a fraction of the edge, not a fixed number of seconds.
    """
    budget = dt
    edges = trip.route.edges
    while budget > 0.0 and not trip.arrived:
        if trip.edge_index >= len(edges):
            trip.arrived = True
            break
        cost = edge_cost(edges[trip.edge_index], snapshot)
        remaining = (1.0 - trip.edge_frac) * cost
        if budget >= remaining:
            budget -= remaining
            trip.realized_sec += remaining
            trip.edge_index += 1
            trip.edge_frac = 0.0
            trip.position_node = trip.route.nodes[trip.edge_index]
            if trip.edge_index == len(edges):
                trip.arrived = True
        else:
            trip.edge_frac += budget / cost
            trip.realized_sec += budget
            budget = 0.0
    if not trip.arrived and trip.edge_index >= len(edges):
        trip.arrived = True


@dataclass(frozen=True)
class ScenarioEvent:
    t: float
    edge: str
    factor: float


@dataclass(frozen=True)
class Scenario:
    seed: int
    poll_interval: float
    events: tuple[ScenarioEvent, ...]

    def __post_init__(self):
        if self.poll_interval <= 0:
            raise ValueError("poll_interval must be positive")
        # keep same-time events in listed order
        object.__setattr__(self, "events", tuple(sorted(self.events, key=lambda e: e.t)))


def scenario_from_dict(data: dict) -> Scenario:
    try:
        events = tuple(
            ScenarioEvent(t=float(e["t"]), edge=str(e["edge"]), factor=float(e["factor"]))
            for e in data.get("events", [])
        )
        return Scenario(
            seed=int(data.get("seed", 0)),
            poll_interval=float(data.get("poll_interval", DEFAULT_POLL_INTERVAL)),
            events=events,
        )
    except (KeyError, TypeError, ValueError) as exc:
        raise ValueError(f"bad scenario: {exc}") from exc


def load_scenario(path: str) -> Scenario:
    """Read a scenario file; .toml and .json are both accepted."""
    if path.endswith(".toml"):
        try:
            import tomllib  # py >= 3.11
        except ModuleNotFoundError:
            import tomli as tomllib
        with open(path, "rb") as f:
            return scenario_from_dict(tomllib.load(f))
    with open(path, "r", encoding="utf-8") as f:
        return scenario_from_dict(json.load(f))


class SimulationEngine:
    """Virtual-clock simulation: ticks advance vehicles, apply scheduled
    congestion events, and run deviation checks that may reroute trips."""

    def __init__(
        self,
        graph: RoadGraph,
        scenario: Optional[Scenario] = None,
        threshold: float = DEFAULT_THRESHOLD,
        h: Optional[HeuristicSpec] = None,
        reroute: bool = True,
    ):
        self.graph = graph
        self.scenario = scenario
        self.threshold = threshold
        self.h = h if h is not None else HeuristicSpec.for_graph(graph)
        self.reroute = reroute
        self.clock = 0.0
        self.tick_no = 0
        self.snapshot = free_flow_snapshot(version=1)
        self.trips: dict[str, ActiveTrip] = {}
        self._event_cursor = 0
        if scenario is not None:
            self._apply_due_events()  # events scheduled at or before t=0

    @property
    def poll_interval(self) -> float:
        return self.scenario.poll_interval if self.scenario else DEFAULT_POLL_INTERVAL

    def set_scenario(self, scenario: Scenario) -> None:
        """Install a scenario and restart the virtual clock."""
        self.scenario = scenario
        self.clock = 0.0
        self.tick_no = 0
        self.snapshot = free_flow_snapshot(version=1)
        self._event_cursor = 0
        self._apply_due_events()

    def _resolve_node(self, where) -> str:
        if isinstance(where, str):
            if where not in self.graph.nodes:
                raise ValueError(f"unknown node {where!r}")
            return where
        return snap((float(where[0]), float(where[1])), self.graph)

    def add_trip(self, trip_id: str, origin, dest, depart: Optional[float] = None):
        """Route and register a trip; returns the ActiveTrip or a NoRoute."""
        if trip_id in self.trips:
            raise ValueError(f"duplicate trip id {trip_id!r}")
        src = self._resolve_node(origin)
        dst = self._resolve_node(dest)
        result = astar(self.graph, self.snapshot, src, dst, h=self.h)
        if isinstance(result, NoRoute):
            return result
        started = self.clock if depart is None else max(float(depart), self.clock)
        trip = start_trip(trip_id, result, self.snapshot, started_at=started)
        self.trips[trip_id] = trip
        return trip

    def _apply_due_events(self) -> tuple[list[ScenarioEvent], int]:
        due: list[ScenarioEvent] = []
        if self.scenario is not None:
            events = self.scenario.events
            while self._event_cursor < len(events) and events[self._event_cursor].t <= self.clock:
                due.append(events[self._event_cursor])
                self._event_cursor += 1
        if not due:
            return [], 0
        updates = [TrafficUpdate(e.edge, e.factor, e.t) for e in due]
        self.snapshot, rejected = apply_updates(self.snapshot, updates)
        if rejected:
            log.warning("%d scenario event(s) rejected (factor out of range)", rejected)
        return due, rejected

    def tick(self) -> dict:
        """Advance one poll interval; returns a JSON-able log entry."""
        if self.scenario is None:
            raise ValueError("no scenario loaded")
        self.tick_no += 1
        prev_clock = self.clock
        self.clock = prev_clock + self.scenario.poll_interval

        arrivals = []
        for trip in self.trips.values():
            if trip.arrived:
                continue
            dt = self.clock - max(prev_clock, trip.started_at)
            if dt <= 0:
                continue
            _advance(trip, dt, self.snapshot)
            if trip.arrived:
                arrivals.append({"trip": trip.trip_id, "realized_sec": trip.realized_sec})

        due, rejected = self._apply_due_events()

        reports = []
        reroutes = []
        for trip in self.trips.values():
            if trip.arrived or trip.started_at > self.clock:
                continue
            report = check_deviation(trip, self.snapshot, self.threshold)
            trip.last_report = report
            reports.append(
                {
                    "trip": report.trip_id,
                    "predicted_eta": report.predicted_eta,
                    "live_eta": report.live_eta,
                    "ratio": report.ratio if math.isfinite(report.ratio) else None,
                    "triggered": report.triggered,
                }
            )
            if report.triggered and self.reroute:
                old_live = live_eta(trip, self.snapshot)
                route, adopted = recalculate(trip, self.graph, self.snapshot, h=self.h)
                if adopted:
                    reroutes.append(
                        {
                            "trip": trip.trip_id,
                            "old_live_eta": old_live,
                            "new_cost": route.cost_sec,
                            "nodes": list(route.nodes),
                        }
                    )
                    log.info(
                        "trip %s rerouted: %.1f s -> %.1f s", trip.trip_id, old_live, route.cost_sec
                    )

        return {
            "tick": self.tick_no,
            "clock": self.clock,
            "snapshot_version": self.snapshot.version,
            "events_applied": [{"t": e.t, "edge": e.edge, "factor": e.factor} for e in due],
            "rejected_updates": rejected,
            "reports": reports,
            "reroutes": reroutes,
            "arrivals": arrivals,
        }

    def all_done(self) -> bool:
        return all(t.arrived for t in self.trips.values())


def run_scenario(
    scenario: Scenario,
    graph: RoadGraph,
    trips: Sequence[dict],
    threshold: float = DEFAULT_THRESHOLD,
    h: Optional[HeuristicSpec] = None,
    reroute: bool = True,
    max_ticks: int = 100_000,
) -> dict:
    """Replay a scenario to completion and return the deterministic log.

    Each trip spec is {"id", "from", "to"} with optional "depart";
    endpoints are node ids or (lat, lon) pairs.  The log records every
    tick plus per-trip realized travel times.
    """
    engine = SimulationEngine(graph, scenario, threshold=threshold, h=h, reroute=reroute)
    unroutable = []
    for spec in trips:
        result = engine.add_trip(spec["id"], spec["from"], spec["to"], depart=spec.get("depart"))
        if isinstance(result, NoRoute):
            unroutable.append(spec["id"])
            log.warning("trip %s has no route at assignment, skipping", spec["id"])

    ticks = []
    while not engine.all_done() and engine.tick_no < max_ticks:
        ticks.append(engine.tick())

    trip_rows = []
    for trip in engine.trips.values():
        trip_rows.append(
            {
                "id": trip.trip_id,
                "from_node": trip.origin_node,
                "to_node": trip.destination,
                "initial_eta": trip.initial_eta,
                "realized_sec": trip.realized_sec,
                "arrived": trip.arrived,
                "reroutes": trip.reroute_count,
                "status": trip.status,
            }
        )
    return {
        "poll_interval": scenario.poll_interval,
        "seed": scenario.seed,
        "threshold": threshold,
        "reroute": reroute,
        "unroutable": unroutable,
        "ticks": ticks,
        "trips": trip_rows,
        "completed": engine.all_done(),
    }


# --- external router client -------------------------------------------------


class ExternalRouterError(RuntimeError):
    """Base class for external routing service failures."""


class RouterTimeoutError(ExternalRouterError):
    pass


class RouterStatusError(ExternalRouterError):
    def __init__(self, status: int, body: str = ""):
        super().__init__(f"router returned status {status}")
        self.status = status
        self.body = body


class RouterRateLimitError(RouterStatusError):
    def __init__(self, retry_after: Optional[float]):
        ExternalRouterError.__init__(self, "router rate limit exceeded")
        self.status = 429
        self.retry_after = retry_after


class RouterParseError(ExternalRouterError):
    pass


@dataclass(frozen=True)
class ExternalRouterConfig:
    base_url: str
    api_key: Optional[str] = None
    timeout_s: float = 5.0


@dataclass(frozen=True)
class ExternalRoute:
    distance_m: float
    time_sec: float
    geometry: tuple[tuple[float, float], ...]  # (lat, lon)


def external_router_query(cfg: ExternalRouterConfig, origin, dest) -> ExternalRoute:
    """Query a GraphHopper-style /route endpoint for comparison data.

    Never used as the primary pathfinder; the engine works fully offline.
    """
    import requests

    params = [
        ("point", f"{origin[0]},{origin[1]}"),
        ("point", f"{dest[0]},{dest[1]}"),
        ("points_encoded", "false"),
    ]
    if cfg.api_key:
        params.append(("key", cfg.api_key))
    url = cfg.base_url.rstrip("/") + "/route"
    try:
        resp = requests.get(url, params=params, timeout=cfg.timeout_s)
    except requests.exceptions.Timeout as exc:
        raise RouterTimeoutError(f"router timed out after {cfg.timeout_s} s") from exc
    except requests.exceptions.RequestException as exc:
        raise ExternalRouterError(str(exc)) from exc

    if resp.status_code == 429:
        retry_raw = resp.headers.get("Retry-After")
        retry = None
        if retry_raw is not None:
            try:
                retry = float(retry_raw)
            except ValueError:
                retry = None
        raise RouterRateLimitError(retry)
    if not 200 <= resp.status_code < 300:
        raise RouterStatusError(resp.status_code, resp.text[:500])

    try:
        doc = resp.json()
    except ValueError as exc:
        raise RouterParseError(f"response is not valid JSON: {exc}") from None
    try:
        path = doc["paths"][0]
        distance = float(path["distance"])
        time_ms = float(path["time"])
        coords = path.get("points", {}).get("coordinates", [])
        geometry = tuple((float(lat), float(lon)) for lon, lat in coords)
    except (KeyError, IndexError, TypeError, ValueError) as exc:
        raise RouterParseError(f"unexpected response shape: {exc}") from None
    return ExternalRoute(distance_m=distance, time_sec=time_ms / 1000.0, geometry=geometry)
