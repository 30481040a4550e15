"""HTTP facade over routing, prediction, analytics, and the simulator.

Every endpoint is a thin pass-through to the owning module; the service
adds validation, stable error codes, and locking around the mutable trip
table.  Trip state is in-memory only and does not survive a restart.

Error bodies always carry a stable code:
BAD_COORDINATE, BAD_REQUEST, NO_ROUTE, MODEL_NOT_LOADED, EMPTY_BIN,
NO_SCENARIO, NOT_FOUND, INTERNAL.
"""

from __future__ import annotations

import json
import logging
import threading
from dataclasses import dataclass, field as dc_field
from typing import Any, Optional

from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse, Response
from starlette.exceptions import HTTPException as StarletteHTTPException

from . import ingest, ml, realtime, routing, spatiotemporal
from .ingest import BBox, ConfigError

log = logging.getLogger(__name__)


@dataclass
class ServiceConfig:
    graph_path: str
    host: str = "127.0.0.1"
    port: int = 8000
    duration_model_path: Optional[str] = None
    data_path: Optional[str] = None  # cleaned trips CSV for analytics
    scenario_path: Optional[str] = None
    threshold: float = realtime.DEFAULT_THRESHOLD
    grid_rows: int = 40
    grid_cols: int = 40
    bbox: BBox = ingest.NYC_BBOX
    min_support: int = spatiotemporal.DEFAULT_MIN_SUPPORT
    tz: str = ingest.DEFAULT_TZ


_CONFIG_KEYS = {
    "graph_path",
    "host",
    "port",
    "duration_model_path",
    "data_path",
    "scenario_path",
    "threshold",
    "grid_rows",
    "grid_cols",
    "bbox",
    "min_support",
    "tz",
}


def load_service_config(path: str) -> ServiceConfig:
    """Read a .toml or .json config file into a ServiceConfig."""
    if path.endswith(".toml"):
        try:
            import tomllib
        except ModuleNotFoundError:
            import tomli as tomllib
        with open(path, "rb") as f:
            data = tomllib.load(f)
    else:
        with open(path, "r", encoding="utf-8") as f:
            data = json.load(f)
    unknown = set(data) - _CONFIG_KEYS
    if unknown:
        raise ConfigError(f"unknown config keys: {sorted(unknown)}")
    if "graph_path" not in data:
        raise ConfigError("config needs graph_path")
    if "bbox" in data:
        b = data["bbox"]
        data["bbox"] = BBox(float(b["lat_min"]), float(b["lat_max"]), float(b["lon_min"]), float(b["lon_max"]))
    return ServiceConfig(**data)


@dataclass
class ServiceState:
    graph: routing.RoadGraph
    engine: realtime.SimulationEngine
    grid: spatiotemporal.GridSpec
    threshold: float
    tz: str
    min_support: int
    duration_model: Optional[ml.LinRegModel] = None
    temporal: Optional[spatiotemporal.TemporalAggregate] = None
    cells_by_bin: Optional[dict] = None
    lock: threading.Lock = dc_field(default_factory=threading.Lock)
    _trip_counter: int = 0

    def next_trip_id(self) -> str:
        self._trip_counter += 1
        return f"t{self._trip_counter}"


def build_state(cfg: ServiceConfig) -> ServiceState:
    """Load every artifact referenced by the config; fail fast otherwise."""
    with open(cfg.graph_path, "rb") as f:
        graph = routing.load_graph(f.read())
    engine = realtime.SimulationEngine(graph, scenario=None, threshold=cfg.threshold)
    state = ServiceState(
        graph=graph,
        engine=engine,
        grid=spatiotemporal.GridSpec(bbox=cfg.bbox, rows=cfg.grid_rows, cols=cfg.grid_cols),
        threshold=cfg.threshold,
        tz=cfg.tz,
        min_support=cfg.min_support,
    )
    if cfg.duration_model_path:
        with open(cfg.duration_model_path, "rb") as f:
            model = ml.load_model(f.read())
        if not isinstance(model, ml.LinRegModel):
            raise ConfigError(f"{cfg.duration_model_path} is not a regression model")
        state.duration_model = model
    if cfg.data_path:
        with open(cfg.data_path, "rb") as f:
            records, errors = ingest.parse_trips(f.read(), tz=cfg.tz)
        if errors:
            log.warning("analytics data: %d unparsable rows ignored", len(errors))
        trips = ingest.engineer_all(records, tz=cfg.tz)
        state.temporal = spatiotemporal.aggregate_temporal(trips)
        cells = spatiotemporal.aggregate_cells_by_bin(trips, state.grid, min_support=cfg.min_support)
        by_bin: dict = {}
        for c in cells:
            by_bin.setdefault(c.bin, []).append(c)
        state.cells_by_bin = by_bin
    if cfg.scenario_path:
        state.engine.set_scenario(realtime.load_scenario(cfg.scenario_path))
    return state


def _err(status: int, code: str, message: str, details: Optional[dict] = None) -> JSONResponse:
    return JSONResponse(
        status_code=status,
        content={"code": code, "message": message, "details": details or {}},
    )


def _number(v: Any) -> Optional[float]:
    if isinstance(v, bool) or not isinstance(v, (int, float)):
        return None
    return float(v)


def _parse_coord(body: dict, name: str):
    """Returns (lat, lon) or an error response."""
    obj = body.get(name)
    if not isinstance(obj, dict):
        return _err(400, "BAD_COORDINATE", f"{name} must be an object with lat and lon", {"field": name})
    lat = _number(obj.get("lat"))
    lon = _number(obj.get("lon"))
    if lat is None or not -90.0 <= lat <= 90.0:
        return _err(
            400, "BAD_COORDINATE", f"{name}.lat must be a number in [-90, 90]",
            {"field": f"{name}.lat", "value": obj.get("lat")},
        )
    if lon is None or not -180.0 <= lon <= 180.0:
        return _err(
            400, "BAD_COORDINATE", f"{name}.lon must be a number in [-180, 180]",
            {"field": f"{name}.lon", "value": obj.get("lon")},
        )
    return (lat, lon)


async def _json_body(request: Request):
    try:
        body = await request.json()
    except Exception:
        return None
    return body if isinstance(body, dict) else None


def _geometry(state: ServiceState, nodes) -> list[list[float]]:
    return [[state.graph.nodes[n][0], state.graph.nodes[n][1]] for n in nodes]


def _route_payload(state: ServiceState, plan: routing.RoutePlan) -> dict:
    route = plan.result
    assert isinstance(route, routing.Route)
    return {
        "geometry": _geometry(state, route.nodes),
        "nodes": list(route.nodes),
        "cost_sec": route.cost_sec,
        "distance_m": route.distance_m,
        "crow_flight_m": plan.crow_flight_m,
        "snapshot_version": route.snapshot_version,
        "origin_node": plan.origin_node,
        "dest_node": plan.dest_node,
    }


def create_app(state: ServiceState) -> FastAPI:
    app = FastAPI(title="urbanflow", docs_url=None, redoc_url=None, openapi_url=None)

    @app.exception_handler(StarletteHTTPException)
    async def http_error(request: Request, exc: StarletteHTTPException):
        code = "NOT_FOUND" if exc.status_code in (404, 405) else "INTERNAL"
        return _err(exc.status_code, code, str(exc.detail))

    @app.exception_handler(Exception)
    async def unhandled_error(request: Request, exc: Exception):
        log.exception("unhandled error on %s %s", request.method, request.url.path)
        return _err(500, "INTERNAL", "internal error")

    @app.get("/api/health")
    async def health():
        return {
            "status": "ok",
            "graph_nodes": len(state.graph.nodes),
            "graph_edges": len(state.graph.edges),
            "snapshot_version": state.engine.snapshot.version,
            "model_loaded": state.duration_model is not None,
            "analytics_loaded": state.temporal is not None,
            "scenario_loaded": state.engine.scenario is not None,
        }

    @app.post("/api/route")
    async def api_route(request: Request):
        body = await _json_body(request)
        if body is None:
            return _err(400, "BAD_REQUEST", "body must be a JSON object")
        origin = _parse_coord(body, "origin")
        if isinstance(origin, JSONResponse):
            return origin
        dest = _parse_coord(body, "dest")
        if isinstance(dest, JSONResponse):
            return dest
        with state.lock:
            snapshot = state.engine.snapshot
        plan = routing.compute_route(origin, dest, state.graph, snapshot, h=state.engine.h)
        if isinstance(plan.result, routing.NoRoute):
            return _err(
                404, "NO_ROUTE", f"no route from {plan.origin_node} to {plan.dest_node}",
                {
                    "origin_node": plan.origin_node,
                    "dest_node": plan.dest_node,
                    "settled": plan.result.settled,
                    "crow_flight_m": plan.crow_flight_m,
                },
            )
        return _route_payload(state, plan)

    @app.post("/api/predict-duration")
    async def predict_duration(request: Request):
        if state.duration_model is None:
            return _err(409, "MODEL_NOT_LOADED", "no duration model configured")
        body = await _json_body(request)
        if body is None:
            return _err(400, "BAD_REQUEST", "body must be a JSON object")
        model = state.duration_model
        values = []
        for name in model.feature_names:
            if name not in body:
                return _err(400, "BAD_REQUEST", f"missing field {name!r}", {"missing": name})
            v = _number(body[name])
            if v is None:
                return _err(400, "BAD_REQUEST", f"field {name!r} must be a number", {"field": name})
            values.append(v)
        stats = model.meta.get("norm_stats")
        if stats:
            vec = [
                (v - m) / s
                for v, m, s in zip(values, stats["means"], stats["stds"])
            ]
        else:
            vec = values
        return {"duration_min": ml.linreg_predict(model, vec)}

    @app.get("/api/congestion")
    async def congestion(request: Request):
        if state.cells_by_bin is None:
            return _err(409, "MODEL_NOT_LOADED", "analytics dataset not loaded")
        params = request.query_params
        try:
            day = int(params.get("day", ""))
            hour = int(params.get("hour", ""))
        except ValueError:
            return _err(400, "BAD_REQUEST", "day and hour must be integers")
        if not 0 <= day <= 6:
            return _err(400, "BAD_REQUEST", "day must be in [0, 6]", {"day": day})
        if not 0 <= hour <= 23:
            return _err(400, "BAD_REQUEST", "hour must be in [0, 23]", {"hour": hour})
        cells = state.cells_by_bin.get(spatiotemporal.TimeBin(day, hour))
        if not cells:
            return _err(404, "EMPTY_BIN", f"no congestion cells for day={day} hour={hour}")
        heatmap = spatiotemporal.build_heatmap(cells, state.grid)
        payload = spatiotemporal.export_heatmap(heatmap, "geojson")
        return Response(content=payload, media_type="application/geo+json")

    @app.get("/api/stats/temporal")
    async def stats_temporal():
        if state.temporal is None:
            return _err(409, "MODEL_NOT_LOADED", "analytics dataset not loaded")
        rows = []
        for day in range(7):
            for hour in range(24):
                stat = state.temporal.bins.get(spatiotemporal.TimeBin(day, hour))
                rows.append(
                    {
                        "day": day,
                        "hour": hour,
                        "count": stat.count if stat else 0,
                        "index": stat.index if stat else None,
                    }
                )
        return {"bins": rows}

    @app.post("/api/trips")
    async def create_trip(request: Request):
        body = await _json_body(request)
        if body is None:
            return _err(400, "BAD_REQUEST", "body must be a JSON object")
        endpoints = []
        for name in ("origin", "dest"):
            raw = body.get(name)
            if isinstance(raw, str):
                if raw not in state.graph.nodes:
                    return _err(400, "BAD_REQUEST", f"unknown node {raw!r}", {"field": name})
                endpoints.append(raw)
            else:
                coord = _parse_coord(body, name)
                if isinstance(coord, JSONResponse):
                    return coord
                endpoints.append(coord)
        with state.lock:
            trip_id = state.next_trip_id()
            result = state.engine.add_trip(trip_id, endpoints[0], endpoints[1])
            if isinstance(result, routing.NoRoute):
                state._trip_counter -= 1  # id not consumed
                return _err(
                    404, "NO_ROUTE", f"no route from {result.src} to {result.dst}",
                    {"origin_node": result.src, "dest_node": result.dst, "settled": result.settled},
                )
            trip = result
            return {
                "trip_id": trip_id,
                "route": {
                    "geometry": _geometry(state, trip.route.nodes),
                    "nodes": list(trip.route.nodes),
                    "cost_sec": trip.route.cost_sec,
                    "distance_m": trip.route.distance_m,
                    "snapshot_version": trip.route.snapshot_version,
                },
                "predicted_eta": trip.predicted_eta,
            }

    @app.get("/api/trips/{trip_id}")
    async def get_trip(trip_id: str):
        with state.lock:
            trip = state.engine.trips.get(trip_id)
            if trip is None:
                return _err(404, "NOT_FOUND", f"unknown trip {trip_id!r}")
            snapshot = state.engine.snapshot
            report = trip.last_report
            return {
                "trip_id": trip.trip_id,
                "status": trip.status,
                "position_node": trip.position_node,
                "destination": trip.destination,
                "route": {
                    "geometry": _geometry(state, trip.route.nodes),
                    "nodes": list(trip.route.nodes),
                    "cost_sec": trip.route.cost_sec,
                    "snapshot_version": trip.route.snapshot_version,
                },
                "predicted_eta": trip.predicted_eta,
                "predicted_remaining": trip.predicted_remaining,
                "live_eta": realtime.live_eta(trip, snapshot),
                "realized_sec": trip.realized_sec,
                "reroutes": trip.reroute_count,
                "started_at": trip.started_at,
                "snapshot_version": snapshot.version,
                "last_deviation": None
                if report is None
                else {
                    "predicted_eta": report.predicted_eta,
                    "live_eta": report.live_eta,
                    "ratio": report.ratio if report.ratio != float("inf") else None,
                    "threshold": report.threshold,
                    "triggered": report.triggered,
                },
            }

    @app.post("/api/sim/start")
    async def sim_start(request: Request):
        body = await _json_body(request)
        if body is None:
            return _err(400, "BAD_REQUEST", "body must be a JSON object")
        try:
            if "path" in body:
                scenario = realtime.load_scenario(body["path"])
            else:
                scenario = realtime.scenario_from_dict(body)
        except (ValueError, OSError) as exc:
            return _err(400, "BAD_REQUEST", f"bad scenario: {exc}")
        with state.lock:
            state.engine.set_scenario(scenario)
            return {
                "ok": True,
                "poll_interval": scenario.poll_interval,
                "events": len(scenario.events),
                "snapshot_version": state.engine.snapshot.version,
            }

    @app.post("/api/sim/tick")
    async def sim_tick():
        with state.lock:
            if state.engine.scenario is None:
                return _err(409, "NO_SCENARIO", "load a scenario with /api/sim/start first")
            return state.engine.tick()

    return app


def create_app_from_config(path: str) -> FastAPI:
    return create_app(build_state(load_service_config(path)))
