"""Command-line entry points for the batch pipeline and the server.

Subcommands: ingest, train duration, train congestion, heatmap,
analyze temporal, route, simulate, serve.  Every command is
deterministic given its flags and seed.  Exit codes: 0 success,
1 runtime failure, 2 usage or config error.
"""

from __future__ import annotations

import argparse
import json
import sys
from io import StringIO
from typing import Optional, Sequence

import numpy as np

from . import graphgen  # noqa: F401  (re-exported for scripting convenience)
from . import ingest, ml, realtime, routing, spatiotemporal
from .ingest import BBox, ConfigError

EXIT_OK = 0
EXIT_RUNTIME = 1
EXIT_USAGE = 2


class CliError(Exception):
    """Fatal problem with flags, config, or referenced files (exit 2)."""


def _read_bytes(path: str) -> bytes:
    try:
        with open(path, "rb") as f:
            return f.read()
    except OSError as exc:
        raise CliError(f"cannot read {path}: {exc.strerror or exc}") from exc


def _write_bytes(path: str, data: bytes) -> None:
    try:
        with open(path, "wb") as f:
            f.write(data)
    except OSError as exc:
        raise CliError(f"cannot write {path}: {exc.strerror or exc}") from exc


def _write_text(path: str, text: str) -> None:
    _write_bytes(path, text.encode("utf-8"))


def _json_dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2) + "\n"


def _parse_bbox(text: str) -> BBox:
    parts = text.split(",")
    if len(parts) != 4:
        raise CliError("--bbox wants lat_min,lat_max,lon_min,lon_max")
    try:
        a, b, c, d = (float(p) for p in parts)
    except ValueError as exc:
        raise CliError(f"--bbox: {exc}") from exc
    try:
        return BBox(a, b, c, d)
    except ConfigError as exc:
        raise CliError(str(exc)) from exc


def _parse_grid(text: str) -> tuple[int, int]:
    try:
        rows, cols = text.lower().split("x")
        r, c = int(rows), int(cols)
    except ValueError as exc:
        raise CliError("--grid wants ROWSxCOLS, e.g. 40x40") from exc
    if r < 1 or c < 1:
        raise CliError("--grid dimensions must be positive")
    return r, c


def _parse_latlon(text: str, flag: str) -> tuple[float, float]:
    parts = text.split(",")
    if len(parts) != 2:
        raise CliError(f"{flag} wants lat,lon")
    try:
        lat, lon = float(parts[0]), float(parts[1])
    except ValueError as exc:
        raise CliError(f"{flag}: {exc}") from exc
    if not (-90.0 <= lat <= 90.0 and -180.0 <= lon <= 180.0):
        raise CliError(f"{flag}: {lat},{lon} out of range")
    return lat, lon


def _load_clean_trips(path: str, tz: str) -> list[ingest.EngineeredTrip]:
    records, errors = ingest.parse_trips(_read_bytes(path), tz=tz)
    if errors:
        print(f"warning: {len(errors)} unparsable rows skipped", file=sys.stderr)
    if not records:
        raise CliError(f"{path} holds no usable trips")
    return ingest.engineer_all(records, tz=tz)


def _load_graph_file(path: str) -> routing.RoadGraph:
    try:
        return routing.load_graph(_read_bytes(path))
    except routing.GraphFormatError as exc:
        raise CliError(f"{path}: {exc}") from exc


# ---------------------------------------------------------------- ingest


def cmd_ingest(args) -> int:
    try:
        cfg = ingest.CleanConfig(
            bbox=_parse_bbox(args.bbox) if args.bbox else ingest.NYC_BBOX,
            max_speed_mph=args.max_speed_mph,
            min_duration_s=args.min_duration_s,
            max_duration_s=args.max_duration_s,
            max_distance_mi=args.max_distance_mi,
        )
    except ConfigError as exc:
        raise CliError(str(exc)) from exc
    records, errors = ingest.parse_trips(_read_bytes(args.input), tz=args.tz)
    kept, report = ingest.clean_trips(records, cfg)

    buf = StringIO()
    ingest.write_trips_csv(kept, buf, tz=args.tz)
    _write_text(args.out, buf.getvalue())

    payload = {
        "rows_in": len(records) + len(errors),
        "parse_errors": len(errors),
        "rows_cleaned": report.rows_in,
        "rows_out": report.rows_out,
        "dropped_by_rule": report.dropped_by_rule,
        "imputed_values": report.imputed_values,
    }
    if args.report:
        _write_text(args.report, _json_dumps(payload))
    print(
        f"ingest: {payload['rows_in']} rows in, {payload['rows_out']} kept, "
        f"{payload['parse_errors']} unparsable, dropped {report.dropped_by_rule}"
    )
    return EXIT_OK


# ---------------------------------------------------------------- train


def cmd_train_duration(args) -> int:
    trips = _load_clean_trips(args.data, args.tz)
    if len(trips) < 3:
        raise CliError("need at least three trips to fit and evaluate")
    parts = ingest.split(trips, args.split, args.seed)
    train, test = parts.train, parts.test
    if len(train) < 2:
        raise CliError("train split has fewer than two trips; raise --split")

    features = list(ingest.DURATION_FEATURES)
    try:
        stats = ingest.fit_normalizer(train, features)
    except ingest.ZeroVarianceError as exc:
        raise CliError(f"feature {exc} has zero variance in the train split") from exc
    X_train = ingest.normalize_matrix(train, stats)
    y_train = np.array([t.duration_sec / 60.0 for t in train])
    model = ml.linreg_fit(X_train, y_train, feature_names=features)

    eval_set, eval_name = (test, "test") if test else (train, "train")
    X_eval = ingest.normalize_matrix(eval_set, stats)
    y_eval = np.array([t.duration_sec / 60.0 for t in eval_set])
    pred = ml.linreg_predict(model, X_eval)
    metrics = ml.evaluate(y_eval, pred)

    model.meta.update(
        {
            "target": "duration_min",
            "norm_stats": {
                "feature_names": list(stats.feature_names),
                "means": list(stats.means),
                "stds": list(stats.stds),
            },
            "seed": args.seed,
            "split": args.split,
            "trained_rows": len(train),
            "metrics": {"mae": metrics.mae, "rmse": metrics.rmse, "m": metrics.m, "set": eval_name},
        }
    )
    _write_bytes(args.out, ml.save_model(model))
    if args.metrics:
        _write_text(
            args.metrics,
            _json_dumps(
                {
                    "mae": metrics.mae,
                    "rmse": metrics.rmse,
                    "m": metrics.m,
                    "set": eval_name,
                    "features": features,
                    "unit": "minutes",
                }
            ),
        )
    print(
        f"duration model: rmse {metrics.rmse:.3f} min, mae {metrics.mae:.3f} min "
        f"on {metrics.m} {eval_name} trips ({len(train)} trained)"
    )
    return EXIT_OK


def _elbow_table(pts: np.ndarray, k_max: int, seed: int, restarts: int = 9) -> list[tuple[int, ml.KMeansModel]]:
    """Best K-Means per k for k in [1, k_max].

    Each k tries `restarts` seeded inits plus a warm start built from the
    best (k-1) centroids and the point farthest from them, so the
    inertia column is nonincreasing in k.
    """
    table: list[tuple[int, ml.KMeansModel]] = []
    prev_best: Optional[ml.KMeansModel] = None
    for k in range(1, k_max + 1):
        candidates = [ml.kmeans_fit(pts, k, seed=seed + i) for i in range(restarts)]
        if prev_best is not None:
            d2 = ((pts[:, None, :] - prev_best.centroids[None, :, :]) ** 2).sum(axis=2)
            far = pts[int(np.argmax(d2.min(axis=1)))]
            warm = np.vstack([prev_best.centroids, far[None, :]])
            candidates.append(ml.kmeans_fit(pts, k, seed=seed, init=warm))
        best = min(candidates, key=lambda m: m.inertia)
        table.append((k, best))
        prev_best = best
    return table


def cmd_train_congestion(args) -> int:
    if not 1 <= args.k <= 10:
        raise CliError("--k must be between 1 and 10")
    trips = _load_clean_trips(args.data, args.tz)
    rows, cols = _parse_grid(args.grid)
    grid = spatiotemporal.GridSpec(
        bbox=_parse_bbox(args.bbox) if args.bbox else ingest.NYC_BBOX, rows=rows, cols=cols
    )
    cells = spatiotemporal.aggregate_cells_by_bin(trips, grid, min_support=args.min_support)
    if not cells:
        raise CliError("no grid cell reached min support; lower --min-support")

    pts = ml.regime_features(cells)
    distinct = len(np.unique(pts, axis=0))
    if args.k > distinct:
        raise CliError(f"--k {args.k} exceeds the {distinct} distinct feature rows")

    means = pts.mean(axis=0)
    stds = np.where(pts.std(axis=0) == 0.0, 1.0, pts.std(axis=0))
    feats = (pts - means) / stds
    k_max = min(10, distinct) if args.elbow else args.k
    table = _elbow_table(feats, max(k_max, args.k), args.seed)
    regimes = ml.regimes_from_model(cells, table[args.k - 1][1], means, stds, feats=feats)
    model = regimes.model
    model.meta.update(
        {
            "kind": "congestion_regimes",
            "feature_means": list(regimes.feature_means),
            "feature_stds": list(regimes.feature_stds),
            "cells": len(cells),
            "summaries": [
                {
                    "label": s.label,
                    "size": s.size,
                    "mean_index": s.mean_index,
                    "dominant_hours": list(s.dominant_hours),
                }
                for s in regimes.summaries
            ],
        }
    )
    _write_bytes(args.out, ml.save_model(model))

    if args.elbow:
        lines = ["k,inertia,iterations"]
        for k, m in table[:k_max]:
            lines.append(f"{k},{m.inertia!r},{m.iterations}")
        _write_text(args.elbow, "\n".join(lines) + "\n")

    sizes = [s.size for s in regimes.summaries]
    print(
        f"congestion regimes: k={args.k} over {len(cells)} cells, "
        f"inertia {model.inertia:.4f}, sizes {sizes}"
    )
    return EXIT_OK


# ---------------------------------------------------------------- analytics


def cmd_heatmap(args) -> int:
    trips = _load_clean_trips(args.data, args.tz)
    rows, cols = _parse_grid(args.grid)
    grid = spatiotemporal.GridSpec(
        bbox=_parse_bbox(args.bbox) if args.bbox else ingest.NYC_BBOX, rows=rows, cols=cols
    )
    time_bin = None
    if (args.day is None) != (args.hour is None):
        raise CliError("--day and --hour go together")
    if args.day is not None:
        if not (0 <= args.day <= 6 and 0 <= args.hour <= 23):
            raise CliError("--day in [0,6], --hour in [0,23]")
        time_bin = spatiotemporal.TimeBin(args.day, args.hour)

    if args.kind == "index":
        cells, tally = spatiotemporal.aggregate_spatial(
            trips, grid, time_bin=time_bin, min_support=args.min_support
        )
        if not cells:
            raise CliError("no cell reached min support for that selection")
        heatmap = spatiotemporal.build_heatmap(cells, grid)
        note = f"{tally.assigned} trips assigned, {len(cells)} cells"
    else:
        pool = trips if time_bin is None else [
            t for t in trips if (t.day_of_week, t.hour_of_day) == time_bin
        ]
        if not pool:
            raise CliError("no trips in that time bin")
        points = [(t.pickup_lat, t.pickup_lon) for t in pool]
        heatmap = spatiotemporal.kde(points, args.bandwidth, grid)
        note = f"kde over {len(points)} pickups, bandwidth {args.bandwidth} m"

    fmt = args.format
    if fmt == "auto":
        fmt = "geojson" if args.out.endswith(".geojson") or args.out.endswith(".json") else "grid"
    _write_bytes(args.out, spatiotemporal.export_heatmap(heatmap, fmt))
    print(f"heatmap: {note} -> {args.out} ({fmt})")
    return EXIT_OK


def cmd_analyze_temporal(args) -> int:
    trips = _load_clean_trips(args.data, args.tz)
    agg = spatiotemporal.aggregate_temporal(trips)
    peaks = set(spatiotemporal.peak_periods(agg, args.top))
    lines = ["day,hour,count,index,peak"]
    for b in sorted(agg.bins):
        stat = agg.bins[b]
        idx = "" if stat.index is None else repr(stat.index)
        lines.append(f"{b.day_of_week},{b.hour},{stat.count},{idx},{1 if b in peaks else 0}")
    _write_text(args.out, "\n".join(lines) + "\n")
    print(
        f"temporal: {agg.total_trips} trips over {len(agg.bins)} bins, "
        f"{len(peaks)} peak bins (top {args.top:g}) -> {args.out}"
    )
    return EXIT_OK


# ---------------------------------------------------------------- routing


def _snapshot_at(scenario_path: Optional[str], at: float):
    snapshot = routing.free_flow_snapshot()
    if scenario_path is None:
        return snapshot
    try:
        scenario = realtime.load_scenario(scenario_path)
    except OSError as exc:
        raise CliError(f"cannot read {scenario_path}: {exc.strerror or exc}") from exc
    except ValueError as exc:
        raise CliError(f"{scenario_path}: {exc}") from exc
    due = [
        realtime.TrafficUpdate(e.edge, e.factor, timestamp=e.t)
        for e in scenario.events
        if e.t <= at
    ]
    snapshot, rejected = realtime.apply_updates(snapshot, due)
    if rejected:
        print(f"warning: {rejected} out-of-range events ignored", file=sys.stderr)
    return snapshot


def cmd_route(args) -> int:
    graph = _load_graph_file(args.graph)
    origin = _parse_latlon(getattr(args, "from"), "--from")
    dest = _parse_latlon(args.to, "--to")
    snapshot = _snapshot_at(args.scenario, args.at)
    h = routing.HeuristicSpec.zero() if args.algorithm == "dijkstra" else None
    plan = routing.compute_route(origin, dest, graph, snapshot, h=h)
    if isinstance(plan.result, routing.NoRoute):
        print(
            f"no route: {plan.origin_node} -> {plan.dest_node} "
            f"({plan.result.settled} nodes reachable, snapshot v{plan.result.snapshot_version})"
        )
        return EXIT_OK
    r = plan.result
    print(
        f"route: {plan.origin_node} -> {plan.dest_node}  "
        f"{r.cost_sec:.1f} s  {r.distance_m:.0f} m over {len(r.edges)} edges "
        f"(crow flight {plan.crow_flight_m:.0f} m, snapshot v{r.snapshot_version})"
    )
    print(" -> ".join(r.nodes))
    return EXIT_OK


def _load_sim_trips(path: str) -> list[dict]:
    try:
        data = json.loads(_read_bytes(path).decode("utf-8"))
    except (UnicodeDecodeError, json.JSONDecodeError) as exc:
        raise CliError(f"{path}: {exc}") from exc
    if isinstance(data, dict):
        data = data.get("trips")
    if not isinstance(data, list) or not data:
        raise CliError(f"{path}: expected a non-empty list of trips")
    out = []
    for i, item in enumerate(data):
        if not isinstance(item, dict) or "from" not in item or "to" not in item:
            raise CliError(f"{path}: trip {i} needs 'from' and 'to'")
        out.append(
            {
                "id": str(item.get("id", f"t{i + 1}")),
                "from": item["from"],
                "to": item["to"],
                "depart": float(item.get("depart", 0.0)),
            }
        )
    return out


def _endpoint(graph: routing.RoadGraph, value, label: str):
    if isinstance(value, str):
        if value not in graph.nodes:
            raise CliError(f"{label}: unknown node {value!r}")
        return value
    if isinstance(value, (list, tuple)) and len(value) == 2:
        try:
            lat, lon = float(value[0]), float(value[1])
        except (TypeError, ValueError) as exc:
            raise CliError(f"{label}: bad coordinate {value!r}") from exc
        return (lat, lon)
    raise CliError(f"{label}: want a node id or [lat, lon]")


def cmd_simulate(args) -> int:
    graph = _load_graph_file(args.graph)
    try:
        scenario = realtime.load_scenario(args.scenario)
    except OSError as exc:
        raise CliError(f"cannot read {args.scenario}: {exc.strerror or exc}") from exc
    except ValueError as exc:
        raise CliError(f"{args.scenario}: {exc}") from exc
    trip_specs = _load_sim_trips(args.trips)
    requests = [
        {
            "id": t["id"],
            "from": _endpoint(graph, t["from"], f"trip {t['id']} from"),
            "to": _endpoint(graph, t["to"], f"trip {t['id']} to"),
            "depart": t["depart"],
        }
        for t in trip_specs
    ]

    runs = {}
    for label, reroute in (("reroute", True), ("baseline", False)):
        runs[label] = realtime.run_scenario(
            scenario, graph, requests, threshold=args.threshold, reroute=reroute
        )

    improvements = {}
    for row in runs["reroute"]["trips"]:
        base = next(b for b in runs["baseline"]["trips"] if b["id"] == row["id"])
        if row["arrived"] and base["arrived"] and base["realized_sec"] > 0:
            improvements[row["id"]] = 1.0 - row["realized_sec"] / base["realized_sec"]

    log = {
        "scenario": {
            "seed": scenario.seed,
            "poll_interval": scenario.poll_interval,
            "events": len(scenario.events),
        },
        "threshold": args.threshold,
        "reroute": runs["reroute"],
        "baseline": runs["baseline"],
        "improvement_by_trip": improvements,
    }
    _write_text(args.out, _json_dumps(log))

    done = sum(1 for r in runs["reroute"]["trips"] if r["arrived"])
    mean_gain = (sum(improvements.values()) / len(improvements)) if improvements else 0.0
    print(
        f"simulate: {len(requests)} trips, {done} arrived with rerouting, "
        f"mean improvement {100 * mean_gain:.1f}% -> {args.out}"
    )
    return EXIT_OK


def cmd_serve(args) -> int:
    from . import service

    try:
        cfg = service.load_service_config(args.config)
        state = service.build_state(cfg)
    except (OSError, ConfigError, ValueError, ml.ModelFormatError, routing.GraphFormatError) as exc:
        raise CliError(f"cannot start service: {exc}") from exc
    app = service.create_app(state)
    print(f"serving on http://{cfg.host}:{cfg.port}")
    import uvicorn

    uvicorn.run(app, host=cfg.host, port=cfg.port, log_level="warning")
    return EXIT_OK


# ---------------------------------------------------------------- parser


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="urbanflow", description=__doc__)
    sub = p.add_subparsers(dest="command", required=True)

    def common_data(sp):
        sp.add_argument("--data", required=True, help="cleaned trips CSV")
        sp.add_argument("--tz", default=ingest.DEFAULT_TZ)

    sp = sub.add_parser("ingest", help="parse, validate, and clean a raw trips CSV")
    sp.add_argument("input", help="raw trips CSV")
    sp.add_argument("--out", required=True, help="cleaned CSV path")
    sp.add_argument("--report", help="JSON cleaning report path")
    sp.add_argument("--tz", default=ingest.DEFAULT_TZ)
    sp.add_argument("--bbox", help="lat_min,lat_max,lon_min,lon_max")
    sp.add_argument("--max-speed-mph", type=float, default=60.0)
    sp.add_argument("--min-duration-s", type=float, default=60.0)
    sp.add_argument("--max-duration-s", type=float, default=14400.0)
    sp.add_argument("--max-distance-mi", type=float, default=100.0)
    sp.set_defaults(func=cmd_ingest)

    tr = sub.add_parser("train", help="fit a model").add_subparsers(dest="model", required=True)

    sp = tr.add_parser("duration", help="OLS trip-duration model")
    common_data(sp)
    sp.add_argument("--split", type=float, default=0.8)
    sp.add_argument("--seed", type=int, default=1234)
    sp.add_argument("--out", required=True, help="model file path")
    sp.add_argument("--metrics", help="JSON metrics path")
    sp.set_defaults(func=cmd_train_duration)

    sp = tr.add_parser("congestion", help="K-Means congestion regimes")
    common_data(sp)
    sp.add_argument("--k", type=int, default=4)
    sp.add_argument("--seed", type=int, default=1234)
    sp.add_argument("--out", required=True, help="model file path")
    sp.add_argument("--elbow", help="inertia-vs-k CSV path")
    sp.add_argument("--grid", default="40x40")
    sp.add_argument("--bbox", help="lat_min,lat_max,lon_min,lon_max")
    sp.add_argument("--min-support", type=int, default=spatiotemporal.DEFAULT_MIN_SUPPORT)
    sp.set_defaults(func=cmd_train_congestion)

    sp = sub.add_parser("heatmap", help="export a spatial heatmap")
    common_data(sp)
    sp.add_argument("--day", type=int)
    sp.add_argument("--hour", type=int)
    sp.add_argument("--grid", default="40x40")
    sp.add_argument("--bbox", help="lat_min,lat_max,lon_min,lon_max")
    sp.add_argument("--kind", choices=("index", "kde"), default="index")
    sp.add_argument("--bandwidth", type=float, default=spatiotemporal.DEFAULT_BANDWIDTH_M)
    sp.add_argument("--min-support", type=int, default=spatiotemporal.DEFAULT_MIN_SUPPORT)
    sp.add_argument("--format", choices=("auto", "geojson", "grid"), default="auto")
    sp.add_argument("--out", required=True)
    sp.set_defaults(func=cmd_heatmap)

    an = sub.add_parser("analyze", help="aggregate statistics").add_subparsers(
        dest="what", required=True
    )
    sp = an.add_parser("temporal", help="168-bin day/hour table")
    common_data(sp)
    sp.add_argument("--top", type=float, default=0.15, help="peak quantile")
    sp.add_argument("--out", required=True, help="CSV path")
    sp.set_defaults(func=cmd_analyze_temporal)

    sp = sub.add_parser("route", help="shortest travel-time route")
    sp.add_argument("--graph", required=True)
    sp.add_argument("--from", required=True, help="lat,lon")
    sp.add_argument("--to", required=True, help="lat,lon")
    sp.add_argument("--scenario", help="apply scenario events up to --at")
    sp.add_argument("--at", type=float, default=0.0, help="scenario clock seconds")
    sp.add_argument("--algorithm", choices=("astar", "dijkstra"), default="astar")
    sp.set_defaults(func=cmd_route)

    sp = sub.add_parser("simulate", help="paired reroute-on/off scenario run")
    sp.add_argument("--graph", required=True)
    sp.add_argument("--scenario", required=True)
    sp.add_argument("--trips", required=True, help="JSON list of {id, from, to, depart}")
    sp.add_argument("--threshold", type=float, default=realtime.DEFAULT_THRESHOLD)
    sp.add_argument("--out", required=True, help="JSON log path")
    sp.set_defaults(func=cmd_simulate)

    sp = sub.add_parser("serve", help="run the HTTP service")
    sp.add_argument("--config", required=True, help="service config (.toml or .json)")
    sp.set_defaults(func=cmd_serve)

    return p


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (ValueError, ml.ModelFormatError, ingest.ZeroVarianceError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_RUNTIME
    except KeyboardInterrupt:
        return EXIT_RUNTIME


if __name__ == "__main__":
    sys.exit(main())
