"""Record API fixtures for the dashboard's offline mode and view tests.

Runs the backend in-process behind its real HTTP layer, replays the
two-route congestion scenario plus the analytics endpoints, and freezes
every response under frontend/fixtures/.  Rerun after any change to the
API payloads, then `npm run embed` to refresh the generated module.
"""

from __future__ import annotations

import json
import pathlib
import sys
import tempfile

from fastapi.testclient import TestClient

from urbanflow import cli, datasim, graphgen, service

FIXTURES = pathlib.Path(__file__).resolve().parent.parent / "fixtures"

ISLAND_GRAPH = (
    "node A 40.70 -74.00\n"
    "node B 40.71 -74.00\n"
    "node C 40.75 -73.95\n"
    "edge e A B 1000 10 1\n"
)


def dump(name: str, payload) -> None:
    path = FIXTURES / name
    path.write_text(json.dumps(payload, indent=2, sort_keys=True) + "\n")
    print(f"wrote {path.relative_to(FIXTURES.parent)}")


def build_client(tmp: pathlib.Path, *, min_support: int) -> TestClient:
    cfg = {
        "graph_path": str(tmp / "graph.txt"),
        "data_path": str(tmp / "clean.csv"),
        "grid_rows": 16,
        "grid_cols": 16,
        "min_support": min_support,
    }
    cfg_path = tmp / f"service_{min_support}.json"
    cfg_path.write_text(json.dumps(cfg))
    return TestClient(service.create_app_from_config(str(cfg_path)))


def main() -> int:
    FIXTURES.mkdir(exist_ok=True)
    with tempfile.TemporaryDirectory() as tmpdir:
        tmp = pathlib.Path(tmpdir)
        (tmp / "graph.txt").write_text(graphgen.diamond_graph())
        datasim.write_trips_csv(str(tmp / "raw.csv"), 20_000, seed=77)
        rc = cli.main(["ingest", str(tmp / "raw.csv"), "--out", str(tmp / "clean.csv")])
        if rc != 0:
            print("ingest failed", file=sys.stderr)
            return rc

        client = build_client(tmp, min_support=3)

        dump("health.json", client.get("/api/health").json())

        origin = {"lat": 40.7001, "lon": -74.0001}
        dest = {"lat": 40.7099, "lon": -73.9901}
        dump("route_ok.json", client.post("/api/route", json={"origin": origin, "dest": dest}).json())
        dump("route_same.json", client.post("/api/route", json={"origin": origin, "dest": origin}).json())

        dump("congestion.json", client.get("/api/congestion", params={"day": 2, "hour": 8}).json())
        dump("temporal.json", client.get("/api/stats/temporal").json())

        # a grid nothing can satisfy, to capture the empty-bin envelope
        sparse = build_client(tmp, min_support=10_000)
        resp = sparse.get("/api/congestion", params={"day": 2, "hour": 8})
        assert resp.status_code == 404, resp.text
        dump("congestion_empty.json", resp.json())

        # unreachable pair on a one-way island graph
        (tmp / "island.txt").write_text(ISLAND_GRAPH)
        (tmp / "island.json").write_text(json.dumps({"graph_path": str(tmp / "island.txt")}))
        island = TestClient(service.create_app_from_config(str(tmp / "island.json")))
        resp = island.post(
            "/api/route",
            json={"origin": {"lat": 40.75, "lon": -73.95}, "dest": {"lat": 40.70, "lon": -74.00}},
        )
        assert resp.status_code == 404, resp.text
        dump("route_noroute.json", resp.json())

        # full trip lifecycle through the congestion event
        start = client.post("/api/sim/start", json=graphgen.diamond_scenario()).json()
        dump("sim_start.json", start)
        created = client.post("/api/trips", json={"origin": "S", "dest": "T"}).json()
        dump("trip_create.json", created)
        trip_id = created["trip_id"]
        dump("trip_initial.json", client.get(f"/api/trips/{trip_id}").json())

        ticks = []
        arrived_for = 0
        for _ in range(60):
            entry = client.post("/api/sim/tick", json={}).json()
            trip = client.get(f"/api/trips/{trip_id}").json()
            ticks.append({"tick": entry, "trip": trip})
            if trip["status"] == "arrived":
                arrived_for += 1
                if arrived_for >= 2:
                    break
        dump("trip_ticks.json", ticks)
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
