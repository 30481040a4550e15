"""Shared fixtures: surrogate taxi data, graphs, and trained artifacts.

Heavy fixtures are session-scoped so the suite stays fast.  Set
URBANFLOW_TAXI_CSV to a real yellow-taxi monthly file to run the
end-to-end tests against it instead of the surrogate sample.
"""

from __future__ import annotations

import os

import pytest

from urbanflow import datasim, graphgen, ingest, realtime, routing

TAXI_ENV = "URBANFLOW_TAXI_CSV"


@pytest.fixture(scope="session")
def taxi_csv_path(tmp_path_factory) -> str:
    """Monthly-sample stand-in: real file if the env var points at one."""
    override = os.environ.get(TAXI_ENV)
    if override:
        if not os.path.exists(override):
            raise FileNotFoundError(f"{TAXI_ENV}={override} does not exist")
        return override
    path = tmp_path_factory.mktemp("data") / "trips.csv"
    datasim.write_trips_csv(str(path), 100_000, seed=20150105)
    return str(path)


@pytest.fixture(scope="session")
def small_csv_text() -> str:
    return datasim.generate_trips_csv(4000, seed=411)


@pytest.fixture(scope="session")
def small_trips(small_csv_text):
    """Parsed, cleaned, engineered trips from the small surrogate sample."""
    records, _ = ingest.parse_trips(small_csv_text)
    kept, _ = ingest.clean_trips(records, ingest.CleanConfig())
    return ingest.engineer_all(kept)


@pytest.fixture(scope="session")
def diamond_graph() -> routing.RoadGraph:
    return routing.load_graph(graphgen.diamond_graph())


@pytest.fixture(scope="session")
def diamond_scenario() -> realtime.Scenario:
    return realtime.scenario_from_dict(graphgen.diamond_scenario())


@pytest.fixture()
def free_flow() -> routing.TrafficSnapshot:
    return routing.free_flow_snapshot()
