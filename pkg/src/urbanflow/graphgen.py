"""Synthetic road-network generators.

All generators emit the plain-text graph format so the parser is
exercised on every use.  Edge lengths are always at least the great
circle between the endpoints (real roads cannot be shorter), which keeps
the travel-time heuristic admissible on generated networks.
"""

from __future__ import annotations

import math
import random

from .routing import haversine

# meters per degree of latitude, slightly above the true arc length so
# nominal grid spacing stays >= great-circle distance
_M_PER_DEG_LAT = 111_320.0


def grid_graph(
    rows: int,
    cols: int,
    spacing_m: float = 100.0,
    lat0: float = 40.700,
    lon0: float = -74.020,
    speed_mps: float = 10.0,
    two_way: bool = True,
) -> str:
    """Uniform rows x cols lattice with 4-neighbor roads."""
    if rows < 1 or cols < 1:
        raise ValueError("grid needs at least one row and column")
    dlat = spacing_m / _M_PER_DEG_LAT
    dlon = spacing_m / (_M_PER_DEG_LAT * math.cos(math.radians(lat0)))
    lines = [f"# grid {rows}x{cols}, spacing {spacing_m} m"]
    for r in range(rows):
        for c in range(cols):
            lines.append(f"node n{r}_{c} {lat0 + r * dlat:.8f} {lon0 + c * dlon:.8f}")
    oneway = "0" if two_way else "1"
    eid = 0
    for r in range(rows):
        for c in range(cols):
            if c + 1 < cols:
                lines.append(f"edge e{eid} n{r}_{c} n{r}_{c + 1} {spacing_m} {speed_mps} {oneway}")
                eid += 1
            if r + 1 < rows:
                lines.append(f"edge e{eid} n{r}_{c} n{r + 1}_{c} {spacing_m} {speed_mps} {oneway}")
                eid += 1
    return "\n".join(lines) + "\n"


def random_graph(
    n_nodes: int,
    seed: int,
    lat0: float = 40.70,
    lon0: float = -74.00,
    extent_deg: float = 0.08,
    neighbors: int = 4,
    two_way_prob: float = 0.7,
    speed_range: tuple[float, float] = (5.0, 25.0),
    detour_range: tuple[float, float] = (1.02, 1.45),
) -> str:
    """Random planar-ish network: nodes uniform in a box, k-nearest links.

    Node ids are zero-padded so lexicographic order matches creation
    order, which keeps tie-breaking behavior easy to reason about.
    """
    if n_nodes < 2:
        raise ValueError("need at least two nodes")
    rng = random.Random(seed)
    width = len(str(n_nodes - 1))
    coords = []
    lines = [f"# random graph n={n_nodes} seed={seed}"]
    for i in range(n_nodes):
        lat = lat0 + rng.random() * extent_deg
        lon = lon0 + rng.random() * extent_deg
        coords.append((lat, lon))
        lines.append(f"node n{i:0{width}d} {lat:.8f} {lon:.8f}")

    seen: set[tuple[int, int]] = set()
    eid = 0
    for i in range(n_nodes):
        dists = sorted(
            (haversine(coords[i], coords[j]), j) for j in range(n_nodes) if j != i
        )
        k = min(neighbors, len(dists))
        for d, j in dists[:k]:
            key = (min(i, j), max(i, j))
            if key in seen:
                continue
            seen.add(key)
            length = max(1.0, d) * rng.uniform(*detour_range)
            speed = rng.uniform(*speed_range)
            oneway = "1" if rng.random() >= two_way_prob else "0"
            lines.append(
                f"edge e{eid:05d} n{i:0{width}d} n{j:0{width}d} "
                f"{length:.6f} {speed:.6f} {oneway}"
            )
            eid += 1
    return "\n".join(lines) + "\n"


def diamond_graph() -> str:
    """Two-route fixture: S-A-T is the fast path, S-B-T the alternative.

    Free-flow costs: S-A-T = 600 s, S-B-T = 720 s.  Slowing both S-A and
    A-T to factor 0.4 makes the alternative optimal, so this is the
    canonical rerouting test network.
    """
    return "\n".join(
        [
            "# diamond: fast S-A-T (600 s), alternative S-B-T (720 s)",
            "node S 40.70000000 -74.00000000",
            "node A 40.71000000 -74.00000000",
            "node B 40.70000000 -73.99000000",
            "node T 40.71000000 -73.99000000",
            "edge eSA S A 3000 10 0",
            "edge eAT A T 3000 10 0",
            "edge eSB S B 3600 10 0",
            "edge eBT B T 3600 10 0",
        ]
    ) + "\n"


def diamond_scenario(poll_interval: float = 30.0, seed: int = 1) -> dict:
    """Congestion event that hits the diamond's fast path mid-trip."""
    return {
        "seed": seed,
        "poll_interval": poll_interval,
        "events": [
            {"t": 150.0, "edge": "eSA", "factor": 0.4},
            {"t": 150.0, "edge": "eAT", "factor": 0.4},
        ],
    }
