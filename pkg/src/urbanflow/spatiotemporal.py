"""Time-binned and grid-binned congestion indices, KDE surfaces, exports.

The congestion index is minutes-per-mile of the trips picked up in a
cell or time bin: a unit-free proxy computable from trip data alone.
Trips with zero recorded distance still count toward bin totals but are
excluded from index means (their ratio is undefined).
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from typing import NamedTuple, Optional, Sequence

import numpy as np

from .ingest import BBox, EngineeredTrip
from .routing import EARTH_RADIUS_M

DEFAULT_MIN_SUPPORT = 10
DEFAULT_BANDWIDTH_M = 250.0

_KDE_CHUNK = 8192


class GridMismatchError(ValueError):
    pass


class TimeBin(NamedTuple):
    day_of_week: int  # Monday = 0
    hour: int


class BinStat(NamedTuple):
    count: int
    index: Optional[float]  # None when no trip in the bin has distance > 0


@dataclass(frozen=True)
class GridSpec:
    bbox: BBox
    rows: int
    cols: int

    def __post_init__(self):
        if self.rows < 1 or self.cols < 1:
            raise ValueError("grid needs at least one row and column")

    @property
    def d_lat(self) -> float:
        return (self.bbox.lat_max - self.bbox.lat_min) / self.rows

    @property
    def d_lon(self) -> float:
        return (self.bbox.lon_max - self.bbox.lon_min) / self.cols

    def cell_of(self, lat: float, lon: float) -> Optional[tuple[int, int]]:
        """Containing cell, or None outside the bbox.

        Interior edges belong to the lower-index cell; the bbox boundary
        itself is inside (closed bounds).
        """
        if not self.bbox.contains(lat, lon):
            return None
        row = math.ceil((lat - self.bbox.lat_min) / self.d_lat) - 1
        col = math.ceil((lon - self.bbox.lon_min) / self.d_lon) - 1
        row = min(max(row, 0), self.rows - 1)
        col = min(max(col, 0), self.cols - 1)
        return (row, col)

    def cell_bounds(self, row: int, col: int) -> tuple[float, float, float, float]:
        """(lat_lo, lat_hi, lon_lo, lon_hi) of one cell."""
        lat_lo = self.bbox.lat_min + row * self.d_lat
        lon_lo = self.bbox.lon_min + col * self.d_lon
        return (lat_lo, lat_lo + self.d_lat, lon_lo, lon_lo + self.d_lon)

    def cell_center(self, row: int, col: int) -> tuple[float, float]:
        lat_lo, lat_hi, lon_lo, lon_hi = self.cell_bounds(row, col)
        return ((lat_lo + lat_hi) / 2.0, (lon_lo + lon_hi) / 2.0)

    def cell_area_m2(self) -> float:
        """Flat-earth cell area at the bbox center latitude."""
        lat0 = math.radians((self.bbox.lat_min + self.bbox.lat_max) / 2.0)
        dy = EARTH_RADIUS_M * math.radians(self.d_lat)
        dx = EARTH_RADIUS_M * math.radians(self.d_lon) * math.cos(lat0)
        return dx * dy


@dataclass(frozen=True)
class CongestionCell:
    cell: tuple[int, int]
    bin: Optional[TimeBin]
    trip_count: int
    congestion_index: float  # minutes per mile


@dataclass(frozen=True)
class SpatialTally:
    assigned: int
    outside: int
    cells_below_support: int
    cells_without_index: int


@dataclass(frozen=True)
class TemporalAggregate:
    bins: dict[TimeBin, BinStat]

    @property
    def total_trips(self) -> int:
        return sum(s.count for s in self.bins.values())


@dataclass(eq=False)
class Heatmap:
    grid: GridSpec
    values: np.ndarray  # (rows, cols); NaN marks an absent cell
    kind: str  # "density" | "congestion_index"
    time_bin: Optional[TimeBin] = None

    def __eq__(self, other) -> bool:
        if not isinstance(other, Heatmap):
            return NotImplemented
        return (
            self.grid == other.grid
            and self.kind == other.kind
            and self.time_bin == other.time_bin
            and np.array_equal(self.values, other.values, equal_nan=True)
        )


def aggregate_temporal(trips: Sequence[EngineeredTrip]) -> TemporalAggregate:
    """Mean minutes-per-mile and trip count per (day, hour) bin.

    Bins that saw no trips are absent.  Counts cover every trip, so the
    per-bin counts always sum to the input size.
    """
    sums: dict[TimeBin, float] = {}
    ns: dict[TimeBin, int] = {}
    counts: dict[TimeBin, int] = {}
    for t in trips:
        b = TimeBin(t.day_of_week, t.hour_of_day)
        counts[b] = counts.get(b, 0) + 1
        if t.trip_distance > 0:
            ratio = (t.duration_sec / 60.0) / t.trip_distance
            sums[b] = sums.get(b, 0.0) + ratio
            ns[b] = ns.get(b, 0) + 1
    bins = {}
    for b, count in counts.items():
        if b in ns:
            bins[b] = BinStat(count=count, index=sums[b] / ns[b])
        else:
            bins[b] = BinStat(count=count, index=None)
    return TemporalAggregate(bins=bins)


def aggregate_spatial(
    trips: Sequence[EngineeredTrip],
    grid: GridSpec,
    time_bin: Optional[TimeBin] = None,
    min_support: int = DEFAULT_MIN_SUPPORT,
) -> tuple[list[CongestionCell], SpatialTally]:
    """Per-cell congestion index from pickup locations.

    A time_bin restricts the aggregation to trips in that (day, hour);
    trips in other bins are ignored entirely.  Cells with fewer than
    min_support trips, or with no positive-distance trip to define an
    index, are omitted and tallied.
    """
    counts: dict[tuple[int, int], int] = {}
    sums: dict[tuple[int, int], float] = {}
    ns: dict[tuple[int, int], int] = {}
    assigned = 0
    outside = 0
    for t in trips:
        if time_bin is not None and (t.day_of_week, t.hour_of_day) != tuple(time_bin):
            continue
        cell = grid.cell_of(t.pickup_lat, t.pickup_lon)
        if cell is None:
            outside += 1
            continue
        assigned += 1
        counts[cell] = counts.get(cell, 0) + 1
        if t.trip_distance > 0:
            ratio = (t.duration_sec / 60.0) / t.trip_distance
            sums[cell] = sums.get(cell, 0.0) + ratio
            ns[cell] = ns.get(cell, 0) + 1

    cells: list[CongestionCell] = []
    below = 0
    no_index = 0
    for cell in sorted(counts):
        count = counts[cell]
        if count < min_support:
            below += 1
            continue
        if cell not in ns:
            no_index += 1
            continue
        cells.append(
            CongestionCell(
                cell=cell,
                bin=time_bin,
                trip_count=count,
                congestion_index=sums[cell] / ns[cell],
            )
        )
    tally = SpatialTally(
        assigned=assigned,
        outside=outside,
        cells_below_support=below,
        cells_without_index=no_index,
    )
    return cells, tally


def aggregate_cells_by_bin(
    trips: Sequence[EngineeredTrip],
    grid: GridSpec,
    min_support: int = DEFAULT_MIN_SUPPORT,
) -> list[CongestionCell]:
    """One pass over trips producing per-(cell, time-bin) congestion cells."""
    counts: dict[tuple[tuple[int, int], TimeBin], int] = {}
    sums: dict[tuple[tuple[int, int], TimeBin], float] = {}
    ns: dict[tuple[tuple[int, int], TimeBin], int] = {}
    for t in trips:
        cell = grid.cell_of(t.pickup_lat, t.pickup_lon)
        if cell is None:
            continue
        key = (cell, TimeBin(t.day_of_week, t.hour_of_day))
        counts[key] = counts.get(key, 0) + 1
        if t.trip_distance > 0:
            ratio = (t.duration_sec / 60.0) / t.trip_distance
            sums[key] = sums.get(key, 0.0) + ratio
            ns[key] = ns.get(key, 0) + 1
    cells = []
    for key in sorted(counts, key=lambda k: (k[1], k[0])):
        if counts[key] < min_support or key not in ns:
            continue
        cell, b = key
        cells.append(
            CongestionCell(
                cell=cell,
                bin=b,
                trip_count=counts[key],
                congestion_index=sums[key] / ns[key],
            )
        )
    return cells


def _project(lat, lon, lat0: float, lon0: float) -> tuple:
    """Local equirectangular meters around (lat0, lon0)."""
    x = EARTH_RADIUS_M * np.radians(np.asarray(lon) - lon0) * math.cos(math.radians(lat0))
    y = EARTH_RADIUS_M * np.radians(np.asarray(lat) - lat0)
    return x, y


def kde(points: Sequence[tuple[float, float]], bandwidth_m: float, grid: GridSpec) -> Heatmap:
    """Gaussian kernel density over the grid's cell centers, per m^2.

    The surface is the plain kernel-sum density (no renormalization), so
    its cell-sum times cell-area approaches 1 when the bandwidth is small
    against the bbox and the points sit away from the edges.
    """
    pts = np.asarray(points, dtype=float)
    if pts.ndim != 2 or pts.shape[0] == 0 or pts.shape[1] != 2:
        raise ValueError("points must be a nonempty sequence of (lat, lon)")
    if bandwidth_m <= 0:
        raise ValueError("bandwidth must be positive")
    lat0 = (grid.bbox.lat_min + grid.bbox.lat_max) / 2.0
    lon0 = (grid.bbox.lon_min + grid.bbox.lon_max) / 2.0
    px, py = _project(pts[:, 0], pts[:, 1], lat0, lon0)

    centers_lat = np.array([grid.cell_center(r, 0)[0] for r in range(grid.rows)])
    centers_lon = np.array([grid.cell_center(0, c)[1] for c in range(grid.cols)])
    cy = EARTH_RADIUS_M * np.radians(centers_lat - lat0)  # (rows,)
    cx = EARTH_RADIUS_M * np.radians(centers_lon - lon0) * math.cos(math.radians(lat0))  # (cols,)

    m = pts.shape[0]
    h2 = bandwidth_m * bandwidth_m
    acc = np.zeros((grid.rows, grid.cols), dtype=float)
    for start in range(0, m, _KDE_CHUNK):
        sx = px[start : start + _KDE_CHUNK]
        sy = py[start : start + _KDE_CHUNK]
        dy2 = (cy[:, None] - sy[None, :]) ** 2  # (rows, chunk)
        dx2 = (cx[:, None] - sx[None, :]) ** 2  # (cols, chunk)
        # exp(-(dx2+dy2)/2h2) summed over points, built per-row to bound memory
        for r in range(grid.rows):
            acc[r] += np.exp(-(dy2[r][None, :] + dx2) / (2.0 * h2)).sum(axis=1)
    values = acc / (m * 2.0 * math.pi * h2)
    return Heatmap(grid=grid, values=values, kind="density")


def build_heatmap(cells: Sequence[CongestionCell], grid: GridSpec) -> Heatmap:
    """Congestion-index matrix; absent cells are NaN, never 0."""
    values = np.full((grid.rows, grid.cols), math.nan)
    time_bin = cells[0].bin if cells else None
    for c in cells:
        r, col = c.cell
        if not (0 <= r < grid.rows and 0 <= col < grid.cols):
            raise GridMismatchError(f"cell {c.cell} outside a {grid.rows}x{grid.cols} grid")
        if c.bin != time_bin:
            raise GridMismatchError("cells span more than one time bin")
        values[r, col] = c.congestion_index
    return Heatmap(grid=grid, values=values, kind="congestion_index", time_bin=time_bin)


def peak_periods(agg: TemporalAggregate, top_q: float) -> list[TimeBin]:
    """Bins in the top_q index quantile, best first; ties keep every bin."""
    if not 0.0 < top_q <= 1.0:
        raise ValueError("top_q must be in (0, 1]")
    present = [(b, s.index) for b, s in agg.bins.items() if s.index is not None]
    if not present:
        raise ValueError("no bins with a defined index")
    present.sort(key=lambda bi: (-bi[1], bi[0]))
    n_top = max(1, math.ceil(top_q * len(present)))
    threshold = present[n_top - 1][1]
    return [b for b, idx in present if idx >= threshold]


def export_heatmap(heatmap: Heatmap, fmt: str) -> bytes:
    """Serialize to the grid-text format or a geo-polygon collection."""
    if fmt == "grid":
        g = heatmap.grid
        lines = [
            f"{g.rows} {g.cols} {g.bbox.lat_min!r} {g.bbox.lon_min!r} {g.bbox.lat_max!r} {g.bbox.lon_max!r}"
        ]
        for r in range(g.rows):
            row = heatmap.values[r]
            lines.append(" ".join("NA" if math.isnan(v) else repr(float(v)) for v in row))
        return ("\n".join(lines) + "\n").encode("utf-8")
    if fmt == "geojson":
        g = heatmap.grid
        features = []
        for r in range(g.rows):
            for c in range(g.cols):
                v = heatmap.values[r, c]
                if math.isnan(v):
                    continue
                lat_lo, lat_hi, lon_lo, lon_hi = g.cell_bounds(r, c)
                ring = [
                    [lon_lo, lat_lo],
                    [lon_hi, lat_lo],
                    [lon_hi, lat_hi],
                    [lon_lo, lat_hi],
                    [lon_lo, lat_lo],
                ]
                features.append(
                    {
                        "type": "Feature",
                        "geometry": {"type": "Polygon", "coordinates": [ring]},
                        "properties": {"value": float(v), "row": r, "col": c},
                    }
                )
        doc = {"type": "FeatureCollection", "features": features}
        return (json.dumps(doc, sort_keys=True, separators=(",", ":")) + "\n").encode("utf-8")
    raise ValueError(f"unknown export format {fmt!r}")


def parse_grid_heatmap(data, kind: str = "congestion_index") -> Heatmap:
    """Inverse of the grid-text export; NaN round-trips via NA."""
    text = data.decode("utf-8") if isinstance(data, bytes) else data
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise ValueError("empty heatmap file")
    head = lines[0].split()
    if len(head) != 6:
        raise ValueError("bad header, expected: rows cols lat_min lon_min lat_max lon_max")
    rows, cols = int(head[0]), int(head[1])
    lat_min, lon_min, lat_max, lon_max = map(float, head[2:])
    if len(lines) != rows + 1:
        raise ValueError(f"expected {rows} value rows, got {len(lines) - 1}")
    values = np.empty((rows, cols), dtype=float)
    for r in range(rows):
        cells = lines[r + 1].split()
        if len(cells) != cols:
            raise ValueError(f"row {r} has {len(cells)} values, expected {cols}")
        values[r] = [math.nan if tok == "NA" else float(tok) for tok in cells]
    grid = GridSpec(bbox=BBox(lat_min, lat_max, lon_min, lon_max), rows=rows, cols=cols)
    return Heatmap(grid=grid, values=values, kind=kind)
