"""Taxi-trip parsing, cleaning, feature engineering, and dataset splits.

Raw rows use the NYC yellow-taxi column layout by default; a schema map
renames columns for other sources.  Timestamps in the files are naive
local times, converted here to UTC epoch seconds using the configured
timezone (trips are local-time phenomena, so hour/day features are
derived back in that timezone).
"""

from __future__ import annotations

import csv
import io
import math
import random
from dataclasses import dataclass, field, replace
from datetime import datetime
from typing import Iterable, Optional, Sequence, Union
from zoneinfo import ZoneInfo

import numpy as np

DEFAULT_TZ = "America/New_York"

DEFAULT_SCHEMA = {
    "pickup_time": "tpep_pickup_datetime",
    "dropoff_time": "tpep_dropoff_datetime",
    "pickup_lat": "pickup_latitude",
    "pickup_lon": "pickup_longitude",
    "dropoff_lat": "dropoff_latitude",
    "dropoff_lon": "dropoff_longitude",
    "trip_distance": "trip_distance",
    "passenger_count": "passenger_count",
    "fare_amount": "fare_amount",
}

# the model feature set used for trip-duration regression
DURATION_FEATURES = (
    "trip_distance",
    "pickup_longitude",
    "pickup_latitude",
    "dropoff_longitude",
    "dropoff_latitude",
    "passenger_count",
)

TEMPORAL_FEATURES = tuple(f"day_{i}" for i in range(7)) + ("hour_of_day",)


class ConfigError(ValueError):
    """Fatal configuration problem (missing mapped column, bad bounds)."""


class ZeroVarianceError(ValueError):
    def __init__(self, feature: str):
        super().__init__(f"feature {feature!r} has zero variance, cannot normalize")
        self.feature = feature


@dataclass(frozen=True)
class BBox:
    lat_min: float
    lat_max: float
    lon_min: float
    lon_max: float

    def __post_init__(self):
        if not (self.lat_min < self.lat_max and self.lon_min < self.lon_max):
            raise ConfigError("bbox is degenerate")

    def contains(self, lat: float, lon: float) -> bool:
        # closed bounds: the boundary itself is inside
        return self.lat_min <= lat <= self.lat_max and self.lon_min <= lon <= self.lon_max


NYC_BBOX = BBox(lat_min=40.50, lat_max=41.00, lon_min=-74.30, lon_max=-73.60)


@dataclass(frozen=True)
class TripRecord:
    pickup_time: int  # UTC epoch seconds
    dropoff_time: int
    pickup_lat: float
    pickup_lon: float
    dropoff_lat: float
    dropoff_lon: float
    trip_distance: float  # miles
    passenger_count: int
    fare_amount: float  # carried along, unused by models


@dataclass(frozen=True)
class ParseError:
    line_no: int
    message: str


@dataclass(frozen=True)
class CleanConfig:
    bbox: BBox = NYC_BBOX
    max_speed_mph: float = 60.0
    min_duration_s: float = 60.0
    max_duration_s: float = 14400.0
    max_distance_mi: float = 100.0

    def __post_init__(self):
        if min(self.max_speed_mph, self.min_duration_s, self.max_duration_s, self.max_distance_mi) <= 0:
            raise ConfigError("cleaning bounds must be strictly positive")
        if self.min_duration_s > self.max_duration_s:
            raise ConfigError("min_duration exceeds max_duration")


@dataclass(frozen=True)
class CleanReport:
    rows_in: int
    rows_out: int
    dropped_by_rule: dict[str, int]
    imputed_values: int = 0


@dataclass(frozen=True)
class EngineeredTrip:
    pickup_time: int
    dropoff_time: int
    pickup_lat: float
    pickup_lon: float
    dropoff_lat: float
    dropoff_lon: float
    trip_distance: float
    passenger_count: int
    fare_amount: float
    duration_sec: int
    hour_of_day: int
    day_of_week: int  # Monday = 0
    day_onehot: tuple[int, ...]
    normalized_features: Optional[tuple[float, ...]] = None


@dataclass(frozen=True)
class NormStats:
    feature_names: tuple[str, ...]
    means: tuple[float, ...]
    stds: tuple[float, ...]


@dataclass(frozen=True)
class DatasetSplit:
    train: list
    test: list
    ratio: float
    seed: int


def _parse_local_datetime(text: str, tz: ZoneInfo) -> int:
    """'YYYY-MM-DD HH:MM:SS' wall time in tz, as UTC epoch seconds."""
    t = text.strip()
    try:
        # fast path for the fixed layout; strptime only as fallback
        if len(t) == 19 and t[4] == "-" and t[10] == " ":
            dt = datetime(
                int(t[0:4]), int(t[5:7]), int(t[8:10]),
                int(t[11:13]), int(t[14:16]), int(t[17:19]),
                tzinfo=tz,
            )
        else:
            dt = datetime.strptime(t, "%Y-%m-%d %H:%M:%S").replace(tzinfo=tz)
    except ValueError:
        raise ValueError(f"bad datetime {text!r}") from None
    return int(dt.timestamp())


def _open_text(source) -> Iterable[str]:
    if isinstance(source, bytes):
        return io.StringIO(source.decode("utf-8"))
    if isinstance(source, str):
        return io.StringIO(source)
    if isinstance(source, io.TextIOBase):
        return source
    return io.TextIOWrapper(source, encoding="utf-8")


def parse_trips(
    source,
    schema: Optional[dict[str, str]] = None,
    tz: str = DEFAULT_TZ,
) -> tuple[list[TripRecord], list[ParseError]]:
    """Read delimiter-separated trips; bad rows become errors, not aborts.

    Args:
        source: str/bytes content or a file object with a header row.
        schema: canonical field -> column name; defaults to the yellow-taxi names.
        tz: timezone the file's naive datetimes are expressed in.

    Returns:
        (records, errors) with input order preserved in both.
    """
    schema = dict(DEFAULT_SCHEMA if schema is None else schema)
    zone = ZoneInfo(tz)
    reader = csv.reader(_open_text(source))
    try:
        header = next(reader)
    except StopIteration:
        raise ConfigError("empty input, no header row") from None
    header = [h.strip() for h in header]
    col_index: dict[str, int] = {}
    for fieldname, column in schema.items():
        if column not in header:
            raise ConfigError(f"mapped column {column!r} for field {fieldname!r} not in header")
        col_index[fieldname] = header.index(column)

    records: list[TripRecord] = []
    errors: list[ParseError] = []
    needed = max(col_index.values()) + 1

    for row in reader:
        line_no = reader.line_num
        if not row or all(not c.strip() for c in row):
            continue
        if len(row) < needed:
            errors.append(ParseError(line_no, f"expected at least {needed} columns, got {len(row)}"))
            continue
        try:
            pickup = _parse_local_datetime(row[col_index["pickup_time"]], zone)
            dropoff = _parse_local_datetime(row[col_index["dropoff_time"]], zone)
            plat = float(row[col_index["pickup_lat"]])
            plon = float(row[col_index["pickup_lon"]])
            dlat = float(row[col_index["dropoff_lat"]])
            dlon = float(row[col_index["dropoff_lon"]])
            dist = float(row[col_index["trip_distance"]])
            pax_raw = float(row[col_index["passenger_count"]])
            fare = float(row[col_index["fare_amount"]])
        except ValueError as exc:
            errors.append(ParseError(line_no, str(exc)))
            continue
        if not pax_raw.is_integer():
            errors.append(ParseError(line_no, f"passenger_count {pax_raw} is not an integer"))
            continue
        pax = int(pax_raw)
        problem = _range_problem(pickup, dropoff, plat, plon, dlat, dlon, dist, pax, fare)
        if problem:
            errors.append(ParseError(line_no, problem))
            continue
        records.append(
            TripRecord(
                pickup_time=pickup,
                dropoff_time=dropoff,
                pickup_lat=plat,
                pickup_lon=plon,
                dropoff_lat=dlat,
                dropoff_lon=dlon,
                trip_distance=dist,
                passenger_count=pax,
                fare_amount=fare,
            )
        )
    return records, errors


def _range_problem(pickup, dropoff, plat, plon, dlat, dlon, dist, pax, fare) -> Optional[str]:
    if dropoff < pickup:
        return "dropoff before pickup"
    for name, lat in (("pickup", plat), ("dropoff", dlat)):
        if not -90.0 <= lat <= 90.0:
            return f"{name} latitude {lat} out of range"
    for name, lon in (("pickup", plon), ("dropoff", dlon)):
        if not -180.0 <= lon <= 180.0:
            return f"{name} longitude {lon} out of range"
    if not math.isfinite(dist) or dist < 0:
        return f"trip_distance {dist} out of range"
    if pax < 1:
        return f"passenger_count {pax} out of range"
    if not math.isfinite(fare) or fare < 0:
        return f"fare_amount {fare} out of range"
    return None


_CLEAN_RULES = ("bbox", "speed", "duration", "distance")


def clean_trips(
    records: Sequence[TripRecord], cfg: CleanConfig = CleanConfig()
) -> tuple[list[TripRecord], CleanReport]:
    """Drop out-of-bounds trips; each drop is charged to the first rule hit.

    Rule order is bbox, speed, duration, distance.  A zero-duration trip
    with positive distance implies infinite speed and falls to the speed
    rule rather than the duration rule.
    """
    kept: list[TripRecord] = []
    dropped = {rule: 0 for rule in _CLEAN_RULES}
    for r in records:
        rule = _violated_rule(r, cfg)
        if rule is None:
            kept.append(r)
        else:
            dropped[rule] += 1
    report = CleanReport(
        rows_in=len(records),
        rows_out=len(kept),
        dropped_by_rule=dropped,
        imputed_values=0,
    )
    return kept, report


def _violated_rule(r: TripRecord, cfg: CleanConfig) -> Optional[str]:
    if not (
        cfg.bbox.contains(r.pickup_lat, r.pickup_lon)
        and cfg.bbox.contains(r.dropoff_lat, r.dropoff_lon)
    ):
        return "bbox"
    duration = r.dropoff_time - r.pickup_time
    if duration > 0:
        speed_mph = r.trip_distance / (duration / 3600.0)
    elif r.trip_distance > 0:
        speed_mph = math.inf
    else:
        speed_mph = 0.0
    if speed_mph > cfg.max_speed_mph:
        return "speed"
    if not (cfg.min_duration_s <= duration <= cfg.max_duration_s):
        return "duration"
    if r.trip_distance > cfg.max_distance_mi:
        return "distance"
    return None


def impute_missing(series: Sequence[Optional[float]]) -> list[float]:
    """Fill gaps by linear interpolation between nearest present neighbors."""
    n = len(series)
    if n < 2:
        raise ValueError("series must have at least two entries")
    if series[0] is None or series[-1] is None:
        raise ValueError("first and last entries must be present")
    out = [float(v) if v is not None else None for v in series]
    i = 0
    while i < n:
        if out[i] is not None:
            i += 1
            continue
        left = i - 1
        right = i
        while out[right] is None:
            right += 1
        span = right - left
        for j in range(i, right):
            frac = (j - left) / span
            out[j] = out[left] + (out[right] - out[left]) * frac
        i = right + 1
    return out  # type: ignore[return-value]


def engineer_features(record: TripRecord, tz: str = DEFAULT_TZ) -> EngineeredTrip:
    """Attach duration and local-time calendar features to one trip."""
    zone = ZoneInfo(tz)
    local = datetime.fromtimestamp(record.pickup_time, zone)
    dow = local.weekday()  # Monday = 0
    onehot = tuple(1 if i == dow else 0 for i in range(7))
    return EngineeredTrip(
        pickup_time=record.pickup_time,
        dropoff_time=record.dropoff_time,
        pickup_lat=record.pickup_lat,
        pickup_lon=record.pickup_lon,
        dropoff_lat=record.dropoff_lat,
        dropoff_lon=record.dropoff_lon,
        trip_distance=record.trip_distance,
        passenger_count=record.passenger_count,
        fare_amount=record.fare_amount,
        duration_sec=record.dropoff_time - record.pickup_time,
        hour_of_day=local.hour,
        day_of_week=dow,
        day_onehot=onehot,
    )


def engineer_all(records: Sequence[TripRecord], tz: str = DEFAULT_TZ) -> list[EngineeredTrip]:
    zone = ZoneInfo(tz)
    out = []
    for r in records:
        local = datetime.fromtimestamp(r.pickup_time, zone)
        dow = local.weekday()
        out.append(
            EngineeredTrip(
                pickup_time=r.pickup_time,
                dropoff_time=r.dropoff_time,
                pickup_lat=r.pickup_lat,
                pickup_lon=r.pickup_lon,
                dropoff_lat=r.dropoff_lat,
                dropoff_lon=r.dropoff_lon,
                trip_distance=r.trip_distance,
                passenger_count=r.passenger_count,
                fare_amount=r.fare_amount,
                duration_sec=r.dropoff_time - r.pickup_time,
                hour_of_day=local.hour,
                day_of_week=dow,
                day_onehot=tuple(1 if i == dow else 0 for i in range(7)),
            )
        )
    return out


def feature_value(trip: EngineeredTrip, name: str) -> float:
    """Look up one named model feature on an engineered trip."""
    if name == "trip_distance":
        return trip.trip_distance
    if name == "pickup_longitude":
        return trip.pickup_lon
    if name == "pickup_latitude":
        return trip.pickup_lat
    if name == "dropoff_longitude":
        return trip.dropoff_lon
    if name == "dropoff_latitude":
        return trip.dropoff_lat
    if name == "passenger_count":
        return float(trip.passenger_count)
    if name == "fare_amount":
        return trip.fare_amount
    if name == "duration_min":
        return trip.duration_sec / 60.0
    if name == "hour_of_day":
        return float(trip.hour_of_day)
    if name == "day_of_week":
        return float(trip.day_of_week)
    if name.startswith("day_") and name[4:].isdigit():
        return float(trip.day_onehot[int(name[4:])])
    raise KeyError(f"unknown feature {name!r}")


def feature_matrix(trips: Sequence[EngineeredTrip], names: Sequence[str]) -> np.ndarray:
    return np.array([[feature_value(t, n) for n in names] for t in trips], dtype=float)


def fit_normalizer(trips: Sequence[EngineeredTrip], features: Sequence[str]) -> NormStats:
    """Per-feature mean and population standard deviation over trips."""
    if len(trips) < 2:
        raise ValueError("need at least two trips to fit a normalizer")
    mat = feature_matrix(trips, features)
    means = mat.mean(axis=0)
    stds = mat.std(axis=0)  # population convention (ddof=0)
    for name, s in zip(features, stds):
        if s == 0.0:
            raise ZeroVarianceError(name)
    return NormStats(
        feature_names=tuple(features),
        means=tuple(float(x) for x in means),
        stds=tuple(float(x) for x in stds),
    )


def normalize(trip_or_vector, stats: NormStats) -> np.ndarray:
    """Z-score a trip's features (or an aligned raw vector)."""
    if isinstance(trip_or_vector, EngineeredTrip):
        vec = np.array([feature_value(trip_or_vector, n) for n in stats.feature_names], dtype=float)
    else:
        vec = np.asarray(trip_or_vector, dtype=float)
        if vec.shape != (len(stats.feature_names),):
            raise ValueError(f"expected {len(stats.feature_names)} features, got {vec.shape}")
    return (vec - np.array(stats.means)) / np.array(stats.stds)


def normalize_matrix(trips: Sequence[EngineeredTrip], stats: NormStats) -> np.ndarray:
    mat = feature_matrix(trips, stats.feature_names)
    return (mat - np.array(stats.means)) / np.array(stats.stds)


def with_normalized(trip: EngineeredTrip, stats: NormStats) -> EngineeredTrip:
    vec = normalize(trip, stats)
    return replace(trip, normalized_features=tuple(float(x) for x in vec))


def split(trips: Sequence, ratio: float, seed: int) -> DatasetSplit:
    """Seeded shuffle split; same inputs always give the same partition."""
    if not 0.0 < ratio < 1.0:
        raise ValueError("ratio must be in (0, 1)")
    n = len(trips)
    if n == 0:
        raise ValueError("cannot split an empty dataset")
    idx = list(range(n))
    random.Random(seed).shuffle(idx)
    n_train = int(round(ratio * n))
    n_train = min(max(n_train, 0), n)
    train = [trips[i] for i in idx[:n_train]]
    test = [trips[i] for i in idx[n_train:]]
    return DatasetSplit(train=train, test=test, ratio=ratio, seed=seed)


def format_local_datetime(epoch: int, tz: str = DEFAULT_TZ) -> str:
    zone = ZoneInfo(tz)
    return datetime.fromtimestamp(epoch, zone).strftime("%Y-%m-%d %H:%M:%S")


def write_trips_csv(
    records: Sequence[TripRecord],
    out,
    schema: Optional[dict[str, str]] = None,
    tz: str = DEFAULT_TZ,
) -> None:
    """Write records back out in the input column layout."""
    schema = dict(DEFAULT_SCHEMA if schema is None else schema)
    order = list(schema.keys())
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow([schema[f] for f in order])
    for r in records:
        row = []
        for f in order:
            if f == "pickup_time":
                row.append(format_local_datetime(r.pickup_time, tz))
            elif f == "dropoff_time":
                row.append(format_local_datetime(r.dropoff_time, tz))
            elif f == "passenger_count":
                row.append(str(r.passenger_count))
            else:
                row.append(repr(getattr(r, f)))
        writer.writerow(row)
