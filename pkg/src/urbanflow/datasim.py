"""Deterministic surrogate taxi-trip CSV generator.

Produces files in the 2015 yellow-taxi column layout with the traffic
structure the analytics expect: weekday rush hours (7-9 and 17-19) run
at a much higher minutes-per-mile than midday, Thursday/Friday carry the
most trips, Sunday the fewest, and pickups cluster around a handful of
hotspots.  A configurable fraction of rows is deliberately malformed or
out of bounds so parsing and cleaning have something to reject.

Useful wherever a real monthly trip file is not available; all output is
a pure function of the seed.
"""

from __future__ import annotations

import random
from datetime import datetime, timedelta

HEADER = (
    "VendorID,tpep_pickup_datetime,tpep_dropoff_datetime,passenger_count,"
    "trip_distance,pickup_longitude,pickup_latitude,RateCodeID,store_and_fwd_flag,"
    "dropoff_longitude,dropoff_latitude,payment_type,fare_amount"
)

# pickup hotspots: midtown, financial district, upper east, airport-ish
_HOTSPOTS = [
    (40.758, -73.986, 0.008),
    (40.707, -74.011, 0.006),
    (40.773, -73.960, 0.010),
    (40.770, -73.873, 0.004),
]

# relative trip volume per day of week (Monday = 0)
_DAY_WEIGHTS = [1.0, 1.05, 1.1, 1.3, 1.35, 1.15, 0.7]

_BBOX = (40.50, 41.00, -74.30, -73.60)  # lat_min, lat_max, lon_min, lon_max


def _hour_weight(hour: int) -> float:
    if hour in (7, 8, 9, 17, 18, 19):
        return 2.2
    if hour in (6, 10, 16, 20, 21):
        return 1.4
    if 0 <= hour <= 5:
        return 0.3
    return 1.0


def _minutes_per_mile(day: int, hour: int, rng: random.Random) -> float:
    if day < 5 and hour in (7, 8, 9, 17, 18, 19):
        base = 4.8
    elif day < 5 and hour in (6, 10, 16, 20):
        base = 3.6
    elif 0 <= hour <= 5:
        base = 2.4
    elif day >= 5 and 11 <= hour <= 15:
        base = 3.2
    else:
        base = 3.0
    return base * rng.uniform(0.85, 1.15)


def _clip(v: float, lo: float, hi: float) -> float:
    return min(max(v, lo), hi)


def _pick_point(rng: random.Random) -> tuple[float, float]:
    lat_min, lat_max, lon_min, lon_max = _BBOX
    if rng.random() < 0.85:
        lat0, lon0, sigma = rng.choice(_HOTSPOTS)
        lat = rng.gauss(lat0, sigma)
        lon = rng.gauss(lon0, sigma)
    else:
        lat = rng.uniform(40.60, 40.90)
        lon = rng.uniform(-74.05, -73.75)
    return (_clip(lat, lat_min + 1e-4, lat_max - 1e-4), _clip(lon, lon_min + 1e-4, lon_max - 1e-4))


def _junk_row(rng: random.Random, pickup: datetime) -> str:
    """One deliberately bad row; kind chosen by the seeded rng."""
    p = pickup.strftime("%Y-%m-%d %H:%M:%S")
    d = (pickup + timedelta(minutes=12)).strftime("%Y-%m-%d %H:%M:%S")
    plat, plon = _pick_point(rng)
    dlat, dlon = _pick_point(rng)
    kind = rng.randrange(10)
    if kind == 0:  # latitude out of valid range -> parse error
        return f"2,{p},{d},1,2.5,{plon:.6f},91.000000,1,N,{dlon:.6f},{dlat:.6f},1,12.0"
    if kind == 1:  # dropoff before pickup -> parse error
        early = (pickup - timedelta(minutes=5)).strftime("%Y-%m-%d %H:%M:%S")
        return f"2,{p},{early},1,2.5,{plon:.6f},{plat:.6f},1,N,{dlon:.6f},{dlat:.6f},1,12.0"
    if kind == 2:  # negative fare -> parse error
        return f"2,{p},{d},1,2.5,{plon:.6f},{plat:.6f},1,N,{dlon:.6f},{dlat:.6f},1,-4.5"
    if kind == 3:  # zero passengers -> parse error
        return f"2,{p},{d},0,2.5,{plon:.6f},{plat:.6f},1,N,{dlon:.6f},{dlat:.6f},1,12.0"
    if kind == 4:  # non-numeric distance -> parse error
        return f"2,{p},{d},1,abc,{plon:.6f},{plat:.6f},1,N,{dlon:.6f},{dlat:.6f},1,12.0"
    if kind == 5:  # far outside the city box -> bbox drop
        return f"2,{p},{d},1,3.0,-75.500000,39.200000,1,N,{dlon:.6f},{dlat:.6f},1,14.0"
    if kind == 6:  # zero duration with positive distance -> speed drop
        return f"2,{p},{p},1,5.0,{plon:.6f},{plat:.6f},1,N,{dlon:.6f},{dlat:.6f},1,16.0"
    if kind == 7:  # 20 seconds for 12 miles -> speed drop
        fast = (pickup + timedelta(seconds=20)).strftime("%Y-%m-%d %H:%M:%S")
        return f"2,{p},{fast},1,12.0,{plon:.6f},{plat:.6f},1,N,{dlon:.6f},{dlat:.6f},1,35.0"
    if kind == 8:  # a 150-mile trip at a legal speed -> distance drop
        late = (pickup + timedelta(hours=3, minutes=30)).strftime("%Y-%m-%d %H:%M:%S")
        return f"2,{p},{late},2,150.0,{plon:.6f},{plat:.6f},1,N,{dlon:.6f},{dlat:.6f},1,320.0"
    # 2 miles over eight hours: slow enough to pass the speed cap -> duration drop
    idle = (pickup + timedelta(hours=8)).strftime("%Y-%m-%d %H:%M:%S")
    return f"2,{p},{idle},1,2.0,{plon:.6f},{plat:.6f},1,N,{dlon:.6f},{dlat:.6f},1,95.0"


def generate_trips_csv(
    n_rows: int,
    seed: int,
    start: str = "2015-01-05",
    days: int = 28,
    junk_rate: float = 0.025,
) -> str:
    """Build a surrogate trip file; identical (args) -> identical bytes.

    start should be a Monday for balanced day-of-week coverage.  About
    junk_rate of the rows are invalid or out of bounds, and roughly 0.3%
    are zero-distance trips that survive cleaning but carry no
    minutes-per-mile signal.
    """
    rng = random.Random(seed)
    day0 = datetime.strptime(start, "%Y-%m-%d")
    day_weights = [_DAY_WEIGHTS[(day0 + timedelta(days=i)).weekday()] for i in range(days)]
    hours = list(range(24))
    hour_weights = [_hour_weight(h) for h in hours]
    day_indices = list(range(days))

    out = [HEADER]
    for _ in range(n_rows):
        day_i = rng.choices(day_indices, weights=day_weights, k=1)[0]
        hour = rng.choices(hours, weights=hour_weights, k=1)[0]
        pickup = day0 + timedelta(
            days=day_i, hours=hour, minutes=rng.randrange(60), seconds=rng.randrange(60)
        )
        if rng.random() < junk_rate:
            out.append(_junk_row(rng, pickup))
            continue

        plat, plon = _pick_point(rng)
        dlat, dlon = _pick_point(rng)
        if rng.random() < 0.003:
            # legitimate zero-distance trip (waiting fare)
            duration = rng.randrange(120, 900)
            dropoff = pickup + timedelta(seconds=duration)
            fare = round(2.5 + duration / 120.0, 2)
            out.append(
                f"1,{pickup:%Y-%m-%d %H:%M:%S},{dropoff:%Y-%m-%d %H:%M:%S},1,0.0,"
                f"{plon:.6f},{plat:.6f},1,N,{plon:.6f},{plat:.6f},2,{fare}"
            )
            continue

        distance = round(_clip(rng.lognormvariate(0.8, 0.7), 0.3, 30.0), 2)
        dow = pickup.weekday()
        mpm = _minutes_per_mile(dow, hour, rng)
        duration = int(_clip(distance * mpm * 60.0 * rng.uniform(0.92, 1.08), 70, 14000))
        dropoff = pickup + timedelta(seconds=duration)
        pax = rng.choices([1, 2, 3, 4, 5, 6], weights=[55, 20, 10, 8, 4, 3], k=1)[0]
        fare = round(2.5 + 2.45 * distance + rng.uniform(0.0, 2.0), 2)
        vendor = rng.choice([1, 2])
        payment = rng.choice([1, 2])
        out.append(
            f"{vendor},{pickup:%Y-%m-%d %H:%M:%S},{dropoff:%Y-%m-%d %H:%M:%S},{pax},{distance},"
            f"{plon:.6f},{plat:.6f},1,N,{dlon:.6f},{dlat:.6f},{payment},{fare}"
        )
    return "\n".join(out) + "\n"


def write_trips_csv(path: str, n_rows: int, seed: int, **kwargs) -> None:
    with open(path, "w", encoding="utf-8") as f:
        f.write(generate_trips_csv(n_rows, seed, **kwargs))
