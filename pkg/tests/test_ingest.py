"""CSV parsing, validation, cleaning, and feature engineering."""

from __future__ import annotations

import random
from datetime import datetime, timedelta
from io import StringIO
from zoneinfo import ZoneInfo

import numpy as np
import pandas as pd
import pytest

from urbanflow import ingest
from urbanflow.ingest import BBox, CleanConfig, ConfigError, TripRecord

import oracles

HEADER = (
    "VendorID,tpep_pickup_datetime,tpep_dropoff_datetime,passenger_count,"
    "trip_distance,pickup_longitude,pickup_latitude,RateCodeID,"
    "store_and_fwd_flag,dropoff_longitude,dropoff_latitude,payment_type,"
    "fare_amount"
)


def row(
    pickup="2015-01-07 08:00:00",
    dropoff="2015-01-07 08:20:00",
    pax="1",
    dist="3.0",
    plon="-73.98",
    plat="40.75",
    dlon="-73.97",
    dlat="40.78",
    fare="14.0",
) -> str:
    return f"2,{pickup},{dropoff},{pax},{dist},{plon},{plat},1,N,{dlon},{dlat},1,{fare}"


def csv_text(*rows: str) -> str:
    return HEADER + "\n" + "\n".join(rows) + "\n"


# ---------------------------------------------------------------- parsing


def test_parse_happy_path():
    records, errors = ingest.parse_trips(csv_text(row()))
    assert errors == []
    assert len(records) == 1
    r = records[0]
    assert r.dropoff_time - r.pickup_time == 1200
    assert r.trip_distance == 3.0
    assert r.passenger_count == 1
    assert (r.pickup_lat, r.pickup_lon) == (40.75, -73.98)


def test_parse_accepts_bytes_str_and_file_objects():
    text = csv_text(row())
    for source in (text, text.encode(), StringIO(text)):
        records, errors = ingest.parse_trips(source)
        assert len(records) == 1 and not errors


def test_parse_epoch_matches_zoneinfo():
    records, _ = ingest.parse_trips(csv_text(row()))
    want = int(
        datetime(2015, 1, 7, 8, 0, 0, tzinfo=ZoneInfo("America/New_York")).timestamp()
    )
    assert records[0].pickup_time == want


def test_parse_datetimes_across_dst_transitions():
    """Manual fast path must agree with the zoneinfo library everywhere,
    including the spring-forward gap and the fall-back ambiguity."""
    zone = ZoneInfo("America/New_York")
    stamps = []
    for base in ("2015-03-08", "2015-11-01"):  # DST switch days
        for h in (0, 1, 2, 3, 4):
            for m in (0, 30, 59):
                stamps.append(f"{base} {h:02d}:{m:02d}:17")
    rng = random.Random(2)
    d0 = datetime(2015, 1, 1)
    stamps += [
        (d0 + timedelta(minutes=rng.randrange(525600))).strftime("%Y-%m-%d %H:%M:%S")
        for _ in range(200)
    ]
    for s in stamps:
        pick = s
        drop = s  # zero duration is a parse-level pass; cleaning handles it
        records, errors = ingest.parse_trips(csv_text(row(pickup=pick, dropoff=drop)))
        assert not errors, (s, errors)
        want = int(
            datetime.strptime(s, "%Y-%m-%d %H:%M:%S").replace(tzinfo=zone).timestamp()
        )
        assert records[0].pickup_time == want, s


@pytest.mark.parametrize(
    "bad_row,fragment",
    [
        (row(plat="91.0"), "latitude"),
        (row(plon="-190.0"), "longitude"),
        (row(dropoff="2015-01-07 07:59:59"), "before"),
        (row(pax="0"), "passenger_count"),
        (row(pax="1.5"), "passenger_count"),
        (row(dist="-2.0"), "distance"),
        (row(dist="nan"), "distance"),
        (row(fare="-4.0"), "fare"),
        (row(fare="inf"), "fare"),
        (row(pickup="2015-13-07 08:00:00"), "datetime"),
        (row(dist="abc"), "float"),
        ("1,2,3", "column"),
    ],
)
def test_parse_rejects_bad_rows(bad_row, fragment):
    records, errors = ingest.parse_trips(csv_text(row(), bad_row, row()))
    assert len(records) == 2
    assert len(errors) == 1
    assert errors[0].line_no == 3
    assert fragment.lower() in errors[0].message.lower()


def test_parse_preserves_line_numbers_and_skips_blanks():
    text = HEADER + "\n" + row() + "\n\n" + row(plat="99") + "\n" + row() + "\n"
    records, errors = ingest.parse_trips(text)
    assert len(records) == 2
    assert [e.line_no for e in errors] == [4]


def test_parse_missing_column_is_config_error():
    with pytest.raises(ConfigError):
        ingest.parse_trips("a,b,c\n1,2,3\n")


def test_parse_custom_schema():
    text = "start,end,plat,plon,dlat,dlon,mi,pax,usd\n" + (
        "2015-01-07 08:00:00,2015-01-07 08:10:00,40.75,-73.98,40.76,-73.97,2.0,1,9.5\n"
    )
    schema = {
        "pickup_time": "start",
        "dropoff_time": "end",
        "pickup_lat": "plat",
        "pickup_lon": "plon",
        "dropoff_lat": "dlat",
        "dropoff_lon": "dlon",
        "trip_distance": "mi",
        "passenger_count": "pax",
        "fare_amount": "usd",
    }
    records, errors = ingest.parse_trips(text, schema=schema)
    assert not errors and records[0].trip_distance == 2.0


# ---------------------------------------------------------------- cleaning


def mk_record(
    dur_s: int = 600,
    dist: float = 2.0,
    plat: float = 40.75,
    plon: float = -73.98,
    dlat: float = 40.76,
    dlon: float = -73.97,
) -> TripRecord:
    t0 = 1_420_000_000
    return TripRecord(
        pickup_time=t0,
        dropoff_time=t0 + dur_s,
        pickup_lat=plat,
        pickup_lon=plon,
        dropoff_lat=dlat,
        dropoff_lon=dlon,
        trip_distance=dist,
        passenger_count=1,
        fare_amount=10.0,
    )


def test_clean_rule_attribution_order():
    cfg = CleanConfig()
    cases = [
        (mk_record(), None),
        (mk_record(plat=42.0), "bbox"),
        (mk_record(dur_s=60, dist=12.0), "speed"),
        (mk_record(dur_s=30, dist=0.1), "duration"),
        (mk_record(dur_s=20000, dist=1.0), "duration"),
        (mk_record(dist=150.0, dur_s=14000), "distance"),
        # multi-violation rows charge the first rule in order
        (mk_record(plat=42.0, dur_s=10, dist=500.0), "bbox"),
        (mk_record(dur_s=1, dist=500.0), "speed"),
        (mk_record(dur_s=30, dist=0.0), "duration"),
    ]
    records = [r for r, _ in cases]
    kept, report = ingest.clean_trips(records, cfg)
    assert report.rows_in == len(cases)
    assert report.rows_out == 1
    want = {rule: 0 for rule in ("bbox", "speed", "duration", "distance")}
    for _, rule in cases:
        if rule:
            want[rule] += 1
    assert report.dropped_by_rule == want
    assert kept == [records[0]]


def test_clean_boundary_values_survive():
    cfg = CleanConfig()
    b = cfg.bbox
    edge_cases = [
        mk_record(plat=b.lat_min, plon=b.lon_min, dlat=b.lat_max, dlon=b.lon_max),
        mk_record(dur_s=60, dist=0.5),  # exactly min duration at 30 mph
        mk_record(dur_s=14400, dist=20.0),  # exactly max duration
        mk_record(dist=100.0, dur_s=7200),  # exactly max distance, 50 mph
        mk_record(dist=1.0, dur_s=60),  # exactly 60 mph
    ]
    kept, report = ingest.clean_trips(edge_cases, cfg)
    assert report.rows_out == len(edge_cases), report.dropped_by_rule


def test_clean_zero_duration_zero_distance_drops_as_duration():
    kept, report = ingest.clean_trips([mk_record(dur_s=0, dist=0.0)], CleanConfig())
    assert not kept
    assert report.dropped_by_rule["duration"] == 1
    assert sum(report.dropped_by_rule.values()) == 1


def test_clean_conservation_against_pandas_oracle(small_csv_text):
    records, _ = ingest.parse_trips(small_csv_text)
    cfg = CleanConfig()
    kept, report = ingest.clean_trips(records, cfg)
    assert report.rows_in == len(records)
    assert report.rows_out + sum(report.dropped_by_rule.values()) == report.rows_in

    frame = pd.DataFrame(
        {
            "plat": [r.pickup_lat for r in records],
            "plon": [r.pickup_lon for r in records],
            "dlat": [r.dropoff_lat for r in records],
            "dlon": [r.dropoff_lon for r in records],
            "duration_s": [r.dropoff_time - r.pickup_time for r in records],
            "distance_mi": [r.trip_distance for r in records],
        }
    )
    verdict = oracles.clean_oracle(
        frame,
        cfg.bbox.lat_min,
        cfg.bbox.lat_max,
        cfg.bbox.lon_min,
        cfg.bbox.lon_max,
        cfg.max_speed_mph,
        cfg.min_duration_s,
        cfg.max_duration_s,
        cfg.max_distance_mi,
    )
    assert report.rows_out == int((verdict == "").sum())
    for rule in ("bbox", "speed", "duration", "distance"):
        assert report.dropped_by_rule.get(rule, 0) == int((verdict == rule).sum()), rule


def test_clean_custom_bounds():
    cfg = CleanConfig(max_distance_mi=5.0, min_duration_s=1.0)
    kept, report = ingest.clean_trips([mk_record(dist=6.0, dur_s=3600)], cfg)
    assert report.dropped_by_rule["distance"] == 1
    assert sum(report.dropped_by_rule.values()) == 1
    with pytest.raises(ConfigError):
        CleanConfig(max_speed_mph=0.0)
    with pytest.raises(ConfigError):
        CleanConfig(min_duration_s=100.0, max_duration_s=50.0)
    with pytest.raises(ConfigError):
        BBox(41.0, 40.0, -74.0, -73.0)


# ---------------------------------------------------------------- imputation


def test_impute_linear_between_neighbors():
    out = ingest.impute_missing([1.0, None, 3.0])
    assert out == [1.0, 2.0, 3.0]
    out = ingest.impute_missing([0.0, None, None, None, 4.0])
    assert out == [0.0, 1.0, 2.0, 3.0, 4.0]
    out = ingest.impute_missing([5.0, 6.0])
    assert out == [5.0, 6.0]


def test_impute_rejects_missing_endpoints():
    with pytest.raises(ValueError):
        ingest.impute_missing([None, 1.0])
    with pytest.raises(ValueError):
        ingest.impute_missing([1.0, None])
    with pytest.raises(ValueError):
        ingest.impute_missing([1.0])


# ---------------------------------------------------------------- features


def test_engineer_features_fields():
    records, _ = ingest.parse_trips(csv_text(row()))
    t = ingest.engineer_features(records[0])
    assert t.duration_sec == 1200
    assert t.hour_of_day == 8
    assert t.day_of_week == 2  # 2015-01-07 was a Wednesday
    assert t.day_onehot == (0, 0, 1, 0, 0, 0, 0)
    assert sum(t.day_onehot) == 1


def test_engineer_matches_pandas_daytime(small_trips):
    sample = small_trips[:500]
    zone = "America/New_York"
    stamps = pd.to_datetime(
        [t.pickup_time for t in sample], unit="s", utc=True
    ).tz_convert(zone)
    assert [t.day_of_week for t in sample] == list(stamps.dayofweek)
    assert [t.hour_of_day for t in sample] == list(stamps.hour)


def test_feature_value_and_matrix(small_trips):
    t = small_trips[0]
    assert ingest.feature_value(t, "trip_distance") == t.trip_distance
    assert ingest.feature_value(t, "duration_min") == t.duration_sec / 60.0
    assert ingest.feature_value(t, "hour_of_day") == float(t.hour_of_day)
    assert ingest.feature_value(t, f"day_{t.day_of_week}") == 1.0
    other = (t.day_of_week + 1) % 7
    assert ingest.feature_value(t, f"day_{other}") == 0.0
    with pytest.raises(KeyError):
        ingest.feature_value(t, "nope")

    mat = ingest.feature_matrix(small_trips[:10], ingest.DURATION_FEATURES)
    assert mat.shape == (10, 6)
    assert mat[0, 0] == small_trips[0].trip_distance


def test_normalizer_zscores_to_unit(small_trips):
    stats = ingest.fit_normalizer(small_trips, ingest.DURATION_FEATURES)
    mat = ingest.normalize_matrix(small_trips, stats)
    assert np.allclose(mat.mean(axis=0), 0.0, atol=1e-9)
    assert np.allclose(mat.std(axis=0), 1.0, atol=1e-9)
    # row path equals matrix path
    one = ingest.normalize(small_trips[0], stats)
    assert np.array_equal(one, mat[0])
    t2 = ingest.with_normalized(small_trips[0], stats)
    assert t2.normalized_features == tuple(float(x) for x in one)


def test_normalizer_zero_variance_raises():
    records, _ = ingest.parse_trips(csv_text(row(), row()))
    trips = ingest.engineer_all(records)
    with pytest.raises(ingest.ZeroVarianceError) as err:
        ingest.fit_normalizer(trips, ["trip_distance"])
    assert "trip_distance" in str(err.value)


def test_split_deterministic_partition(small_trips):
    trips = small_trips[:997]
    s1 = ingest.split(trips, 0.8, seed=42)
    s2 = ingest.split(trips, 0.8, seed=42)
    assert s1.train == s2.train and s1.test == s2.test
    assert len(s1.train) == round(0.8 * 997)
    assert len(s1.train) + len(s1.test) == 997
    ids = lambda ts: {id(t) for t in ts}  # noqa: E731
    assert not (ids(s1.train) & ids(s1.test))
    s3 = ingest.split(trips, 0.8, seed=43)
    assert s3.train != s1.train
    with pytest.raises(ValueError):
        ingest.split(trips, 0.0, seed=1)
    with pytest.raises(ValueError):
        ingest.split([], 0.5, seed=1)


def test_csv_round_trip_exact(small_csv_text):
    records, _ = ingest.parse_trips(small_csv_text)
    sample = records[:300]
    buf = StringIO()
    ingest.write_trips_csv(sample, buf)
    again, errors = ingest.parse_trips(buf.getvalue())
    assert not errors
    assert again == sample
