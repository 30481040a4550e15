"""Clustering, regression, evaluation metrics, and model persistence.

K-Means (with D2-weighted seeding) and ordinary least squares are
implemented directly; numpy supplies the array math and the stable
least-squares solve.  Persistence is a versioned, checksummed JSON
envelope whose floats survive a save/load round trip bit-exactly.
"""

from __future__ import annotations

import hashlib
import json
import logging
import math
from dataclasses import dataclass, field
from typing import Mapping, Optional, Sequence

import numpy as np

log = logging.getLogger(__name__)

MODEL_FORMAT_VERSION = 1

_ASSIGN_CHUNK = 65536


class ModelFormatError(ValueError):
    """Base error for unusable model files."""


class ModelVersionError(ModelFormatError):
    def __init__(self, found, expected: int):
        super().__init__(f"model format version {found!r} not supported, expected {expected}")
        self.found = found
        self.expected = expected


class ModelChecksumError(ModelFormatError):
    def __init__(self):
        super().__init__("model checksum mismatch, file is corrupt")


class ModelTruncatedError(ModelFormatError):
    def __init__(self, detail: str = "file is truncated or not a model file"):
        super().__init__(detail)


@dataclass(eq=False)
class KMeansModel:
    k: int
    centroids: np.ndarray  # (k, d)
    inertia: float
    iterations: int
    seed: int
    tol: float
    reseeds: int = 0
    inertia_history: tuple[float, ...] = ()
    reseed_iterations: tuple[int, ...] = ()
    meta: dict = field(default_factory=dict)

    def __eq__(self, other) -> bool:
        if not isinstance(other, KMeansModel):
            return NotImplemented
        return (
            self.k == other.k
            and np.array_equal(self.centroids, other.centroids)
            and self.inertia == other.inertia
            and self.iterations == other.iterations
            and self.seed == other.seed
            and self.tol == other.tol
            and self.reseeds == other.reseeds
            and self.inertia_history == other.inertia_history
            and self.reseed_iterations == other.reseed_iterations
            and self.meta == other.meta
        )


@dataclass(eq=False)
class LinRegModel:
    intercept: float
    coefficients: np.ndarray  # aligned to feature_names
    feature_names: tuple[str, ...]
    ridge_epsilon: float = 0.0
    meta: dict = field(default_factory=dict)

    def __eq__(self, other) -> bool:
        if not isinstance(other, LinRegModel):
            return NotImplemented
        return (
            self.intercept == other.intercept
            and np.array_equal(self.coefficients, other.coefficients)
            and self.feature_names == other.feature_names
            and self.ridge_epsilon == other.ridge_epsilon
            and self.meta == other.meta
        )


@dataclass(frozen=True)
class EvalMetrics:
    mae: float
    rmse: float
    m: int


def _as_points(points) -> np.ndarray:
    pts = np.asarray(points, dtype=float)
    if pts.ndim != 2 or pts.shape[0] == 0:
        raise ValueError("points must be a nonempty 2-D array")
    if not np.all(np.isfinite(pts)):
        raise ValueError("points must be finite")
    return pts


def kmeans_init_pp(points, k: int, seed: int) -> np.ndarray:
    """D2-weighted initialization: k distinct input points, seeded."""
    pts = _as_points(points)
    n = pts.shape[0]
    if k < 1:
        raise ValueError("k must be >= 1")
    n_distinct = np.unique(pts, axis=0).shape[0]
    if k > n_distinct:
        raise ValueError(f"k={k} exceeds {n_distinct} distinct points")
    rng = np.random.default_rng(seed)
    chosen = [int(rng.integers(n))]
    # squared distance to the nearest chosen centroid so far
    d2 = np.sum((pts - pts[chosen[0]]) ** 2, axis=1)
    while len(chosen) < k:
        total = d2.sum()
        # total > 0 is guaranteed while chosen < distinct-point count
        probs = d2 / total
        idx = int(rng.choice(n, p=probs))
        chosen.append(idx)
        d2 = np.minimum(d2, np.sum((pts - pts[idx]) ** 2, axis=1))
    return pts[chosen].copy()


def _sq_distances(pts: np.ndarray, centroids: np.ndarray) -> np.ndarray:
    """(n, k) squared Euclidean distances, chunked to bound memory.

    Uses the direct difference form, not the expanded dot-product form,
    so exact ties (equidistant points) stay exact.
    """
    n = pts.shape[0]
    out = np.empty((n, centroids.shape[0]), dtype=float)
    for start in range(0, n, _ASSIGN_CHUNK):
        stop = min(start + _ASSIGN_CHUNK, n)
        diff = pts[start:stop, None, :] - centroids[None, :, :]
        out[start:stop] = np.sum(diff * diff, axis=2)
    return out


def kmeans_assign(points, centroids) -> np.ndarray:
    """Label of the nearest centroid; ties break to the lowest index."""
    pts = _as_points(points)
    cents = np.asarray(centroids, dtype=float)
    if cents.ndim != 2 or cents.shape[0] == 0:
        raise ValueError("need at least one centroid")
    return np.argmin(_sq_distances(pts, cents), axis=1)


def _update(
    pts: np.ndarray,
    labels: np.ndarray,
    k: int,
    prev_centroids: Optional[np.ndarray],
) -> tuple[np.ndarray, int]:
    """Mean per cluster; empty clusters re-seed to the farthest point."""
    d = pts.shape[1]
    out = np.empty((k, d), dtype=float)
    empties = []
    for i in range(k):
        members = pts[labels == i]
        if members.shape[0] == 0:
            empties.append(i)
        else:
            out[i] = members.mean(axis=0)
    taken: set[int] = set()
    for i in empties:
        if prev_centroids is None:
            raise ValueError("empty cluster re-seed needs the previous centroids")
        dist = np.sum((pts - prev_centroids[i]) ** 2, axis=1)
        # two empty clusters must not grab the same point
        order = np.argsort(-dist, kind="stable")
        pick = next(int(j) for j in order if int(j) not in taken)
        taken.add(pick)
        out[i] = pts[pick]
    return out, len(empties)


def kmeans_update(points, labels, k: int, prev_centroids=None) -> np.ndarray:
    pts = _as_points(points)
    lab = np.asarray(labels)
    if lab.shape[0] != pts.shape[0]:
        raise ValueError("labels length must match points")
    if lab.size and (lab.min() < 0 or lab.max() >= k):
        raise ValueError("labels out of range")
    prev = None if prev_centroids is None else np.asarray(prev_centroids, dtype=float)
    out, _ = _update(pts, lab, k, prev)
    return out


def kmeans_fit(
    points,
    k: int,
    tol: float = 1e-4,
    max_iter: int = 300,
    seed: int = 0,
    init=None,
) -> KMeansModel:
    """Lloyd iterations from a D2-weighted start until centroids settle.

    `init` overrides the seeding with explicit (k, d) starting centroids,
    which callers use for warm starts.  The recorded inertia history is
    the objective after each assign+update pair; it is nonincreasing
    except on iterations where an empty cluster had to be re-seeded
    (those are recorded separately).
    """
    pts = _as_points(points)
    if init is not None:
        centroids = np.array(init, dtype=float)
        if centroids.shape != (k, pts.shape[1]):
            raise ValueError(f"init must have shape ({k}, {pts.shape[1]})")
    else:
        centroids = kmeans_init_pp(pts, k, seed)
    history: list[float] = []
    reseed_iters: list[int] = []
    reseeds = 0
    iterations = 0
    for it in range(1, max_iter + 1):
        iterations = it
        d2 = _sq_distances(pts, centroids)
        labels = np.argmin(d2, axis=1)
        new_centroids, n_empty = _update(pts, labels, k, centroids)
        if n_empty:
            reseeds += n_empty
            reseed_iters.append(it)
            log.info("kmeans iteration %d re-seeded %d empty cluster(s)", it, n_empty)
        history.append(float(np.sum((pts - new_centroids[labels]) ** 2)))
        shift = float(np.sqrt(np.max(np.sum((new_centroids - centroids) ** 2, axis=1))))
        centroids = new_centroids
        if shift < tol:
            break
    final_d2 = _sq_distances(pts, centroids)
    inertia = float(np.sum(np.min(final_d2, axis=1)))
    return KMeansModel(
        k=k,
        centroids=centroids,
        inertia=inertia,
        iterations=iterations,
        seed=seed,
        tol=tol,
        reseeds=reseeds,
        inertia_history=tuple(history),
        reseed_iterations=tuple(reseed_iters),
    )


def linreg_fit(X, y, feature_names: Optional[Sequence[str]] = None) -> LinRegModel:
    """Least-squares fit with an internal intercept column.

    Uses a numerically stable solve; on a rank-deficient design it
    refits with a tiny ridge term and records that epsilon on the model.
    """
    Xa = np.asarray(X, dtype=float)
    ya = np.asarray(y, dtype=float)
    if Xa.ndim != 2:
        raise ValueError("X must be 2-D")
    m, n = Xa.shape
    if ya.shape != (m,):
        raise ValueError("y length must match X rows")
    if m <= n:
        raise ValueError(f"need more rows than features ({m} rows, {n} features)")
    if not (np.all(np.isfinite(Xa)) and np.all(np.isfinite(ya))):
        raise ValueError("inputs must be finite")
    if feature_names is None:
        names = tuple(f"x{i}" for i in range(n))
    else:
        names = tuple(feature_names)
        if len(names) != n:
            raise ValueError("feature_names length must match X columns")

    A = np.column_stack([np.ones(m), Xa])
    beta, _, rank, _ = np.linalg.lstsq(A, ya, rcond=None)
    ridge = 0.0
    if rank < n + 1:
        ridge = 1e-8
        gram = A.T @ A + ridge * np.eye(n + 1)
        beta = np.linalg.solve(gram, A.T @ ya)
        log.info("rank-deficient design (rank %d of %d), refit with ridge %g", rank, n + 1, ridge)
    return LinRegModel(
        intercept=float(beta[0]),
        coefficients=beta[1:].copy(),
        feature_names=names,
        ridge_epsilon=ridge,
    )


def linreg_predict(model: LinRegModel, x):
    """Intercept plus dot product; a 2-D input predicts row by row.

    The batch path runs the exact single-row computation per row, so
    batch and per-row predictions agree bit for bit.
    """
    xa = np.asarray(x, dtype=float)
    n = len(model.feature_names)
    if xa.ndim == 1:
        if xa.shape[0] != n:
            raise ValueError(f"expected {n} features, got {xa.shape[0]}")
        return float(np.dot(xa, model.coefficients) + model.intercept)
    if xa.ndim == 2:
        if xa.shape[1] != n:
            raise ValueError(f"expected {n} features, got {xa.shape[1]}")
        return np.array([float(np.dot(row, model.coefficients) + model.intercept) for row in xa])
    raise ValueError("x must be 1-D or 2-D")


def _check_pair(y, yhat) -> tuple[np.ndarray, np.ndarray]:
    ya = np.asarray(y, dtype=float)
    pa = np.asarray(yhat, dtype=float)
    if ya.shape != pa.shape or ya.ndim != 1:
        raise ValueError("y and yhat must be 1-D and the same length")
    if ya.shape[0] == 0:
        raise ValueError("empty input")
    return ya, pa


def mae(y, yhat) -> float:
    ya, pa = _check_pair(y, yhat)
    return float(np.mean(np.abs(ya - pa)))


def rmse(y, yhat) -> float:
    ya, pa = _check_pair(y, yhat)
    return float(math.sqrt(np.mean((ya - pa) ** 2)))


def evaluate(y, yhat) -> EvalMetrics:
    ya, _ = _check_pair(y, yhat)
    return EvalMetrics(mae=mae(y, yhat), rmse=rmse(y, yhat), m=int(ya.shape[0]))


def _canonical(obj) -> bytes:
    return json.dumps(obj, sort_keys=True, separators=(",", ":")).encode("utf-8")


def save_model(model) -> bytes:
    """Serialize to the versioned, checksummed envelope."""
    if isinstance(model, KMeansModel):
        kind = "kmeans"
        payload = {
            "k": model.k,
            "centroids": model.centroids.tolist(),
            "inertia": model.inertia,
            "iterations": model.iterations,
            "seed": model.seed,
            "tol": model.tol,
            "reseeds": model.reseeds,
            "inertia_history": list(model.inertia_history),
            "reseed_iterations": list(model.reseed_iterations),
        }
    elif isinstance(model, LinRegModel):
        kind = "linreg"
        payload = {
            "intercept": model.intercept,
            "coefficients": model.coefficients.tolist(),
            "feature_names": list(model.feature_names),
            "ridge_epsilon": model.ridge_epsilon,
        }
    else:
        raise TypeError(f"cannot save {type(model).__name__}")
    body = {
        "format_version": MODEL_FORMAT_VERSION,
        "kind": kind,
        "payload": payload,
        "metadata": model.meta,
    }
    envelope = {"checksum": hashlib.sha256(_canonical(body)).hexdigest(), "body": body}
    return _canonical(envelope) + b"\n"


def load_model(data: bytes):
    """Parse, version-check, checksum-verify, and rebuild a model."""
    try:
        envelope = json.loads(data)
    except (ValueError, TypeError):
        raise ModelTruncatedError() from None
    if not isinstance(envelope, dict) or "body" not in envelope or "checksum" not in envelope:
        raise ModelTruncatedError("model envelope is incomplete")
    body = envelope["body"]
    if not isinstance(body, dict):
        raise ModelTruncatedError("model body is incomplete")
    version = body.get("format_version")
    if version != MODEL_FORMAT_VERSION:
        raise ModelVersionError(version, MODEL_FORMAT_VERSION)
    if hashlib.sha256(_canonical(body)).hexdigest() != envelope["checksum"]:
        raise ModelChecksumError()
    kind = body.get("kind")
    payload = body.get("payload", {})
    meta = body.get("metadata", {})
    try:
        if kind == "kmeans":
            return KMeansModel(
                k=payload["k"],
                centroids=np.array(payload["centroids"], dtype=float),
                inertia=payload["inertia"],
                iterations=payload["iterations"],
                seed=payload["seed"],
                tol=payload["tol"],
                reseeds=payload["reseeds"],
                inertia_history=tuple(payload["inertia_history"]),
                reseed_iterations=tuple(payload["reseed_iterations"]),
                meta=meta,
            )
        if kind == "linreg":
            return LinRegModel(
                intercept=payload["intercept"],
                coefficients=np.array(payload["coefficients"], dtype=float),
                feature_names=tuple(payload["feature_names"]),
                ridge_epsilon=payload["ridge_epsilon"],
                meta=meta,
            )
    except KeyError as exc:
        raise ModelFormatError(f"model payload missing field {exc}") from None
    raise ModelFormatError(f"unknown model kind {kind!r}")


@dataclass(frozen=True)
class RegimeSummary:
    label: int
    size: int
    mean_index: Optional[float]
    dominant_hours: tuple[int, ...]


@dataclass(eq=False)
class CongestionRegimes:
    labels: tuple[int, ...]
    model: KMeansModel
    feature_means: tuple[float, ...]
    feature_stds: tuple[float, ...]
    summaries: tuple[RegimeSummary, ...]


def regime_features(cells) -> np.ndarray:
    """Raw (congestion_index, hour, day) rows for a set of cell-bins."""
    rows = []
    for c in cells:
        if c.bin is None:
            raise ValueError("cells must carry a time bin")
        rows.append((c.congestion_index, float(c.bin.hour), float(c.bin.day_of_week)))
    if not rows:
        raise ValueError("no cells")
    return np.asarray(rows, dtype=float)


def cluster_congestion(cells, k: int, seed: int, restarts: int = 1) -> CongestionRegimes:
    """K-Means regimes over standardized (index, hour, day) cell features.

    Features are z-scored here; a constant feature keeps std 1 so it
    simply contributes nothing after centering.  With restarts > 1 the
    lowest-inertia fit over seeds seed..seed+restarts-1 wins.
    """
    cells = list(cells)
    raw = regime_features(cells)
    means = raw.mean(axis=0)
    stds = raw.std(axis=0)
    stds = np.where(stds == 0.0, 1.0, stds)
    feats = (raw - means) / stds
    model = min(
        (kmeans_fit(feats, k=k, seed=seed + i) for i in range(max(1, restarts))),
        key=lambda m: m.inertia,
    )
    return regimes_from_model(cells, model, means, stds, feats=feats)


def regimes_from_model(cells, model: KMeansModel, means, stds, feats=None) -> CongestionRegimes:
    """Label cells with a fitted regime model and summarize each cluster."""
    cells = list(cells)
    means = np.asarray(means, dtype=float)
    stds = np.asarray(stds, dtype=float)
    if feats is None:
        feats = (regime_features(cells) - means) / stds
    labels = kmeans_assign(feats, model.centroids)
    k = model.k

    summaries = []
    for i in range(k):
        members = [c for c, lab in zip(cells, labels) if lab == i]
        if members:
            mean_index = float(np.mean([c.congestion_index for c in members]))
            counts: dict[int, int] = {}
            for c in members:
                counts[c.bin.hour] = counts.get(c.bin.hour, 0) + 1
            top = sorted(counts.items(), key=lambda kv: (-kv[1], kv[0]))[:3]
            hours = tuple(h for h, _ in top)
        else:
            mean_index = None
            hours = ()
        summaries.append(RegimeSummary(label=i, size=len(members), mean_index=mean_index, dominant_hours=hours))
    return CongestionRegimes(
        labels=tuple(int(x) for x in labels),
        model=model,
        feature_means=tuple(float(x) for x in means),
        feature_stds=tuple(float(x) for x in stds),
        summaries=tuple(summaries),
    )
