"""Comparing circular coordinates: degrees, correlation, histograms."""

from dataclasses import dataclass
import itertools

import numpy as np

from .circularize import CircularCoordinate, mod1, wrap
from .errors import InvalidInput, UnreliableDegree


@dataclass
class CorrelationReport:
    degree: int
    scatter: np.ndarray     # (m, 2) pairs (theta1, theta2) on common points
    coefficient: float


def as_point_array(theta, n=None):
    """Circle values indexed by point; points a coordinate does not cover are NaN."""
    if isinstance(theta, CircularCoordinate):
        size = n if n is not None else max(theta.labels) + 1
        out = np.full(size, np.nan)
        out[list(theta.labels)] = theta.theta
        return out
    return np.asarray(theta, dtype=float)


def degree_between(theta1, theta2, ordering) -> int:
    """Net turns of ``theta2`` along the cyclic point sequence ``ordering``.

    The sequence should trace one loop of ``theta1``; every wrapped step of
    ``theta1`` along it must be shorter than 1/2.
    """
    order = np.asarray(ordering, dtype=int)
    if len(order) < 2 or len(np.unique(order)) != len(order):
        raise InvalidInput("ordering must list at least two distinct points")
    t1 = as_point_array(theta1)[order]
    t2 = as_point_array(theta2)[order]
    if np.any(np.isnan(t1)) or np.any(np.isnan(t2)):
        raise InvalidInput("ordering visits points without coordinates")
    gaps = wrap(np.roll(t1, -1) - t1)
    if np.any(np.abs(gaps) >= 0.5):
        raise UnreliableDegree("consecutive steps of the reference coordinate reach 1/2")
    return int(np.round(np.sum(wrap(np.roll(t2, -1) - t2))))


def circular_correlation(theta1, theta2, degree) -> float:
    """|mean exp(2 pi i (theta2 - degree * theta1))| in [0, 1]."""
    t1, t2 = np.asarray(theta1, dtype=float), np.asarray(theta2, dtype=float)
    if len(t1) == 0:
        return 0.0
    return float(min(1.0, abs(np.mean(np.exp(2j * np.pi * (t2 - degree * t1))))))


def correlate(theta1, theta2, ordering=None) -> CorrelationReport:
    """Degree and correlation of ``theta2`` against reference ``theta1``.

    Without an ordering, the common points are visited in increasing
    ``theta1``.
    """
    a, b = as_point_array(theta1), as_point_array(theta2)
    n = min(len(a), len(b))
    a, b = a[:n], b[:n]
    common = np.flatnonzero(~np.isnan(a) & ~np.isnan(b))
    if ordering is None:
        ordering = common[np.argsort(a[common], kind="stable")]
    deg = degree_between(a, b, ordering)
    scatter = np.column_stack([a[common], b[common]])
    return CorrelationReport(deg, scatter, circular_correlation(a[common], b[common], deg))


def fit_degrees(truth, theta, max_degree=3):
    """Integer vector ``k`` maximizing the circular correlation of ``theta``
    with ``truth @ k``; ``truth`` is (n, m). Returns (k, coefficient)."""
    truth = np.atleast_2d(np.asarray(truth, dtype=float))
    if truth.shape[0] != len(theta):
        truth = truth.T
    theta = np.asarray(theta, dtype=float)
    best, best_c = None, -1.0
    rng = range(-max_degree, max_degree + 1)
    for k in itertools.product(rng, repeat=truth.shape[1]):
        c = abs(np.mean(np.exp(2j * np.pi * (theta - truth @ np.array(k)))))
        if c > best_c + 1e-12:
            best, best_c = k, c
    return tuple(int(x) for x in best), float(best_c)


def histogram(theta, bins: int) -> np.ndarray:
    """Counts of values in [k/bins, (k+1)/bins)."""
    if bins < 1:
        raise InvalidInput("bins must be positive")
    t = theta.theta if isinstance(theta, CircularCoordinate) else np.asarray(theta, dtype=float)
    idx = np.minimum(np.floor(t * bins).astype(int), bins - 1)
    return np.bincount(idx, minlength=bins)


def extend_to_points(coord: CircularCoordinate, D_all, method="nearest", k=3) -> CircularCoordinate:
    """Extend landmark coordinates to every point of ``D_all``.

    ``nearest`` copies the value of the closest landmark. ``interpolate``
    starts there and adds an inverse-distance weighted average of wrapped
    differences towards the next closest landmarks that share an edge with
    it in the coordinate's complex.
    """
    labels = np.asarray(coord.labels, dtype=int)
    to_lm = D_all.d[:, labels]
    near = np.argmin(to_lm, axis=1)
    theta = coord.theta[near].copy()
    if method == "nearest":
        return CircularCoordinate(theta, tuple(range(D_all.n)))
    if method != "interpolate":
        raise InvalidInput(f"unknown extension method {method!r}")
    cx = coord.complex
    adjacent = set()
    if cx is not None:
        pos = np.full(len(cx), -1, dtype=np.int64)
        pos[cx.vertex_indices] = np.arange(len(cx.vertex_indices))
        for head, tail in cx.edge_facets.tolist():
            adjacent.add((pos[head], pos[tail]))
            adjacent.add((pos[tail], pos[head]))
    nearest_k = np.argsort(to_lm, axis=1, kind="stable")[:, :k]
    for s in range(D_all.n):
        a = near[s]
        weights = [1.0 / (to_lm[s, a] + 1e-12)]
        steps = [0.0]
        for b in nearest_k[s]:
            if b != a and (a, b) in adjacent:
                weights.append(1.0 / (to_lm[s, b] + 1e-12))
                steps.append(float(wrap(coord.theta[b] - coord.theta[a])))
        w = np.asarray(weights)
        theta[s] = coord.theta[a] + np.dot(w, steps) / w.sum()
    return CircularCoordinate(mod1(theta), tuple(range(D_all.n)))


def degree_table(truth, thetas, names=None):
    """Fitted degrees of each coordinate against ground-truth angle columns.

    Columns holding only a few integer values are read as piece labels (which
    circle, which copy); the angles are then fitted separately on every piece.
    Returns (header, rows), one row per coordinate plus its worst correlation.
    """
    truth = np.atleast_2d(np.asarray(truth, dtype=float))
    names = list(names) if names else [f"t{k}" for k in range(truth.shape[1])]
    is_label = [np.all(col == np.round(col)) and len(np.unique(col)) <= 8 for col in truth.T]
    angles = [k for k, lab in enumerate(is_label) if not lab]
    labels = [k for k, lab in enumerate(is_label) if lab]
    if labels:
        keys = truth[:, labels]
        pieces = [(tuple(u), np.flatnonzero(np.all(keys == u, axis=1))) for u in np.unique(keys, axis=0)]
    else:
        pieces = [((), np.arange(len(truth)))]
    header = []
    for key, _ in pieces:
        tag = "".join(f"{names[k]}{int(v)}:" for k, v in zip(labels, key))
        header += [tag + names[k] for k in angles]
    rows = []
    for theta in thetas:
        theta = np.asarray(theta.theta if isinstance(theta, CircularCoordinate) else theta, dtype=float)
        row, worst = [], 1.0
        for _, idx in pieces:
            degs, corr = fit_degrees(truth[idx][:, angles], theta[idx], 2)
            row += list(degs)
            worst = min(worst, corr)
        rows.append((row, worst))
    return header, rows
