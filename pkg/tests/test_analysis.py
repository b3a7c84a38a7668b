import numpy as np
import pytest
from hypothesis import given, strategies as st

from circcoords.analysis import circular_correlation, correlate, degree_between, degree_table, extend_to_points, fit_degrees, histogram
from circcoords.circularize import CircularCoordinate, mod1
from circcoords.complexes import total_order, witness_2skeleton
from circcoords.datasets import DatasetSpec, generate
from circcoords.errors import InvalidInput, UnreliableDegree
from circcoords.metric import euclidean_distances, maxmin_landmarks

GRID = np.arange(40) / 40
ORDER = np.arange(40)


def test_degree_examples():
    assert degree_between(GRID, GRID, ORDER) == 1
    assert degree_between(GRID, np.full(40, 0.3), ORDER) == 0
    assert degree_between(GRID, mod1(2 * GRID), ORDER) == 2
    assert degree_between(GRID, mod1(1 - GRID), ORDER) == -1


def test_degree_refuses_big_gaps():
    with pytest.raises(UnreliableDegree):
        degree_between(np.array([0.0, 0.5]), np.array([0.0, 0.1]), [0, 1])
    with pytest.raises(InvalidInput):
        degree_between(GRID, GRID, [0, 0, 1])


@given(st.sampled_from(["noisy_circle", "trefoil_knot", "high_dim_loop"]), st.integers(0, 500))
def test_degree_of_ground_truth(kind, seed):
    t = generate(DatasetSpec(kind, 200, seed=seed, dim=8)).truth[:, 0]
    order = np.argsort(t)
    assert degree_between(t, t, order) == 1
    assert degree_between(t, mod1(-t), order) == -1


def test_histogram_examples():
    n = 16
    assert histogram(np.arange(n) / n, n).tolist() == [1] * n
    assert histogram(np.zeros(7), 10).tolist() == [7] + [0] * 9
    assert histogram([0.05, 0.15, 0.95], 10).tolist() == [1, 1, 0, 0, 0, 0, 0, 0, 0, 1]
    with pytest.raises(InvalidInput):
        histogram([0.1], 0)


@given(st.lists(st.floats(0, 1, exclude_max=True), max_size=50), st.integers(1, 30))
def test_histogram_total(theta, bins):
    assert histogram(theta, bins).sum() == len(theta)


def test_correlate_and_fit():
    rng = np.random.default_rng(0)
    t = rng.random(300)
    theta = mod1(0.2 - t + 0.01 * rng.normal(size=300))
    rep = correlate(t, theta)
    assert rep.degree == -1 and rep.coefficient > 0.99
    assert rep.scatter.shape == (300, 2)
    degs, c = fit_degrees(np.column_stack([t, rng.random(300)]), theta)
    assert degs == (-1, 0) and c > 0.99
    assert circular_correlation(t, rng.random(300), 1) < 0.2


def test_correlate_common_points_only():
    a = np.array([0.0, 0.2, 0.4, 0.6, 0.8, np.nan])
    b = np.array([0.0, 0.2, 0.4, 0.6, np.nan, 0.1])
    rep = correlate(a, b)
    assert len(rep.scatter) == 4 and rep.degree == 1


def landmark_circle():
    data = generate(DatasetSpec("noisy_circle", 120, noise=0.0, seed=1))
    D = euclidean_distances(data.cloud)
    L = maxmin_landmarks(D, 30)
    cx = total_order(witness_2skeleton(D, L, nu=1, r_max=0.5))
    truth = data.truth[:, 0]
    theta = CircularCoordinate(truth[list(L.indices)], L.indices, cx)
    return D, L, theta, truth


def test_extend_nearest_copies_landmarks():
    D, L, theta, _ = landmark_circle()
    full = extend_to_points(theta, D)
    assert len(full) == D.n and full.labels == tuple(range(D.n))
    assert np.array_equal(full.theta[list(L.indices)], theta.theta)


def test_extend_interpolate_is_closer():
    D, L, theta, truth = landmark_circle()
    near = extend_to_points(theta, D, "nearest")
    interp = extend_to_points(theta, D, "interpolate")
    err = lambda c: np.mean(np.abs(np.angle(np.exp(2j * np.pi * (c.theta - truth)))))
    assert err(interp) < err(near)
    assert np.allclose(interp.theta[list(L.indices)], theta.theta, atol=1e-9)
    with pytest.raises(InvalidInput):
        extend_to_points(theta, D, "cubic")


def test_degree_table_fits_each_piece():
    rng = np.random.default_rng(2)
    side = rng.integers(0, 2, 400)
    t = rng.random(400)
    truth = np.column_stack([side, t])
    on_first = np.where(side == 0, t, 0.3)
    on_second = np.where(side == 1, mod1(-t), 0.6)
    header, rows = degree_table(
        truth, [on_first, on_second], ("circle", "angle"))
    assert header == ["circle0:angle", "circle1:angle"]
    assert [r for r, _ in rows] == [[1, 0], [0, -1]]
    assert min(c for _, c in rows) > 0.99
