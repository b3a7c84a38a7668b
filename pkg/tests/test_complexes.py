import itertools

import numpy as np
import pytest
from hypothesis import given, strategies as st

from circcoords.complexes import FilteredComplex, rips_2skeleton, total_order, witness_2skeleton, witness_values
from circcoords.errors import InvalidComplex
from circcoords.metric import DistanceMatrix, LandmarkSet, PointCloud, euclidean_distances, maxmin_landmarks
from randcx import distance_matrices, filtrations


def by_dim(cx):
    out = {0: [], 1: [], 2: []}
    for s, v in cx.simplices:
        out[len(s) - 1].append((s, v))
    return out


def test_equilateral_triangle():
    D = DistanceMatrix(np.ones((3, 3)) - np.eye(3))
    parts = by_dim(rips_2skeleton(D, 2))
    assert [v for _, v in parts[0]] == [0, 0, 0]
    assert [v for _, v in parts[1]] == [1, 1, 1]
    assert parts[2] == [((0, 1, 2), 1.0)]
    small = by_dim(rips_2skeleton(D, 0.5))
    assert len(small[0]) == 3 and not small[1] and not small[2]


def test_triangle_takes_longest_edge():
    D = DistanceMatrix([[0, 1, 1], [1, 0, 2], [1, 2, 0]])
    assert dict(rips_2skeleton(D, 2).simplices)[(0, 1, 2)] == 2


def test_threshold_is_closed():
    D = DistanceMatrix([[0, 1], [1, 0]])
    assert len(rips_2skeleton(D, 1.0)) == 3


def line_matrix(*xs):
    return euclidean_distances(PointCloud(np.array(xs, float)[:, None]))


def test_witness_examples():
    # points 0, 2 (landmarks) and 1 (witness)
    D = line_matrix(0, 2, 1)
    L = LandmarkSet((0, 1), 0.0)
    assert witness_values(D, L, nu=0)[0, 1] == 1
    assert witness_values(D, L, nu=1)[0, 1] == 0
    alone = line_matrix(0, 2)
    assert witness_values(alone, LandmarkSet((0, 1), 0.0), nu=0)[0, 1] == 2


def test_witness_labels_are_point_indices():
    D = line_matrix(0, 1, 2, 3, 4)
    L = maxmin_landmarks(D, 3)
    cx = witness_2skeleton(D, L, nu=1, r_max=10)
    assert cx.vertex_labels == L.indices
    assert total_order(cx).label(0) == (L.indices[0],)


@given(distance_matrices(min_n=3))
def test_witness_nu0_matches_bruteforce(D):
    L = list(range(D.n))
    ev = witness_values(D, L, nu=0)
    for a, b in itertools.combinations(L, 2):
        want = min(max(D.d[a, s], D.d[b, s]) for s in range(D.n))
        assert ev[a, b] == pytest.approx(want)
        # the endpoints themselves witness at d(a, b)
        assert ev[a, b] <= D.d[a, b]


@given(distance_matrices(min_n=2, max_n=2))
def test_witness_on_two_landmarks_is_rips(D):
    ev = witness_values(D, [0, 1], nu=0)
    assert ev[0, 1] == D.d[0, 1]


@given(distance_matrices(), st.floats(0, 1.5), st.floats(0, 1.5))
def test_rips_monotone(D, r1, r2):
    lo, hi = sorted((r1, r2))
    small = dict(rips_2skeleton(D, lo).simplices)
    big = dict(rips_2skeleton(D, hi).simplices)
    assert set(small) <= set(big)
    assert all(big[s] == v for s, v in small.items())


@given(distance_matrices(), st.floats(0, 1.5))
def test_rips_triangle_rule(D, r):
    vals = dict(rips_2skeleton(D, r).simplices)
    for t in itertools.combinations(range(D.n), 3):
        edges = [D.d[a, b] for a, b in itertools.combinations(t, 2)]
        if max(edges) <= r:
            assert vals[t] == max(edges)
        else:
            assert t not in vals


def test_total_order_ties():
    cx = FilteredComplex([((0,), 1.0), ((1,), 0.0), ((2,), 0.0), ((0, 2), 1.0), ((0, 1), 1.0)], 3)
    f = total_order(cx)
    assert f.simplices == ((1,), (2,), (0,), (0, 1), (0, 2))


def test_total_order_rejects_bad_input():
    with pytest.raises(InvalidComplex):
        total_order(FilteredComplex([((0, 1), 1.0), ((0,), 0.0)], 2))
    with pytest.raises(InvalidComplex):
        total_order(FilteredComplex([((0,), 2.0), ((1,), 0.0), ((0, 1), 1.0)], 2))
    with pytest.raises(InvalidComplex):
        total_order(FilteredComplex([((1, 0), 1.0)], 2))


@given(filtrations())
def test_total_order_properties(f):
    assert np.all(np.diff(f.values) >= 0)
    for k, fs in enumerate(f.facets):
        assert all(i < k for i in fs)
        assert len(fs) == len(f.simplices[k]) * (len(f.simplices[k]) > 1)
    # idempotent on its own output
    again = total_order(FilteredComplex(list(zip(f.simplices, f.values)), f.vertex_count))
    assert again.simplices == f.simplices


@given(filtrations(), st.floats(0, 6))
def test_prefix_is_sublevel_set(f, delta):
    sub = f.prefix(delta)
    assert set(sub.simplices) == {s for s, v in zip(f.simplices, f.values) if v <= delta}


def test_dump_format():
    f = total_order(FilteredComplex([((0,), 0.0), ((1,), 0.0), ((0, 1), 0.5)], 2))
    assert f.dump() == "0.0 0\n0.0 1\n0.5 0 1\n"
