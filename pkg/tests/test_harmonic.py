from collections import deque

import numpy as np
import pytest
from hypothesis import given, strategies as st

from circcoords.cochains import INT, REAL, Cochain, adjoint0, coboundary0, coboundary1, edge_vector, inner, norm
from circcoords.complexes import rips_2skeleton, total_order
from circcoords.errors import InvalidInput, NotConverged
from circcoords.harmonic import LinearLeastSquaresProblem, harmonic_representative, iterative_least_squares
from circcoords.lift import lift_cocycle
from circcoords.metric import PointCloud, euclidean_distances
from circcoords.persistence import persistent_cocycles
from randcx import three_cycle


def test_three_cycle():
    h = harmonic_representative(Cochain(1, INT, {3: 1}), three_cycle())
    assert edge_vector(h.smoothed, three_cycle()) == pytest.approx([1 / 3, -1 / 3, 1 / 3], abs=1e-12)
    assert norm(h.smoothed) ** 2 == pytest.approx(1 / 3)


def test_harmonic_input_is_fixed_point():
    bar = Cochain(1, REAL, {3: 1 / 3, 4: -1 / 3, 5: 1 / 3})
    h = harmonic_representative(bar, three_cycle())
    assert edge_vector(h.smoothed, three_cycle()) == pytest.approx([1 / 3, -1 / 3, 1 / 3], abs=1e-12)
    assert h.iterations == 0


def test_coboundary_smooths_to_zero():
    cx = three_cycle()
    g = Cochain(0, INT, {0: 3, 1: -1, 2: 7})
    h = harmonic_representative(coboundary0(g, cx), cx)
    assert norm(h.smoothed) < 1e-9


def test_rejects_bad_input():
    cx = three_cycle()
    from circcoords.cochains import ModP
    with pytest.raises(InvalidInput):
        harmonic_representative(Cochain(1, ModP(5), {3: 1}), cx)
    with pytest.raises(InvalidInput):
        harmonic_representative(Cochain(0, REAL, {0: 1.0}), cx)


def solve(A, b, **kw):
    A = np.asarray(A, float)
    return iterative_least_squares(LinearLeastSquaresProblem(A.dot, A.T.dot, np.asarray(b, float), A.shape[1], **kw))


def test_lsqr_examples():
    b = np.array([3.0, -1.0, 2.0])
    assert solve(np.eye(3), b) == pytest.approx(b)
    assert solve([[1.0], [1.0]], [0.0, 2.0]) == pytest.approx([1.0])
    # zero column: any minimizer is fine, residual must be optimal
    A = np.array([[1.0, 0.0], [1.0, 0.0]])
    x = solve(A, [0.0, 2.0])
    assert x[0] == pytest.approx(1.0)


@given(st.integers(0, 2**32 - 1), st.integers(1, 8), st.integers(1, 8))
def test_lsqr_matches_dense(seed, m, n):
    rng = np.random.default_rng(seed)
    A, b = rng.normal(size=(m, n)), rng.normal(size=m)
    x = solve(A, b, tolerance=1e-12, max_iterations=200)
    ref = np.linalg.lstsq(A, b, rcond=None)[0]
    assert np.linalg.norm(A @ x - b) <= np.linalg.norm(A @ ref - b) + 1e-8


def test_not_converged_carries_best():
    rng = np.random.default_rng(0)
    pts = rng.random((40, 2))
    cx = total_order(rips_2skeleton(euclidean_distances(PointCloud(pts)), 0.3))
    a = Cochain(1, REAL, dict(coboundary0(Cochain(0, REAL, {int(k): float(rng.normal()) for k in cx.vertex_indices}), cx).values))
    with pytest.raises(NotConverged) as err:
        harmonic_representative(a, cx, tol=1e-14, max_iter=1)
    assert err.value.stage == "harmonic"
    assert err.value.best is not None and err.value.iterations >= 1


def random_cocycle(seed, n, integral=False):
    """Integer cocycle plus a random coboundary on a planar Rips complex; with
    ``integral`` the coboundary has integer coefficients too."""
    rng = np.random.default_rng(seed)
    t = rng.random(n)
    r = 1 + 0.4 * rng.random(n)
    pts = np.column_stack([r * np.cos(2 * np.pi * t), r * np.sin(2 * np.pi * t)])
    f = total_order(rips_2skeleton(euclidean_distances(PointCloud(pts)), 1.0))
    ranked = persistent_cocycles(f).sorted_by_length(1)
    if ranked:
        top = ranked[0]
        sub = f.prefix(0.5 * (top.birth + min(top.death, f.values[-1])))
        base = lift_cocycle(top.representative.restrict(sub), sub).cocycle.as_real()
    else:
        sub, base = f, Cochain(1, REAL, {})
    draw = (lambda: float(rng.integers(-3, 4))) if integral else rng.normal
    g = Cochain(0, REAL, {int(k): float(draw()) for k in sub.vertex_indices})
    dg = coboundary0(g, sub)
    keys = set(base.values) | set(dg.values)
    return Cochain(1, REAL, {k: base[k] + dg[k] for k in keys}), sub, len(base) > 0


def fundamental_cycle_defects(beta, cx):
    """Sums of ``beta`` around the fundamental cycles of a BFS spanning forest."""
    vpos = {int(v): i for i, v in enumerate(cx.vertex_indices)}
    ef = cx.edge_facets
    b = edge_vector(beta, cx)
    nbrs = {i: [] for i in vpos.values()}
    for e, (h, t) in enumerate(ef.tolist()):
        nbrs[vpos[t]].append((vpos[h], b[e]))
        nbrs[vpos[h]].append((vpos[t], -b[e]))
    g = {}
    for s in nbrs:
        if s in g:
            continue
        g[s] = 0.0
        queue = deque([s])
        while queue:
            x = queue.popleft()
            for y, step in nbrs[x]:
                if y not in g:
                    g[y] = g[x] + step
                    queue.append(y)
    return np.array([b[e] - (g[vpos[h]] - g[vpos[t]]) for e, (h, t) in enumerate(ef.tolist())])


@given(st.integers(0, 2**32 - 1), st.integers(15, 50))
def test_invariants(seed, n):
    alpha, cx, nonzero = random_cocycle(seed, n)
    h = harmonic_representative(alpha, cx)
    bar = h.smoothed
    assert norm(adjoint0(bar, cx)) <= 1e-8 * max(1.0, norm(alpha))
    assert norm(bar) <= norm(alpha) + 1e-9
    assert norm(coboundary1(bar, cx)) <= 1e-9
    diff = Cochain(1, REAL, {k: bar[k] - alpha[k] for k in set(bar.values) | set(alpha.values)})
    assert np.max(np.abs(fundamental_cycle_defects(diff, cx)), initial=0.0) <= 1e-9
    rng = np.random.default_rng(seed + 1)
    dg = coboundary0(Cochain(0, REAL, {int(k): float(rng.normal()) for k in cx.vertex_indices}), cx)
    if nonzero:
        assert abs(inner(bar, dg)) <= 1e-8 * norm(bar) * norm(dg)
    else:
        # a pure coboundary smooths to (numerically) nothing
        assert norm(bar) <= 1e-8 * max(1.0, norm(alpha))

    # dense least squares reference
    vpos = {int(v): i for i, v in enumerate(cx.vertex_indices)}
    A = np.zeros((len(cx.edge_indices), len(vpos)))
    for e, (hd, tl) in enumerate(cx.edge_facets.tolist()):
        A[e, vpos[hd]], A[e, vpos[tl]] = 1.0, -1.0
    a = edge_vector(alpha, cx)
    ref = a - A @ np.linalg.lstsq(A, a, rcond=None)[0]
    assert np.linalg.norm(edge_vector(bar, cx) - ref) <= 1e-6
