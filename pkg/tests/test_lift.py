import numpy as np
import pytest
from hypothesis import assume, given, strategies as st

from circcoords.cochains import INT, Cochain, ModP, coboundary1
from circcoords.complexes import rips_2skeleton, total_order
from circcoords.errors import InvalidInput, TorsionObstruction
from circcoords.lift import RETRY_PRIMES, lift_cocycle, prime_schedule, symmetric_representative
from circcoords.metric import PointCloud, euclidean_distances
from circcoords.persistence import persistent_cocycles
from randcx import complex_from, filtrations, three_cycle

# minimal 6-vertex triangulation of the projective plane
RP2_TRIANGLES = [(1, 2, 3), (1, 3, 4), (1, 4, 5), (1, 5, 6), (1, 2, 6),
                 (2, 3, 5), (3, 4, 6), (2, 4, 5), (3, 5, 6), (2, 4, 6)]


def rp2():
    tris = {tuple(sorted(v - 1 for v in t)) for t in RP2_TRIANGLES}
    edges = {e for a, b, c in tris for e in ((a, b), (a, c), (b, c))}
    return complex_from([(v,) for v in range(6)] + sorted(edges) + sorted(tris))


def test_symmetric_representative():
    assert symmetric_representative(46, 47) == -1
    assert symmetric_representative(1, 47) == 1
    assert symmetric_representative(23, 47) == 23
    assert symmetric_representative(24, 47) == -23
    assert symmetric_representative(1, 2) == 1


def test_three_cycle_lift():
    out = lift_cocycle(Cochain(1, ModP(47), {3: 1}), three_cycle())
    assert out.cocycle == Cochain(1, INT, {3: 1}) and out.prime_used == 47


def test_rejects_non_cocycle_and_wrong_ring():
    cx = complex_from([(0,), (1,), (2,), (0, 1), (0, 2), (1, 2), (0, 1, 2)])
    with pytest.raises(InvalidInput):
        lift_cocycle(Cochain(1, ModP(5), {3: 1}), cx)
    with pytest.raises(InvalidInput):
        lift_cocycle(Cochain(1, INT, {3: 1}), cx)


def test_rp2_shape():
    cx = rp2()
    counts = np.bincount(cx.dims)
    assert counts.tolist() == [6, 15, 10]
    assert counts[0] - counts[1] + counts[2] == 1


def test_rp2_torsion_at_two():
    cx = rp2()
    classes = persistent_cocycles(cx, 2).in_dimension(1)
    assert len(classes) == 1
    with pytest.raises(TorsionObstruction) as err:
        lift_cocycle(classes[0].representative, cx)
    assert err.value.prime == 2 and err.value.stage == "lift"
    assert len(err.value.defect) > 0
    # no 1-dimensional class survives away from 2
    for p in (3, 47):
        assert persistent_cocycles(cx, p).in_dimension(1) == []


def test_prime_schedule():
    assert prime_schedule(47) == RETRY_PRIMES
    assert prime_schedule(2) == (2,) + RETRY_PRIMES
    assert prime_schedule(53) == (53, 47, 59, 61)


@given(filtrations(), st.sampled_from([2, 3, 5, 47, 61]))
def test_round_trip_and_bound(f, p):
    for iv in persistent_cocycles(f, p).in_dimension(1, include_zero=True):
        stop = len(f) if iv.death_index is None else iv.death_index
        sub = f.head(stop)
        alpha = iv.representative.restrict(sub)
        try:
            out = lift_cocycle(alpha, sub)
        except TorsionObstruction:
            assume(False)
        assert out.cocycle.reduce(p) == alpha
        bound = 1 if p == 2 else (p - 1) // 2
        assert all(abs(c) <= bound for c in out.cocycle.values.values())
        assert len(coboundary1(out.cocycle, sub)) == 0


@pytest.mark.parametrize("seed", range(50))
def test_annulus_never_obstructed(seed):
    rng = np.random.default_rng(seed)
    t = rng.random(80)
    rad = 1 + 0.3 * rng.random(80)
    pts = np.column_stack([rad * np.cos(2 * np.pi * t), rad * np.sin(2 * np.pi * t)])
    f = total_order(rips_2skeleton(euclidean_distances(PointCloud(pts)), 0.8))
    dgm = persistent_cocycles(f)
    top = dgm.sorted_by_length(1)[0]
    delta = 0.5 * (top.birth + min(top.death, f.values[-1]))
    sub = f.prefix(delta)
    lift_cocycle(top.representative.restrict(sub), sub)
