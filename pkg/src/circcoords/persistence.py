"""Persistent cohomology with explicit F_p cocycles.

The main routine sweeps the filtration once, keeping a family of live
cocycles. When a new simplex has a nonzero coboundary coefficient against
some live cocycles, the youngest of those dies and the older ones absorb
a multiple of it so they stay cocycles. Two dense oracles are included for
verification: a persistent rank computation and the textbook homology
boundary-matrix reduction.
"""

from dataclasses import dataclass, field
import math

import numpy as np

from .cochains import Cochain, ModP, inverse_mod, is_prime
from .errors import InvalidInput

DEFAULT_PRIME = 47


@dataclass
class PersistenceInterval:
    dimension: int
    birth: float
    death: float
    birth_index: int
    death_index: int = None
    representative: Cochain = None

    @property
    def is_infinite(self):
        return self.death_index is None

    def length(self, cap=None):
        """Interval length; infinite deaths are truncated at ``cap`` if given."""
        if self.is_infinite:
            return math.inf if cap is None else max(0.0, cap - self.birth)
        return self.death - self.birth

    def alive_at(self, delta):
        return self.birth <= delta < self.death

    def key(self):
        return (self.dimension, self.birth_index, self.death_index)


@dataclass
class PersistenceDiagram:
    """``pairs`` holds every interval including zero-length ones;
    :attr:`intervals` is the reported diagram."""

    pairs: list
    prime: int
    filtration: object = field(repr=False, default=None)

    @property
    def intervals(self):
        return [iv for iv in self.pairs if iv.birth < iv.death]

    def in_dimension(self, dim, include_zero=False):
        src = self.pairs if include_zero else self.intervals
        return [iv for iv in src if iv.dimension == dim]

    def max_value(self):
        return float(self.filtration.values[-1]) if self.filtration is not None and len(self.filtration) else 0.0

    def sorted_by_length(self, dim=1):
        """Dim-``dim`` intervals, longest first; infinite ones are capped at the
        last filtration value."""
        cap = self.max_value()
        return sorted(self.in_dimension(dim),
                      key=lambda iv: (-iv.length(cap), not iv.is_infinite, iv.birth, iv.birth_index))


def persistent_cocycles(filtration, p: int = DEFAULT_PRIME) -> PersistenceDiagram:
    """Dimension 0 and 1 persistence intervals with representative cocycles over F_p."""
    if not is_prime(p):
        raise InvalidInput(f"{p} is not prime")
    dims = filtration.dims.tolist()
    facets = filtration.facets
    values = filtration.values
    cocycles = {}   # birth index -> {simplex index: coefficient}
    touching = {}   # simplex index -> live cocycles nonzero on it
    pairs = []
    inv = [0] + [inverse_mod(a, p) for a in range(1, p)]

    for k, dim in enumerate(dims):
        if dim == 0:
            cocycles[k] = {k: 1}
            touching[k] = {k}
            continue
        fs = facets[k]
        candidates = set()
        for f in fs:
            candidates.update(touching.get(f, ()))
        coeffs = {}
        for i in candidates:
            a = cocycles[i]
            c = 0
            sign = 1
            for f in fs:
                c += sign * a.get(f, 0)
                sign = -sign
            c %= p
            if c:
                coeffs[i] = c
        if not coeffs:
            if dim == 1:
                cocycles[k] = {k: 1}
                touching[k] = {k}
            continue

        j = max(coeffs)
        dying = cocycles.pop(j)
        for t in dying:
            touching[t].discard(j)
        scale = inv[coeffs[j]]
        for i, c in coeffs.items():
            if i == j:
                continue
            r = c * scale % p
            live = cocycles[i]
            for t, v in dying.items():
                nv = (live.get(t, 0) - r * v) % p
                if nv:
                    if t not in live:
                        touching[t].add(i)
                    live[t] = nv
                elif t in live:
                    del live[t]
                    touching[t].discard(i)
        pairs.append(PersistenceInterval(
            dim - 1, float(values[j]), float(values[k]), j, k,
            Cochain(dim - 1, ModP(p), dying)))

    for i in sorted(cocycles):
        pairs.append(PersistenceInterval(
            dims[i], float(values[i]), math.inf, i, None,
            Cochain(dims[i], ModP(p), cocycles[i])))
    pairs.sort(key=lambda iv: (iv.dimension, iv.birth_index))
    return PersistenceDiagram(pairs, p, filtration)


def live_cocycles_at(diagram: PersistenceDiagram, delta: float) -> list:
    """Dimension-1 intervals alive at ``delta``, longest first."""
    alive = [iv for iv in diagram.in_dimension(1) if iv.alive_at(delta)]
    return sorted(alive, key=lambda iv: (-iv.length(), iv.birth, iv.birth_index))


def suggest_delta(diagram: PersistenceDiagram, top: int = 1):
    """A scale at which the ``top`` longest dim-1 intervals are all alive, or
    None if they never coexist.

    Within their common lifetime the alive count is piecewise constant; the
    result is the midpoint of the longest piece with the fewest other
    intervals alive. Infinite deaths count as the last filtration value.
    """
    ranked = diagram.sorted_by_length(1)[:top]
    if len(ranked) < top or top < 1:
        return None
    cap = diagram.max_value()
    lo = max(iv.birth for iv in ranked)
    hi = min(iv.death for iv in ranked)
    if math.isinf(hi):
        hi = max(lo, cap)
        closed = True
    elif lo < hi:
        closed = False
    else:
        return None
    others = diagram.in_dimension(1)
    cuts = sorted({lo, hi} | {x for iv in others for x in (iv.birth, iv.death) if lo < x < hi})
    if len(cuts) == 1:
        return lo
    best = None
    for a, b in zip(cuts, cuts[1:]):
        count = sum(1 for iv in others if iv.alive_at(a))
        key = (count, -(b - a))
        if best is None or key < best[0]:
            best = (key, 0.5 * (a + b))
    if closed:
        count = sum(1 for iv in others if iv.alive_at(hi))
        if count < best[0][0]:
            best = ((count, 0.0), hi)
    return best[1]


# ---------------------------------------------------------------------------
# dense F_p linear algebra for the oracles

def _row_reduce(M, p):
    """Reduced row echelon form mod p; returns (matrix, pivot columns)."""
    A = np.array(M, dtype=np.int64) % p
    rows, cols = A.shape
    pivots = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.flatnonzero(A[r:, c])
        if len(nz) == 0:
            continue
        s = r + nz[0]
        if s != r:
            A[[r, s]] = A[[s, r]]
        A[r] = A[r] * inverse_mod(int(A[r, c]), p) % p
        col = A[:, c].copy()
        col[r] = 0
        nzr = np.flatnonzero(col)
        if len(nzr):
            A[nzr] = (A[nzr] - np.outer(col[nzr], A[r])) % p
        pivots.append(c)
        r += 1
    return A, pivots


def rank_mod_p(M, p):
    M = np.asarray(M)
    if M.size == 0:
        return 0
    return len(_row_reduce(M, p)[1])


def nullspace_mod_p(M, p):
    """Basis of {x : M x = 0 mod p} as columns of an (ncols, k) array."""
    M = np.asarray(M, dtype=np.int64)
    ncols = M.shape[1]
    if M.shape[0] == 0:
        return np.eye(ncols, dtype=np.int64)
    R, pivots = _row_reduce(M, p)
    free = [c for c in range(ncols) if c not in set(pivots)]
    basis = np.zeros((ncols, len(free)), dtype=np.int64)
    for b, fc in enumerate(free):
        basis[fc, b] = 1
        for r, pc in enumerate(pivots):
            basis[pc, b] = (-R[r, fc]) % p
    return basis


def coboundary_matrix(filtration, dim):
    """Dense matrix of d_dim : C^dim -> C^(dim+1) on ``filtration``."""
    rows = filtration.indices_of_dim(dim + 1)
    cols = filtration.indices_of_dim(dim)
    pos = {int(k): c for c, k in enumerate(cols)}
    M = np.zeros((len(rows), len(cols)), dtype=np.int64)
    for r, k in enumerate(rows):
        for t, f in enumerate(filtration.facets[k]):
            M[r, pos[f]] += (-1) ** t
    return M


def persistent_rank_oracle(filtration, p: int, i: float, j: float, dim: int = 1) -> int:
    """Rank of the restriction H^dim(X^j; F_p) -> H^dim(X^i; F_p), i <= j."""
    if i > j:
        raise InvalidInput("need i <= j")
    Xi, Xj = filtration.prefix(i), filtration.prefix(j)
    Z = nullspace_mod_p(coboundary_matrix(Xj, dim), p)
    keep = np.flatnonzero(Xj.indices_of_dim(dim) < len(Xi))
    Z = Z[keep]
    if dim == 0:
        return rank_mod_p(Z, p)
    B = coboundary_matrix(Xi, dim - 1)
    if Z.shape[1] == 0:
        return 0
    return rank_mod_p(np.hstack([B, Z]), p) - rank_mod_p(B, p)


def homology_pairs(filtration, p: int):
    """Standard persistent homology column reduction over F_p.

    Returns a sorted list of (dimension, birth_index, death_index or None)
    for dimensions 0 and 1.
    """
    dims = filtration.dims.tolist()
    lows = {}        # pivot row -> reduced column
    pivot_of = {}    # pivot row -> column index
    paired = set()
    out = []
    for k, fs in enumerate(filtration.facets):
        col = {}
        for t, f in enumerate(fs):
            col[f] = (col.get(f, 0) + (-1) ** t) % p
        col = {r: v for r, v in col.items() if v}
        while col:
            low = max(col)
            if low not in lows:
                break
            other = lows[low]
            r = col[low] * inverse_mod(other[low], p) % p
            for row, v in other.items():
                nv = (col.get(row, 0) - r * v) % p
                if nv:
                    col[row] = nv
                else:
                    col.pop(row, None)
        if col:
            low = max(col)
            lows[low] = col
            pivot_of[low] = k
            paired.add(low)
            paired.add(k)
            out.append((dims[low], low, k))
    for k, d in enumerate(dims):
        if k not in paired and d <= 1:
            out.append((d, k, None))
    return sorted(out, key=lambda x: (x[0], x[1]))
