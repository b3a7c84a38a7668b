"""Filtered Rips and lazy witness 2-skeleta, and their total order.

Simplices are sorted vertex tuples. Facets of a simplex are listed in
removal order: facet ``t`` drops vertex ``t`` and carries sign ``(-1)**t``
in the coboundary.
"""

from dataclasses import dataclass, field
from functools import cached_property

import numpy as np

from .errors import InvalidComplex, InvalidInput
from .metric import DistanceMatrix, LandmarkSet


@dataclass
class FilteredComplex:
    """Unordered filtered 2-skeleton. ``vertex_labels[v]`` maps complex vertex
    ``v`` back to a point index (landmarks for witness complexes)."""

    simplices: list
    vertex_count: int
    vertex_labels: tuple = None

    def __post_init__(self):
        if self.vertex_labels is None:
            self.vertex_labels = tuple(range(self.vertex_count))

    def __len__(self):
        return len(self.simplices)


def facets_of(simplex):
    return [simplex[:t] + simplex[t + 1:] for t in range(len(simplex))] if len(simplex) > 1 else []


@dataclass(frozen=True, eq=False)
class OrderedFiltration:
    simplices: tuple
    values: np.ndarray
    facets: tuple
    vertex_count: int
    vertex_labels: tuple = field(default=None)

    def __len__(self):
        return len(self.simplices)

    @cached_property
    def dims(self):
        return np.fromiter((len(s) - 1 for s in self.simplices), dtype=np.int8, count=len(self))

    @cached_property
    def index(self):
        return {s: k for k, s in enumerate(self.simplices)}

    def indices_of_dim(self, dim):
        return np.flatnonzero(self.dims == dim)

    @cached_property
    def vertex_indices(self):
        return self.indices_of_dim(0)

    @cached_property
    def edge_indices(self):
        return self.indices_of_dim(1)

    @cached_property
    def triangle_indices(self):
        return self.indices_of_dim(2)

    @cached_property
    def edge_facets(self):
        """(E, 2) array of (head, tail) vertex simplex indices; d0 f = f[head] - f[tail]."""
        e = self.edge_indices
        out = np.empty((len(e), 2), dtype=np.int64)
        for row, k in enumerate(e):
            out[row] = self.facets[k]
        return out

    @cached_property
    def triangle_facets(self):
        """(T, 3) array of (bc, ac, ab) edge simplex indices."""
        t = self.triangle_indices
        out = np.empty((len(t), 3), dtype=np.int64)
        for row, k in enumerate(t):
            out[row] = self.facets[k]
        return out

    def prefix(self, delta):
        """Subcomplex of simplices with value <= delta (a prefix of the order)."""
        stop = int(np.searchsorted(self.values, delta, side="right"))
        return self.head(stop)

    def head(self, stop):
        return OrderedFiltration(self.simplices[:stop], self.values[:stop],
                                 self.facets[:stop], self.vertex_count, self.vertex_labels)

    def critical_values(self):
        return np.unique(self.values)

    def label(self, k):
        """Simplex ``k`` in point-index labels."""
        return tuple(self.vertex_labels[v] for v in self.simplices[k])

    def dump(self):
        lines = []
        for s, v in zip(self.simplices, self.values):
            lines.append(" ".join([repr(float(v))] + [str(self.vertex_labels[x]) for x in s]))
        return "\n".join(lines) + ("\n" if lines else "")


def _edges_and_triangles(edge_value, present, vertex_count):
    """Assemble a 2-skeleton whose triangles take the max of their edge values."""
    n = vertex_count
    simplices = [((v,), 0.0) for v in range(n)]
    a_idx, b_idx = np.nonzero(np.triu(present, 1))
    for a, b in zip(a_idx.tolist(), b_idx.tolist()):
        simplices.append(((a, b), float(edge_value[a, b])))
    return simplices, a_idx, b_idx


def _triangles(edge_value, present, a_idx, b_idx, r_max):
    out = []
    n = present.shape[0]
    for a, b in zip(a_idx.tolist(), b_idx.tolist()):
        if b + 1 >= n:
            continue
        common = np.flatnonzero(present[a, b + 1:] & present[b, b + 1:]) + b + 1
        for c in common.tolist():
            v = max(edge_value[a, b], edge_value[a, c], edge_value[b, c])
            if v <= r_max:
                out.append(((a, b, c), float(v)))
    return out


def rips_2skeleton(D: DistanceMatrix, r_max: float) -> FilteredComplex:
    if r_max < 0:
        raise InvalidInput("r_max must be nonnegative")
    d = D.d
    present = d <= r_max
    np.fill_diagonal(present, False)
    simplices, a_idx, b_idx = _edges_and_triangles(d, present, D.n)
    simplices.extend(_triangles(d, present, a_idx, b_idx, r_max))
    return FilteredComplex(simplices, D.n)


def witness_values(D_all: DistanceMatrix, landmarks, nu: int = 1) -> np.ndarray:
    """Lazy witness edge entry values between every pair of landmarks."""
    if nu not in (0, 1, 2):
        raise InvalidInput("nu must be 0, 1 or 2")
    idx = np.asarray(landmarks.indices if isinstance(landmarks, LandmarkSet) else landmarks, dtype=int)
    L = len(idx)
    if L == 0 or idx.min() < 0 or idx.max() >= D_all.n:
        raise InvalidInput("landmark indices out of range")
    to_lm = D_all.d[:, idx]
    if nu == 0:
        m = np.zeros(D_all.n)
    elif nu > L:
        raise InvalidInput("nu exceeds the number of landmarks")
    else:
        m = np.partition(to_lm, nu - 1, axis=1)[:, nu - 1]
    ev = np.zeros((L, L))
    for a in range(L - 1):
        both = np.maximum(to_lm[:, a:a + 1], to_lm[:, a + 1:]) - m[:, None]
        ev[a, a + 1:] = np.maximum(0.0, both.min(axis=0))
    return ev + ev.T


def witness_2skeleton(D_all: DistanceMatrix, L: LandmarkSet, nu: int = 1, r_max: float = np.inf) -> FilteredComplex:
    if r_max < 0:
        raise InvalidInput("r_max must be nonnegative")
    ev = witness_values(D_all, L, nu)
    k = ev.shape[0]
    present = ev <= r_max
    np.fill_diagonal(present, False)
    simplices, a_idx, b_idx = _edges_and_triangles(ev, present, k)
    simplices.extend(_triangles(ev, present, a_idx, b_idx, r_max))
    return FilteredComplex(simplices, k, tuple(int(i) for i in L.indices))


def total_order(complex: FilteredComplex) -> OrderedFiltration:
    """Sort by (value, dimension, vertex tuple) and resolve facet indices."""
    values = {}
    for s, v in complex.simplices:
        s = tuple(s)
        if len(s) == 0 or len(s) > 3 or any(x >= y for x, y in zip(s, s[1:])):
            raise InvalidComplex(f"malformed simplex {s}")
        if s in values:
            raise InvalidComplex(f"duplicate simplex {s}")
        if not v >= 0 or not np.isfinite(v):
            raise InvalidComplex(f"bad filtration value {v} on {s}")
        values[s] = float(v)
    for s, v in values.items():
        for f in facets_of(s):
            if f not in values:
                raise InvalidComplex(f"face {f} of {s} is missing")
            if values[f] > v:
                raise InvalidComplex(f"face {f} enters after {s}")
    order = sorted(values, key=lambda s: (values[s], len(s), s))
    index = {s: k for k, s in enumerate(order)}
    facets = tuple(tuple(index[f] for f in facets_of(s)) for s in order)
    vals = np.fromiter((values[s] for s in order), dtype=float, count=len(order))
    filt = OrderedFiltration(tuple(order), vals, facets, complex.vertex_count, tuple(complex.vertex_labels))
    filt.__dict__["index"] = index
    return filt
