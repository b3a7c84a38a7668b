"""Circle-valued vertex coordinates from potentials or real cocycles."""

from collections import deque
from dataclasses import dataclass

import numpy as np

from .cochains import Cochain, edge_vector, vertex_vector
from .errors import InvalidInput, NonIntegralClass

CONSISTENCY_TOL = 1e-6


@dataclass
class CircularCoordinate:
    """``theta[v]`` in [0, 1) for each vertex of ``complex``; ``labels`` gives
    the point index of each entry."""

    theta: np.ndarray
    labels: tuple
    complex: object = None

    def __post_init__(self):
        self.theta = np.asarray(self.theta, dtype=float)
        if self.theta.shape != (len(self.labels),):
            raise InvalidInput("theta and labels disagree in length")
        if np.any((self.theta < 0) | (self.theta >= 1)):
            raise InvalidInput("circle values must lie in [0, 1)")

    def __len__(self):
        return len(self.theta)

    def as_dict(self):
        return dict(zip(self.labels, self.theta.tolist()))


def wrap(x):
    """Representative of ``x`` mod 1 in [-1/2, 1/2)."""
    return np.mod(np.asarray(x, dtype=float) + 0.5, 1.0) - 0.5


def mod1(x):
    y = np.mod(np.asarray(x, dtype=float), 1.0)
    # tiny negatives round up to exactly 1.0
    return np.where(y >= 1.0, 0.0, y)


def coordinates_from_potential(f: Cochain, complex=None) -> CircularCoordinate:
    """theta = f mod 1 on every vertex of ``complex`` (or on f's own support)."""
    if f.dimension != 0:
        raise InvalidInput("potential must be a 0-cochain")
    if complex is None:
        keys = f.support()
        values = np.array([float(f[k]) for k in keys])
        return CircularCoordinate(mod1(values), tuple(keys))
    values = vertex_vector(f, complex)
    labels = tuple(complex.label(k)[0] for k in complex.vertex_indices)
    return CircularCoordinate(mod1(values), labels, complex)


def edge_inconsistency(theta, alpha_bar: Cochain, complex):
    """max |wrap(theta(b) - theta(a) - alpha_bar(ab))| over edges; theta is
    aligned with ``complex.vertex_indices``."""
    ef = complex.edge_facets
    if len(ef) == 0:
        return 0.0
    vpos = np.full(len(complex), -1, dtype=np.int64)
    vpos[complex.vertex_indices] = np.arange(len(complex.vertex_indices))
    a = edge_vector(alpha_bar, complex)
    gap = wrap(theta[vpos[ef[:, 0]]] - theta[vpos[ef[:, 1]]] - a)
    return float(np.max(np.abs(gap)))


def integrate_cocycle(alpha_bar: Cochain, complex, base_vertices=None) -> CircularCoordinate:
    """Integrate a real cocycle along breadth-first (hop-count shortest path)
    trees, one per connected component.

    ``base_vertices`` optionally lists vertex simplex indices to start from;
    components without one start at their earliest vertex.
    """
    if alpha_bar.dimension != 1:
        raise InvalidInput("integrate_cocycle needs a 1-cochain")
    alpha_bar.check_on(complex)
    vidx = complex.vertex_indices
    nv = len(vidx)
    vpos = np.full(len(complex), -1, dtype=np.int64)
    vpos[vidx] = np.arange(nv)
    ef = complex.edge_facets
    a = edge_vector(alpha_bar, complex)
    nbrs = [[] for _ in range(nv)]
    for e, (head, tail) in enumerate(ef.tolist()):
        h, t = int(vpos[head]), int(vpos[tail])
        nbrs[t].append((h, a[e]))
        nbrs[h].append((t, -a[e]))

    starts = [int(vpos[b]) for b in (base_vertices or [])] + list(range(nv))
    theta = np.zeros(nv)
    seen = np.zeros(nv, dtype=bool)
    for s in starts:
        if seen[s]:
            continue
        seen[s] = True
        theta[s] = 0.0
        queue = deque([s])
        while queue:
            x = queue.popleft()
            for y, step in nbrs[x]:
                if not seen[y]:
                    seen[y] = True
                    theta[y] = theta[x] + step
                    queue.append(y)
    theta = mod1(theta)
    bad = edge_inconsistency(theta, alpha_bar, complex)
    if bad > CONSISTENCY_TOL:
        raise NonIntegralClass(f"cocycle is not cohomologous to an integer class (edge defect {bad:.3g})")
    labels = tuple(complex.label(k)[0] for k in vidx)
    return CircularCoordinate(theta, labels, complex)
