"""Point clouds, distance matrices and landmark selection."""

from dataclasses import dataclass

import numpy as np
from scipy.spatial.distance import pdist, squareform

from .errors import InvalidInput

UNIT_NORM_TOL = 1e-9


@dataclass(frozen=True)
class PointCloud:
    """``points`` is an (n, N) float array. With ``is_complex`` the columns are
    read as (re, im) pairs of N/2 complex coordinates."""

    points: np.ndarray
    is_complex: bool = False

    def __post_init__(self):
        pts = np.asarray(self.points, dtype=float)
        if pts.ndim == 1:
            pts = pts.reshape(-1, 1)
        if pts.ndim != 2 or pts.shape[0] == 0:
            raise InvalidInput("point cloud must be a nonempty 2-d array")
        if not np.all(np.isfinite(pts)):
            raise InvalidInput("point cloud has non-finite entries")
        if self.is_complex and pts.shape[1] % 2:
            raise InvalidInput("complex point cloud needs an even ambient dimension")
        object.__setattr__(self, "points", pts)

    def __len__(self):
        return self.points.shape[0]

    @property
    def dimension(self):
        return self.points.shape[1]

    def as_complex(self):
        """Return the (n, N/2) complex array ``re + 1j*im``."""
        if not self.is_complex:
            raise InvalidInput("point cloud has no complex interpretation")
        return self.points[:, 0::2] + 1j * self.points[:, 1::2]

    @classmethod
    def from_complex(cls, z):
        z = np.asarray(z, dtype=complex)
        pts = np.empty((z.shape[0], 2 * z.shape[1]))
        pts[:, 0::2] = z.real
        pts[:, 1::2] = z.imag
        return cls(pts, is_complex=True)


@dataclass(frozen=True)
class DistanceMatrix:
    d: np.ndarray

    def __post_init__(self):
        d = np.asarray(self.d, dtype=float)
        if d.ndim != 2 or d.shape[0] != d.shape[1] or d.shape[0] == 0:
            raise InvalidInput("distance matrix must be square and nonempty")
        if not np.all(np.isfinite(d)) or np.any(d < 0):
            raise InvalidInput("distances must be finite and nonnegative")
        if not np.array_equal(d, d.T) or np.any(np.diag(d) != 0):
            raise InvalidInput("distance matrix must be symmetric with zero diagonal")
        object.__setattr__(self, "d", d)

    @property
    def n(self):
        return self.d.shape[0]

    def __len__(self):
        return self.n

    def submatrix(self, indices):
        idx = np.asarray(indices, dtype=int)
        return DistanceMatrix(self.d[np.ix_(idx, idx)])

    @classmethod
    def from_array(cls, d, tol=1e-9):
        """Validate near-symmetry to ``tol`` and symmetrize by averaging."""
        d = np.asarray(d, dtype=float)
        if d.ndim != 2 or d.shape[0] != d.shape[1]:
            raise InvalidInput("distance matrix must be square")
        if not np.all(np.isfinite(d)):
            raise InvalidInput("distance matrix has non-finite entries")
        if np.max(np.abs(d - d.T), initial=0.0) > tol:
            raise InvalidInput("distance matrix is not symmetric")
        if np.max(np.abs(np.diag(d)), initial=0.0) > tol:
            raise InvalidInput("distance matrix has a nonzero diagonal")
        d = 0.5 * (d + d.T)
        np.fill_diagonal(d, 0.0)
        if np.any(d < 0):
            raise InvalidInput("distances must be nonnegative")
        return cls(d)


@dataclass(frozen=True)
class LandmarkSet:
    indices: tuple
    covering_radius: float

    def __len__(self):
        return len(self.indices)


def euclidean_distances(cloud: PointCloud) -> DistanceMatrix:
    if len(cloud) == 1:
        return DistanceMatrix(np.zeros((1, 1)))
    return DistanceMatrix(squareform(pdist(cloud.points)))


def _check_unit(v):
    norm = np.sqrt(np.sum(np.abs(v) ** 2))
    if abs(norm - 1.0) > UNIT_NORM_TOL:
        raise InvalidInput(f"vector is not unit length (norm {norm!r})")


def projective_distance(xi, eta) -> float:
    """Fubini-Study style distance ``arccos |<xi, eta>|`` between unit vectors."""
    xi = np.asarray(xi, dtype=complex).ravel()
    eta = np.asarray(eta, dtype=complex).ravel()
    if xi.shape != eta.shape:
        raise InvalidInput("vectors must have the same dimension")
    _check_unit(xi)
    _check_unit(eta)
    overlap = min(1.0, max(0.0, abs(np.vdot(xi, eta))))
    return float(np.arccos(overlap))


def projective_distances(cloud: PointCloud) -> DistanceMatrix:
    """Pairwise projective distances of a complex point cloud on the unit sphere."""
    z = cloud.as_complex()
    norms = np.sqrt(np.sum(np.abs(z) ** 2, axis=1))
    if np.any(np.abs(norms - 1.0) > UNIT_NORM_TOL):
        raise InvalidInput("projective metric needs unit vectors")
    overlap = np.clip(np.abs(z.conj() @ z.T), 0.0, 1.0)
    d = np.arccos(overlap)
    d = np.triu(d, 1)
    return DistanceMatrix(d + d.T)


def maxmin_landmarks(D: DistanceMatrix, k: int, seed: int = 0) -> LandmarkSet:
    """Greedy furthest-point sampling starting at ``seed``.

    Ties go to the lowest point index.
    """
    n = D.n
    if not 1 <= k <= n:
        raise InvalidInput(f"landmark count {k} outside [1, {n}]")
    if not 0 <= seed < n:
        raise InvalidInput(f"seed index {seed} outside [0, {n})")
    chosen = [seed]
    nearest = D.d[seed].copy()
    taken = np.zeros(n, dtype=bool)
    taken[seed] = True
    for _ in range(k - 1):
        # -1 keeps duplicate points (distance 0) from re-selecting a landmark
        nxt = int(np.argmax(np.where(taken, -1.0, nearest)))
        chosen.append(nxt)
        taken[nxt] = True
        np.minimum(nearest, D.d[nxt], out=nearest)
    return LandmarkSet(tuple(chosen), float(nearest.max()))
