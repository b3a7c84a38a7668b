"""Seeded synthetic point clouds with known circular structure.

Noise follows the experiments it imitates: each ambient coordinate gets an
independent uniform draw from [0, noise]. ``centered=True`` draws from
[-noise/2, noise/2] instead. Ground-truth parameters are fractions of a
turn in [0, 1).
"""

from dataclasses import dataclass

import numpy as np

from .errors import InvalidInput
from .metric import PointCloud

KINDS = ("noisy_circle", "trefoil_knot", "conjoined_circles", "disjoint_circles",
         "torus", "double_torus", "elliptic_curve", "high_dim_loop")

DEFAULT_NOISE = {
    "noisy_circle": 0.4,
    "trefoil_knot": 0.2,
    "conjoined_circles": 0.3,
    "disjoint_circles": 0.5,
    "torus": 0.2,
    "double_torus": 0.0,
    "elliptic_curve": 0.0,
    "high_dim_loop": 0.0,
}

TORUS_R, TORUS_r = 3.0, 1.0
KNOT_R, KNOT_r = 2.0, 1.0
SLICE_PLANE = 3.7


@dataclass(frozen=True)
class DatasetSpec:
    kind: str
    n: int
    noise: float = None
    seed: int = 0
    centered: bool = False
    dim: int = 1000    # ambient dimension, high_dim_loop only

    def __post_init__(self):
        if self.kind not in KINDS:
            raise InvalidInput(f"unknown dataset {self.kind!r}; choose from {', '.join(KINDS)}")
        if self.n < 1:
            raise InvalidInput("n must be at least 1")
        if self.noise is None:
            object.__setattr__(self, "noise", DEFAULT_NOISE[self.kind])
        if self.noise < 0:
            raise InvalidInput("noise must be nonnegative")


@dataclass
class Dataset:
    """``truth`` is an (n, k) array of ground-truth parameters with column
    names ``truth_names``; ``clean`` holds the noiseless coordinates."""

    cloud: PointCloud
    truth: np.ndarray = None
    truth_names: tuple = ()
    clean: np.ndarray = None

    @property
    def points(self):
        return self.cloud.points


def _noise(rng, shape, width, centered):
    jitter = rng.uniform(0.0, width, size=shape)
    return jitter - width / 2 if centered else jitter


def torus_embedding(u, v, R=TORUS_R, r=TORUS_r):
    """Angle fractions (u around the axis, v around the tube) to R^3."""
    a, b = 2 * np.pi * u, 2 * np.pi * v
    rad = R + r * np.cos(b)
    return np.column_stack([rad * np.cos(a), rad * np.sin(a), r * np.sin(b)])


def noisy_circle(spec, rng):
    t = rng.random(spec.n)
    clean = np.column_stack([np.cos(2 * np.pi * t), np.sin(2 * np.pi * t)])
    return clean, t[:, None], ("angle",)


def trefoil_knot(spec, rng):
    t = rng.random(spec.n)
    clean = torus_embedding(2 * t, 3 * t, KNOT_R, KNOT_r)
    return clean, t[:, None], ("knot_parameter",)


def _two_circles(spec, rng, centre):
    side = rng.integers(0, 2, spec.n)
    t = rng.random(spec.n)
    cx = np.where(side == 0, -centre, centre)
    clean = np.column_stack([cx + np.cos(2 * np.pi * t), np.sin(2 * np.pi * t)])
    return clean, np.column_stack([side, t]), ("circle", "angle")


def torus(spec, rng):
    uv = rng.random((spec.n, 2))
    return torus_embedding(uv[:, 0], uv[:, 1]), uv, ("longitude", "meridian")


def double_torus(spec, rng):
    """Sample a torus, drop the cap beyond the plane x = 3.7, and add the mirror
    image of what is left in that plane. ``n`` counts torus samples before
    slicing; the result has about 2n points."""
    uv = rng.random((spec.n, 2))
    clean = torus_embedding(uv[:, 0], uv[:, 1])
    keep = clean[:, 0] <= SLICE_PLANE
    clean, uv = clean[keep], uv[keep]
    mirror = clean.copy()
    mirror[:, 0] = 2 * SLICE_PLANE - mirror[:, 0]
    side = np.r_[np.zeros(len(clean)), np.ones(len(clean))]
    truth = np.column_stack([side, np.r_[uv[:, 0], uv[:, 0]], np.r_[uv[:, 1], uv[:, 1]]])
    return np.vstack([clean, mirror]), truth, ("copy", "longitude", "meridian")


def elliptic_curve(spec, rng):
    """Points of x^2 y + y^2 z + z^2 x = 0 on the unit sphere of C^3."""
    out = np.empty((spec.n, 3), dtype=complex)
    filled = 0
    while filled < spec.n:
        m = spec.n - filled
        x = rng.normal(size=m) + 1j * rng.normal(size=m)
        y = rng.normal(size=m) + 1j * rng.normal(size=m)
        pick = rng.integers(0, 2, m)
        # x z^2 + y^2 z + x^2 y = 0
        disc = np.sqrt(y ** 4 - 4 * x ** 3 * y)
        z = (-y ** 2 + np.where(pick == 0, disc, -disc)) / (2 * x)
        xi = np.column_stack([x, y, z])
        xi /= np.linalg.norm(xi, axis=1, keepdims=True)
        ok = (np.abs(x) > 1e-3) & np.all(np.isfinite(xi), axis=1)
        ok &= np.abs(xi[:, 0] ** 2 * xi[:, 1] + xi[:, 1] ** 2 * xi[:, 2] + xi[:, 2] ** 2 * xi[:, 0]) <= 1e-12
        good = xi[ok]
        out[filled:filled + len(good)] = good
        filled += len(good)
    return out


def high_dim_loop(spec, rng):
    t = rng.random(spec.n)
    feats = np.column_stack([np.cos(2 * np.pi * t), np.sin(2 * np.pi * t),
                             np.cos(4 * np.pi * t), np.sin(4 * np.pi * t)])
    q, _ = np.linalg.qr(rng.normal(size=(spec.dim, 4)))
    return feats @ q.T, t[:, None], ("angle",)


_REAL = {
    "noisy_circle": noisy_circle,
    "trefoil_knot": trefoil_knot,
    "conjoined_circles": lambda spec, rng: _two_circles(spec, rng, 1.0),
    "disjoint_circles": lambda spec, rng: _two_circles(spec, rng, 2.0),
    "torus": torus,
    "double_torus": double_torus,
    "high_dim_loop": high_dim_loop,
}


def reconstruct(kind, truth):
    """Noiseless coordinates from ground-truth parameters."""
    truth = np.asarray(truth, dtype=float)
    if kind == "noisy_circle":
        t = truth[:, 0]
        return np.column_stack([np.cos(2 * np.pi * t), np.sin(2 * np.pi * t)])
    if kind == "trefoil_knot":
        return torus_embedding(2 * truth[:, 0], 3 * truth[:, 0], KNOT_R, KNOT_r)
    if kind in ("conjoined_circles", "disjoint_circles"):
        centre = 1.0 if kind == "conjoined_circles" else 2.0
        t = truth[:, 1]
        cx = np.where(truth[:, 0] == 0, -centre, centre)
        return np.column_stack([cx + np.cos(2 * np.pi * t), np.sin(2 * np.pi * t)])
    if kind == "torus":
        return torus_embedding(truth[:, 0], truth[:, 1])
    if kind == "double_torus":
        pts = torus_embedding(truth[:, 1], truth[:, 2])
        flip = truth[:, 0] == 1
        pts[flip, 0] = 2 * SLICE_PLANE - pts[flip, 0]
        return pts
    raise InvalidInput(f"{kind} has no reconstruction from parameters")


def generate(spec: DatasetSpec) -> Dataset:
    rng = np.random.default_rng(spec.seed)
    if spec.kind == "elliptic_curve":
        if spec.noise > 0:
            raise InvalidInput("elliptic_curve samples lie exactly on the curve; noise must be 0")
        return Dataset(PointCloud.from_complex(elliptic_curve(spec, rng)))
    if spec.kind == "high_dim_loop" and spec.dim < 4:
        raise InvalidInput("high_dim_loop needs at least 4 ambient dimensions")
    clean, truth, names = _REAL[spec.kind](spec, rng)
    pts = clean + _noise(rng, clean.shape, spec.noise, spec.centered) if spec.noise > 0 else clean.copy()
    return Dataset(PointCloud(pts), truth, names, clean)
