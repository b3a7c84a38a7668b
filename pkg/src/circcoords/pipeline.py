"""End-to-end: complex -> persistent cocycles -> lift -> smoothing -> angles."""

from dataclasses import dataclass, field
import logging

import numpy as np

from .analysis import extend_to_points
from .circularize import coordinates_from_potential
from .complexes import rips_2skeleton, total_order, witness_2skeleton
from .datasets import DatasetSpec, generate
from .errors import CircCoordsError, InvalidInput, TorsionObstruction
from .harmonic import DEFAULT_TOL, harmonic_representative
from .lift import lift_cocycle, prime_schedule
from .metric import DistanceMatrix, PointCloud, euclidean_distances, maxmin_landmarks, projective_distances
from .persistence import DEFAULT_PRIME, live_cocycles_at, persistent_cocycles, suggest_delta

log = logging.getLogger(__name__)


@dataclass
class PipelineConfig:
    """Exactly one of ``cloud``, ``distances`` or ``dataset`` is the input.

    Selection: with ``delta`` every dim-1 interval alive there is used (the
    ``top`` longest if ``top`` is also set); with only ``top``, delta is the
    midpoint of the common lifetime of the ``top`` longest intervals.
    """

    cloud: PointCloud = None
    distances: DistanceMatrix = None
    dataset: DatasetSpec = None
    metric: str = "auto"          # euclidean | projective | auto
    complex_type: str = "rips"    # rips | witness
    r_max: float = 0.5
    nu: int = 1
    landmarks: int = None
    landmark_seed: int = 0
    prime: int = DEFAULT_PRIME
    delta: float = None
    top: int = None
    tol: float = DEFAULT_TOL
    max_iter: int = None
    extension: str = "nearest"    # nearest | interpolate

    def validate(self):
        given = [x is not None for x in (self.cloud, self.distances, self.dataset)]
        if sum(given) != 1:
            raise InvalidInput("exactly one input source is required")
        if self.complex_type not in ("rips", "witness"):
            raise InvalidInput(f"unknown complex type {self.complex_type!r}")
        if self.complex_type == "witness" and not self.landmarks:
            raise InvalidInput("witness complexes need a landmark count")
        if self.r_max < 0:
            raise InvalidInput("r_max must be nonnegative")
        if self.delta is not None and self.delta < 0:
            raise InvalidInput("delta must be nonnegative")
        if self.top is not None and self.top < 0:
            raise InvalidInput("top must be nonnegative")
        if self.metric not in ("auto", "euclidean", "projective"):
            raise InvalidInput(f"unknown metric {self.metric!r}")
        if self.extension not in ("nearest", "interpolate"):
            raise InvalidInput(f"unknown extension {self.extension!r}")


@dataclass
class PipelineResult:
    diagram: object
    filtration: object
    delta: float
    selected: list
    coordinates: list           # CircularCoordinate over all points
    landmark_coordinates: list  # on the complex vertices
    lifts: list
    harmonics: list
    prime_used: int
    distances: DistanceMatrix
    landmarks: object = None
    data: object = None
    primes_tried: list = field(default_factory=list)


def _stage(name, fn, *args, **kw):
    try:
        return fn(*args, **kw)
    except CircCoordsError as exc:
        if exc.stage is None:
            exc.stage = name
        raise


def resolve_distances(config):
    data = None
    if config.distances is not None:
        return config.distances, None
    cloud = config.cloud
    if config.dataset is not None:
        data = generate(config.dataset)
        cloud = data.cloud
    metric = config.metric
    if metric == "auto":
        metric = "projective" if cloud.is_complex else "euclidean"
    D = projective_distances(cloud) if metric == "projective" else euclidean_distances(cloud)
    return D, data


def build_filtration(config, D):
    landmarks = None
    if config.complex_type == "rips":
        cx = rips_2skeleton(D, config.r_max)
    else:
        landmarks = maxmin_landmarks(D, config.landmarks, config.landmark_seed)
        cx = witness_2skeleton(D, landmarks, config.nu, config.r_max)
    return total_order(cx), landmarks


def select(diagram, delta=None, top=None):
    """Return (delta, intervals) for the configured selection rule."""
    if delta is None:
        delta = suggest_delta(diagram, top or 1)
        if delta is None:
            return None, []
    chosen = live_cocycles_at(diagram, delta)
    if top is not None:
        chosen = chosen[:top]
    return delta, chosen


def run_pipeline(config: PipelineConfig) -> PipelineResult:
    config.validate()
    D, data = _stage("input", resolve_distances, config)
    filt, landmarks = _stage("complex", build_filtration, config, D)
    log.info("filtration has %d simplices", len(filt))

    tried = []
    for p in prime_schedule(config.prime):
        tried.append(p)
        diagram = _stage("persistence", persistent_cocycles, filt, p)
        delta, chosen = select(diagram, config.delta, config.top)
        if not chosen:
            return PipelineResult(diagram, filt, delta, [], [], [], [], [], p, D, landmarks, data, tried)
        sub = filt.prefix(delta)
        try:
            lifts = [_stage("lift", lift_cocycle, iv.representative.restrict(sub), sub) for iv in chosen]
        except TorsionObstruction:
            log.warning("torsion obstruction at p=%d, retrying with the next prime", p)
            last = p
            continue
        break
    else:
        raise TorsionObstruction(f"every prime in {tried} hit a torsion obstruction", prime=last)

    harmonics, coords, full = [], [], []
    for lift in lifts:
        h = _stage("harmonic", harmonic_representative, lift.cocycle, sub, config.tol, config.max_iter)
        theta = coordinates_from_potential(h.potential, sub)
        harmonics.append(h)
        coords.append(theta)
        if landmarks is None:
            full.append(theta)
        else:
            full.append(_stage("extend", extend_to_points, theta, D, config.extension))
    return PipelineResult(diagram, filt, delta, chosen, full, coords, lifts, harmonics, p, D, landmarks, data, tried)
