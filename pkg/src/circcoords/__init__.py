"""Circular coordinates for point clouds from persistent cohomology."""

from .analysis import CorrelationReport, correlate, degree_between, extend_to_points, fit_degrees, histogram
from .circularize import CircularCoordinate, coordinates_from_potential, integrate_cocycle
from .cochains import INT, REAL, Cochain, ModP, Ring, coboundary0, coboundary1
from .complexes import FilteredComplex, OrderedFiltration, rips_2skeleton, total_order, witness_2skeleton
from .datasets import Dataset, DatasetSpec, generate
from .errors import (CircCoordsError, InvalidComplex, InvalidInput, NonIntegralClass,
                     NotConverged, TorsionObstruction, UnreliableDegree)
from .harmonic import HarmonicResult, harmonic_representative
from .lift import lift_cocycle
from .metric import DistanceMatrix, LandmarkSet, PointCloud, euclidean_distances, maxmin_landmarks, projective_distances
from .persistence import PersistenceDiagram, PersistenceInterval, live_cocycles_at, persistent_cocycles, suggest_delta
from .pipeline import PipelineConfig, PipelineResult, run_pipeline

__version__ = "0.1.0"
