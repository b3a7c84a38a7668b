"""Harmonic smoothing of 1-cocycles by iterative least squares.

The smoothed cocycle is ``alpha + d0 f`` with ``f`` minimizing
``||alpha + d0 f||``; equivalently ``d0* (alpha + d0 f) = 0``.
"""

from dataclasses import dataclass

import numpy as np
import scipy.sparse as sps

from .cochains import REAL, Cochain, edge_vector
from .errors import InvalidInput, NotConverged

DEFAULT_TOL = 1e-10


@dataclass
class LinearLeastSquaresProblem:
    """min ||A x - b|| given only ``matvec`` (A x) and ``rmatvec`` (A^T y)."""

    matvec: object
    rmatvec: object
    rhs: np.ndarray
    ncols: int
    tolerance: float = DEFAULT_TOL
    max_iterations: int = 1000


@dataclass
class HarmonicResult:
    smoothed: Cochain
    potential: Cochain
    residual_norm: float
    iterations: int


def _lsqr(matvec, rmatvec, b, ncols, target, max_iter):
    """Golub-Kahan LSQR (Paige & Saunders) from x = 0.

    Stops when the recurrence estimate of ||A^T r|| drops below ``target``.
    Returns (x, iterations used).
    """
    x = np.zeros(ncols)
    u = b.copy()
    beta = np.linalg.norm(u)
    if beta == 0:
        return x, 0
    u /= beta
    v = rmatvec(u)
    alpha = np.linalg.norm(v)
    if alpha == 0:
        return x, 0
    v /= alpha
    w = v.copy()
    phibar, rhobar = beta, alpha
    for it in range(1, max_iter + 1):
        u = matvec(v) - alpha * u
        beta = np.linalg.norm(u)
        if beta > 0:
            u /= beta
            v = rmatvec(u) - beta * v
            alpha = np.linalg.norm(v)
            if alpha > 0:
                v /= alpha
        rho = np.hypot(rhobar, beta)
        c, s = rhobar / rho, beta / rho
        theta = s * alpha
        rhobar = -c * alpha
        phi = c * phibar
        phibar = s * phibar
        x += (phi / rho) * w
        w = v - (theta / rho) * w
        # ||A^T r_k|| = phibar * alpha * |c|
        if phibar * alpha * abs(c) <= target or beta == 0 or alpha == 0:
            return x, it
    return x, max_iter


def iterative_least_squares(problem: LinearLeastSquaresProblem, atol=None) -> np.ndarray:
    """Solve the problem to ``||A^T (A x - b)|| <= tolerance * ||A^T b||``.

    ``atol``, when given, replaces the relative target with an absolute one.
    LSQR restarts on the current residual whenever the true normal-equation
    residual misses the target, which absorbs loss of orthogonality.
    Raises :class:`NotConverged` carrying the best iterate.
    """
    return _solve(problem, atol)[0]


def _solve(problem, atol=None):
    b = np.asarray(problem.rhs, dtype=float)
    if b.ndim != 1:
        raise InvalidInput("rhs must be a vector")
    Atb = problem.rmatvec(b)
    if Atb.shape != (problem.ncols,):
        raise InvalidInput("operator and rhs dimensions disagree")
    target = problem.tolerance * np.linalg.norm(Atb) if atol is None else atol
    x = np.zeros(problem.ncols)
    best, best_res = x.copy(), np.linalg.norm(Atb)
    if best_res <= target:
        return x, 0
    used = 0
    while used < problem.max_iterations:
        r = b - problem.matvec(x)
        dx, its = _lsqr(problem.matvec, problem.rmatvec, r, problem.ncols,
                        0.5 * target, problem.max_iterations - used)
        used += max(its, 1)
        x = x + dx
        res = np.linalg.norm(problem.rmatvec(b - problem.matvec(x)))
        if res < best_res:
            best, best_res = x.copy(), res
        if res <= target:
            return x, used
        if its == 0:
            break
    raise NotConverged(f"least squares stalled at ||A^T r|| = {best_res:.3e} > {target:.3e}",
                       best=best, residual=best_res, iterations=used)


def coboundary0_matrix(complex):
    """Sparse d0 as an (edges x vertices) matrix in edge/vertex index order."""
    ef = complex.edge_facets
    nv = len(complex.vertex_indices)
    vpos = np.full(len(complex), -1, dtype=np.int64)
    vpos[complex.vertex_indices] = np.arange(nv)
    ne = len(ef)
    rows = np.repeat(np.arange(ne), 2)
    cols = np.column_stack([vpos[ef[:, 0]], vpos[ef[:, 1]]]).ravel()
    data = np.tile([1.0, -1.0], ne)
    return sps.csr_matrix((data, (rows, cols)), shape=(ne, nv))


def harmonic_representative(alpha: Cochain, complex, tol=DEFAULT_TOL, max_iter=None) -> HarmonicResult:
    """Least-norm cocycle cohomologous to ``alpha``."""
    if alpha.dimension != 1:
        raise InvalidInput("harmonic smoothing needs a 1-cochain")
    if alpha.ring.kind == "modp":
        raise InvalidInput("lift mod-p cocycles to the integers first")
    alpha.check_on(complex)
    a = edge_vector(alpha, complex)
    tf = complex.triangle_facets
    epos = np.full(len(complex), -1, dtype=np.int64)
    epos[complex.edge_indices] = np.arange(len(a))
    if len(tf):
        d1 = a[epos[tf[:, 0]]] - a[epos[tf[:, 1]]] + a[epos[tf[:, 2]]]
        if np.max(np.abs(d1)) > 1e-9 * max(1.0, np.max(np.abs(a), initial=0.0)):
            raise InvalidInput("input is not a cocycle")

    A = coboundary0_matrix(complex)
    AT = A.T.tocsr()
    nv = A.shape[1]
    if max_iter is None:
        max_iter = 10 * max(nv, 1)
    problem = LinearLeastSquaresProblem(A.dot, AT.dot, -a, nv, tol, max_iter)
    try:
        f, its = _solve(problem, atol=tol * max(1.0, np.linalg.norm(a)))
    except NotConverged as exc:
        exc.best = _result(complex, a, A, AT, exc.best, exc.iterations)
        raise
    return _result(complex, a, A, AT, f, its)


def _result(complex, a, A, AT, f, iterations):
    smoothed = a + A.dot(f)
    residual = float(np.linalg.norm(AT.dot(smoothed)))
    vidx = complex.vertex_indices
    eidx = complex.edge_indices
    return HarmonicResult(
        Cochain(1, REAL, dict(zip(eidx.tolist(), smoothed.tolist()))),
        Cochain(0, REAL, dict(zip(vidx.tolist(), f.tolist()))),
        residual,
        iterations,
    )
