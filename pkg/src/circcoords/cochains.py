"""Sparse cochains over Z, F_p and R on an ordered 2-skeleton.

Cochain values are keyed by simplex index in an :class:`OrderedFiltration`.
Orientation is fixed by sorted vertex order, so ``(d0 f)(ab) = f(b) - f(a)``
and ``(d1 a)(abc) = a(bc) - a(ac) + a(ab)``.
"""

from dataclasses import dataclass, field
from types import MappingProxyType

import numpy as np

from .errors import InvalidInput


@dataclass(frozen=True)
class Ring:
    kind: str
    p: int = None

    def __post_init__(self):
        if self.kind not in ("int", "real", "modp"):
            raise InvalidInput(f"unknown ring {self.kind!r}")
        if self.kind == "modp" and not is_prime(self.p):
            raise InvalidInput(f"{self.p} is not prime")

    @property
    def dtype(self):
        return float if self.kind == "real" else np.int64

    def normalize(self, x):
        if self.kind == "modp":
            return np.mod(x, self.p)
        return x

    def __str__(self):
        return f"F_{self.p}" if self.kind == "modp" else {"int": "Z", "real": "R"}[self.kind]


INT = Ring("int")
REAL = Ring("real")


def ModP(p):
    return Ring("modp", int(p))


def is_prime(p):
    if not isinstance(p, (int, np.integer)) or p < 2:
        return False
    p = int(p)
    f = 2
    while f * f <= p:
        if p % f == 0:
            return False
        f += 1
    return True


def inverse_mod(a, p):
    """Inverse of ``a`` modulo prime ``p`` via the extended Euclidean algorithm."""
    a %= p
    if a == 0:
        raise ZeroDivisionError("0 has no inverse")
    r0, r1, s0, s1 = p, a, 0, 1
    while r1:
        q = r0 // r1
        r0, r1 = r1, r0 - q * r1
        s0, s1 = s1, s0 - q * s1
    return s0 % p


@dataclass(frozen=True)
class Cochain:
    dimension: int
    ring: Ring
    values: MappingProxyType = field(default_factory=dict)

    def __post_init__(self):
        if self.dimension not in (0, 1, 2):
            raise InvalidInput("cochain dimension must be 0, 1 or 2")
        vals = {}
        for k, c in dict(self.values).items():
            if self.ring.kind == "real":
                c = float(c)
            else:
                c = int(c)
                if self.ring.kind == "modp":
                    c %= self.ring.p
            if c != 0:
                vals[int(k)] = c
        object.__setattr__(self, "values", MappingProxyType(vals))

    def __getitem__(self, k):
        return self.values.get(k, 0)

    def __len__(self):
        return len(self.values)

    def support(self):
        return sorted(self.values)

    def dense(self, complex):
        out = np.zeros(len(complex), dtype=self.ring.dtype)
        for k, c in self.values.items():
            if k < len(out):
                out[k] = c
        return out

    @classmethod
    def from_dense(cls, dimension, ring, arr, complex):
        idx = complex.indices_of_dim(dimension)
        arr = np.asarray(arr)
        sel = idx[arr[idx] != 0]
        return cls(dimension, ring, {int(k): arr[k] for k in sel})

    def restrict(self, complex):
        """Drop coefficients on simplices outside ``complex`` (a prefix)."""
        n = len(complex)
        return Cochain(self.dimension, self.ring, {k: c for k, c in self.values.items() if k < n})

    def reduce(self, p):
        if self.ring.kind == "real":
            raise InvalidInput("cannot reduce a real cochain mod p")
        return Cochain(self.dimension, ModP(p), self.values)

    def as_real(self):
        return Cochain(self.dimension, REAL, {k: float(c) for k, c in self.values.items()})

    def check_on(self, complex):
        dims = complex.dims
        for k in self.values:
            if k >= len(complex) or dims[k] != self.dimension:
                raise InvalidInput(f"key {k} is not a {self.dimension}-simplex of the complex")


def _require(cochain, dimension):
    if cochain.dimension != dimension:
        raise InvalidInput(f"expected a {dimension}-cochain, got dimension {cochain.dimension}")


def coboundary0(f: Cochain, complex) -> Cochain:
    _require(f, 0)
    dense = f.dense(complex)
    out = np.zeros(len(complex), dtype=f.ring.dtype)
    ef = complex.edge_facets
    out[complex.edge_indices] = f.ring.normalize(dense[ef[:, 0]] - dense[ef[:, 1]])
    return Cochain.from_dense(1, f.ring, out, complex)


def coboundary1(alpha: Cochain, complex) -> Cochain:
    _require(alpha, 1)
    dense = alpha.dense(complex)
    out = np.zeros(len(complex), dtype=alpha.ring.dtype)
    tf = complex.triangle_facets
    out[complex.triangle_indices] = alpha.ring.normalize(dense[tf[:, 0]] - dense[tf[:, 1]] + dense[tf[:, 2]])
    return Cochain.from_dense(2, alpha.ring, out, complex)


def adjoint0(alpha: Cochain, complex) -> Cochain:
    """Adjoint of d0 under the unweighted inner products."""
    _require(alpha, 1)
    if alpha.ring.kind != "real":
        raise InvalidInput("adjoint0 needs a real cochain")
    dense = alpha.dense(complex)
    out = np.zeros(len(complex))
    ef = complex.edge_facets
    vals = dense[complex.edge_indices]
    np.add.at(out, ef[:, 0], vals)
    np.subtract.at(out, ef[:, 1], vals)
    return Cochain.from_dense(0, REAL, out, complex)


def inner(a: Cochain, b: Cochain) -> float:
    if a.dimension != b.dimension:
        raise InvalidInput("inner product needs cochains of equal dimension")
    small, big = (a, b) if len(a) <= len(b) else (b, a)
    return float(sum(c * big[k] for k, c in small.values.items()))


def norm(a: Cochain) -> float:
    return float(np.sqrt(sum(float(c) ** 2 for c in a.values.values())))


def is_cocycle(alpha: Cochain, complex, tol=0.0) -> bool:
    d = coboundary1(alpha, complex)
    if alpha.ring.kind == "real":
        return norm(d) <= tol
    return len(d) == 0


def edge_vector(alpha: Cochain, complex) -> np.ndarray:
    """Coefficients of a 1-cochain as a vector aligned with ``complex.edge_indices``."""
    return alpha.dense(complex)[complex.edge_indices].astype(float)


def vertex_vector(f: Cochain, complex) -> np.ndarray:
    return f.dense(complex)[complex.vertex_indices].astype(float)
