"""Lifting mod-p cocycles to integer cocycles."""

from dataclasses import dataclass

from .cochains import INT, Cochain, coboundary1
from .errors import InvalidInput, TorsionObstruction

RETRY_PRIMES = (47, 53, 59, 61)


@dataclass(frozen=True)
class LiftResult:
    cocycle: Cochain
    prime_used: int


def symmetric_representative(c, p):
    """Integer congruent to ``c`` mod ``p`` closest to zero ({0, 1} for p = 2)."""
    c %= p
    if p == 2:
        return c
    return c - p if c > (p - 1) // 2 else c


def lift_cocycle(alpha_p: Cochain, complex) -> LiftResult:
    if alpha_p.ring.kind != "modp":
        raise InvalidInput("lift_cocycle needs an F_p cochain")
    if alpha_p.dimension != 1:
        raise InvalidInput("lift_cocycle needs a 1-cochain")
    p = alpha_p.ring.p
    if len(coboundary1(alpha_p, complex)):
        raise InvalidInput("input is not a cocycle over F_p")
    lifted = Cochain(1, INT, {k: symmetric_representative(c, p) for k, c in alpha_p.values.items()})
    defect = coboundary1(lifted, complex)
    if len(defect):
        raise TorsionObstruction(
            f"integer lift of the F_{p} cocycle has nonzero coboundary on {len(defect)} triangles",
            prime=p, defect=defect)
    return LiftResult(lifted, p)


def prime_schedule(p):
    """``p`` followed by the retry primes not already tried."""
    return (p,) + tuple(q for q in RETRY_PRIMES if q != p)
