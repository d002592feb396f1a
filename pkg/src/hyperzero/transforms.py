"""Parameter transformations and the quadratic-class template detector.

Each transform here is a two-sided functional identity between two
hypergeometric polynomials, together with the Moebius map that carries
zeros of one onto zeros of the other.  The three canonical real intervals
(-inf,0), (0,1), (1,inf) are permuted as a set by every map, which is what
lets interval zero counts be transported between parameter regions.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import List, NamedTuple, Tuple

from .core import (
    InvalidParameterError,
    Params,
    Scalar,
    as_scalar,
    in_excluded_set,
    pochhammer,
    scalar_is_exact,
)

NEG = "(-inf,0)"
MID = "(0,1)"
POS = "(1,inf)"
INTERVALS = (NEG, MID, POS)


@dataclass(frozen=True)
class IntervalMap:
    source: str
    target: str
    transform: str


# z -> z/(z-1): swaps (-inf,0) and (0,1), fixes (1,inf) as a set.
PFAFF_MAPS = (
    IntervalMap(NEG, MID, "pfaff"),
    IntervalMap(MID, NEG, "pfaff"),
    IntervalMap(POS, POS, "pfaff"),
)

# z -> 1-z: swaps (-inf,0) and (1,inf), fixes (0,1) as a set.
EULER_MAPS = (
    IntervalMap(NEG, POS, "euler"),
    IntervalMap(MID, MID, "euler"),
    IntervalMap(POS, NEG, "euler"),
)

# z -> 1/z: swaps (0,1) and (1,inf), fixes (-inf,0) as a set.
INVERSION_MAPS = (
    IntervalMap(MID, POS, "inversion"),
    IntervalMap(POS, MID, "inversion"),
    IntervalMap(NEG, NEG, "inversion"),
)

# w = 1 - 2/z: Jacobi-argument correspondence.  Source labels are the
# argument intervals (1,inf), (-inf,-1), (-1,1) of the Jacobi variable and
# targets are z-intervals.
JACOBI_ARGUMENT_MAPS = (
    IntervalMap("(1,inf)w", NEG, "jacobi-argument"),
    IntervalMap("(-inf,-1)w", MID, "jacobi-argument"),
    IntervalMap("(-1,1)w", POS, "jacobi-argument"),
)


def pfaff_point(z):
    return z / (z - 1)


def euler_point(z):
    return 1 - z


def inversion_point(z):
    return 1 / z


def euler_reflect(p: Params) -> Tuple[Params, Scalar]:
    """Reflection z -> 1-z as a parameter map.

    Returns (target, scale) with F_source(1-z) = scale * F_target(z) where
    target = (n, b, 1-n+b-c) and scale = (c-b)_n / (c)_n.  Zeros transport
    through z -> 1-z.
    """
    n, b, c = p.n, p.b, p.c
    c_target = 1 - n + b - c
    if in_excluded_set(c_target, n):
        raise InvalidParameterError(
            f"reflection target c'={c_target} lies in the excluded set for n={n}"
        )
    scale = pochhammer(c - b, n) / pochhammer(c, n)
    return Params(n, b, c_target), scale


class Prefactor(NamedTuple):
    """Multiplier ratio * (-z)**power standing in front of a transformed series."""

    ratio: Scalar
    power: int

    def apply(self, z):
        return self.ratio * (-z) ** self.power


def invert(p: Params) -> Tuple[Params, Prefactor]:
    """Inversion z -> 1/z as a parameter map.

    Returns (target, prefactor) with
    F_source(z) = prefactor.apply(z) * F_target(1/z), target = (n, 1-c-n, 1-b-n)
    and prefactor ratio (b)_n / (c)_n.  Applying it twice restores the
    original parameters exactly.
    """
    n, b, c = p.n, p.b, p.c
    c_target = 1 - b - n
    if in_excluded_set(c_target, n):
        raise InvalidParameterError(
            f"inversion target c'={c_target} lies in the excluded set for n={n}"
        )
    ratio = pochhammer(b, n) / pochhammer(c, n)
    return Params(n, 1 - c - n, c_target), Prefactor(ratio, n)


def pfaff(p: Params) -> Params:
    """Pfaff map: F(-n,b;c;z) = (1-z)^n F(-n,c-b;c;z/(z-1)).

    b -> c-b is an involution; c is untouched, so the target always exists.
    When c-b is a nonpositive integer above 1-n the target polynomial drops
    degree; the deficit is readable from the returned Params.degeneration
    rather than raised as an error, because the underlying identity still
    holds in the degenerate limit.
    """
    return Params(p.n, p.c - p.b, p.c)


# The twelve parameter constraints admitting a quadratic transformation.
# Tags are the constraints themselves, spelled in terms of n, b, c.
QUADRATIC_TEMPLATES: Tuple[str, ...] = (
    "c=2b",
    "c=-n-b+1",
    "c=(-n+b+1)/2",
    "c=1/2",
    "b=-n+1/2",
    "c=-n+b+1/2",
    "c=3/2",
    "b=-n-1/2",
    "c=-n+b-1/2",
    "c=-2n",
    "c=b+n+1",
    "b=n+1",
)


def _template_residuals(n: int, b, c):
    half = Fraction(1, 2) if scalar_is_exact(b) and scalar_is_exact(c) else 0.5
    return {
        "c=2b": c - 2 * b,
        "c=-n-b+1": c + n + b - 1,
        "c=(-n+b+1)/2": 2 * c - (-n + b + 1),
        "c=1/2": c - half,
        "b=-n+1/2": b + n - half,
        "c=-n+b+1/2": c + n - b - half,
        "c=3/2": c - 3 * half,
        "b=-n-1/2": b + n + half,
        "c=-n+b-1/2": c + n - b + half,
        "c=-2n": c + 2 * n,
        "c=b+n+1": c - b - n - 1,
        "b=n+1": b - n - 1,
    }


def quadratic_class_match(p: Params, tol: float = 1e-9) -> List[str]:
    """All quadratic-class templates satisfied by (n, b, c).

    Templates can overlap for special parameter choices, so every match is
    reported, in the fixed template order.  Exact mode demands exact
    equality; float mode accepts residuals within tol.
    """
    residuals = _template_residuals(p.n, p.b, p.c)
    matches = []
    for tag in QUADRATIC_TEMPLATES:
        r = residuals[tag]
        hit = (r == 0) if p.is_exact else (abs(r) <= tol)
        if hit:
            matches.append(tag)
    return matches
