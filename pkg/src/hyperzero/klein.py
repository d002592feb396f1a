"""Hilbert-Klein real-zero counts for F(-n, b; c; z) and regional classifiers.

The count formulas give, for parameters off a small set of boundaries, the
exact number of zeros in each of (1,inf), (0,1), (-inf,0).  They are driven
by Klein's step function E and by signs of generalized binomial
coefficients; both are integer-valued, so boundary inputs raise rather
than round.  The regional classifier reproduces the same counts but keyed
on which parameter window fired, reducing c < 0 inputs through the
reflection, inversion and Pfaff maps until a directly analyzed region is
reached.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from . import transforms
from .core import (
    BoundaryParameterError,
    INTEGRALITY_TOL,
    Params,
    in_excluded_set,
    nearby_integer,
    scalar_is_exact,
)


@dataclass(frozen=True)
class KleinXYZ:
    x: int
    y: int
    z: int


@dataclass(frozen=True)
class CountPrediction:
    """Predicted real-zero counts per canonical interval.

    n1 counts (1,inf), n2 counts (0,1), n3 counts (-inf,0); the rest of the
    degree is accounted for by conjugate pairs.  provenance names the
    formula or theorem case that produced the numbers.
    """

    n1: int
    n2: int
    n3: int
    nonreal_pairs: int
    provenance: str

    def __post_init__(self):
        if min(self.n1, self.n2, self.n3, self.nonreal_pairs) < 0:
            raise ValueError("negative count in prediction")

    @property
    def total(self) -> int:
        return self.n1 + self.n2 + self.n3 + 2 * self.nonreal_pairs

    @property
    def counts(self):
        return (self.n1, self.n2, self.n3)


def klein_E(u) -> int:
    """Klein's step function: 0 for u <= 0, floor(u) off integers, u-1 on them.

    Float mode detects integrality within 1e-12; the integer branch lowers
    the value by one, which propagates to whole-unit count changes, so the
    detection threshold is deliberately tight.
    """
    if scalar_is_exact(u):
        u = Fraction(u)
        if u <= 0:
            return 0
        if u.denominator == 1:
            return int(u) - 1
        return math.floor(u)
    if u < INTEGRALITY_TOL:
        return 0
    r = round(u)
    if abs(u - r) < INTEGRALITY_TOL:
        return int(r) - 1
    return math.floor(u)


def xyz(p: Params) -> KleinXYZ:
    """The three E-values feeding the interval counts."""
    n, b, c = p.n, p.b, p.c
    a1 = abs(1 - c)
    a2 = abs(n + b)
    a3 = abs(b - c - n)
    half = Fraction(1, 2) if p.is_exact else 0.5
    return KleinXYZ(
        klein_E((a1 - a2 - a3 + 1) * half),
        klein_E((-a1 + a2 - a3 + 1) * half),
        klein_E((-a1 - a2 + a3 + 1) * half),
    )


def binomial_sign(alpha, n: int) -> int:
    """Sign of the generalized binomial (alpha choose n).

    Zero exactly when alpha is one of 0, 1, ..., n-1 (within 1e-12 in float
    mode); only signs of the factors are multiplied, so there is no
    overflow or cancellation.
    """
    sign = 1
    exact = scalar_is_exact(alpha)
    for i in range(n):
        f = alpha - i
        if exact:
            s = (f > 0) - (f < 0)
        else:
            s = 0 if abs(f) < INTEGRALITY_TOL else (1 if f > 0 else -1)
        if s == 0:
            return 0
        sign *= s
    return sign


def _require_hypothesis(p: Params):
    """b, c and c-b must avoid {0, -1, ..., 1-n}; counts jump there."""
    for name, v in (("b", p.b), ("c", p.c), ("c-b", p.c - p.b)):
        if in_excluded_set(v, p.n):
            raise BoundaryParameterError(
                f"{name}={v} lies in {{0, -1, ..., {1 - p.n}}}; "
                "the count formulas do not apply on this boundary"
            )


def _branch_count(e: int, sign: int) -> int:
    # sign > 0 selects the even branch 2*floor((E+1)/2), sign < 0 the odd one.
    if sign > 0:
        return 2 * ((e + 1) // 2)
    return 2 * (e // 2) + 1


def predict_counts(p: Params) -> CountPrediction:
    """Interval zero counts straight from the count formulas.

    Requires b, c, c-b outside {0, -1, ..., 1-n}; under that hypothesis the
    polynomial has full degree n and the three condition sign products are
    nonzero, so each count picks a branch unambiguously.
    """
    _require_hypothesis(p)
    n, b, c = p.n, p.b, p.c
    k = xyz(p)
    sign_b = binomial_sign(-b, n)
    sign_c = binomial_sign(-c, n)
    sign_bc = binomial_sign(b - c, n)
    s1 = (-1) ** n * sign_b * sign_bc
    s2 = sign_c * sign_bc
    s3 = sign_c * sign_b
    if 0 in (s1, s2, s3):
        # Unreachable when the hypothesis holds; kept as a hard guard.
        raise BoundaryParameterError("a condition sign product is zero")
    n1 = _branch_count(k.x, s1)
    n2 = _branch_count(k.y, s2)
    n3 = _branch_count(k.z, s3)
    rest = n - n1 - n2 - n3
    if rest < 0 or rest % 2:
        raise RuntimeError(
            f"count accounting failed for {p}: counts ({n1},{n2},{n3}) vs degree {n}"
        )
    return CountPrediction(n1, n2, n3, rest // 2, "thm3.1")


def _strict_floor(v) -> int:
    """floor(v) demanding v be safely off integers.

    Exact integers and float near-integers are classification boundaries
    for the window indices and raise instead of picking a side.
    """
    if nearby_integer(v) is not None:
        raise BoundaryParameterError(f"window index boundary at {v}")
    return math.floor(v)


def _near(v, target) -> bool:
    if scalar_is_exact(v):
        return v == target
    return abs(v - target) < INTEGRALITY_TOL


def _prediction(n, n1, n2, n3, provenance) -> CountPrediction:
    rest = n - n1 - n2 - n3
    if rest < 0 or rest % 2:
        raise RuntimeError(f"count accounting failed: ({n1},{n2},{n3}) vs degree {n}")
    return CountPrediction(n1, n2, n3, rest // 2, provenance)


def _classify_c_positive(p: Params) -> CountPrediction:
    """The five b-windows for c > 0."""
    n, b, c = p.n, p.b, p.c
    if b > 0:
        d = b - c
        if _near(d, n):
            raise BoundaryParameterError(f"b-c={d} equals n; window boundary")
        if d > n:
            return _prediction(n, 0, n, 0, "thm3.2.i")
        if d > 0:
            j = _strict_floor(d) + 1
            return _prediction(n, (n - j) % 2, j, 0, f"thm3.2.ii(j={j})")
        return _prediction(n, n % 2, 0, 0, "thm3.2.iii")
    if _near(b, -n):
        raise BoundaryParameterError(f"b={b} equals -n; window boundary")
    if b > -n:
        j = _strict_floor(-b) + 1
        return _prediction(n, (n - j) % 2, 0, j, f"thm3.2.iv(j={j})")
    return _prediction(n, 0, 0, n, "thm3.2.v")


def _classify_c_negative_b_positive(p: Params) -> CountPrediction:
    """c < 0, b > 0, c-b > 1-n: counts keyed on the (j, k) window indices."""
    n, b, c = p.n, p.b, p.c
    k = _strict_floor(-c) + 1
    j = _strict_floor(-(c - b)) + 1
    if j < k:
        raise RuntimeError(
            f"window indices j={j} < k={k} contradict the region analysis for {p}"
        )
    nj_odd = (n - j) % 2
    k_odd = k % 2
    sub = {(0, 0): "a", (1, 0): "b", (0, 1): "c", (1, 1): "d"}[(nj_odd, k_odd)]
    return _prediction(
        n, nj_odd, j - k, k_odd, f"thm3.3.ii.{sub}(j={j},k={k})"
    )


def _classify_all_negative(p: Params) -> CountPrediction:
    """1-n < b, c, c-b < 0: pure parity counts from the (j, k, l) indices."""
    n, b, c = p.n, p.b, p.c
    j = _strict_floor(-b) + 1
    k = _strict_floor(-c) + 1
    ell = _strict_floor(-(c - b)) + 1
    n1 = (n + j + ell) % 2
    n2 = (k + ell) % 2
    n3 = (j + k) % 2
    return _prediction(n, n1, n2, n3, f"thm3.4(j={j},k={k},l={ell})")


def classify_region(p: Params) -> CountPrediction:
    """Counts with provenance naming the parameter region that decided them.

    c > 0 is handled directly.  For c < 0 the input is reduced through the
    reflection, inversion and Pfaff maps (tagged "(2.1)", "(2.2)", "(3.8)"
    in the provenance string), whose interval permutations transport the
    counts back, until a directly analyzed region applies.  Any
    case-boundary equality raises BoundaryParameterError.
    """
    _require_hypothesis(p)
    n, b, c = p.n, p.b, p.c
    if c > 0:
        return _classify_c_positive(p)

    if c - b < 1 - n:
        # Reflection target has c' = 1-n+b-c > 0; zeros transport via z -> 1-z.
        target, _ = transforms.euler_reflect(p)
        sub = _classify_c_positive(target)
        return _prediction(
            n, sub.n3, sub.n2, sub.n1, f"reduced-via-(2.1)->{sub.provenance}"
        )
    if b < 1 - n:
        # Inversion target has c' = 1-b-n > 0; zeros transport via z -> 1/z.
        target, _ = transforms.invert(p)
        sub = _classify_c_positive(target)
        return _prediction(
            n, sub.n2, sub.n1, sub.n3, f"reduced-via-(2.2)->{sub.provenance}"
        )
    if b > 0:
        return _classify_c_negative_b_positive(p)
    if c - b > 0:
        # Pfaff target has numerator parameter c-b > 0 and the same c < 0.
        target = transforms.pfaff(p)
        sub = _classify_c_negative_b_positive(target)
        return _prediction(
            n, sub.n1, sub.n3, sub.n2, f"reduced-via-(3.8)->{sub.provenance}"
        )
    if c > 1 - n:
        return _classify_all_negative(p)
    # Remaining sliver: b, c-b in (1-n, 0) with c < 1-n.  Reflect first
    # (new c' lands in (1-n, 0) with c'-b > 0), then Pfaff into the
    # directly analyzed region.
    t1, _ = transforms.euler_reflect(p)
    t2 = transforms.pfaff(t1)
    sub = _classify_c_negative_b_positive(t2)
    return _prediction(
        n,
        sub.n2,
        sub.n3,
        sub.n1,
        f"reduced-via-(2.1)->reduced-via-(3.8)->{sub.provenance}",
    )
