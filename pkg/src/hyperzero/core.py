"""Terminating Gauss hypergeometric series and classical-polynomial crosschecks.

The central object is the degree-n polynomial

    F(-n, b; c; z) = sum_{k=0}^{n} (-n)_k (b)_k / ((c)_k k!) z^k,

where (a)_k is the rising factorial.  Everything works in one of two
arithmetic modes: rational inputs stay exact end to end (Fraction
coefficients, exact sign decisions), any float input switches the whole
computation to float mode.  Exactness is load-bearing because downstream
zero counts are integers that jump at parameter boundaries, and a rounded
sign would silently cross one.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Tuple, Union

Scalar = Union[Fraction, float]

# Proximity threshold below which a float parameter is treated as integral.
# The integer branch of the counting machinery changes results by whole
# units, so near-integers in float mode are flagged instead of guessed.
INTEGRALITY_TOL = 1e-12


class InvalidParameterError(ValueError):
    """F(-n, b; c; z) is undefined here, or a transform target would be."""


class BoundaryParameterError(ValueError):
    """Parameters sit on a classification boundary where counts jump."""


class NonConvergenceError(RuntimeError):
    """Root iteration hit its sweep cap; carries the best iterate found."""

    def __init__(self, message: str, best=None):
        super().__init__(message)
        self.best = best


def as_scalar(value) -> Scalar:
    """Coerce ints to Fraction; pass Fraction and float through."""
    if isinstance(value, bool):
        raise TypeError("bool is not a valid parameter")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, (Fraction, float)):
        return value
    raise TypeError(f"unsupported scalar type {type(value).__name__}")


def scalar_is_exact(value) -> bool:
    return isinstance(value, (int, Fraction)) and not isinstance(value, bool)


def in_excluded_set(value: Scalar, n: int, tol: float = INTEGRALITY_TOL) -> bool:
    """True when value lies in {0, -1, ..., -(n-1)}, exactly or within tol."""
    if scalar_is_exact(value):
        v = Fraction(value)
        return v.denominator == 1 and 1 - n <= v <= 0
    k = round(value)
    return abs(value - k) < tol and 1 - n <= k <= 0


def nearby_integer(value: Scalar, tol: float = INTEGRALITY_TOL):
    """The integer this scalar effectively is, or None.

    Exact mode demands an exact integer; float mode accepts anything
    within tol of one.
    """
    if scalar_is_exact(value):
        v = Fraction(value)
        return int(v) if v.denominator == 1 else None
    k = round(value)
    return k if abs(value - k) < tol else None


@dataclass(frozen=True)
class Params:
    """The triple (n, b, c) defining F(-n, b; c; z).

    n must be a positive integer.  c may not be one of 0, -1, ..., -(n-1),
    where the series denominators vanish.  b and c are stored as Fractions
    (exact mode) or both as floats; a single float input demotes the pair.
    """

    n: int
    b: Scalar
    c: Scalar

    def __post_init__(self):
        if not isinstance(self.n, int) or isinstance(self.n, bool) or self.n < 1:
            raise InvalidParameterError(f"n must be a positive integer, got {self.n!r}")
        b = as_scalar(self.b)
        c = as_scalar(self.c)
        if isinstance(b, float) or isinstance(c, float):
            b, c = float(b), float(c)
        object.__setattr__(self, "b", b)
        object.__setattr__(self, "c", c)
        if in_excluded_set(c, self.n):
            raise InvalidParameterError(
                f"c={c} lies in the excluded set {{0, -1, ..., {1 - self.n}}}; "
                "the series is undefined there"
            )

    @property
    def is_exact(self) -> bool:
        return isinstance(self.b, Fraction)

    @property
    def mode(self) -> str:
        return "exact" if self.is_exact else "float"

    @property
    def degeneration(self) -> int:
        """Degree lost when b is a nonpositive integer above 1-n.

        For b = -m with 0 <= m < n the series coefficients vanish beyond
        index m, so the polynomial's effective degree drops to m.
        """
        m = nearby_integer(self.b)
        if m is not None and 1 - self.n <= m <= 0:
            return self.n + m
        return 0


@dataclass(frozen=True)
class Poly:
    """Dense real-coefficient polynomial, ascending degree order.

    The stored length is degree + 1 of the *construction* degree: for a
    degenerate series the trailing coefficients are exact zeros and
    effective_degree reports the true degree.
    """

    coeffs: Tuple[Scalar, ...]
    mode: str = "exact"

    def __post_init__(self):
        if not self.coeffs:
            raise ValueError("empty coefficient list")
        if self.mode not in ("exact", "float"):
            raise ValueError(f"unknown mode {self.mode!r}")

    @property
    def is_exact(self) -> bool:
        return self.mode == "exact"

    @property
    def effective_degree(self) -> int:
        for i in range(len(self.coeffs) - 1, -1, -1):
            if self.coeffs[i] != 0:
                return i
        return -1

    def derivative(self) -> "Poly":
        if len(self.coeffs) == 1:
            zero = Fraction(0) if self.is_exact else 0.0
            return Poly((zero,), self.mode)
        return Poly(tuple(k * a for k, a in enumerate(self.coeffs) if k > 0), self.mode)

    def float_coeffs(self) -> Tuple[float, ...]:
        return tuple(float(a) for a in self.coeffs)


def poly(values, mode=None) -> Poly:
    """Build a Poly, inferring the arithmetic mode from the entries."""
    vals = [as_scalar(v) for v in values]
    if mode is None:
        mode = "float" if any(isinstance(v, float) for v in vals) else "exact"
    if mode == "float":
        vals = [float(v) for v in vals]
    else:
        vals = [Fraction(v) for v in vals]
    return Poly(tuple(vals), mode)


def pochhammer(alpha, k: int):
    """Rising factorial alpha (alpha+1) ... (alpha+k-1); empty product is 1."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    out = 1
    for i in range(k):
        out = out * (alpha + i)
    return out


def generalized_binomial(alpha, k: int):
    """Binomial coefficient alpha (alpha-1) ... (alpha-k+1) / k! for real alpha."""
    out = 1
    for i in range(k):
        out = out * (alpha - i) / (i + 1)
    return out


def coefficients(p: Params) -> Poly:
    """Series coefficients of F(-n, b; c; z), all n+1 of them.

    Built from the ratio coeff[k+1]/coeff[k] = (k-n)(b+k) / ((c+k)(k+1)),
    which is exact in rational mode and avoids overflowing intermediate
    rising-factorial products in float mode.  For b = -m with m < n the
    factor (b+m) is zero and every later coefficient is exactly zero, in
    both modes, which realizes the limiting convention for integer b.
    """
    n, b, c = p.n, p.b, p.c
    one = Fraction(1) if p.is_exact else 1.0
    coeffs = [one]
    for k in range(n):
        coeffs.append(coeffs[-1] * (k - n) * (b + k) / ((c + k) * (k + 1)))
    return Poly(tuple(coeffs), p.mode)


def evaluate(q: Poly, z):
    """Horner evaluation; exact when both the poly and the point are rational."""
    acc = 0
    for a in reversed(q.coeffs):
        acc = acc * z + a
    return acc


def horner(coeffs, z):
    """Horner on a raw ascending coefficient sequence."""
    acc = 0
    for a in reversed(coeffs):
        acc = acc * z + a
    return acc


def horner_with_derivative(coeffs, z):
    """Value and first derivative in one pass."""
    acc = 0
    dacc = 0
    for a in reversed(coeffs):
        dacc = dacc * z + acc
        acc = acc * z + a
    return acc, dacc


def agree(lhs, rhs, tol: float) -> bool:
    """Relative comparison with an absolute fallback of 1e-12 near zero."""
    diff = abs(lhs - rhs)
    scale = max(abs(lhs), abs(rhs))
    return diff <= max(tol * scale, 1e-12)


def jacobi(n: int, alpha, beta, x):
    """Jacobi polynomial P_n^(alpha,beta)(x) via its explicit finite sum.

    The sum form is a polynomial identity in alpha and beta, so it is valid
    for every real parameter pair, including those outside the range where
    the usual orthogonality (and hypergeometric c-parameter) makes sense.
    Accepts complex x.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    lower = (x - 1) / 2
    upper = (x + 1) / 2
    total = 0
    for nu in range(n + 1):
        term = generalized_binomial(n + alpha, nu) * generalized_binomial(n + beta, n - nu)
        total = total + term * lower ** (n - nu) * upper ** nu
    return total


def gegenbauer(n: int, lam, x):
    """Gegenbauer polynomial C_n^lam(x) by the standard three-term recurrence."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n == 0:
        return 1
    prev = 1
    cur = 2 * lam * x
    for k in range(2, n + 1):
        prev, cur = cur, (2 * x * (k + lam - 1) * cur - (k + 2 * lam - 2) * prev) / k
    return cur


def jacobi_form_check(p: Params, z, tol: float = 1e-10) -> bool:
    """Check F(-n,b;c;z) = n! z^n / (c)_n * P_n^(-n-b, b-c-n)(1 - 2/z).

    Both sides are computed independently: the left from the series
    coefficients, the right from the explicit Jacobi sum.
    """
    if z == 0:
        raise InvalidParameterError("the Jacobi-argument form needs z != 0")
    n, b, c = p.n, p.b, p.c
    lhs = evaluate(coefficients(p), z)
    alpha = -n - b
    beta = b - c - n
    rhs = math.factorial(n) * z ** n / pochhammer(c, n) * jacobi(n, alpha, beta, 1 - 2 / z)
    return agree(lhs, rhs, tol)


def gegenbauer_check(n: int, lam, z, tol: float = 1e-10) -> bool:
    """Check F(-n, n+2*lam; lam+1/2; z) = n! / (2*lam)_n * C_n^lam(1-2z)."""
    if n == 0:
        return True
    lam = as_scalar(lam)
    for i in range(n):
        factor = 2 * lam + i
        if factor == 0 or (isinstance(factor, float) and abs(factor) < INTEGRALITY_TOL):
            raise InvalidParameterError(f"(2*lam)_n vanishes for lam={lam}, n={n}")
    half = Fraction(1, 2) if isinstance(lam, Fraction) else 0.5
    p = Params(n, n + 2 * lam, lam + half)
    lhs = evaluate(coefficients(p), z)
    rhs = math.factorial(n) / pochhammer(2 * lam, n) * gegenbauer(n, lam, 1 - 2 * z)
    return agree(lhs, rhs, tol)


@dataclass(frozen=True)
class Root:
    value: complex
    multiplicity: int
    residual: float


@dataclass(frozen=True)
class RootSet:
    """Computed complex roots with multiplicities and residuals.

    Non-real entries are conjugate-paired after the solve; the sum of
    multiplicities equals the effective degree of the source polynomial.
    """

    roots: Tuple[Root, ...]
    iterations: int
    tol: float

    @property
    def total_multiplicity(self) -> int:
        return sum(r.multiplicity for r in self.roots)

    def values(self) -> Tuple[complex, ...]:
        """Root values repeated to multiplicity."""
        out = []
        for r in self.roots:
            out.extend([r.value] * r.multiplicity)
        return tuple(out)
