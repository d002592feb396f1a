"""Independent ground truth: exact Sturm counting and a numeric root solver.

Nothing in this module consults the count formulas.  Real roots per
interval are counted by sign variations of an exact integer Sturm chain;
all complex roots are computed by simultaneous (Aberth-style) iteration
followed by Newton polishing.  verify() runs both sides against the
predictions and reports field-by-field agreement.

Sturm chains are kept as integer polynomials: every element may be scaled
by a positive constant without changing sign variations, so remainders are
computed fraction-free and stripped of integer content to control
coefficient growth.  Evaluations at 0 and 1 (the only points where a
multiple zero can hide) are exact.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, NamedTuple, Optional, Tuple

from . import klein, special, transforms
from .core import (
    BoundaryParameterError,
    InvalidParameterError,
    NonConvergenceError,
    Params,
    Poly,
    Root,
    RootSet,
    coefficients,
    horner_with_derivative,
)

# ---------------------------------------------------------------------------
# integer polynomial helpers (ascending coefficients)


def _trim(cs: List[int]) -> List[int]:
    while cs and cs[-1] == 0:
        cs.pop()
    return cs


def _content(cs: List[int]) -> int:
    g = 0
    for a in cs:
        g = math.gcd(g, abs(a))
    return g or 1


def _primitive(cs: List[int]) -> List[int]:
    g = _content(cs)
    return [a // g for a in cs]


def _derive(cs: List[int]) -> List[int]:
    return [k * a for k, a in enumerate(cs) if k > 0] or [0]


def _poly_sub(f: List[int], g: List[int]) -> List[int]:
    out = [0] * max(len(f), len(g))
    for i, a in enumerate(f):
        out[i] += a
    for i, a in enumerate(g):
        out[i] -= a
    return _trim(out)


def _prem(f: List[int], g: List[int]) -> Tuple[List[int], int]:
    """Fraction-free remainder of f by g.

    Returns (r, steps) with r = lc(g)**steps * f mod g; the caller corrects
    for the sign of the implied scale.
    """
    dg = len(g) - 1
    lg = g[-1]
    r = list(f)
    steps = 0
    while len(r) - 1 >= dg and any(r):
        shift = len(r) - 1 - dg
        lr = r[-1]
        r = [lg * a for a in r]
        for i, a in enumerate(g):
            r[shift + i] -= lr * a
        _trim(r)
        steps += 1
    return _trim(r), steps


def _poly_gcd(f: List[int], g: List[int]) -> List[int]:
    """Primitive gcd with positive leading coefficient."""
    a = _primitive(_trim(list(f)))
    b = _primitive(_trim(list(g)))
    if len(a) < len(b):
        a, b = b, a
    while b:
        r, _ = _prem(a, b)
        a, b = b, _primitive(r) if r else []
    if not a:
        raise ValueError("gcd of zero polynomials")
    if a[-1] < 0:
        a = [-x for x in a]
    return a


def _exact_div(f: List[int], g: List[int]) -> List[int]:
    """Quotient f / g when g divides f; integrality is asserted."""
    num = [Fraction(a) for a in f]
    df, dg = len(f) - 1, len(g) - 1
    out = [Fraction(0)] * (df - dg + 1)
    for i in range(df - dg, -1, -1):
        coeff = num[i + dg] / g[-1]
        out[i] = coeff
        for k, a in enumerate(g):
            num[i + k] -= coeff * a
    if any(num):
        raise ValueError("division was not exact")
    if any(c.denominator != 1 for c in out):
        raise ValueError("quotient not integral")
    return [int(c) for c in out]


def squarefree_decomposition(cs: List[int]) -> List[Tuple[List[int], int]]:
    """Yun's splitting: pairwise-coprime squarefree factors with multiplicities.

    The product of factor**multiplicity equals the input up to a constant;
    constant factors are dropped.
    """
    f = _primitive(_trim(list(cs)))
    if len(f) <= 1:
        return []
    d = _poly_gcd(f, _derive(f))
    if len(d) == 1:
        return [(f, 1)]
    w = _exact_div(f, d)
    y = _exact_div(_derive(f), d)
    z = _poly_sub(y, _derive(w))
    out: List[Tuple[List[int], int]] = []
    i = 1
    while len(w) > 1:
        g = _poly_gcd(w, z) if z else list(w)
        if len(g) > 1:
            out.append((g, i))
        w = _exact_div(w, g)
        y = _exact_div(z, g) if z else []
        z = _poly_sub(y, _derive(w)) if y else []
        i += 1
    return out


def squarefree_part(cs: List[int]) -> List[int]:
    f = _primitive(_trim(list(cs)))
    if len(f) <= 1:
        return f
    d = _poly_gcd(f, _derive(f))
    if len(d) == 1:
        return f
    return _exact_div(f, d)


def _to_int_coeffs(q: Poly) -> List[int]:
    if not q.is_exact:
        raise InvalidParameterError("exact rational coefficients required")
    deg = q.effective_degree
    if deg < 0:
        raise ValueError("zero polynomial")
    cs = [Fraction(a) for a in q.coeffs[: deg + 1]]
    denom = 1
    for a in cs:
        denom = denom * a.denominator // math.gcd(denom, a.denominator)
    return [int(a * denom) for a in cs]


def _eval_fraction(cs: List[int], x: Fraction) -> Fraction:
    acc = Fraction(0)
    for a in reversed(cs):
        acc = acc * x + a
    return acc


def _sign(v) -> int:
    return (v > 0) - (v < 0)


# ---------------------------------------------------------------------------
# Sturm chains


@dataclass(frozen=True)
class SturmChain:
    """p, p', then sign-corrected fraction-free remainders, as integer polys.

    Each element is a positive multiple of the classical chain element, so
    sign-variation queries are unchanged.  Consecutive degrees strictly
    decrease; V(a) - V(b) counts distinct real roots in (a, b] for a < b.
    """

    polys: Tuple[Tuple[int, ...], ...]

    def variations_at(self, x: Fraction) -> int:
        signs = [_sign(_eval_fraction(list(p), x)) for p in self.polys]
        return _count_flips(signs)

    def variations_at_pos_inf(self) -> int:
        return _count_flips([_sign(p[-1]) for p in self.polys])

    def variations_at_neg_inf(self) -> int:
        signs = [
            _sign(p[-1]) * (-1 if (len(p) - 1) % 2 else 1) for p in self.polys
        ]
        return _count_flips(signs)

    def count_in(self, a: Fraction, b: Fraction) -> int:
        """Distinct real roots in (a, b); a and b must not be roots."""
        return self.variations_at(Fraction(a)) - self.variations_at(Fraction(b))


def _count_flips(signs: List[int]) -> int:
    flips = 0
    prev = 0
    for s in signs:
        if s == 0:
            continue
        if prev and s != prev:
            flips += 1
        prev = s
    return flips


def _build_chain(cs: List[int]) -> SturmChain:
    chain = [_primitive(_trim(list(cs)))]
    d = _trim(_derive(chain[0]))
    if d:
        chain.append(_primitive(d))
    while len(chain) >= 2 and len(chain[-1]) > 1:
        prev, cur = chain[-2], chain[-1]
        r, steps = _prem(prev, cur)
        if not r:
            break
        # prem scales by lc(cur)**steps; a negative scale must not flip the
        # chain sign, so fold it into the negation.
        positive_scale = cur[-1] > 0 or steps % 2 == 0
        nxt = [-x for x in r] if positive_scale else list(r)
        chain.append(_primitive(nxt))
    return SturmChain(tuple(tuple(p) for p in chain))


def sturm_chain(q: Poly) -> SturmChain:
    return _build_chain(_to_int_coeffs(q))


class SturmCounts(NamedTuple):
    n1: int  # distinct real roots in (1, inf)
    n2: int  # distinct real roots in (0, 1)
    n3: int  # distinct real roots in (-inf, 0)
    mult_at_1: int  # multiplicity of z = 1 in the original polynomial


def _divide_out_one(cs: List[int]) -> List[int]:
    """Exact synthetic division by (z - 1); remainder must vanish."""
    desc = list(reversed(cs))
    out = [desc[0]]
    for a in desc[1:]:
        out.append(a + out[-1])
    if out[-1] != 0:
        raise ValueError("1 is not a root")
    return list(reversed(out[:-1]))


def sturm_counts(q: Poly) -> SturmCounts:
    """Exact per-interval counts of distinct real roots, endpoints excluded.

    The root z = 1 is deflated first and reported as a multiplicity (it is
    the one admissible multiple-zero location with nonzero abscissa); any
    z = 0 factors are stripped; the remainder is reduced to its squarefree
    part and counted by sign variations at -inf, 0, 1, +inf.
    """
    cs = _to_int_coeffs(q)
    mult_at_1 = 0
    while len(cs) > 1 and sum(cs) == 0:
        cs = _divide_out_one(cs)
        mult_at_1 += 1
    while cs and cs[0] == 0:
        cs = cs[1:]
    if len(cs) <= 1:
        return SturmCounts(0, 0, 0, mult_at_1)
    s = squarefree_part(cs)
    chain = _build_chain(s)
    v_neg = chain.variations_at_neg_inf()
    v0 = chain.variations_at(Fraction(0))
    v1 = chain.variations_at(Fraction(1))
    v_pos = chain.variations_at_pos_inf()
    return SturmCounts(v1 - v_pos, v0 - v1, v_neg - v0, mult_at_1)


# ---------------------------------------------------------------------------
# numeric root solving


def _residual_scale(coeffs: Tuple[float, ...], z: complex) -> float:
    scale = 0.0
    zp = 1.0
    az = abs(z)
    for a in coeffs:
        scale += abs(a) * zp
        zp *= az
    return scale


def _root_bound(coeffs: List[float]) -> float:
    """Fujiwara-style upper bound on root magnitudes, computed in log space.

    The plain Cauchy bound max|a_i/a_d| explodes for tiny leading
    coefficients, and evaluating the polynomial on a circle that large
    overflows doubles; the k-th-root form stays on the scale of the
    actual roots.
    """
    d = len(coeffs) - 1
    log_lead = math.log(abs(coeffs[-1]))
    best = 0.0
    for k in range(1, d + 1):
        a = coeffs[d - k]
        if a == 0:
            continue
        best = max(best, (math.log(abs(a)) - log_lead) / k)
    return 2.0 * math.exp(best) + 1e-3


def _is_finite(z: complex) -> bool:
    return math.isfinite(z.real) and math.isfinite(z.imag)


def _aberth(
    coeffs: List[float],
    max_sweeps: int,
    evaluator=None,
    warm: Optional[List[complex]] = None,
    frozen: Optional[List[bool]] = None,
) -> Tuple[List[complex], int]:
    """Simultaneous iteration from perturbed-circle initial guesses.

    Termination is residual-driven: a sweep with no movement but leftover
    residual means the configuration stalled (typically two points shadowing
    one root), and the unconverged points are reseeded on the initial circle
    at fresh angles instead of being accepted.

    With the default float evaluator, "converged" can only mean small
    backward error (|p| below roundoff at the evaluation scale).  An exact
    evaluator tightens that to a true Newton-distance criterion, which is
    what the rescue pass for ill-conditioned high-degree inputs uses.
    """
    d = len(coeffs) - 1
    exact_eval = evaluator is not None
    if evaluator is None:
        def evaluator(z):
            return horner_with_derivative(coeffs, z)
    if d == 1:
        return [complex(-coeffs[0] / coeffs[1])], 0
    center = complex(-coeffs[-2] / (d * coeffs[-1]))
    if not _is_finite(center) or abs(center) > 1e12:
        center = 0j
    radius = _root_bound(coeffs)

    def seed(k: int, salt: int) -> complex:
        angle = 2 * math.pi * (k + 0.5) / d + 0.4 + 0.77 * salt
        return center + radius * cmath.exp(1j * angle)

    def point_settled(z: complex, p: complex, dp: complex) -> bool:
        if exact_eval:
            return dp != 0 and abs(p) <= 1e-14 * abs(dp) * (1 + abs(z))
        return abs(p) <= 1e-14 * _residual_scale(tuple(coeffs), z)

    zs = list(warm) if warm is not None else [seed(k, 0) for k in range(d)]
    sweeps = 0
    for sweeps in range(1, max_sweeps + 1):
        moved = False
        settled_flags = [False] * d
        for k in range(d):
            if frozen is not None and frozen[k]:
                # already validated; participates in the repulsion sums of
                # the others but is not re-evaluated or moved
                settled_flags[k] = True
                continue
            z = zs[k]
            p, dp = evaluator(z)
            if not (_is_finite(p) and _is_finite(dp)):
                # evaluation overflowed; pull the point toward the cluster
                zs[k] = center + (z - center) * 0.5
                moved = True
                continue
            if point_settled(z, p, dp):
                settled_flags[k] = True
                continue
            if dp == 0:
                zs[k] = z + (1e-8 + 1e-8j) * (1 + abs(z))
                moved = True
                continue
            w = p / dp
            acc = 0j
            for j in range(d):
                if j == k:
                    continue
                diff = z - zs[j]
                if diff == 0:
                    diff = 1e-12 * (1 + abs(z))
                acc += 1 / diff
            denom = 1 - w * acc
            step = w if denom == 0 else w / denom
            if not _is_finite(step):
                zs[k] = center + (z - center) * 0.5
                moved = True
                continue
            zs[k] = z - step
            if abs(step) > 1e-15 * (1 + abs(z)):
                moved = True
        if not moved:
            stuck = [k for k in range(d) if not settled_flags[k]]
            if not stuck:
                return zs, sweeps
            for k in stuck:
                zs[k] = seed(k, sweeps)
    raise NonConvergenceError(
        f"root iteration did not settle within {max_sweeps} sweeps",
        best=zs,
    )


def _newton_polish(coeffs: List[float], z: complex) -> Tuple[complex, float]:
    """Newton steps accepted while they shrink the residual.

    At exit one further step cannot improve (let alone halve) the residual,
    which is the termination contract callers rely on.
    """
    p, dp = horner_with_derivative(coeffs, z)
    res = abs(p)
    for _ in range(40):
        if res == 0.0 or dp == 0:
            break
        z_next = z - p / dp
        p_next, dp_next = horner_with_derivative(coeffs, z_next)
        if abs(p_next) < res:
            z, p, dp, res = z_next, p_next, dp_next, abs(p_next)
        else:
            break
    return z, res


def _big_to_float(num: int, scale_bits: int) -> float:
    """num / 2**scale_bits as a float, safe for arbitrarily large num."""
    if num == 0:
        return 0.0
    excess = num.bit_length() - 64
    if excess > 0:
        # floor-shift keeps 64 significant bits; the 1-ulp slop is far below
        # anything the callers resolve
        return math.ldexp(float(num >> excess), excess - scale_bits)
    return math.ldexp(float(num), -scale_bits)


def _exact_eval_pair(int_cs: List[int], z: complex) -> Tuple[complex, complex]:
    """p(z) and p'(z) evaluated exactly, rounded to floats at the end.

    Float components are dyadic rationals, so z = (mr + mi*i) / 2**s with
    integers mr, mi; the Horner recurrences then run in pure integer
    arithmetic with a power-of-two scale and no gcd normalization, which is
    what keeps exact evaluation affordable at degree 100.
    """
    nr, dr_den = z.real.as_integer_ratio()
    ni, di_den = z.imag.as_integer_ratio()
    sr = dr_den.bit_length() - 1
    si = di_den.bit_length() - 1
    s = max(sr, si)
    mr = nr << (s - sr)
    mi = ni << (s - si)

    def eval_scaled(cs: List[int]) -> Tuple[int, int, int]:
        # accumulates P_j(z) * 2**(s*j) over the Horner partials
        ar = ai = 0
        shift = 0
        for idx, a in enumerate(reversed(cs)):
            if idx:
                ar, ai = ar * mr - ai * mi, ar * mi + ai * mr
            ar += a << shift
            shift += s
        return ar, ai, shift - s

    pr, pi, pbits = eval_scaled(int_cs)
    der = _derive(int_cs)
    qr, qi, qbits = eval_scaled(der)
    p = complex(_big_to_float(pr, pbits), _big_to_float(pi, pbits))
    dp = complex(_big_to_float(qr, qbits), _big_to_float(qi, qbits))
    return p, dp


def _exact_newton(int_cs: List[int], z: complex, steps: int = 2) -> complex:
    """Newton steps with exact evaluation, for roots the float path cannot pin.

    Double-precision Horner limits the root error to roughly
    eps * scale / |p'|; evaluating p and p' exactly at the float iterate
    removes that floor while the step itself stays a float, so two steps
    reach the representable neighborhood of the true root.
    """
    for _ in range(steps):
        p, dp = _exact_eval_pair(int_cs, z)
        if p == 0 or dp == 0:
            break
        z = z - p / dp
    return z


def _exact_evaluator(int_cs: List[int]):
    """Evaluator computing p, p' exactly and rounding the values to floats."""

    def evaluate(z: complex) -> Tuple[complex, complex]:
        return _exact_eval_pair(int_cs, z)

    return evaluate


def _exact_root_distance(int_cs: List[int], z: complex) -> float:
    """Newton-distance estimate |p/p'| with exact evaluation; inf at p' = 0."""
    p, dp = _exact_eval_pair(int_cs, z)
    if p == 0:
        return 0.0
    if dp == 0:
        return math.inf
    return abs(p / dp)


def _real_snap(coeffs: List[float], z: complex, res: float) -> Tuple[complex, float]:
    """Move a near-axis root onto the axis when the real residual supports it.

    Simple real roots computed through complex iteration land within
    roundoff of the axis but never exactly on it; re-polishing in real
    arithmetic pins them.  A genuinely non-real root fails the residual
    test and is left alone.
    """
    if z.imag == 0.0:
        return z, res
    if abs(z.imag) > 1e-6 * (1.0 + abs(z.real)):
        return z, res
    x = z.real
    px, dpx = horner_with_derivative(coeffs, x)
    rx = abs(px)
    for _ in range(40):
        if rx == 0.0 or dpx == 0:
            break
        x_next = x - px / dpx
        p_next, dp_next = horner_with_derivative(coeffs, x_next)
        if abs(p_next) < 0.5 * rx:
            x, px, dpx, rx = x_next, p_next, dp_next, abs(p_next)
        else:
            break
    allowance = max(2.0 * res, 1e-13 * _residual_scale(tuple(coeffs), complex(x)))
    if rx <= allowance:
        return complex(x), rx
    return z, res


def _pair_conjugates(
    coeffs: List[float], roots: List[Tuple[complex, float]]
) -> List[Tuple[complex, float]]:
    """Symmetrize non-real roots into exact conjugate pairs."""
    real = [(z, r) for z, r in roots if z.imag == 0.0]
    upper = [(z, r) for z, r in roots if z.imag > 0.0]
    lower = [(z, r) for z, r in roots if z.imag < 0.0]
    out = list(real)
    for zu, ru in upper:
        if not lower:
            out.append((zu, ru))
            continue
        idx = min(range(len(lower)), key=lambda i: abs(zu - lower[i][0].conjugate()))
        zl, rl = lower.pop(idx)
        if abs(zu - zl.conjugate()) <= 1e-6 * (1.0 + abs(zu)):
            mid = (zu + zl.conjugate()) / 2
            res_mid = abs(horner_with_derivative(coeffs, mid)[0])
            out.append((mid, res_mid))
            out.append((mid.conjugate(), res_mid))
        else:
            out.append((zu, ru))
            out.append((zl, rl))
    out.extend(lower)
    return out


def all_roots(q: Poly, tol: float = 1e-10, max_sweeps: int = 1000) -> RootSet:
    """All complex roots of q with multiplicities and polished residuals.

    Exact inputs are split into squarefree factors first, so multiple roots
    are solved as simple roots of their factor and tagged with the factor's
    multiplicity.  Float inputs are solved directly with multiplicity 1 per
    root.  Residuals are reported against the original polynomial.
    """
    deg = q.effective_degree
    if deg < 1:
        raise InvalidParameterError("need effective degree >= 1 to solve for roots")
    if deg > 100:
        raise InvalidParameterError(
            f"degree {deg} exceeds the numeric solver cap of 100"
        )
    full = tuple(float(a) for a in q.coeffs[: deg + 1])
    scale_norm = max(abs(a) for a in full)

    tasks: List[Tuple[List[float], Optional[List[int]], int]] = []
    if q.is_exact:
        for factor, mult in squarefree_decomposition(_to_int_coeffs(q)):
            m = max(abs(a) for a in factor)
            tasks.append(([a / m for a in factor], factor, mult))
    else:
        tasks.append(([a / scale_norm for a in full], None, 1))

    def refine(fac: List[float], int_fac: Optional[List[int]], z: complex,
               float_polish: bool = True):
        if float_polish:
            z, res = _newton_polish(fac, z)
            z, res = _real_snap(fac, z, res)
        else:
            res = abs(horner_with_derivative(fac, z)[0])
        _, dp = horner_with_derivative(fac, z)
        if int_fac is not None and dp != 0 and (not float_polish or res > 1e-11 * abs(dp)):
            # Float evaluation noise caps the attainable accuracy at
            # roughly res/|p'|; exact evaluation lifts that cap.  Real
            # iterates stay exactly real through the exact steps.
            z = _exact_newton(int_fac, z)
            if z.imag != 0.0 and abs(z.imag) <= 1e-12 * (1.0 + abs(z.real)):
                z = complex(z.real, 0.0)
            res = abs(horner_with_derivative(fac, z)[0])
        return z, res

    def sound_mask(int_fac: List[int], points: List[Tuple[complex, float]]) -> List[bool]:
        return [
            _exact_root_distance(int_fac, z) <= 1e-9 * (1 + abs(z)) for z, _ in points
        ]

    total_sweeps = 0
    found: List[Tuple[complex, int, float]] = []
    for fac, int_fac, mult in tasks:
        solved, sweeps = _aberth(fac, max_sweeps)
        total_sweeps += sweeps
        polished = [refine(fac, int_fac, z) for z in solved]
        if int_fac is not None:
            sound = sound_mask(int_fac, polished)
            if not all(sound):
                # Backward-stable pseudo-roots: the float landscape is flat
                # at the evaluation scale, so rerun the iteration with exact
                # evaluation from the current points, keeping the validated
                # ones frozen in place.
                solved, sweeps = _aberth(
                    fac, max_sweeps, evaluator=_exact_evaluator(int_fac),
                    warm=[z for z, _ in polished], frozen=sound,
                )
                total_sweeps += sweeps
                # float polishing would wander in the flat landscape that
                # made the rescue necessary; go straight to exact steps
                polished = [
                    old if ok else refine(fac, int_fac, z, float_polish=False)
                    for old, ok, z in zip(polished, sound, solved)
                ]
                if not all(sound_mask(int_fac, polished)):
                    raise NonConvergenceError(
                        "exact-evaluation rescue left unverified roots",
                        best=polished,
                    )
        for z, _ in _pair_conjugates(fac, polished):
            res_q = abs(horner_with_derivative(full, z)[0])
            found.append((z, mult, res_q))

    if sum(m for _, m, _ in found) != deg:
        raise NonConvergenceError(
            f"solver accounted for {sum(m for _, m, _ in found)} of {deg} roots",
            best=found,
        )
    found.sort(key=lambda t: (t[0].real, t[0].imag))
    roots = tuple(Root(z, m, r) for z, m, r in found)
    return RootSet(roots, total_sweeps, tol)


# ---------------------------------------------------------------------------
# classification of computed roots


class NumericCounts(NamedTuple):
    n1: int
    n2: int
    n3: int
    at_one: int
    at_zero: int
    nonreal_pairs: int


def interval_counts(r: RootSet, band: float = 1e-9) -> NumericCounts:
    """Real-interval counts (with multiplicity) using an |Im| dead band."""
    n1 = n2 = n3 = at_one = at_zero = nonreal = 0
    for root in r.roots:
        z, m = root.value, root.multiplicity
        if abs(z.imag) <= band:
            x = z.real
            if abs(x - 1) <= band:
                at_one += m
            elif abs(x) <= band:
                at_zero += m
            elif x > 1:
                n1 += m
            elif x > 0:
                n2 += m
            else:
                n3 += m
        else:
            nonreal += m
    return NumericCounts(n1, n2, n3, at_one, at_zero, nonreal // 2)


@dataclass(frozen=True)
class GeometryObservation:
    """Computed-root geometry in the shape of a GeometryPrediction.

    Roots within tol of the circle |z-1| = 1 count as on_circle (this
    includes real roots near 0 or 2).  Remaining real roots fall into the
    three open intervals; remaining non-real roots are bucketed by the four
    circle/axis regions.
    """

    on_circle: int
    real_gt1: int
    real_in01: int
    real_neg: int
    at_one: int
    regions: Dict[str, int]
    nonreal_pairs: int

    @property
    def quadrant_pairs(self) -> Optional[int]:
        vals = set(self.regions.values())
        return vals.pop() if len(vals) == 1 else None


def geometry_report(r: RootSet, tol: float = special.CIRCLE_BAND) -> GeometryObservation:
    on_circle = gt1 = in01 = neg = at_one = 0
    regions = {"inside_upper": 0, "inside_lower": 0, "outside_upper": 0, "outside_lower": 0}
    for root in r.roots:
        z, m = root.value, root.multiplicity
        if abs(abs(z - 1) - 1) <= tol:
            on_circle += m
        elif abs(z.imag) <= tol:
            x = z.real
            if abs(x - 1) <= tol:
                at_one += m
            elif x > 1:
                gt1 += m
            elif x > 0:
                in01 += m
            else:
                neg += m
        else:
            side = "inside" if abs(z - 1) < 1 else "outside"
            half = "upper" if z.imag > 0 else "lower"
            regions[f"{side}_{half}"] += m
    nonreal = sum(regions.values())
    return GeometryObservation(on_circle, gt1, in01, neg, at_one, regions, nonreal // 2)


# ---------------------------------------------------------------------------
# prediction vs oracle


@dataclass(frozen=True)
class Check:
    name: str
    predicted: object
    observed: object

    @property
    def ok(self) -> bool:
        return self.predicted == self.observed


@dataclass(frozen=True)
class VerificationReport:
    params: Params
    mode: str
    confidence: str  # "exact" when Sturm counting applied, else "numeric"
    status: str  # pass | fail | boundary
    prediction: Optional[klein.CountPrediction]
    geometry_prediction: Optional[special.GeometryPrediction]
    sturm: Optional[SturmCounts]
    numeric: Optional[NumericCounts]
    observation: Optional[GeometryObservation]
    checks: Tuple[Check, ...]
    notes: Tuple[str, ...]

    @property
    def passed(self) -> bool:
        return self.status != "fail"


def verify(p: Params, tol: float = 1e-9) -> VerificationReport:
    """Predict counts (and geometry where a template applies), then check both
    against the Sturm counter and the numeric solver.

    Boundary parameters yield status "boundary" with the oracle output still
    attached; they are unclassifiable, not wrong.
    """
    notes: List[str] = []
    checks: List[Check] = []

    prediction = None
    try:
        prediction = klein.classify_region(p)
    except BoundaryParameterError as exc:
        notes.append(f"unclassifiable: boundary ({exc})")

    geometry_pred = None
    tags = transforms.quadratic_class_match(p)
    try:
        if "c=2b" in tags:
            geometry_pred = special.predict_2b(p.n, p.b)
        elif "c=1/2" in tags:
            geometry_pred = special.predict_half(p.n, p.b)
        elif "c=-2n" in tags:
            geometry_pred = special.predict_minus2n(p.n, p.b)
    except BoundaryParameterError as exc:
        notes.append(f"geometry unclassifiable: boundary ({exc})")

    q = coefficients(p)
    deg = q.effective_degree
    sturm = sturm_counts(q) if (p.is_exact and deg >= 1) else None
    rootset = all_roots(q) if deg >= 1 else RootSet((), 0, tol)
    numeric = interval_counts(rootset, band=tol)
    observation = geometry_report(rootset, tol=tol)

    if prediction is not None:
        if sturm is not None:
            checks.append(Check("count in (1,inf)", prediction.n1, sturm.n1))
            checks.append(Check("count in (0,1)", prediction.n2, sturm.n2))
            checks.append(Check("count in (-inf,0)", prediction.n3, sturm.n3))
            checks.append(Check("multiplicity at 1", 0, sturm.mult_at_1))
        else:
            checks.append(Check("count in (1,inf)", prediction.n1, numeric.n1))
            checks.append(Check("count in (0,1)", prediction.n2, numeric.n2))
            checks.append(Check("count in (-inf,0)", prediction.n3, numeric.n3))
        checks.append(Check("nonreal pairs", prediction.nonreal_pairs, numeric.nonreal_pairs))

    if geometry_pred is not None:
        if geometry_pred.quadrant_pairs is not None:
            checks.append(Check("on circle", geometry_pred.on_circle, observation.on_circle))
            for region, count in observation.regions.items():
                checks.append(Check(f"region {region}", geometry_pred.quadrant_pairs, count))
            checks.append(Check("real >1 off circle", geometry_pred.real_gt1, observation.real_gt1))
            checks.append(Check("real (0,1) off circle", geometry_pred.real_in01, observation.real_in01))
            checks.append(Check("real <0 off circle", geometry_pred.real_neg, observation.real_neg))
        else:
            checks.append(Check("real >1", geometry_pred.real_gt1, numeric.n1))
            checks.append(Check("real (0,1)", geometry_pred.real_in01, numeric.n2))
            checks.append(Check("real <0", geometry_pred.real_neg, numeric.n3))
            checks.append(Check("nonreal pairs (geometry)", geometry_pred.nonreal_pairs, numeric.nonreal_pairs))

    if any(not c.ok for c in checks):
        status = "fail"
    elif prediction is None:
        status = "boundary"
    else:
        status = "pass"
    if not p.is_exact:
        notes.append("numeric-confidence: float parameters, no exact counting path")

    return VerificationReport(
        params=p,
        mode=p.mode,
        confidence="exact" if p.is_exact else "numeric",
        status=status,
        prediction=prediction,
        geometry_prediction=geometry_pred,
        sturm=sturm,
        numeric=numeric,
        observation=observation,
        checks=tuple(checks),
        notes=tuple(notes),
    )
