"""The count formulas, the regional classifier, and their covariances."""

import random
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from hyperzero import (
    Params,
    binomial_sign,
    classify_region,
    coefficients,
    klein_E,
    pfaff,
    predict_counts,
    sturm_counts,
    xyz,
)
from hyperzero.core import BoundaryParameterError, InvalidParameterError

from conftest import general_position_params


# ---------------------------------------------------------------------------
# E


def test_E_branches():
    assert klein_E(-3) == 0
    assert klein_E(2.5) == 2
    assert klein_E(4) == 3
    assert klein_E(Fraction(4)) == 3
    assert klein_E(0) == 0
    assert klein_E(Fraction(1, 2)) == 0
    assert klein_E(1) == 0


def test_E_float_integrality_detection():
    assert klein_E(4.0 + 1e-13) == 3
    assert klein_E(4.0 - 1e-13) == 3
    assert klein_E(3.9999) == 3
    assert klein_E(1e-14) == 0


@given(st.fractions(-20, 20))
def test_E_matches_piecewise_definition(u):
    e = klein_E(u)
    if u <= 0:
        assert e == 0
    elif u.denominator == 1:
        assert e == u - 1
    else:
        assert e == u.numerator // u.denominator


# ---------------------------------------------------------------------------
# xyz


def test_xyz_hand_example():
    k = xyz(Params(3, 10, 2))
    assert (k.x, k.y, k.z) == (0, 3, 0)


def test_xyz_negative_c_regime_closed_form():
    # for c < 0 < b with c-b > 1-n the three absolute values resolve and
    # X = E(1-c-n), Y = E(b), Z = E(c-b)
    rng = random.Random(41)
    count = 0
    while count < 50:
        n = rng.randint(2, 9)
        c = Fraction(rng.randint(-8 * (n - 1) + 1, -1), 8)
        b = Fraction(rng.randint(1, 8 * (n - 1) - 1), 8)
        if not (c - b > 1 - n):
            continue
        try:
            k = xyz(Params(n, b, c))
        except InvalidParameterError:
            continue
        assert k.x == klein_E(1 - c - n)
        assert k.y == klein_E(b)
        assert k.z == klein_E(c - b)
        count += 1


def test_xyz_all_negative_regime_vanishes():
    rng = random.Random(42)
    count = 0
    while count < 50:
        n = rng.randint(2, 9)
        b = Fraction(rng.randint(-8 * (n - 1) + 1, -1), 8)
        c = Fraction(rng.randint(-8 * (n - 1) + 1, -1), 8)
        if not (1 - n < c - b < 0):
            continue
        try:
            k = xyz(Params(n, b, c))
        except InvalidParameterError:
            continue
        assert (k.x, k.y, k.z) == (0, 0, 0)
        count += 1


# ---------------------------------------------------------------------------
# binomial signs


def test_binomial_sign_examples():
    for n in (1, 2, 3, 5, 8):
        for b in (Fraction(3, 2), Fraction(7), 0.4):
            assert binomial_sign(-b, n) == (-1) ** n
    # b - c > n makes (b-c choose n) positive for all n
    for n in (1, 2, 5):
        assert binomial_sign(Fraction(13, 2), n) == 1
    assert binomial_sign(2, 5) == 0
    assert binomial_sign(2.0 + 1e-14, 5) == 0


# ---------------------------------------------------------------------------
# predict_counts


def test_predict_counts_all_in_unit_interval():
    pred = predict_counts(Params(3, 10, 2))
    assert pred.counts == (0, 3, 0)
    assert pred.nonreal_pairs == 0
    assert pred.provenance == "thm3.1"


def test_predict_counts_all_nonreal():
    pred = predict_counts(Params(2, Fraction(1, 2), 1))
    assert pred.counts == (0, 0, 0)
    assert pred.nonreal_pairs == 1


def test_predict_counts_all_negative():
    pred = predict_counts(Params(4, Fraction(-9, 2), 1))
    assert pred.counts == (0, 0, 4)


def test_predict_counts_boundary_hypothesis():
    for n, b, c in [(3, -1, 2), (3, 2, 2), (4, Fraction(1, 2), Fraction(1, 2))]:
        with pytest.raises(BoundaryParameterError):
            predict_counts(Params(n, b, c))


# ---------------------------------------------------------------------------
# classify_region


def test_classify_window_j3():
    pred = classify_region(Params(5, Fraction(7, 2), 1))
    assert pred.counts == (0, 3, 0)
    assert pred.nonreal_pairs == 1
    assert pred.provenance == "thm3.2.ii(j=3)"


def test_classify_negative_c_positive_b():
    pred = classify_region(Params(4, Fraction(1, 2), Fraction(-7, 5)))
    assert pred.counts == (0, 0, 0)
    assert pred.nonreal_pairs == 2
    assert pred.provenance == "thm3.3.ii.a(j=2,k=2)"


def test_classify_all_negative():
    pred = classify_region(Params(3, Fraction(-1, 2), Fraction(-7, 10)))
    assert pred.counts == (1, 0, 0)
    assert pred.nonreal_pairs == 1
    assert pred.provenance == "thm3.4(j=1,k=1,l=1)"


def test_classify_boundary_cases():
    with pytest.raises(BoundaryParameterError):
        classify_region(Params(2, 1, 1))  # b = c
    with pytest.raises(BoundaryParameterError):
        classify_region(Params(3, Fraction(9, 2), Fraction(3, 2)))  # b - c = n
    with pytest.raises(BoundaryParameterError):
        classify_region(Params(3, -3, 2))  # b = -n
    with pytest.raises(BoundaryParameterError):
        classify_region(Params(3, -1, 2))  # degenerate b


def test_classify_float_boundary_proximity():
    with pytest.raises(BoundaryParameterError):
        classify_region(Params(3, 2.0 + 1e-13, 2.0))


def test_classify_matches_predict_on_random_samples():
    rng = random.Random(43)
    for _ in range(500):
        p = general_position_params(rng)
        assert classify_region(p).counts == predict_counts(p).counts, p


def test_classify_agrees_with_sturm_on_random_samples():
    rng = random.Random(44)
    for _ in range(100):
        p = general_position_params(rng, n_hi=8)
        st_counts = sturm_counts(coefficients(p))
        assert classify_region(p).counts == (st_counts.n1, st_counts.n2, st_counts.n3), p


@given(st.integers(1, 9), st.fractions(-10, 10), st.fractions(-10, 10))
def test_parity_invariant(n, b, c):
    try:
        pred = predict_counts(Params(n, b, c))
    except (InvalidParameterError, BoundaryParameterError):
        return
    assert (n - sum(pred.counts)) % 2 == 0
    assert sum(pred.counts) + 2 * pred.nonreal_pairs == n


# ---------------------------------------------------------------------------
# covariances under the transforms


def test_pfaff_covariance():
    rng = random.Random(45)
    done = 0
    while done < 60:
        p = general_position_params(rng)
        target = pfaff(p)
        try:
            a = predict_counts(p)
            t = predict_counts(target)
        except BoundaryParameterError:
            continue
        assert (t.n1, t.n2, t.n3) == (a.n1, a.n3, a.n2), p
        done += 1


def test_euler_covariance():
    from hyperzero import euler_reflect

    rng = random.Random(46)
    done = 0
    while done < 60:
        p = general_position_params(rng)
        try:
            target, _ = euler_reflect(p)
            a = predict_counts(p)
            t = predict_counts(target)
        except (InvalidParameterError, BoundaryParameterError):
            continue
        # source zeros are 1 - target zeros
        assert (a.n1, a.n2, a.n3) == (t.n3, t.n2, t.n1), p
        done += 1


def test_window_reduction_via_pfaff():
    # b < -n with c > 0: the Pfaff image has b' = c-b > c+n, so the image
    # classifies into the all-in-(0,1) window and transports back to
    # all-negative; the direct classification must agree.
    rng = random.Random(47)
    done = 0
    while done < 30:
        n = rng.randint(2, 8)
        c = Fraction(rng.randint(1, 40), 8)
        b = Fraction(rng.randint(-8 * (n + 6), -8 * n - 1), 8)
        try:
            direct = classify_region(Params(n, b, c))
            image = classify_region(pfaff(Params(n, b, c)))
        except (InvalidParameterError, BoundaryParameterError):
            continue
        assert image.provenance == "thm3.2.i"
        assert direct.counts == (image.n1, image.n3, image.n2)
        assert direct.provenance == "thm3.2.v"
        done += 1


def test_window_reduction_via_pfaff_inner_windows():
    # -n < b < 0 maps to c+j-1 < b' < c+j; counts transport as (n1, n3, n2)
    rng = random.Random(48)
    done = 0
    while done < 30:
        n = rng.randint(2, 8)
        c = Fraction(rng.randint(1, 40), 8)
        b = Fraction(rng.randint(-8 * n + 1, -1), 8)
        try:
            direct = classify_region(Params(n, b, c))
            image = classify_region(pfaff(Params(n, b, c)))
        except (InvalidParameterError, BoundaryParameterError):
            continue
        if not direct.provenance.startswith("thm3.2.iv"):
            continue
        assert image.provenance.startswith("thm3.2.ii")
        assert direct.counts == (image.n1, image.n3, image.n2)
        done += 1
