"""Tests for complete-intersection invariants, frozen against the naive
convolution oracle in oracle.py and closed forms."""

from fractions import Fraction as F
from itertools import combinations_with_replacement

import pytest

import oracle
from cisym.invariants import (
    CompleteIntersection,
    ParityError,
    a_hat_genus,
    c1_coeff,
    chern_series,
    euler_characteristic,
    evaluate_top,
    invariants,
    is_spin,
    normalize,
    pontrjagin_coeff,
    signature,
)


def X(n, *degrees):
    return CompleteIntersection(n, degrees)


def multidegrees(max_sum, min_part=1):
    """All sorted multidegrees with entries >= min_part and sum <= max_sum."""
    out = []
    for r in range(1, max_sum // min_part + 1):
        for combo in combinations_with_replacement(
            range(min_part, max_sum + 1), r
        ):
            if sum(combo) <= max_sum:
                out.append(combo)
    return out


# ---------------------------------------------------------------------------
# Construction and normalization


def test_degrees_sorted_and_validated():
    assert X(3, 4, 2).degrees == (2, 4)
    with pytest.raises(ValueError):
        X(0, 2)
    with pytest.raises(ValueError):
        X(2, 0)
    with pytest.raises(ValueError):
        X(2, -3)
    with pytest.raises(ValueError):
        CompleteIntersection(2, [])
    with pytest.raises(ValueError):
        X(2, 10**6 + 1)
    with pytest.raises(ValueError):
        CompleteIntersection(2, [2] * 65)


def test_normalize_drops_linear_sections():
    assert normalize(X(3, 1, 3)).degrees == (3,)
    assert normalize(X(2, 1, 1, 2, 2)).degrees == (2, 2)
    assert normalize(X(3, 1, 1)).degrees == (1,)


# ---------------------------------------------------------------------------
# Chern series and Euler characteristic


def test_chern_series_of_the_quadric_threefold():
    # (1+x)^5 / (1+2x) through x^3.
    s = chern_series(X(3, 2))
    assert [s.coefficient(k) for k in range(4)] == [1, 3, 4, 2]


def test_euler_characteristics_frozen():
    assert euler_characteristic(X(3, 1)) == 4
    assert euler_characteristic(X(3, 2)) == 4
    assert euler_characteristic(X(3, 3)) == -6
    assert euler_characteristic(X(3, 5)) == -200
    assert euler_characteristic(X(3, 4)) == -56
    assert euler_characteristic(X(3, 2, 2)) == 0
    assert euler_characteristic(X(1, 3)) == 0
    assert euler_characteristic(X(2, 4)) == 24


def test_euler_projective_space_row():
    for n in range(1, 7):
        assert euler_characteristic(X(n, 1)) == n + 1


def test_curve_euler_closed_form_sweep():
    # chi = d_1...d_r * (2 - sum(d_j - 1)) for every multidegree of sum <= 10.
    for degs in multidegrees(10):
        ci = CompleteIntersection(1, degs)
        t = 1
        for d in degs:
            t *= d
        assert euler_characteristic(ci) == t * (2 - sum(d - 1 for d in degs))


def test_euler_matches_oracle_on_a_sweep():
    for degs in multidegrees(8, min_part=2):
        for n in (2, 3):
            assert euler_characteristic(
                CompleteIntersection(n, degs)
            ) == oracle.euler_ci(n, degs)


def test_evaluate_top_requires_enough_order():
    from cisym.algebra import TruncatedSeries

    with pytest.raises(ValueError):
        evaluate_top(X(3, 2), TruncatedSeries(2, [1]))


# ---------------------------------------------------------------------------
# Linear invariants


def test_c1_rho_t():
    rep = invariants(X(3, 4))
    assert (rep.t, rep.c1_coeff, rep.rho, rep.euler, rep.b3) == (4, 1, -11, -56, 60)
    rep2 = invariants(X(3, 2))
    assert (rep2.t, rep2.c1_coeff, rep2.rho, rep2.euler, rep2.b3) == (2, 3, 1, 4, 0)
    assert pontrjagin_coeff(X(3, 2, 2)) == -2
    assert c1_coeff(X(2, 2, 2)) == 1


def test_spin_parity():
    assert is_spin(X(3, 1))          # c1 = 4
    assert not is_spin(X(3, 2))      # c1 = 3
    assert is_spin(X(2, 4))          # c1 = 0, the K3 surface
    assert is_spin(X(2, 6))          # c1 = -2
    assert not is_spin(X(2, 3))


# ---------------------------------------------------------------------------
# Signature and A-hat


def test_signature_frozen_values():
    assert signature(X(2, 2)) == 0
    assert signature(X(2, 3)) == -5
    assert signature(X(2, 4)) == -16
    assert signature(X(2, 6)) == -64


def test_a_hat_frozen_values():
    assert a_hat_genus(X(2, 4)) == 2
    assert a_hat_genus(X(2, 6)) == 8
    assert a_hat_genus(X(2, 2)) == 0
    assert a_hat_genus(X(2, 3)) == F(5, 8)


def test_parity_errors_in_odd_dimension():
    with pytest.raises(ParityError):
        signature(X(3, 2))
    with pytest.raises(ParityError):
        a_hat_genus(X(1, 2))


def test_signature_and_a_hat_match_oracle_on_a_sweep():
    for degs in multidegrees(9, min_part=2):
        ci = CompleteIntersection(2, degs)
        assert signature(ci) == oracle.signature_ci(2, degs)
        assert a_hat_genus(ci) == oracle.a_hat_ci(2, degs)


def test_rokhlin_divisibility_sweep():
    # Spin 4-manifolds have signature divisible by 16.
    for degs in multidegrees(12):
        ci = CompleteIntersection(2, degs)
        if is_spin(ci):
            assert signature(ci) % 16 == 0


def test_spin_a_hat_is_minus_sign_over_eight():
    for degs in multidegrees(14):
        ci = CompleteIntersection(2, degs)
        if is_spin(ci):
            assert a_hat_genus(ci) == F(-signature(ci), 8)


def test_report_fields_in_odd_dimension():
    rep = invariants(X(3, 3))
    assert rep.signature is None and rep.a_hat is None
    assert rep.b3 == 10
    rep1 = invariants(X(1, 2))
    assert rep1.b3 is None and rep1.euler == 2
