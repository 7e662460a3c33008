"""Inequality-chain arithmetic: thresholds, recurrence, counting checks."""
from fractions import Fraction

import pytest

from fracbal.bounds import (
    BoundParams,
    BoundsError,
    arboricity_counting_check,
    first_infeasible_index,
    m_upper_bound,
    mu_bound,
    mu_recurrence,
    threshold_52_25,
    threshold_83_41,
    threshold_172_85,
)


def test_param_range_enforced():
    BoundParams(2, 1)
    BoundParams(5, 2)
    BoundParams(83, 41)
    with pytest.raises(BoundsError):
        BoundParams(3, 2)  # p < 2q
    with pytest.raises(BoundsError):
        BoundParams(6, 2)  # p > ceil(5q/2)
    with pytest.raises(BoundsError):
        BoundParams(2, 0)


def test_m_upper_bound_values():
    assert m_upper_bound(BoundParams(172, 85)) == 4
    assert m_upper_bound(BoundParams(2, 1)) == 0
    assert m_upper_bound(BoundParams(83, 41)) == 2


def test_mu_examples():
    assert mu_recurrence(BoundParams(2, 1), 1) == Fraction(-1)
    bp = BoundParams(83, 41)
    assert all(mu_bound(bp, i) == 2 for i in range(10))
    assert mu_bound(BoundParams(172, 85), 0) == 4 == m_upper_bound(BoundParams(172, 85))


def test_closed_form_equals_recurrence_everywhere_tested():
    for p, q in ((2, 1), (5, 2), (83, 41), (172, 85), (168, 83), (52, 25), (205, 100)):
        bp = BoundParams(p, q)
        for i in range(31):
            assert mu_bound(bp, i) == mu_recurrence(bp, i)


def test_first_infeasible_examples():
    assert first_infeasible_index(BoundParams(2, 1)) == 1
    assert first_infeasible_index(BoundParams(83, 41)) is None
    # 168/83 < 83/41 (168*41 = 6888 < 6889 = 83*83): finite index, and the
    # recurrence reproduces it independently
    bp = BoundParams(168, 83)
    idx = first_infeasible_index(bp)
    assert idx is not None
    mu = Fraction(2 * 168 - 4 * 83)
    steps = 0
    while mu >= 0:
        mu = Fraction(168 - 3 * 83) + 21 * mu
        steps += 1
    assert idx == steps


def test_thresholds_are_derived_fractions():
    assert threshold_83_41() == Fraction(83, 41)
    assert threshold_172_85() == Fraction(172, 85)
    assert threshold_52_25() == Fraction(52, 25)


def test_dichotomy_scan():
    boundary = Fraction(83, 41)
    for q in range(1, 101):
        for p in range(2 * q, (5 * q + 1) // 2 + 1):
            finite = first_infeasible_index(BoundParams(p, q)) is not None
            assert finite == (Fraction(p, q) < boundary), (p, q)


def test_mu_monotone_in_p_and_antitone_in_q():
    for i in (0, 1, 3):
        assert mu_bound(BoundParams(169, 83), i) >= mu_bound(BoundParams(168, 83), i)
        assert mu_bound(BoundParams(168, 82), i) >= mu_bound(BoundParams(168, 83), i)


def test_arboricity_counting_examples():
    assert arboricity_counting_check(52, 25, 10, 10)
    assert not arboricity_counting_check(52, 25, 11, 10)
    # p = 2q, a = a_uv = 0 by hand: first side 2*0+4+4+0 = 8 >= 8 holds,
    # second side 0+0+3+4+0 = 7 >= 8 fails, so the conjunction is False
    assert arboricity_counting_check(2, 1, 0, 0) is False


def test_cross_module_table_audit_matches_bound():
    from fracbal.certify import triangle_missing_count
    from fracbal.gadgets import w_hat
    from fracbal.tables import w_coloring_172_85

    cap = m_upper_bound(BoundParams(172, 85))
    cert = w_coloring_172_85()
    for t in w_hat().marked_triangles:
        assert triangle_missing_count(cert, t) <= cap
