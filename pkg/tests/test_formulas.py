"""Formula values, dual evaluations, and the level-0..30 property sweeps.

Frozen non-edge and count values were first computed from the constructed
graphs by an independent brute-force scan, then frozen here; the formula
routes must reproduce them exactly.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb

import pytest

from blowup_census import (
    BlowupSpec,
    Family,
    Rational,
    TermBreakdown,
    Variant,
    c4_closed_T,
    c4_edges_closed,
    c4_nonedges_binomial,
    c4_nonedges_closed,
    c4_partial_sums,
    c4_recurrence_T,
    c4_recurrence_breakdown,
    nested_blowup,
    theta_closed_T,
    theta_edges_closed,
    theta_nonedges_closed,
    theta_partial_sums,
    theta_recurrence_T,
    theta_recurrence_breakdown,
)
from blowup_census.formulas import _exact_div

SWEEP = range(31)


# ---------------------------------------------------------------------------
# Non-edge and edge closed forms
# ---------------------------------------------------------------------------


def test_c4_nonedges_values():
    assert [c4_nonedges_closed(n) for n in range(4)] == [2, 40, 672, 10880]


def test_c4_nonedges_dual_forms_agree():
    for n in SWEEP:
        assert c4_nonedges_closed(n) == c4_nonedges_binomial(n)


def test_c4_nonedges_match_graphs():
    for n in range(3):
        g = nested_blowup(BlowupSpec(Family.C4, n))
        assert g.non_edge_count == c4_nonedges_closed(n)
        assert g.edge_count == c4_edges_closed(n)


def test_theta_nonedges_values():
    assert [theta_nonedges_closed(n) for n in range(3)] == [4, 120, 3100]


def test_theta_edges_values():
    assert [theta_edges_closed(n) for n in range(3)] == [6, 180, 4650]


def test_theta_formulas_match_graphs():
    for n in range(3):
        g = nested_blowup(BlowupSpec(Family.THETA222, n))
        assert g.non_edge_count == theta_nonedges_closed(n)
        assert g.edge_count == theta_edges_closed(n)


def test_theta_edge_nonedge_split():
    for n in SWEEP:
        order = 5 ** (n + 1)
        assert theta_edges_closed(n) + theta_nonedges_closed(n) == comb(order, 2)


def test_c4_nonedge_induction_step():
    # m_{N+1} = C(4^{N+2}, 2) - 4*|E(G_N)| - 4*(4^{N+1})^2
    for n in SWEEP:
        order = 4 ** (n + 1)
        edges = comb(order, 2) - c4_nonedges_closed(n)
        expected = comb(4 ** (n + 2), 2) - 4 * edges - 4 * order * order
        assert c4_nonedges_closed(n + 1) == expected


def test_theta_nonedge_induction_step():
    for n in SWEEP:
        order_next = 5 ** (n + 2)
        assert theta_nonedges_closed(n + 1) == comb(order_next, 2) - theta_edges_closed(n + 1)


# ---------------------------------------------------------------------------
# Recurrences and breakdowns
# ---------------------------------------------------------------------------


def test_c4_recurrence_values():
    assert [c4_recurrence_T(n) for n in range(4)] == [1, 404, 114512, 30051648]


def test_theta_recurrence_values():
    assert [theta_recurrence_T(n) for n in range(4)] == [3, 2886, 1947705, 1235757900]


def test_recurrence_rejects_negative():
    with pytest.raises(ValueError):
        c4_recurrence_T(-1)
    with pytest.raises(ValueError):
        theta_recurrence_T(-1)


def test_c4_breakdown_level_one():
    assert c4_recurrence_breakdown(1) == TermBreakdown(4, 256, 128, 16)


def test_theta_breakdown_level_one():
    assert theta_recurrence_breakdown(1) == TermBreakdown(15, 1875, 96, 900)


def test_breakdown_level_zero_convention():
    assert c4_recurrence_breakdown(0) == TermBreakdown(1, 0, 0, 0)
    assert theta_recurrence_breakdown(0) == TermBreakdown(3, 0, 0, 0)


def test_breakdown_totals_equal_recurrence():
    for n in SWEEP:
        assert c4_recurrence_breakdown(n).total == c4_recurrence_T(n)
        assert theta_recurrence_breakdown(n).total == theta_recurrence_T(n)


# ---------------------------------------------------------------------------
# Partial sums
# ---------------------------------------------------------------------------


def test_c4_partial_sums_level_one():
    sums = c4_partial_sums(1)
    assert (sums.q.summation, sums.r.summation, sums.s.summation) == (260, 128, 16)


def test_c4_partial_sums_level_zero_empty_sums():
    sums = c4_partial_sums(0)
    assert (sums.q.summation, sums.r.summation, sums.s.summation) == (1, 0, 0)


def test_theta_partial_sums_level_one():
    sums = theta_partial_sums(1)
    assert (sums.q.summation, sums.r.summation, sums.s.summation) == (1890, 96, 900)


def test_theta_partial_sums_level_zero():
    sums = theta_partial_sums(0)
    assert (sums.q.summation, sums.r.summation, sums.s.summation) == (3, 0, 0)


@pytest.mark.parametrize(
    "partial_sums, recurrence",
    [(c4_partial_sums, c4_recurrence_T), (theta_partial_sums, theta_recurrence_T)],
    ids=["c4", "theta"],
)
def test_partial_sum_properties(partial_sums, recurrence):
    for n in SWEEP:
        sums = partial_sums(n)
        assert sums.q.agree and sums.r.agree and sums.s.agree
        assert sums.total_summation == recurrence(n)
        assert sums.total_closed == recurrence(n)


def test_partial_sums_level_two_match_recurrence():
    assert c4_partial_sums(2).total_summation == 114512
    assert theta_partial_sums(2).total_summation == 1947705


# ---------------------------------------------------------------------------
# Closed forms, both variants
# ---------------------------------------------------------------------------


def test_c4_derived_closed_values():
    assert [c4_closed_T(n, Variant.DERIVED) for n in range(3)] == [1, 404, 114512]


def test_theta_derived_closed_values():
    assert [theta_closed_T(n, Variant.DERIVED) for n in range(3)] == [3, 2886, 1947705]


def test_derived_equals_recurrence_sweep():
    # divisibility by 5670 resp. 1240 holds implicitly: an int comes back
    for n in SWEEP:
        assert c4_closed_T(n, Variant.DERIVED) == c4_recurrence_T(n)
        assert theta_closed_T(n, Variant.DERIVED) == theta_recurrence_T(n)


def test_c4_stated_is_noninteger_at_zero():
    value = c4_closed_T(0, Variant.STATED)
    assert isinstance(value, Rational)
    assert value == Rational(10752, 5670)
    assert str(value) == "10752/5670"
    assert not value.is_integer
    assert value.value != 1


def test_theta_stated_is_negative_at_zero():
    value = theta_closed_T(0, Variant.STATED)
    assert isinstance(value, Rational)
    assert str(value) == "-150/1240"
    assert value.value == Fraction(-15, 124)
    assert value.value < 0 and value.value != 3


def test_stated_never_matches_sweep():
    for n in SWEEP:
        c4_stated = c4_closed_T(n, Variant.STATED)
        theta_stated = theta_closed_T(n, Variant.STATED)
        assert isinstance(c4_stated, Rational)
        assert isinstance(theta_stated, Rational)
        assert c4_stated.value != c4_recurrence_T(n)
        assert theta_stated.value != theta_recurrence_T(n)


def test_variant_accepts_strings():
    assert c4_closed_T(1, "derived") == 404
    assert isinstance(theta_closed_T(1, "stated"), Rational)


def test_exact_div_guards():
    assert _exact_div(10, 5) == 2
    with pytest.raises(ArithmeticError):
        _exact_div(10, 4)
