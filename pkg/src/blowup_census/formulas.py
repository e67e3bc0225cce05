"""Exact integer formulas for induced 4-cycle counts in nested blow-ups.

Everything here is a pure function of the level N, evaluated over Python's
arbitrary-precision integers (counts grow like 4^(4N)).  For each base family
(the 4-cycle and the theta graph with three length-2 spokes) the module
provides:

* closed forms for the non-edge count m_N and edge count of level N;
* the level recurrence for the induced-4-cycle count T_N, with its per-term
  breakdown;
* the Q/R/S partial sums of the unrolled recurrence, each in two
  independently evaluated shapes (literal summation and geometric-sum closed
  form) so transcription errors are observable;
* the final closed form for T_N in two coefficient variants, "stated" and
  "derived", which disagree.  Both are evaluated verbatim over exact
  rationals; a non-integer result is returned as data, not raised, so the
  discrepancy can be reported instead of being hidden by a crash.

4-cycle family (m_N = 4^(N+1) * (4^(N+1) - 1) / 6, T_0 = 1):

    T_N = 4*T_{N-1} + (4^N)^4 + 4*m_{N-1}*(4^N)^2 + 4*m_{N-1}^2

theta family (m_N = 5^N * (5^(N+1) - 1), T_0 = 3, blob order 5^N):

    T_N = 5*T_{N-1} + 3*(5^N)^4 + 6*m_{N-1}^2 + 9*m_{N-1}*(5^N)^2
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from math import comb
from typing import Callable, NamedTuple, Union

__all__ = [
    "FORMULA_LEVEL_CAP",
    "FORMULAS",
    "FamilyFormulas",
    "PartialSums",
    "Rational",
    "SumPair",
    "TermBreakdown",
    "Variant",
    "c4_closed_T",
    "c4_edges_closed",
    "c4_nonedges_binomial",
    "c4_nonedges_closed",
    "c4_partial_sums",
    "c4_recurrence_T",
    "c4_recurrence_breakdown",
    "theta_closed_T",
    "theta_edges_closed",
    "theta_nonedges_closed",
    "theta_partial_sums",
    "theta_recurrence_T",
    "theta_recurrence_breakdown",
]

# Pure-formula checks sweep levels 0..30; values there are ~4^124, still cheap
# exactly, and far beyond any graph that could be built and counted.
FORMULA_LEVEL_CAP = 30


class Variant(str, Enum):
    """The two circulating coefficient sets for the final closed form."""

    STATED = "stated"
    DERIVED = "derived"


@dataclass(frozen=True)
class Rational:
    """Exact ratio kept unreduced so reports can show the raw evaluation."""

    numerator: int
    denominator: int

    @property
    def value(self) -> Fraction:
        return Fraction(self.numerator, self.denominator)

    @property
    def is_integer(self) -> bool:
        return self.numerator % self.denominator == 0

    def __str__(self) -> str:
        return f"{self.numerator}/{self.denominator}"


ClosedValue = Union[int, Rational]


def _exact_div(num: int, den: int) -> int:
    q, r = divmod(num, den)
    if r:
        raise ArithmeticError(f"inexact division {num}/{den} (transcription bug)")
    return q


def _int_or_rational(num: int, den: int) -> ClosedValue:
    q, r = divmod(num, den)
    return q if r == 0 else Rational(num, den)


# ---------------------------------------------------------------------------
# Non-edge and edge closed forms
# ---------------------------------------------------------------------------


def c4_nonedges_closed(N: int) -> int:
    """m_N for the 4-cycle family: 4^(N+1) * (4^(N+1) - 1) / 6.

    Also evaluates the equivalent binomial-minus-sum shape and insists the
    two agree.
    """
    order = 4 ** (N + 1)
    closed = _exact_div(order * (order - 1), 6)
    if closed != c4_nonedges_binomial(N):
        raise ArithmeticError(f"non-edge closed forms disagree at level {N}")
    return closed


def c4_nonedges_binomial(N: int) -> int:
    """m_N as C(4^(N+1), 2) minus the edge count 4^(N+1) * sum(4^i)."""
    order = 4 ** (N + 1)
    return comb(order, 2) - order * sum(4**i for i in range(N + 1))


def c4_edges_closed(N: int) -> int:
    """Edge count of level N for the 4-cycle family: 4^(N+1) * sum(4^i)."""
    order = 4 ** (N + 1)
    edges = order * sum(4**i for i in range(N + 1))
    if edges + c4_nonedges_closed(N) != comb(order, 2):
        raise ArithmeticError(f"edge/non-edge split broken at level {N}")
    return edges


def theta_nonedges_closed(N: int) -> int:
    """m_N for the theta family: 5^N * (5^(N+1) - 1), checked against the
    per-blob sum shape 4 * 5^N * sum(5^i)."""
    closed = 5**N * (5 ** (N + 1) - 1)
    summed = 4 * 5**N * sum(5**i for i in range(N + 1))
    if closed != summed:
        raise ArithmeticError(f"non-edge closed forms disagree at level {N}")
    return closed


def theta_edges_closed(N: int) -> int:
    """Edge count of level N for the theta family: 6 * 5^N * sum(5^i)."""
    edges = 6 * 5**N * sum(5**i for i in range(N + 1))
    if edges + theta_nonedges_closed(N) != comb(5 ** (N + 1), 2):
        raise ArithmeticError(f"edge/non-edge split broken at level {N}")
    return edges


# ---------------------------------------------------------------------------
# Recurrences
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class TermBreakdown:
    """The four summands of one application of the level recurrence.

    Slots follow the recurrence's term order.  For the 4-cycle family the
    names are literal; for the theta family the third slot holds the paired
    non-edge term 6*m^2 and the fourth the mixed term 9*m*(blob order)^2.
    At level 0 the base count rides in the copies slot and the rest are 0.
    """

    copies_term: int
    all_blob_term: int
    one_nonedge_term: int
    two_nonedge_term: int

    @property
    def total(self) -> int:
        return (
            self.copies_term
            + self.all_blob_term
            + self.one_nonedge_term
            + self.two_nonedge_term
        )


def _c4_terms(level: int, prev: int) -> TermBreakdown:
    blob = 4**level
    m = c4_nonedges_closed(level - 1)
    return TermBreakdown(4 * prev, blob**4, 4 * m * blob * blob, 4 * m * m)


def _theta_terms(level: int, prev: int) -> TermBreakdown:
    blob = 5**level
    m = theta_nonedges_closed(level - 1)
    return TermBreakdown(5 * prev, 3 * blob**4, 6 * m * m, 9 * m * blob * blob)


def _iterate(base: int, terms: Callable[[int, int], TermBreakdown], N: int) -> int:
    t = base
    for level in range(1, N + 1):
        t = terms(level, t).total
    return t


def c4_recurrence_T(N: int) -> int:
    """T_N by iterating the recurrence from T_0 = 1."""
    if N < 0:
        raise ValueError("level must be nonnegative")
    return _iterate(1, _c4_terms, N)


def c4_recurrence_breakdown(N: int) -> TermBreakdown:
    if N == 0:
        return TermBreakdown(1, 0, 0, 0)
    return _c4_terms(N, c4_recurrence_T(N - 1))


def theta_recurrence_T(N: int) -> int:
    """T_N by iterating the recurrence from T_0 = 3."""
    if N < 0:
        raise ValueError("level must be nonnegative")
    return _iterate(3, _theta_terms, N)


def theta_recurrence_breakdown(N: int) -> TermBreakdown:
    if N == 0:
        return TermBreakdown(3, 0, 0, 0)
    return _theta_terms(N, theta_recurrence_T(N - 1))


# ---------------------------------------------------------------------------
# Partial sums of the unrolled recurrence
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class SumPair:
    """One quantity computed two ways; agreement is the caller's check."""

    summation: int
    closed: int

    @property
    def agree(self) -> bool:
        return self.summation == self.closed


class PartialSums(NamedTuple):
    q: SumPair
    r: SumPair
    s: SumPair

    @property
    def total_summation(self) -> int:
        return self.q.summation + self.r.summation + self.s.summation

    @property
    def total_closed(self) -> int:
        return self.q.closed + self.r.closed + self.s.closed


def c4_partial_sums(N: int) -> PartialSums:
    """Q/R/S for the 4-cycle family; empty sums at N = 0 give R = S = 0.

    Q collects the cascaded copies and all-blob terms, R the single-non-edge
    terms, S the squared-non-edge terms:

        Q_N = 4^N * sum_{i=0..N} 4^(3i)
        R_N = sum_{i=1..N} 4^(N+i+1) * m_{i-1}
        S_N = sum_{i=1..N} 4^i * m_{N-i}^2
    """
    p = 4**N
    p2 = 4 ** (2 * N)
    p3 = 4 ** (3 * N)
    q_sum = p * sum(4 ** (3 * i) for i in range(N + 1))
    r_sum = sum(4 ** (N + i + 1) * c4_nonedges_closed(i - 1) for i in range(1, N + 1))
    s_sum = sum(4**i * c4_nonedges_closed(N - i) ** 2 for i in range(1, N + 1))
    q_closed = _exact_div(p * (64 * p3 - 1), 63)
    r_closed = _exact_div(4 * p * (320 * p3 - 336 * p2 + 16), 1890)
    s_closed = _exact_div(4 * p * (80 * p3 - 168 * p2 + 105 * p - 17), 2835)
    return PartialSums(
        SumPair(q_sum, q_closed), SumPair(r_sum, r_closed), SumPair(s_sum, s_closed)
    )


def theta_partial_sums(N: int) -> PartialSums:
    """Q/R/S for the theta family.

        Q_N = 3 * 5^N * sum_{i=0..N} 5^(3i)
        R_N = 6 * sum_{i=1..N} 5^(i-1) * m_{N-i}^2
        S_N = 9 * sum_{i=1..N} 5^(N+i) * m_{i-1}
    """
    p = 5**N
    p2 = 5 ** (2 * N)
    p3 = 5 ** (3 * N)
    q_sum = 3 * p * sum(5 ** (3 * i) for i in range(N + 1))
    r_sum = 6 * sum(5 ** (i - 1) * theta_nonedges_closed(N - i) ** 2 for i in range(1, N + 1))
    s_sum = 9 * sum(5 ** (N + i) * theta_nonedges_closed(i - 1) for i in range(1, N + 1))
    q_closed = _exact_div(3 * p * (125 * p3 - 1), 124)
    r_closed = _exact_div(p * (150 * p3 - 310 * p2 + 186 * p - 26), 620)
    s_closed = _exact_div(3 * p * (750 * p3 - 775 * p2 + 25), 1240)
    return PartialSums(
        SumPair(q_sum, q_closed), SumPair(r_sum, r_closed), SumPair(s_sum, s_closed)
    )


# ---------------------------------------------------------------------------
# Final closed forms, both coefficient variants
# ---------------------------------------------------------------------------


def c4_closed_T(N: int, variant: Variant) -> ClosedValue:
    """T_N closed form for the 4-cycle family.

    The derived variant equals the unrolled recurrence identically; the
    stated variant has a flipped second coefficient and a different constant
    and never evaluates to an integer (5670 = 2 * 3^4 * 5 * 7, but the stated
    numerator only carries a single factor of 3 beyond powers of 2).
    """
    p = 4**N
    p2 = 4 ** (2 * N)
    p3 = 4 ** (3 * N)
    if Variant(variant) is Variant.STATED:
        num = 8 * p * (1280 * p3 + 672 * p2 + 105 * p - 713)
    else:
        num = p * (10240 * p3 - 5376 * p2 + 840 * p - 34)
    return _int_or_rational(num, 5670)


def theta_closed_T(N: int, variant: Variant) -> ClosedValue:
    """T_N closed form for the theta family.

    The variants differ only in the trailing constant (-3877 vs -7); the
    stated one is negative at N = 0 and non-integer at every level.
    """
    tail = -3877 if Variant(variant) is Variant.STATED else -7
    p = 5**N
    p2 = 5 ** (2 * N)
    p3 = 5 ** (3 * N)
    num = p * (6300 * p3 - 2945 * p2 + 372 * p + tail)
    return _int_or_rational(num, 1240)


# ---------------------------------------------------------------------------
# Per-family dispatch table
# ---------------------------------------------------------------------------


class FamilyFormulas(NamedTuple):
    """Formula bundle for one base family, keyed by Family.value."""

    base_order: int
    base_count: int
    nonedges_closed: Callable[[int], int]
    edges_closed: Callable[[int], int]
    recurrence_T: Callable[[int], int]
    recurrence_breakdown: Callable[[int], TermBreakdown]
    partial_sums: Callable[[int], PartialSums]
    closed_T: Callable[[int, Variant], ClosedValue]


FORMULAS: dict[str, FamilyFormulas] = {
    "c4": FamilyFormulas(
        base_order=4,
        base_count=1,
        nonedges_closed=c4_nonedges_closed,
        edges_closed=c4_edges_closed,
        recurrence_T=c4_recurrence_T,
        recurrence_breakdown=c4_recurrence_breakdown,
        partial_sums=c4_partial_sums,
        closed_T=c4_closed_T,
    ),
    "theta222": FamilyFormulas(
        base_order=5,
        base_count=3,
        nonedges_closed=theta_nonedges_closed,
        edges_closed=theta_edges_closed,
        recurrence_T=theta_recurrence_T,
        recurrence_breakdown=theta_recurrence_breakdown,
        partial_sums=theta_partial_sums,
        closed_T=theta_closed_T,
    ),
}
