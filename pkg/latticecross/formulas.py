"""Closed forms for paths crossing a line and for pairs of paths crossing each other.

Every ``Σ_{n≥0}`` is summed up to the last ``n`` for which a q-binomial factor can be nonzero,
and terms whose q-binomials vanish are skipped before any monomial is formed.
"""

from __future__ import annotations

from collections import Counter
from enum import Enum
import logging
from math import comb
from typing import (
    Any,
    Union, Optional,
    Tuple, List, Dict,
    Callable,
)

from .errors import (
    FormulaMismatch,
    UnsupportedConfiguration, Condition13Violated,
)
from .models import (
    Frozen,
    Assignment, Bracket, Interval,
    Point,
    _check_keys,
)
from .paths import precedes
from .pair_arrays import enumerate_pairs, pair_sum
from .qpoly import (
    QTPoly,
    zero, one, constant, monomial, shift, total,
    qbinom, exact_div_one_minus_q_pow,
)

_logger = logging.getLogger(__name__)

# ====================================================================
# Queries
# ====================================================================

class LineQuery(Frozen):
    """Represents a request for the polynomial of paths crossing a horizontal line.

    The answer sums ``t^des q^maj`` over paths with ``a`` up-steps and ``b`` down-steps that cross
    the line at height ``ell`` at least ``r`` times.

    Args:
        a: Number of up-steps.
        b: Number of down-steps.
        ell: Height of the line, relative to the start of the path.
        r: Crossing threshold.
    """
    a: int
    b: int
    ell: int
    r: int

    __slots__ = ("a", "b", "ell", "r")

    def __init__(self, a: int, b: int, ell: int=0, r: int=0):
        if a < 0 or b < 0 or r < 0:
            raise ValueError(f"a, b and r must be nonnegative, given a={a}, b={b}, r={r}")
        object.__setattr__(self, "a", int(a))
        object.__setattr__(self, "b", int(b))
        object.__setattr__(self, "ell", int(ell))
        object.__setattr__(self, "r", int(r))

    def with_r(self, r: int) -> LineQuery:
        return LineQuery(self.a, self.b, self.ell, r)

    def __repr__(self):
        return f"{self.__class__.__name__}(a={self.a}, b={self.b}, ell={self.ell}, r={self.r})"

    @staticmethod
    def from_json(query: Dict[str,Any]) -> LineQuery:
        _check_keys(LineQuery, query, LineQuery.__slots__)
        return LineQuery(query["a"], query["b"], query.get("ell", 0), query.get("r", 0))

class PairQuery(Frozen):
    """Represents a request for the polynomial of pairs of paths with at least ``r`` crossings.

    Path ``P`` starts at ``a1`` and path ``Q`` at ``a2``. The end points are named so that ``b1``
    precedes ``b2`` whenever they are comparable; `assignment` says which of them ``P`` runs to.

    Hint:
        Use `PairQuery.from_targets` to build a query from the two end points directly: ::

            >>> PairQuery.from_targets((0, 2), (2, 0), (10, 7), (8, 8), r=3).assignment
            <Assignment.P_TO_B2: 'P_to_B2'>

    Args:
        a1, a2, b1, b2: The four points.
        assignment: Which end point ``P`` runs to.
        r: Crossing threshold.
    """
    a1: Point
    a2: Point
    b1: Point
    b2: Point
    assignment: Assignment
    r: int

    __slots__ = ("a1", "a2", "b1", "b2", "assignment", "r")

    def __init__(self,
        a1: Point, a2: Point, b1: Point, b2: Point,
        assignment: Assignment=Assignment.P_TO_B1,
        r: int=0,
    ):
        if r < 0:
            raise ValueError(f"r must be nonnegative, given {r}")
        object.__setattr__(self, "a1", Point.from_json(a1))
        object.__setattr__(self, "a2", Point.from_json(a2))
        object.__setattr__(self, "b1", Point.from_json(b1))
        object.__setattr__(self, "b2", Point.from_json(b2))
        object.__setattr__(self, "assignment", Assignment(assignment))
        object.__setattr__(self, "r", int(r))

    @staticmethod
    def from_targets(a1: Point, a2: Point, bp: Point, bq: Point, r: int=0) -> PairQuery:
        """Build a query for ``P: a1 → bp`` and ``Q: a2 → bq``.
        """
        bp, bq = Point.from_json(bp), Point.from_json(bq)
        if precedes(bq, bp):
            return PairQuery(a1, a2, bq, bp, Assignment.P_TO_B2, r)
        return PairQuery(a1, a2, bp, bq, Assignment.P_TO_B1, r)

    def targets(self) -> Tuple[Point,Point]:
        """The end points of ``P`` and ``Q``, in that order.
        """
        if self.assignment is Assignment.P_TO_B1:
            return (self.b1, self.b2)
        return (self.b2, self.b1)

    def with_r(self, r: int) -> PairQuery:
        return PairQuery(self.a1, self.a2, self.b1, self.b2, self.assignment, r)

    def __repr__(self):
        bp, bq = self.targets()
        return (
            f"{self.__class__.__name__}(P: {self.a1} -> {bp}, Q: {self.a2} -> {bq}, r={self.r})"
        )

    @staticmethod
    def from_json(query: Dict[str,Any]) -> PairQuery:
        _check_keys(PairQuery, query, PairQuery.__slots__)
        return PairQuery(
            query["a1"], query["a2"], query["b1"], query["b2"],
            Assignment(query.get("assignment", "P_to_B1")),
            query.get("r", 0),
        )

# ====================================================================
# Building blocks
# ====================================================================

def _series(
    q_exp: Callable[[int],int],
    top1: int, bottom1: Callable[[int],int],
    top2: int, bottom2: Callable[[int],int],
    upper: int,
) -> QTPoly:
    # Σ_{0 ≤ n ≤ upper} t^n q^{q_exp(n)} [top1, bottom1(n)] [top2, bottom2(n)]
    terms = []
    for n in range(max(upper, 0) + 1):
        left = qbinom(top1, bottom1(n))
        if left.is_zero(): continue
        right = qbinom(top2, bottom2(n))
        if right.is_zero(): continue
        terms.append(shift(left * right, n, q_exp(n)))
    return total(terms)

def lemma_qbin2(a: int, b: int) -> QTPoly:
    """``Σ_n t^n q^{n²} [a, n] [b, n]``: all paths with ``a`` up- and ``b`` down-steps.

    Hint:
        >>> str(lemma_qbin2(1, 1))
        '1 + t*q'
    """
    return _series(lambda n: n * n, a, lambda n: n, b, lambda n: n, min(a, b))

def path_poly(start: Point, end: Point) -> QTPoly:
    """`lemma_qbin2` for the rectangle spanned by two points.
    """
    start, end = Point.from_json(start), Point.from_json(end)
    if end.x < start.x or end.y < start.y: return zero()
    return lemma_qbin2(end.x - start.x, end.y - start.y)

def lemma_sum_closed(kind: Interval, x: int, y: int, u: int, v: int, j: int) -> QTPoly:
    """Closed form of ``Σ q^{Σs}`` over increasing sequences ``s`` of length ``j`` in an interval.

    Args:
        kind: The interval; ``X_U`` is ``(x,u]``, ``Y_V`` is ``[y,v)``, ``X_V`` is ``(x,v)`` and
            ``Y_U`` is ``[y,u]``. Bounds the interval does not mention are ignored.
        j: The length of the sequences.

    Raises:
        NegativeExponent: If some sequence has a negative sum.
    """
    kind = Interval(kind)
    base = comb(j + 1, 2)
    if kind is Interval.X_U:
        binomial, offset = qbinom(u - x, j), base + j * x
    elif kind is Interval.Y_V:
        binomial, offset = qbinom(v - y, j), base + j * (y - 1)
    elif kind is Interval.X_V:
        binomial, offset = qbinom(v - x - 1, j), base + j * x
    else:
        binomial, offset = qbinom(u - y + 1, j), base + j * (y - 1)
    return shift(binomial, 0, offset)

def lemma_sum_array(bracket: Bracket, x: int, y: int, u: int, v: int, n: int, k: int) -> QTPoly:
    """Closed form of ``Σ q^{Σc + Σd − n(x+y)}`` over arrays with rows of length ``n+k``, ``n−k``.

    Zero when ``|k| > n``.

    Raises:
        NegativeExponent: If some array has a negative statistic.
    """
    if abs(k) > n: return zero()
    if Bracket(bracket) is Bracket.XU_YV:
        product = qbinom(u - x, n + k) * qbinom(v - y, n - k)
    else:
        product = qbinom(v - x - 1, n + k) * qbinom(u - y + 1, n - k)
    return shift(product, 0, n * n + k * (k + x - y + 1))

# ====================================================================
# Paths crossing a line
# ====================================================================

class LineCase(Enum):
    """Where the line sits relative to the start (height 0) and the end (height ``a − b``).
    """
    BETWEEN_RISING = "between, end above"
    BETWEEN_FALLING = "between, end below"
    BELOW_BOTH = "below start and end"
    ABOVE_BOTH = "above start and end"
    AT_START_RISING = "through start, end above"
    AT_START_FALLING = "through start, end below"
    AT_END_RISING = "through end, start below"
    AT_END_FALLING = "through end, start above"
    AT_START_AND_END = "through start and end"

    def json(self): return self.name

def _sign(n: int) -> int:
    return (n > 0) - (n < 0)

_LINE_CASE_LOOKUP = {
    (1, -1): LineCase.BETWEEN_RISING,
    (-1, 1): LineCase.BETWEEN_FALLING,
    (-1, -1): LineCase.BELOW_BOTH,
    (1, 1): LineCase.ABOVE_BOTH,
    (0, -1): LineCase.AT_START_RISING,
    (0, 1): LineCase.AT_START_FALLING,
    (1, 0): LineCase.AT_END_RISING,
    (-1, 0): LineCase.AT_END_FALLING,
    (0, 0): LineCase.AT_START_AND_END,
}

def line_case(query: LineQuery) -> LineCase:
    """Classify a query by the signs of ``ell`` and ``ell − (a − b)``.
    """
    return _LINE_CASE_LOOKUP[_sign(query.ell), _sign(query.ell - (query.a - query.b))]

def _case_ix(a: int, r: int) -> QTPoly:
    # two-term form, line through both ends (a == b)
    if a == 0:
        return one() if r == 0 else zero()
    m = r // 2
    upper = 2 * a + m + 2
    if r % 2 == 0:
        return (
            _series(lambda n: n * n + n + m * m, a, lambda n: n - m, a - 1, lambda n: n + m, upper)
            + _series(lambda n: n * n + m * (m + 1), a, lambda n: n + m, a - 1, lambda n: n - m - 1, upper)
        )
    return (
        _series(lambda n: n * n + n + (m + 1) ** 2, a - 1, lambda n: n - m - 1, a, lambda n: n + m + 1, upper)
        + _series(lambda n: n * n + m * (m + 1), a - 1, lambda n: n + m, a, lambda n: n - m - 1, upper)
    )

def case_ix_rational(a: int, r: int) -> QTPoly:
    """The line-through-both-ends answer evaluated from its rational form by exact division.

    Raises:
        ValueError: If ``a < 1``; the denominator ``1 − q^a`` vanishes.
        NonDivisible: If the numerator is not divisible by ``1 − q^a``.
    """
    if a < 1:
        raise ValueError(f"a must be positive, given {a!r}")
    m = r // 2
    upper = 2 * a + m + 2
    if r % 2 == 0:
        if 2 * m > a: return zero()
        factor = one() - monomial(1, 0, a - 2 * m)
        numerator = _series(lambda n: n * n + m * (m + 1), a, lambda n: n + m, a, lambda n: n - m, upper)
    else:
        factor = one() - monomial(1, 0, a + 2 * (m + 1))
        numerator = _series(lambda n: n * n + m * (m + 1), a, lambda n: n + m + 1, a, lambda n: n - m - 1, upper)
    return exact_div_one_minus_q_pow(factor * numerator, a)

def g_poly(query: LineQuery, cross_check: bool=False) -> QTPoly:
    """Sum of ``t^des q^maj`` over paths crossing the line at height ``ell`` at least ``r`` times.

    Args:
        query: The path family and threshold.
        cross_check: If set, evaluate the line-through-both-ends case a second way, from its
            rational form, and compare.

    Raises:
        FormulaMismatch: If ``cross_check`` is set and the two evaluations differ.
    """
    a, b, ell, r = query.a, query.b, query.ell, query.r
    case = line_case(query)
    _logger.debug("g_poly %r: %s", query, case.name)
    m = r // 2
    upper = a + b + m + 2
    even = r % 2 == 0

    if r == 0 and case in (LineCase.BELOW_BOTH, LineCase.ABOVE_BOTH):
        return lemma_qbin2(a, b)

    if case is LineCase.BETWEEN_RISING:
        return _series(lambda n: n * n + m * (m + ell + 1), a, lambda n: n - m, b, lambda n: n + m, upper)
    if case is LineCase.BETWEEN_FALLING:
        return _series(lambda n: n * n + m * (m - ell - 1), a, lambda n: n + m, b, lambda n: n - m, upper)
    if case is LineCase.BELOW_BOTH:
        m = (r - 1) // 2
        return _series(
            lambda n: n * n + (m + 1) * (m - ell),
            a - ell - 1, lambda n: n - m - 1, b + ell + 1, lambda n: n + m + 1, upper,
        )
    if case is LineCase.ABOVE_BOTH:
        m = (r - 1) // 2
        return _series(
            lambda n: n * n + m * (m + ell + 1),
            a - ell - 1, lambda n: n + m, b + ell + 1, lambda n: n - m, upper,
        )
    if case is LineCase.AT_START_RISING:
        if even:
            return _series(lambda n: n * n + m * (m + 1), a, lambda n: n - m, b, lambda n: n + m, upper)
        return _series(lambda n: n * n + m * (m + 1), a - 1, lambda n: n - m - 1, b + 1, lambda n: n + m + 1, upper)
    if case is LineCase.AT_START_FALLING:
        if even:
            return _series(lambda n: n * n + m * (m - 1), a, lambda n: n + m, b, lambda n: n - m, upper)
        return _series(lambda n: n * n + m * (m + 1), a - 1, lambda n: n + m, b + 1, lambda n: n - m, upper)
    if case is LineCase.AT_END_RISING:
        if even:
            return _series(lambda n: n * n + m * (m + ell + 1), a, lambda n: n - m, b, lambda n: n + m, upper)
        return _series(lambda n: n * n + m * (m + ell + 1), a + 1, lambda n: n - m, b - 1, lambda n: n + m, upper)
    if case is LineCase.AT_END_FALLING:
        if even:
            return _series(lambda n: n * n + m * (m - ell - 1), a, lambda n: n + m, b, lambda n: n - m, upper)
        return _series(
            lambda n: n * n + (m + 1) * (m - ell),
            a + 1, lambda n: n + m + 1, b - 1, lambda n: n - m - 1, upper,
        )

    value = _case_ix(a, r)
    if cross_check and a >= 1:
        rational = case_ix_rational(a, r)
        if rational != value:
            msg = f"two evaluations of {query!r} disagree: {value} != {rational}"
            _logger.error(msg)
            raise FormulaMismatch(msg)
    return value

# ====================================================================
# Pairs of paths
# ====================================================================

def f_poly(k: int, a1: Point, a2: Point, b_first: Point, b_second: Point) -> QTPoly:
    """The product polynomial every pair answer is assembled from.

    The first factor runs over the rectangle from ``a1`` to ``b_first`` with bottom rows longer by
    ``k``, the second over the rectangle from ``a2`` to ``b_second`` with bottom rows shorter by
    ``k``; the product is shifted by ``q^{k(k + x₂ − x₁)}``.

    Raises:
        NegativeExponent: If the shift leaves a negative power of ``q``.
    """
    a1, a2 = Point.from_json(a1), Point.from_json(a2)
    b_first, b_second = Point.from_json(b_first), Point.from_json(b_second)
    first = _series(
        lambda n: n * (n + k),
        b_first.x - a1.x, lambda n: n, b_first.y - a1.y, lambda n: n + k,
        b_first.x - a1.x,
    )
    if first.is_zero(): return zero()
    second = _series(
        lambda n: n * (n - k),
        b_second.x - a2.x, lambda n: n, b_second.y - a2.y, lambda n: n - k,
        b_second.x - a2.x,
    )
    return shift(first * second, 0, k * (k + a2.x - a1.x))

def f_poly_direct(k: int, a1: Point, a2: Point, b_first: Point, b_second: Point) -> QTPoly:
    """`f_poly` as the sum of ``t^n q^{Σc+Σd+Σe+Σf − n(x₁+y₁)}`` over pairs of arrays with offset ``k``.

    Raises:
        Condition13Violated: If the start points lie on different anti-diagonals.
        NegativeExponent: If some pair has a negative statistic.
    """
    a1, a2 = Point.from_json(a1), Point.from_json(a2)
    b_first, b_second = Point.from_json(b_first), Point.from_json(b_second)
    z = a1.x + a1.y
    if a2.x + a2.y != z:
        raise Condition13Violated(f"{a1} and {a2} lie on different anti-diagonals")
    first_bounds = (a1.x, a1.y, b_first.x, b_first.y)
    second_bounds = (a2.x, a2.y, b_second.x, b_second.y)
    tally: Counter = Counter()
    for n1 in range(max(b_first.x - a1.x, 0) + 1):
        for n2 in range(max(b_second.x - a2.x, 0) + 1):
            n = n1 + n2
            for ap in enumerate_pairs(first_bounds, second_bounds, n1, n2, k):
                tally[n, pair_sum(ap) - n * z] += 1
    return QTPoly(dict(tally))

def _check_condition13(a1: Point, a2: Point):
    if a1.x + a1.y != a2.x + a2.y:
        raise Condition13Violated(
            f"start points {a1} and {a2} must satisfy x1 + y1 = x2 + y2"
        )

def h_poly(query: PairQuery) -> QTPoly:
    """Sum of ``t^{des P + des Q} q^{maj P + maj Q}`` over pairs with at least ``r`` crossings.

    Hint:
        When the start points coincide or the end points coincide, either assignment gives the
        same polynomial. When ``a2`` precedes ``a1`` the two paths are relabelled first.

    Raises:
        Condition13Violated: If the start points lie on different anti-diagonals.
        UnsupportedConfiguration: If the end points are distinct and not comparable, or the
            start points are distinct and the end points are not.
    """
    a1, a2, r = query.a1, query.a2, query.r
    bp, bq = query.targets()
    _check_condition13(a1, a2)

    if a1 == a2 and bp == bq:
        a, b = a1, bp
        if r == 0:
            return f_poly(0, a, a, b, b)
        terms = []
        j = 1
        while r + j <= b.y - a.y:
            sign = 2 if j % 2 == 1 else -2
            terms.append(constant(sign) * f_poly(r + j, a, a, b, b))
            j += 1
        return total(terms)

    if a1 == a2:
        if precedes(bq, bp): bp, bq = bq, bp
        if not precedes(bp, bq):
            raise UnsupportedConfiguration(f"end points {bp} and {bq} are not comparable")
        return f_poly(r, a1, a1, bq, bp)

    if precedes(a2, a1):
        a1, a2, bp, bq = a2, a1, bq, bp

    if bp == bq:
        return f_poly(r, a1, a2, bp, bp)

    if precedes(bq, bp):
        # P ends at the later end point
        return f_poly(2 * (r // 2), a1, a2, bp, bq)
    if precedes(bp, bq):
        if r == 0:
            return f_poly(0, a1, a2, bp, bq)
        return f_poly(2 * ((r - 1) // 2) + 1, a1, a2, bq, bp)
    raise UnsupportedConfiguration(f"end points {bp} and {bq} are not comparable")
