"""Pairs of two-rowed arrays and the maps that remove crossings between two paths.

The first array of a pair has rows ``c`` (top) and ``d`` (bottom), the second has rows ``e`` and
``f``. An offset ``k`` ties the row lengths together: ``len d = len c + k`` and
``len f = len e − k``. Both arrays always use the ``XU_YV`` bracket.
"""

from __future__ import annotations

import logging
from itertools import combinations
from typing import (
    Any,
    Union, Optional,
    Tuple, List, Dict, Sequence,
    Iterator,
)

from .errors import (
    InvalidArray, ShapeMismatch,
    NoSuchCrossing, WrongKind, ImproperCrossing,
    NotInDomain, ImproperPosition,
)
from .models import (
    Frozen,
    Bracket, CrossingKind,
    Point, Crossing,
    renumber,
    _check_keys,
)
from .paths import LatticePath, pair_crossings as path_pair_crossings, precedes
from .arrays import (
    TwoRowedArray,
    TOP, BOTTOM,
    encode_path, decode_array, truncate,
    enumerate_arrays,
)

_logger = logging.getLogger(__name__)

# row names of the second array
SECOND_TOP, SECOND_BOTTOM = "e", "f"

class ArrayPair(Frozen):
    """Represents a pair of two-rowed arrays with offset ``k``.

    Args:
        first: The array ``(c, d)``; its upper bounds are those of the first path's end point.
        second: The array ``(e, f)``.
        k: The offset, with ``len d = len c + k`` and ``len f = len e − k``.

    Raises:
        InvalidArray: If either array is not an ``XU_YV`` array.
        ShapeMismatch: If the row lengths do not fit ``k``.
    """
    first: TwoRowedArray
    second: TwoRowedArray
    k: int

    __slots__ = ("first", "second", "k")

    def __init__(self, first: TwoRowedArray, second: TwoRowedArray, k: int=0):
        if first.bracket is not Bracket.XU_YV or second.bracket is not Bracket.XU_YV:
            raise InvalidArray("pairs are made of XU_YV arrays")
        if len(first.d) != len(first.c) + k or len(second.d) != len(second.c) - k:
            raise ShapeMismatch(
                f"row lengths {first.shape} and {second.shape} do not fit offset k={k}"
            )
        object.__setattr__(self, "first", first)
        object.__setattr__(self, "second", second)
        object.__setattr__(self, "k", int(k))

    @property
    def n(self) -> int:
        return len(self.first.c) + len(self.second.c)

    def entry(self, row: str, i: int, *, extend: bool=False) -> int:
        """Entry ``i`` of row ``c``, ``d``, ``e`` or ``f`` with the sentinel conventions.
        """
        if row in (TOP, BOTTOM):
            return self.first.entry(row, i, extend=extend)
        if row == SECOND_TOP:
            return self.second.entry(TOP, i, extend=extend)
        if row == SECOND_BOTTOM:
            return self.second.entry(BOTTOM, i, extend=extend)
        raise ValueError(f"unknown row {row!r}")

    def starts(self) -> Tuple[Point,Point]:
        return (Point(self.first.x, self.first.y), Point(self.second.x, self.second.y))

    def __repr__(self):
        return f"{self.__class__.__name__}({self.first!r}, {self.second!r}, k={self.k})"

    def __str__(self):
        return f"{self.first} ; {self.second} (k={self.k})"

    def json(self) -> Dict[str,Any]:
        return {"first": self.first.json(), "second": self.second.json(), "k": self.k}

    @staticmethod
    def from_json(pair: Dict[str,Any]) -> ArrayPair:
        _check_keys(ArrayPair, pair, ("first", "second", "k"))
        return ArrayPair(
            TwoRowedArray.from_json(pair["first"]),
            TwoRowedArray.from_json(pair["second"]),
            pair.get("k", 0),
        )

def pair_sum(ap: ArrayPair) -> int:
    """Sum of all entries of all four rows.
    """
    return sum(ap.first.c) + sum(ap.first.d) + sum(ap.second.c) + sum(ap.second.d)

def alt_less(a: Sequence[int], b: Sequence[int]) -> bool:
    """The alternating order: ``a < b`` iff ``a₁ < b₁``, or ``a₁ = b₁`` and ``tail(b) < tail(a)``.

    An exhausted sequence is never less.
    """
    a, b = tuple(a), tuple(b)
    while a and b:
        if a[0] != b[0]:
            return a[0] < b[0]
        a, b = b[1:], a[1:]
    return False

# encoding

def encode_pair(p: LatticePath, q: LatticePath) -> ArrayPair:
    """Encode each path by its valleys; the offset is 0.
    """
    return ArrayPair(encode_path(p), encode_path(q), 0)

def decode_pair(ap: ArrayPair) -> Tuple[LatticePath,LatticePath]:
    """Inverse of `encode_pair`.

    Raises:
        ShapeMismatch: If the offset is not 0.
    """
    if ap.k != 0:
        raise ShapeMismatch(f"pairs with offset k={ap.k} do not encode paths")
    return decode_array(ap.first), decode_array(ap.second)

def truncate_pair(ap: ArrayPair) -> Tuple[LatticePath,LatticePath]:
    """Truncate both arrays to paths.
    """
    return truncate(ap.first), truncate(ap.second)

# crossings

def _history(ap: ArrayPair, row: str, i: int) -> Tuple[int,...]:
    # entries read leftwards from row[i], alternating rows, down to the lower bounds
    if row in (TOP, BOTTOM):
        top, bottom = TOP, BOTTOM
    else:
        top, bottom = SECOND_TOP, SECOND_BOTTOM
    values = []
    if row in (top,):
        for s in range(i, -1, -1):
            values.append(ap.entry(top, s))
            values.append(ap.entry(bottom, s))
    else:
        values.append(ap.entry(bottom, i))
        for s in range(i - 1, -1, -1):
            values.append(ap.entry(top, s))
            values.append(ap.entry(bottom, s))
    return tuple(values)

def _candidates(ap: ArrayPair) -> List[Tuple[Crossing,bool]]:
    """Positions satisfying the segment conditions, paired with the maximality conditions.
    """
    m1, m2 = ap.first.min_len, ap.second.min_len
    e = lambda j: ap.entry(SECOND_TOP, j)
    f = lambda j: ap.entry(SECOND_BOTTOM, j)
    c = lambda i: ap.entry(TOP, i)
    d = lambda i: ap.entry(BOTTOM, i)

    found = []
    for i in range(m1 + 1):
        for j in range(1, m2 + 2):
            if not (e(j - 1) <= c(i) < e(j) and d(i) <= f(j) < d(i + 1)): continue
            maximal = (
                alt_less(_history(ap, SECOND_TOP, j - 1), _history(ap, TOP, i))
                and alt_less(_history(ap, BOTTOM, i), _history(ap, SECOND_BOTTOM, j))
            )
            crossing = Crossing(
                CrossingKind.UPWARD, Point(c(i), f(j)), 0,
                ((TOP, i), (SECOND_BOTTOM, j)),
            )
            found.append((crossing, maximal))
    for i in range(1, m1 + 2):
        for j in range(m2 + 1):
            if not (c(i - 1) <= e(j) < c(i) and f(j) <= d(i) < f(j + 1)): continue
            maximal = (
                alt_less(_history(ap, TOP, i - 1), _history(ap, SECOND_TOP, j))
                and alt_less(_history(ap, SECOND_BOTTOM, j), _history(ap, BOTTOM, i))
            )
            crossing = Crossing(
                CrossingKind.DOWNWARD, Point(e(j), d(i)), 0,
                ((SECOND_TOP, j), (BOTTOM, i)),
            )
            found.append((crossing, maximal))
    return found

def pair_crossings(ap: ArrayPair) -> List[Crossing]:
    """Crossings of a pair of arrays, ordered by x-coordinate.

    An upward crossing sits at ``(cᵢ, fⱼ)`` with ``eⱼ₋₁ ≤ cᵢ < eⱼ`` and ``dᵢ ≤ fⱼ < dᵢ₊₁``; a
    downward crossing sits at ``(eⱼ, dᵢ)`` with ``cᵢ₋₁ ≤ eⱼ < cᵢ`` and ``fⱼ ≤ dᵢ < fⱼ₊₁``.
    When the first start point precedes or equals the second, maximality of the run of common
    vertices is decided with `alt_less` on the entry histories. Otherwise it is read off the
    truncated paths.
    """
    a1, a2 = ap.starts()
    found = _candidates(ap)
    if precedes(a1, a2) or a1 == a2:
        crossings = [crossing for crossing, maximal in found if maximal]
    else:
        p, q = truncate_pair(ap)
        on_paths = {(x.kind, x.vertex) for x in path_pair_crossings(p, q)}
        crossings = [crossing for crossing, _ in found if (crossing.kind, crossing.vertex) in on_paths]
    crossings.sort(key=lambda x: (x.vertex.x, x.vertex.y))
    return renumber(crossings)

def _crossing(r: int, ap: ArrayPair, kind: CrossingKind) -> Crossing:
    crossings = pair_crossings(ap)
    if not 1 <= r <= len(crossings):
        raise NoSuchCrossing(f"pair has {len(crossings)} crossings, asked for #{r}")
    crossing = crossings[r - 1]
    if crossing.kind is not kind:
        raise WrongKind(f"crossing #{r} is {crossing.kind.value}, expected {kind.value}")
    return crossing

def _exchange(ap: ArrayPair, i: int, j: int) -> ArrayPair:
    # swap everything right of c_i / d_i with everything right of e_{j-1} / f_j
    first, second = ap.first, ap.second
    new_first = TwoRowedArray(
        first.x, first.y, second.u, second.v,
        first.c[:i] + second.c[j - 1:],
        first.d[:i] + second.d[j:],
    )
    new_second = TwoRowedArray(
        second.x, second.y, first.u, first.v,
        second.c[:j - 1] + first.c[i:],
        second.d[:j] + first.d[i:],
    )
    return ArrayPair(new_first, new_second, -ap.k - 1)

def gamma(r: int, ap: ArrayPair) -> ArrayPair:
    """Exchange the tails of the two arrays at the ``r``-th crossing, an upward one at (cᵢ, fⱼ).

    Entries right of ``cᵢ`` in both rows of the first array trade places with the entries right
    of ``fⱼ`` in both rows of the second array, and the upper bounds trade places. The offset
    becomes ``−k − 1``.

    Raises:
        NoSuchCrossing: If there are fewer than ``r`` crossings.
        WrongKind: If the ``r``-th crossing is downward.
        ImproperCrossing: If ``cᵢ`` equals the first array's ``u`` or ``fⱼ`` the second's ``v``.
    """
    crossing = _crossing(r, ap, CrossingKind.UPWARD)
    (_, i), (_, j) = crossing.entries
    if ap.entry(TOP, i) == ap.first.u or ap.entry(SECOND_BOTTOM, j) == ap.second.v:
        raise ImproperCrossing(f"crossing #{r} at c{i},f{j} sits on an upper bound")
    _logger.debug("gamma_%d at c%d=%d, f%d=%d", r, i, crossing.vertex.x, j, crossing.vertex.y)
    return _exchange(ap, i, j)

def delta(r: int, ap: ArrayPair) -> ArrayPair:
    """Exchange the tails of the two arrays at the ``r``-th crossing, a downward one at (eⱼ, dᵢ).

    The first array keeps ``c₁..cᵢ₋₁`` and ``d₁..dᵢ``, the second keeps ``e₁..eⱼ`` and
    ``f₁..fⱼ``; the remaining entries and the upper bounds trade places. The offset becomes
    ``1 − k``.

    Raises:
        NoSuchCrossing: If there are fewer than ``r`` crossings.
        WrongKind: If the ``r``-th crossing is upward.
        ImproperCrossing: If ``eⱼ`` equals the second array's ``u`` or ``dᵢ`` the first's ``v``.
    """
    crossing = _crossing(r, ap, CrossingKind.DOWNWARD)
    (_, j), (_, i) = crossing.entries
    if ap.entry(SECOND_TOP, j) == ap.second.u or ap.entry(BOTTOM, i) == ap.first.v:
        raise ImproperCrossing(f"crossing #{r} at e{j},d{i} sits on an upper bound")
    _logger.debug("delta_%d at e%d=%d, d%d=%d", r, j, crossing.vertex.x, i, crossing.vertex.y)
    first, second = ap.first, ap.second
    new_first = TwoRowedArray(
        first.x, first.y, second.u, second.v,
        first.c[:i - 1] + second.c[j:],
        first.d[:i] + second.d[j:],
    )
    new_second = TwoRowedArray(
        second.x, second.y, first.u, first.v,
        second.c[:j] + first.c[i - 1:],
        second.d[:j] + first.d[i:],
    )
    return ArrayPair(new_first, new_second, 1 - ap.k)

def sigma(ap: ArrayPair) -> ArrayPair:
    """Swap the two arrays; the offset becomes ``−k``.
    """
    return ArrayPair(ap.second, ap.first, -ap.k)

def zigzag_class(ap: ArrayPair) -> Optional[CrossingKind]:
    """Classify a pair with equal bounds by its first difference in zig-zag order.

    Entries are compared in the order ``d₁/f₁, c₁/e₁, d₂/f₂, ...`` with rows extended by their
    upper bounds. The pair is in the upward class if the first difference is ``cᵢ < eᵢ`` or
    ``dᵢ > fᵢ``, in the downward class otherwise, and ``None`` is returned for equal arrays.
    """
    return _first_difference(ap)[0]

def _first_difference(ap: ArrayPair) -> Tuple[Optional[CrossingKind],str,int]:
    first, second = ap.first, ap.second
    length = max(len(first.c), len(first.d), len(second.c), len(second.d)) + 1
    for i in range(1, length + 1):
        di = ap.entry(BOTTOM, i, extend=True)
        fi = ap.entry(SECOND_BOTTOM, i, extend=True)
        if di != fi:
            kind = CrossingKind.UPWARD if di > fi else CrossingKind.DOWNWARD
            return kind, BOTTOM, i
        ci = ap.entry(TOP, i, extend=True)
        ei = ap.entry(SECOND_TOP, i, extend=True)
        if ci != ei:
            kind = CrossingKind.UPWARD if ci < ei else CrossingKind.DOWNWARD
            return kind, TOP, i
    return None, "", 0

def gamma0(ap: ArrayPair) -> ArrayPair:
    """Extend `gamma` to pairs of arrays with equal bounds and no crossing requirement.

    If the first zig-zag difference is ``cᵢ < eᵢ`` the tails are exchanged after ``(cᵢ, fᵢ)``;
    if it is ``dᵢ > fᵢ`` they are exchanged after ``(cᵢ₋₁, fᵢ)``. The offset becomes ``−k − 1``.

    Raises:
        NotInDomain: If the bounds differ, the arrays are equal, or the pair is in the downward
            class.
        ImproperPosition: If the exchange position sits on an upper bound.
    """
    if ap.first.bounds() != ap.second.bounds():
        raise NotInDomain("both arrays must have the same bounds")
    kind, row, i = _first_difference(ap)
    if kind is None:
        raise NotInDomain("the two arrays are equal")
    if kind is not CrossingKind.UPWARD:
        raise NotInDomain(f"first difference at {row}{i} puts the pair in the downward class")
    top_index = i if row == TOP else i - 1
    if top_index > len(ap.first.c) or ap.entry(TOP, top_index) == ap.first.u:
        raise ImproperPosition(f"c{top_index} sits on the upper bound")
    if i > len(ap.second.d) or ap.entry(SECOND_BOTTOM, i) == ap.second.v:
        raise ImproperPosition(f"f{i} sits on the upper bound")
    _logger.debug("gamma_0 at c%d, f%d", top_index, i)
    return _exchange(ap, top_index, i)

def crossing_map(r: int, ap: ArrayPair) -> ArrayPair:
    """Apply `gamma` or `delta` depending on the kind of the ``r``-th crossing.
    """
    crossings = pair_crossings(ap)
    if not 1 <= r <= len(crossings):
        raise NoSuchCrossing(f"pair has {len(crossings)} crossings, asked for #{r}")
    if crossings[r - 1].kind is CrossingKind.UPWARD:
        return gamma(r, ap)
    return delta(r, ap)

def reduce_chain(ap: ArrayPair, r: int) -> ArrayPair:
    """Apply the crossing maps at crossings ``r, r−1, ..., 1`` in turn.
    """
    for s in range(r, 0, -1):
        ap = crossing_map(s, ap)
    return ap

def expand_chain(ap: ArrayPair, r: int) -> ArrayPair:
    """Inverse of `reduce_chain`: apply the crossing maps at ``1, 2, ..., r``.
    """
    for s in range(1, r + 1):
        ap = crossing_map(s, ap)
    return ap

def enumerate_pairs(
    first_bounds: Tuple[int,int,int,int],
    second_bounds: Tuple[int,int,int,int],
    n1: int, n2: int, k: int,
) -> Iterator[ArrayPair]:
    """Yield every pair with the given bounds, top-row lengths ``n1``, ``n2`` and offset ``k``.
    """
    if n1 + k < 0 or n2 - k < 0: return
    for first in enumerate_arrays(Bracket.XU_YV, *first_bounds, n1, n1 + k):
        for second in enumerate_arrays(Bracket.XU_YV, *second_bounds, n2, n2 - k):
            yield ArrayPair(first, second, k)
