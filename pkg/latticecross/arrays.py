"""Two-rowed arrays: the valley encoding of paths and its crossing-removing bijections.

An array has bounds ``(x, y, u, v)``, a bracket kind and two strictly increasing rows ``c`` (top)
and ``d`` (bottom). Entry 0 of a row is its lower bound and entry ``len + 1`` its upper bound;
every crossing rule below reads entries through `TwoRowedArray.entry`.
"""

from __future__ import annotations

from itertools import combinations
import logging
from typing import (
    Any,
    Union, Optional,
    Tuple, List, Dict, Sequence,
    Iterator,
)

from .errors import (
    InvalidArray, ShapeMismatch,
    NoSuchCrossing, WrongKind, ImproperCrossing,
)
from .models import (
    Frozen,
    Bracket, CrossingKind,
    Point, Crossing,
    renumber,
    _check_keys,
)
from .paths import LatticePath, NORTH, EAST

_logger = logging.getLogger(__name__)

TOP, BOTTOM = "c", "d"

class TwoRowedArray(Frozen):
    """Represents a two-rowed array.

    With bracket ``XU_YV`` the rows satisfy ``x < c₁ < ... ≤ u`` and ``y ≤ d₁ < ... < v``; with
    ``XV_YU`` they satisfy ``x < c₁ < ... < v`` and ``y ≤ d₁ < ... ≤ u``.

    Only the row lengths are stored. The family parameters ``n`` and ``k`` of an array depend on
    the context it is used in and are worked out by callers.

    Args:
        x, y, u, v: The bounds.
        c: Top row.
        d: Bottom row.
        bracket: Bound pattern, ``XU_YV`` by default.

    Raises:
        InvalidArray: If a row is not strictly increasing or leaves its bounds.
    """
    x: int
    y: int
    u: int
    v: int
    bracket: Bracket
    c: Tuple[int,...]
    d: Tuple[int,...]

    __slots__ = ("x", "y", "u", "v", "bracket", "c", "d")

    def __init__(self,
        x: int, y: int, u: int, v: int,
        c: Sequence[int]=(), d: Sequence[int]=(),
        bracket: Bracket=Bracket.XU_YV,
    ):
        object.__setattr__(self, "x", int(x))
        object.__setattr__(self, "y", int(y))
        object.__setattr__(self, "u", int(u))
        object.__setattr__(self, "v", int(v))
        object.__setattr__(self, "bracket", Bracket(bracket))
        object.__setattr__(self, "c", tuple(int(e) for e in c))
        object.__setattr__(self, "d", tuple(int(e) for e in d))
        self._validate()

    def _validate(self):
        for row, low, strict_low, high, strict_high in (
            (self.c, self.x, True, self.top_upper, self.bracket is Bracket.XV_YU),
            (self.d, self.y, False, self.bottom_upper, self.bracket is Bracket.XU_YV),
        ):
            if any(a >= b for a, b in zip(row, row[1:])):
                raise InvalidArray(f"row {row!r} is not strictly increasing")
            if not row: continue
            if row[0] < low or (strict_low and row[0] == low):
                raise InvalidArray(f"row {row!r} starts below its lower bound {low}")
            if row[-1] > high or (strict_high and row[-1] == high):
                raise InvalidArray(f"row {row!r} ends above its upper bound {high}")

    @property
    def top_upper(self) -> int:
        """Upper bound of the top row: ``u`` for ``XU_YV``, ``v`` for ``XV_YU``.
        """
        return self.u if self.bracket is Bracket.XU_YV else self.v

    @property
    def bottom_upper(self) -> int:
        """Upper bound of the bottom row: ``v`` for ``XU_YV``, ``u`` for ``XV_YU``.
        """
        return self.v if self.bracket is Bracket.XU_YV else self.u

    @property
    def shape(self) -> Tuple[int,int]:
        return (len(self.c), len(self.d))

    @property
    def min_len(self) -> int:
        return min(len(self.c), len(self.d))

    def entry(self, row: str, i: int, *, extend: bool=False) -> int:
        """Entry ``i`` of ``row`` (``"c"`` or ``"d"``) with the sentinel conventions.

        Index 0 is the lower bound (``x`` or ``y``) and index ``len + 1`` the upper bound. With
        ``extend``, every index past the end reads as the upper bound.
        """
        if row == TOP:
            values, low, high = self.c, self.x, self.top_upper
        elif row == BOTTOM:
            values, low, high = self.d, self.y, self.bottom_upper
        else:
            raise ValueError(f"unknown row {row!r}")
        if i == 0: return low
        if 1 <= i <= len(values): return values[i - 1]
        if i == len(values) + 1 or (extend and i > len(values)): return high
        raise IndexError(f"entry {row}{i} is out of range")

    def bounds(self) -> Tuple[int,int,int,int]:
        return (self.x, self.y, self.u, self.v)

    def __repr__(self):
        return (
            f"{self.__class__.__name__}({self.x}, {self.y}, {self.u}, {self.v}, "
            f"c={self.c!r}, d={self.d!r}, bracket={self.bracket.value!r})"
        )

    def __str__(self):
        top = ",".join(str(e) for e in (self.x,) + self.c + (self.top_upper,))
        bottom = ",".join(str(e) for e in (self.y,) + self.d + (self.bottom_upper,))
        return f"{{{top}}}/{{{bottom}}}"

    def json(self) -> Dict[str,Any]:
        return {
            "bracket": self.bracket.json(),
            "x": self.x, "y": self.y, "u": self.u, "v": self.v,
            "c": list(self.c), "d": list(self.d),
        }

    @staticmethod
    def from_json(array: Dict[str,Any]) -> TwoRowedArray:
        _check_keys(TwoRowedArray, array, ("bracket", "x", "y", "u", "v", "c", "d"))
        return TwoRowedArray(
            array["x"], array["y"], array["u"], array["v"],
            array.get("c", ()), array.get("d", ()),
            bracket=Bracket(array.get("bracket", "XU_YV")),
        )

def array_sum(a: TwoRowedArray) -> int:
    """Sum of all entries of both rows.
    """
    return sum(a.c) + sum(a.d)

def double_bracket(a: TwoRowedArray) -> bool:
    """Whether the bottom row starts on its lower bound (``d₁ = y``).
    """
    return bool(a.d) and a.d[0] == a.y

# path encoding

def path_from_valleys(
    start: Point,
    end: Point,
    c: Sequence[int],
    d: Sequence[int],
) -> LatticePath:
    """Build the path from ``start`` to ``end`` turning at the valleys ``(cᵢ, dᵢ)``.
    """
    if len(c) != len(d):
        raise ShapeMismatch(f"valley rows differ in length: {len(c)} != {len(d)}")
    xs = (start.x,) + tuple(c) + (end.x,)
    ys = (start.y,) + tuple(d) + (end.y,)
    word = []
    for i in range(len(c) + 1):
        rise, run = ys[i + 1] - ys[i], xs[i + 1] - xs[i]
        if rise < 0 or run < 0:
            raise ShapeMismatch(f"valleys {tuple(zip(c, d))!r} do not fit {start} -> {end}")
        word.append(NORTH * rise + EAST * run)
    return LatticePath(start, "".join(word))

def encode_path(p: LatticePath) -> TwoRowedArray:
    """Encode a path by the coordinates of its valleys.

    The result has bracket ``XU_YV`` and bounds ``(start.x, start.y, end.x, end.y)``; its
    entries satisfy ``maj(p) = Σc + Σd − des(p)·(x + y)``.
    """
    valleys = [v for _, v in p.valleys()]
    end = p.end
    return TwoRowedArray(
        p.start.x, p.start.y, end.x, end.y,
        [v.x for v in valleys], [v.y for v in valleys],
    )

def decode_array(a: TwoRowedArray) -> LatticePath:
    """Inverse of `encode_path`.

    Raises:
        ShapeMismatch: If the array is not an ``XU_YV`` array with rows of equal length.
    """
    if a.bracket is not Bracket.XU_YV:
        raise ShapeMismatch("only XU_YV arrays encode paths")
    if len(a.c) != len(a.d):
        raise ShapeMismatch(f"rows of length {len(a.c)} and {len(a.d)} do not encode a path")
    return path_from_valleys(Point(a.x, a.y), Point(a.u, a.v), a.c, a.d)

def truncate(a: TwoRowedArray) -> LatticePath:
    """Drop the tail of the longer row and read the rest as a path.

    The path runs from ``(x, y)`` to ``(c_{m+1}, d_{m+1})`` for ``m = min(len c, len d)``, with
    valleys ``(cᵢ, dᵢ)`` for ``i ≤ m``. Its diagonal crossings are the crossings of the array.
    """
    m = a.min_len
    end = Point(a.entry(TOP, m + 1), a.entry(BOTTOM, m + 1))
    return path_from_valleys(Point(a.x, a.y), end, a.c[:m], a.d[:m])

# crossings

def array_crossings(a: TwoRowedArray) -> List[Crossing]:
    """Crossings of an array, in the entry order ``y, x, d₁, c₁, d₂, c₂, ...``.

    With ``m = min(len c, len d)`` there is an upward crossing at ``cᵢ`` for ``0 ≤ i ≤ m`` when
    ``dᵢ < cᵢ < dᵢ₊₁`` and a downward crossing at ``dᵢ`` for ``1 ≤ i ≤ m + 1`` when
    ``cᵢ₋₁ < dᵢ < cᵢ``.
    """
    m = a.min_len
    found = []
    for i in range(m + 1):
        ci = a.entry(TOP, i)
        if a.entry(BOTTOM, i) < ci < a.entry(BOTTOM, i + 1):
            found.append((2 * i + 1, Crossing(CrossingKind.UPWARD, Point(ci, ci), 0, ((TOP, i),))))
    for i in range(1, m + 2):
        di = a.entry(BOTTOM, i)
        if a.entry(TOP, i - 1) < di < a.entry(TOP, i):
            found.append((2 * i, Crossing(CrossingKind.DOWNWARD, Point(di, di), 0, ((BOTTOM, i),))))
    found.sort(key=lambda pair: pair[0])
    return renumber([crossing for _, crossing in found])

def first_crossing_kind(a: TwoRowedArray) -> Optional[CrossingKind]:
    """The kind every odd-numbered crossing of ``a`` must have.

    Upward when ``x > y`` or ``x = y = d₁``, downward when ``x < y`` or ``x = y < d₁``.
    """
    if a.x > a.y: return CrossingKind.UPWARD
    if a.x < a.y: return CrossingKind.DOWNWARD
    if a.entry(BOTTOM, 1) == a.y: return CrossingKind.UPWARD
    return CrossingKind.DOWNWARD

def _crossing(r: int, a: TwoRowedArray, kind: CrossingKind) -> Crossing:
    crossings = array_crossings(a)
    if not 1 <= r <= len(crossings):
        raise NoSuchCrossing(f"array has {len(crossings)} crossings, asked for #{r}")
    crossing = crossings[r - 1]
    if crossing.kind is not kind:
        raise WrongKind(f"crossing #{r} is {crossing.kind.value}, expected {kind.value}")
    row, i = crossing.entries[0]
    if a.entry(row, i) in (a.u, a.v):
        raise ImproperCrossing(f"crossing #{r} at {row}{i} sits on an upper bound")
    return crossing

def alpha(r: int, a: TwoRowedArray) -> TwoRowedArray:
    """Swap the parts of both rows to the right of the ``r``-th crossing, an upward one at cᵢ.

    The bracket kind toggles. The map is an involution and keeps the first ``r`` crossings.

    Raises:
        NoSuchCrossing: If there are fewer than ``r`` crossings.
        WrongKind: If the ``r``-th crossing is downward.
        ImproperCrossing: If ``cᵢ`` equals ``u`` or ``v``.
    """
    _, i = _crossing(r, a, CrossingKind.UPWARD).entries[0]
    _logger.debug("alpha_%d at c%d=%d", r, i, a.entry(TOP, i))
    return TwoRowedArray(
        a.x, a.y, a.u, a.v,
        a.c[:i] + a.d[i:],
        a.d[:i] + a.c[i:],
        bracket=a.bracket.toggled(),
    )

def beta(r: int, a: TwoRowedArray) -> TwoRowedArray:
    """Swap the tails after the ``r``-th crossing, a downward one at dᵢ.

    The top row keeps ``c₁..cᵢ₋₁`` and the bottom row keeps ``d₁..dᵢ``. The bracket kind toggles.
    The map is an involution and keeps the first ``r`` crossings.

    Raises:
        NoSuchCrossing: If there are fewer than ``r`` crossings.
        WrongKind: If the ``r``-th crossing is upward.
        ImproperCrossing: If ``dᵢ`` equals ``u`` or ``v``.
    """
    _, i = _crossing(r, a, CrossingKind.DOWNWARD).entries[0]
    _logger.debug("beta_%d at d%d=%d", r, i, a.entry(BOTTOM, i))
    return TwoRowedArray(
        a.x, a.y, a.u, a.v,
        a.c[:i - 1] + a.d[i:],
        a.d[:i] + a.c[i - 1:],
        bracket=a.bracket.toggled(),
    )

def nu(a: TwoRowedArray) -> TwoRowedArray:
    """Negate every entry, reverse each row and swap the rows.

    An ``XU_YV`` array with bounds ``(x, y, u, v)`` goes to the ``XU_YV`` array with bounds
    ``(−v, −u, −y, −x)``. For ``XV_YU`` the row swap would leave the two bracket kinds, so the
    rows stay in place: the image is the ``XV_YU`` array with the same new bounds and rows
    ``reversed(−c)``, ``reversed(−d)``. Both are involutions.
    """
    neg_c = tuple(-e for e in reversed(a.c))
    neg_d = tuple(-e for e in reversed(a.d))
    if a.bracket is Bracket.XU_YV:
        c, d = neg_d, neg_c
    else:
        c, d = neg_c, neg_d
    return TwoRowedArray(-a.v, -a.u, -a.y, -a.x, c, d, bracket=a.bracket)

def crossing_map(r: int, a: TwoRowedArray) -> TwoRowedArray:
    """Apply `alpha` or `beta` depending on the kind of the ``r``-th crossing.
    """
    crossings = array_crossings(a)
    if not 1 <= r <= len(crossings):
        raise NoSuchCrossing(f"array has {len(crossings)} crossings, asked for #{r}")
    if crossings[r - 1].kind is CrossingKind.UPWARD:
        return alpha(r, a)
    return beta(r, a)

def reduce_chain(a: TwoRowedArray, r: int) -> TwoRowedArray:
    """Apply the crossing maps at crossings ``r, r−1, ..., 1`` in turn.
    """
    for s in range(r, 0, -1):
        a = crossing_map(s, a)
    return a

def expand_chain(a: TwoRowedArray, r: int) -> TwoRowedArray:
    """Inverse of `reduce_chain`: apply the crossing maps at ``1, 2, ..., r``.
    """
    for s in range(1, r + 1):
        a = crossing_map(s, a)
    return a

def enumerate_arrays(
    bracket: Bracket,
    x: int, y: int, u: int, v: int,
    len_c: int, len_d: int,
) -> Iterator[TwoRowedArray]:
    """Yield every array with the given bracket, bounds and row lengths.
    """
    bracket = Bracket(bracket)
    if bracket is Bracket.XU_YV:
        top, bottom = range(x + 1, u + 1), range(y, v)
    else:
        top, bottom = range(x + 1, v), range(y, u + 1)
    if len_c < 0 or len_d < 0: return
    for c in combinations(top, len_c):
        for d in combinations(bottom, len_d):
            yield TwoRowedArray(x, y, u, v, c, d, bracket=bracket)
