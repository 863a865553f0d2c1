"""Monotone lattice paths with north and east steps.

A path is stored as a start point and an N/E step word. The U/D view of the same path reads N as
U (up) and E as D (down); both views carry identical statistics.
"""

from __future__ import annotations

from collections import namedtuple
from math import comb
from typing import (
    Any,
    Union, Optional,
    Tuple, List, Dict,
    Iterator,
)

from .errors import MixedAlphabet, InvalidStep
from .models import (
    Frozen,
    Point, ORIGIN,
    Crossing, CrossingKind,
    renumber,
    _check_keys,
)

NORTH, EAST = "N", "E"
UP, DOWN = "U", "D"
_TO_NE = {UP: NORTH, DOWN: EAST}
_TO_UD = {NORTH: UP, EAST: DOWN}

PathStats = namedtuple("PathStats", "des maj peaks")

class LatticePath(Frozen):
    """Represents a monotone lattice path.

    Vertex ``i`` is ``start`` shifted by the number of E steps and the number of N steps among
    the first ``i`` steps.

    Args:
        start: The first vertex.
        steps: Step word over ``{N, E}``.
        ud: Whether the path should be displayed in its U/D view.
    """
    start: Point
    steps: str
    ud: bool

    __slots__ = ("start", "steps", "ud")

    def __init__(self, start: Point=ORIGIN, steps: str="", ud: bool=False):
        if any(s not in (NORTH, EAST) for s in steps):
            raise InvalidStep(f"LatticePath steps must be N/E letters, given {steps!r}")
        object.__setattr__(self, "start", Point.from_json(start))
        object.__setattr__(self, "steps", steps)
        object.__setattr__(self, "ud", bool(ud))

    def _key(self) -> tuple:
        return (self.start, self.steps)

    def __len__(self):
        return len(self.steps)

    def __repr__(self):
        return f"{self.__class__.__name__}({self.start!r}, {self.word()!r})"

    def __str__(self):
        return f"{self.start}+{self.word()}"

    def word(self, ud: Optional[bool]=None) -> str:
        """The step word, in the U/D alphabet if ``ud`` (default: the path's own view).
        """
        if ud is None: ud = self.ud
        if not ud: return self.steps
        return "".join(_TO_UD[s] for s in self.steps)

    @property
    def end(self) -> Point:
        east = self.steps.count(EAST)
        return Point(self.start.x + east, self.start.y + len(self.steps) - east)

    def vertices(self) -> List[Point]:
        """All vertices, from ``start`` to ``end``.
        """
        x, y = self.start
        result = [Point(x, y)]
        for s in self.steps:
            if s == EAST: x += 1
            else: y += 1
            result.append(Point(x, y))
        return result

    def valleys(self) -> List[Tuple[int,Point]]:
        """Descents as ``(vertex index, vertex)``: vertices preceded by E and followed by N.
        """
        vertices = self.vertices()
        return [
            (i, vertices[i])
            for i in range(1, len(self.steps))
            if self.steps[i - 1] == EAST and self.steps[i] == NORTH
        ]

    def peaks(self) -> List[Tuple[int,Point]]:
        """Vertices preceded by N and followed by E.
        """
        vertices = self.vertices()
        return [
            (i, vertices[i])
            for i in range(1, len(self.steps))
            if self.steps[i - 1] == NORTH and self.steps[i] == EAST
        ]

    def json(self) -> Dict[str,Any]:
        return {"start": self.start.json(), "steps": self.word()}

    @staticmethod
    def from_json(path: Union[str,Dict[str,Any]], start: Point=ORIGIN) -> LatticePath:
        """Takes in ``{"start": [x, y], "steps": "NNEEN"}`` or a bare step string.
        """
        if isinstance(path, str):
            return parse_path(path, start)
        _check_keys(LatticePath, path, ("start", "steps"))
        return parse_path(path.get("steps", ""), Point.from_json(path.get("start", start)))

def parse_path(word: str, start: Point=ORIGIN) -> LatticePath:
    """Parse a step word over ``{N, E}`` or over ``{U, D}``.

    Args:
        word: The step word; the empty word gives the empty path.
        start: The first vertex.

    Raises:
        MixedAlphabet: If the word uses letters from both alphabets.
        InvalidStep: If the word contains any other letter.
    """
    word = word.strip().upper()
    letters = set(word)
    unknown = letters - {NORTH, EAST, UP, DOWN}
    if unknown:
        raise InvalidStep(f"unknown step letters {sorted(unknown)!r} in {word!r}")
    if letters & {NORTH, EAST} and letters & {UP, DOWN}:
        raise MixedAlphabet(f"step word {word!r} mixes N/E with U/D")
    if letters & {UP, DOWN}:
        return LatticePath(start, "".join(_TO_NE[s] for s in word), ud=True)
    return LatticePath(start, word)

def stats(p: LatticePath) -> PathStats:
    """Return the number of descents, the major index and the number of peaks.

    The major index is the sum of the 0-based vertex indices of the descents.
    """
    valleys = p.valleys()
    return PathStats(
        des=len(valleys),
        maj=sum(i for i, _ in valleys),
        peaks=len(p.peaks()),
    )

def line_crossings(p: LatticePath, ell: int) -> List[Crossing]:
    """Crossings of the horizontal line at height ``ell`` in the U/D view.

    Heights are measured from the start of the path, which sits at height 0. Vertices are given
    in U/D coordinates ``(index, height)``.
    """
    crossings = []
    height = 0
    for i in range(1, len(p.steps)):
        height += 1 if p.steps[i - 1] == NORTH else -1
        if height != ell: continue
        if p.steps[i - 1] != p.steps[i]: continue
        kind = CrossingKind.UPWARD if p.steps[i] == NORTH else CrossingKind.DOWNWARD
        crossings.append(Crossing(kind, Point(i, ell), 0))
    return renumber(crossings)

def diagonal_crossings(p: LatticePath) -> List[Crossing]:
    """Crossings of the main diagonal ``y = x`` in the N/E view.

    A crossing is a diagonal vertex preceded and followed by the same step; it is upward for
    two N steps and downward for two E steps.
    """
    vertices = p.vertices()
    crossings = []
    for i in range(1, len(p.steps)):
        v = vertices[i]
        if v.x != v.y: continue
        if p.steps[i - 1] != p.steps[i]: continue
        kind = CrossingKind.UPWARD if p.steps[i] == NORTH else CrossingKind.DOWNWARD
        crossings.append(Crossing(kind, v, 0))
    return renumber(crossings)

def to_diagonal(p: LatticePath, ell: int) -> LatticePath:
    """Move a U/D path from the origin to start at ``(ell, 0)`` in the N/E view.

    Crossings of the line at height ``ell`` become crossings of the main diagonal, with the same
    kinds in the same order.
    """
    return LatticePath(Point(ell, 0), p.steps)

def pair_crossings(p: LatticePath, q: LatticePath) -> List[Crossing]:
    """Crossings of a pair of paths.

    For every maximal run of consecutive common vertices whose first and last vertex are not
    endpoints of either path, the last vertex is a crossing if each path arrives at the first
    vertex with the same step type it leaves the last vertex with. The crossing is upward if
    ``p`` leaves it with an N step. Crossings are ordered by x-coordinate.
    """
    p_vertices = p.vertices()
    q_vertices = q.vertices()
    p_base = p.start.x + p.start.y
    q_base = q.start.x + q.start.y
    q_by_level = {q_base + j: v for j, v in enumerate(q_vertices)}
    common = [
        p_base + i
        for i, v in enumerate(p_vertices)
        if q_by_level.get(p_base + i) == v
    ]
    endpoints = {p.start, p.end, q.start, q.end}

    runs: List[List[int]] = []
    for level in common:
        if runs and runs[-1][-1] == level - 1:
            runs[-1].append(level)
        else:
            runs.append([level])

    crossings = []
    for run in runs:
        first, last = run[0], run[-1]
        v_first = p_vertices[first - p_base]
        v_last = p_vertices[last - p_base]
        if v_first in endpoints or v_last in endpoints: continue
        p_in, p_out = p.steps[first - p_base - 1], p.steps[last - p_base]
        q_in, q_out = q.steps[first - q_base - 1], q.steps[last - q_base]
        if p_in != p_out or q_in != q_out: continue
        kind = CrossingKind.UPWARD if p_out == NORTH else CrossingKind.DOWNWARD
        crossings.append(Crossing(kind, v_last, 0))
    crossings.sort(key=lambda c: (c.vertex.x, c.vertex.y))
    return renumber(crossings)

def precedes(a: Point, b: Point) -> bool:
    """Whether ``a`` lies strictly to the left of and strictly above ``b``.
    """
    return a.x < b.x and a.y > b.y

def count_paths(a: Point, b: Point) -> int:
    """Number of monotone paths from ``a`` to ``b``.
    """
    dx, dy = b.x - a.x, b.y - a.y
    if dx < 0 or dy < 0: return 0
    return comb(dx + dy, dx)

def enumerate_words(north: int, east: int, prefix: str="") -> Iterator[str]:
    """Yield every word with ``north`` N letters and ``east`` E letters after ``prefix``, in
    lexicographic order with N before E.
    """
    if north == 0 and east == 0:
        yield prefix
        return
    if north: yield from enumerate_words(north - 1, east, prefix + NORTH)
    if east: yield from enumerate_words(north, east - 1, prefix + EAST)

def enumerate_paths(a: Point, b: Point) -> Iterator[LatticePath]:
    """Yield every monotone N/E path from ``a`` to ``b`` exactly once.

    Nothing is yielded when ``b`` is not weakly north-east of ``a``.
    """
    dx, dy = b.x - a.x, b.y - a.y
    if dx < 0 or dy < 0: return
    for word in enumerate_words(dy, dx):
        yield LatticePath(a, word)
