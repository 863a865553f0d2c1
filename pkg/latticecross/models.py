from __future__ import annotations

from enum import Enum
from datetime import datetime
import re
from typing import (
    Any,
    Union, Optional,
    Tuple, List, Sequence, Dict,
    Iterator,
)
import warnings

import pytz
import colour

from .errors import *

# Enums

class CrossingKind(Enum):
    """Represents the direction of a crossing.

    For a path and a line, a crossing is upward when the crossing vertex is preceded and followed
    by up-steps. For a pair of paths, it is upward when the first path leaves the crossing vertex
    with a north step.
    """
    UPWARD = "upward"
    DOWNWARD = "downward"

    def json(self): return self.value

    def flipped(self) -> CrossingKind:
        """Return the opposite kind.
        """
        return CrossingKind.DOWNWARD if self is CrossingKind.UPWARD else CrossingKind.UPWARD

class Bracket(Enum):
    """Represents the bound pattern of a two-rowed array.

    ``XU_YV`` means the top row lies in ``(x,u]`` and the bottom row in ``[y,v)``; ``XV_YU``
    means the top row lies in ``(x,v)`` and the bottom row in ``[y,u]``.
    """
    XU_YV = "XU_YV"
    XV_YU = "XV_YU"

    def json(self): return self.value

    def toggled(self) -> Bracket:
        """Return the other bracket kind.
        """
        return Bracket.XV_YU if self is Bracket.XU_YV else Bracket.XU_YV

class Interval(Enum):
    """Represents the range a strictly increasing sequence is drawn from.
    """
    X_U = "(x,u]"
    Y_V = "[y,v)"
    X_V = "(x,v)"
    Y_U = "[y,u]"

    def json(self): return self.value

class Assignment(Enum):
    """Represents which end point the first path of a pair runs to.
    """
    P_TO_B1 = "P_to_B1"
    P_TO_B2 = "P_to_B2"

    def json(self): return self.value

def _to_json(value):
    """Robust method to deep convert Model objects
    """
    if hasattr(value, "json"):
        return value.json()

    if isinstance(value, (list, set, tuple)):
        return [_to_json(v) for v in value]

    if isinstance(value, (dict,)):
        return {k: _to_json(v) for k, v in value.items()}

    return value

def _check_keys(cls, json: Dict[str,Any], expected: Sequence[str]):
    for key in json:
        if key not in expected:
            msg = f"unexpected key {key!r} in JSON object for {cls.__name__!r} construction"
            warnings.warn(msg)

# Base class for all models

class Model:
    """Base class for all models.
    """

    def json(self):
        """Return a JSON object representing this model.
        """
        model = {}
        for k in self._json_keys():
            if k.startswith("_"): continue
            v = getattr(self, k)
            if v is None: continue
            model[k] = _to_json(v)

        return model

    def _json_keys(self) -> Sequence[str]:
        slots = getattr(self.__class__, "__slots__", None)
        if slots: return slots
        return list(self.__dict__.keys())

class Frozen(Model):
    """Base class for immutable models.

    Subclasses assign their fields once with ``object.__setattr__`` in ``__init__``.
    """
    __slots__ = ()

    def __setattr__(self, name, value):
        msg = f"cannot assign to field {name!r}"
        raise AttributeError(msg)

    def _key(self) -> tuple:
        return tuple(getattr(self, k) for k in self.__slots__)

    # pickle support; fields are only ever set through object.__setattr__
    def __getstate__(self):
        return (None, {k: getattr(self, k) for k in self.__slots__})

    def __setstate__(self, state):
        _, slots = state
        for k, v in slots.items():
            object.__setattr__(self, k, v)

    def __eq__(self, other):
        if isinstance(other, self.__class__):
            return self._key() == other._key()
        return NotImplemented

    def __ne__(self, other):
        x = self.__eq__(other)

        if x is NotImplemented:
            return NotImplemented
        else:
            return not x

    def __hash__(self):
        return hash((self.__class__.__name__,) + self._key())

# Primitives

class Point(Frozen):
    """Represents a lattice point.

    Hint:
        Points unpack like tuples: ::

            >>> x, y = Point(3, 4)

    Args:
        x: Horizontal coordinate.
        y: Vertical coordinate.
    """
    x: int
    y: int

    __slots__ = ("x", "y")

    def __init__(self, x: int, y: int):
        object.__setattr__(self, "x", int(x))
        object.__setattr__(self, "y", int(y))

    def __repr__(self):
        return f"{self.__class__.__name__}({self.x}, {self.y})"

    def __str__(self):
        return f"({self.x},{self.y})"

    def __iter__(self) -> Iterator[int]:
        yield self.x
        yield self.y

    def __lt__(self, other):
        if isinstance(other, Point):
            return (self.x, self.y) < (other.x, other.y)
        return NotImplemented

    def json(self) -> List[int]:
        return [self.x, self.y]

    @staticmethod
    def from_json(point: Union[str,Sequence[int],Point]) -> Point:
        """Takes in a ``[x, y]`` list or an ``"x,y"`` string and returns the `Point`.
        """
        if isinstance(point, Point):
            return point
        if isinstance(point, str):
            match = re.fullmatch(r"\s*\(?\s*(-?\d+)\s*,\s*(-?\d+)\s*\)?\s*", point)
            if match is None:
                raise ValueError(f"Malformed point given: {point!r}")
            return Point(int(match.group(1)), int(match.group(2)))
        x, y = point
        return Point(x, y)

ORIGIN = Point(0, 0)

class Crossing(Frozen):
    """Represents a crossing of a path, a pair of paths, or a two-rowed array.

    Attributes:
        kind: Upward or downward.
        vertex: The crossing vertex.
        position_index: Ordinal from the left, starting at 1.
        entries: For arrays, the witnessing entries as ``(row, index)`` pairs, e.g.
            ``(("c", 2),)`` for a crossing at c₂, or ``(("c", 2), ("f", 3))`` for a pair crossing.
            Empty for path crossings.
    """
    kind: CrossingKind
    vertex: Point
    position_index: int
    entries: Tuple[Tuple[str,int],...]

    __slots__ = ("kind", "vertex", "position_index", "entries")

    def __init__(self,
        kind: CrossingKind,
        vertex: Point,
        position_index: int,
        entries: Sequence[Tuple[str,int]]=(),
    ):
        object.__setattr__(self, "kind", CrossingKind(kind))
        object.__setattr__(self, "vertex", Point.from_json(vertex))
        object.__setattr__(self, "position_index", int(position_index))
        object.__setattr__(self, "entries", tuple((str(r), int(i)) for r, i in entries))

    def __repr__(self):
        attrs = f"{self.kind.value!r}, {self.vertex!r}, {self.position_index}"
        if self.entries: attrs += f", {self.entries!r}"
        return f"{self.__class__.__name__}({attrs})"

    def __str__(self):
        where = ",".join(f"{r}{i}" for r, i in self.entries)
        where = f" at {where}" if where else ""
        return f"#{self.position_index} {self.kind.value} {self.vertex}{where}"

    def json(self) -> Dict[str,Any]:
        model = {
            "kind": self.kind.json(),
            "vertex": self.vertex.json(),
            "position_index": self.position_index,
        }
        if self.entries:
            model["entries"] = [[r, i] for r, i in self.entries]
        return model

    @staticmethod
    def from_json(crossing: Dict[str,Any]) -> Crossing:
        _check_keys(Crossing, crossing, ("kind", "vertex", "position_index", "entries"))
        return Crossing(
            crossing["kind"],
            crossing["vertex"],
            crossing["position_index"],
            crossing.get("entries", ()),
        )

def renumber(crossings: Sequence[Crossing]) -> List[Crossing]:
    """Return the crossings with position indices 1, 2, ... in the given order.
    """
    return [
        Crossing(c.kind, c.vertex, i, c.entries)
        for i, c in enumerate(crossings, start=1)
    ]

class Timestamp(Model):
    """Represents a UTC timestamp.

    This class wraps around a `datetime` object. Use ``ts.datetime`` to access it. It may be
    initialized with a `datetime`, another `Timestamp`, or an ISO 8601 formatted string.
    """
    def __init__(self, dt: Union[datetime,str,Timestamp]):
        if isinstance(dt, datetime):
            if dt.tzinfo is not None:
                self.datetime = dt.astimezone(pytz.utc)
            else:
                self.datetime = dt.replace(tzinfo=pytz.utc)
        elif isinstance(dt, str):
            try:
                parsed = datetime.strptime(dt, r"%Y-%m-%dT%H:%M:%S.%fZ")
            except ValueError:
                parsed = datetime.strptime(dt, r"%Y-%m-%dT%H:%M:%SZ")
            self.datetime = parsed.replace(tzinfo=pytz.utc)
        elif isinstance(dt, Timestamp):
            self.datetime = dt.datetime
        else:
            msg = (
                f"{self.__class__.__name__} takes either a datetime.datetime object or "
                f"ISO 8601 formatted string as the first positional argument. Given "
                f"type(dt)={type(dt)!r}"
            )
            raise TypeError(msg)

    @classmethod
    def now(cls) -> Timestamp:
        """Return the current UTC time.
        """
        return cls(datetime.now(pytz.utc))

    def __repr__(self):
        return f"{self.__class__.__name__}({self.json()!r})"

    def __str__(self):
        return self.datetime.strftime("%Y-%m-%d %H:%M:%S UTC")

    def __eq__(self, other):
        if isinstance(other, self.__class__):
            return self.datetime == other.datetime
        elif isinstance(other, datetime):
            if other.tzinfo is None:
                return self.datetime == other.replace(tzinfo=pytz.utc) # assume UTC
            else:
                return self.datetime == other

        return NotImplemented

    def __lt__(self, other):
        if isinstance(other, self.__class__):
            return self.datetime < other.datetime
        return NotImplemented

    def json(self) -> str:
        """Convert this timestamp to ISO 8601 with microseconds and a ``Z`` suffix.
        """
        return self.datetime.strftime(r"%Y-%m-%dT%H:%M:%S.%fZ")

class Color(colour.Color):
    """Represents a terminal marker color.

    This class is initialized in the same way that a `colour.Color`_ object is.

    .. _`colour.Color`: https://pypi.org/project/colour/#instantiation
    """
    def ansi(self, text: str) -> str:
        """Wrap ``text`` in a 24-bit ANSI foreground color escape.
        """
        r, g, b = (round(255 * channel) for channel in self.rgb)
        return f"\x1b[38;2;{r};{g};{b}m{text}\x1b[0m"

    def __str__(self):
        return self.hex_l[1:]

    json = __str__

MARKER_COLORS = {
    CrossingKind.UPWARD: Color("darkviolet"),
    CrossingKind.DOWNWARD: Color("darkorange"),
}
