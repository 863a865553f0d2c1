import os,sys, pathlib
currentdir = pathlib.Path(__file__).parent
parentdir = os.path.dirname(currentdir)
sys.path.insert(0,parentdir)

import pytest
from hypothesis import given, strategies as st

from latticecross import (
    Point, CrossingKind, LatticePath,
    parse_path, stats,
    line_crossings, diagonal_crossings, to_diagonal, pair_crossings,
    precedes, count_paths, enumerate_paths,
    MixedAlphabet, InvalidStep,
)

UP, DOWN = CrossingKind.UPWARD, CrossingKind.DOWNWARD

# the running example: one path, viewed against the line at height 1
EXAMPLE = "DUDUUUDUDDUUUD"

def test_parse_views():
    p = parse_path(EXAMPLE)
    assert p.ud
    assert p.steps == "ENENNNENEENNNE"
    assert p.word() == EXAMPLE
    assert p.word(ud=False) == "ENENNNENEENNNE"
    assert p.end == Point(6, 8)
    assert str(parse_path("nne", Point(1, 2))) == "(1,2)+NNE"

def test_parse_errors():
    with pytest.raises(MixedAlphabet):
        parse_path("NU")
    with pytest.raises(InvalidStep):
        parse_path("NX")
    with pytest.raises(InvalidStep):
        LatticePath(Point(0, 0), "NU")

def test_empty_path():
    p = parse_path("")
    assert p.vertices() == [Point(0, 0)]
    assert stats(p) == (0, 0, 0)
    assert line_crossings(p, 0) == []

def test_statistics():
    s = stats(parse_path(EXAMPLE))
    assert s.des == 4
    assert s.maj == 21
    assert s.peaks == 4

def test_line_crossings():
    crossings = line_crossings(parse_path(EXAMPLE), 1)
    assert [c.vertex for c in crossings] == [Point(5, 1), Point(9, 1), Point(11, 1)]
    assert [c.kind for c in crossings] == [UP, DOWN, UP]
    assert [c.position_index for c in crossings] == [1, 2, 3]

def test_line_crossings_small():
    assert [c.kind for c in line_crossings(parse_path("UUDD"), 1)] == [UP, DOWN]
    crossings = line_crossings(parse_path("DUU"), 0)
    assert [(c.kind, c.vertex) for c in crossings] == [(UP, Point(2, 0))]
    assert line_crossings(parse_path("UD"), 1) == []

def test_diagonal_view():
    p = to_diagonal(parse_path(EXAMPLE), 1)
    assert p.start == Point(1, 0)
    crossings = diagonal_crossings(p)
    assert [c.vertex for c in crossings] == [Point(3, 3), Point(5, 5), Point(6, 6)]
    assert [c.kind for c in crossings] == [UP, DOWN, UP]
    assert stats(p) == stats(parse_path(EXAMPLE))

@given(st.text(alphabet="UD", max_size=14), st.integers(-4, 4))
def test_diagonal_view_keeps_crossings(word, ell):
    p = parse_path(word)
    along_line = [c.kind for c in line_crossings(p, ell)]
    along_diagonal = [c.kind for c in diagonal_crossings(to_diagonal(p, ell))]
    assert along_line == along_diagonal

def test_pair_crossings_downward():
    p = parse_path("EENE", Point(0, 1))
    q = parse_path("NENN", Point(1, 0))
    crossings = pair_crossings(p, q)
    assert [(c.kind, c.vertex) for c in crossings] == [(DOWN, Point(2, 2))]

def test_pair_crossings_upward():
    p = parse_path("NENEN", Point(7, 0))
    q = parse_path("EEENE", Point(6, 1))
    crossings = pair_crossings(p, q)
    assert [(c.kind, c.vertex) for c in crossings] == [(UP, Point(8, 1))]

def test_pair_touching_is_not_crossing():
    p = parse_path("NEE", Point(15, 0))
    q = parse_path("EEN", Point(14, 1))
    assert pair_crossings(p, q) == []

def test_pair_crossings_three():
    p = parse_path("EEENNEEENNNEEEE", Point(0, 2))
    q = parse_path("NNENNNENEEENEN", Point(2, 0))
    crossings = pair_crossings(p, q)
    assert [c.vertex for c in crossings] == [Point(3, 4), Point(6, 6), Point(8, 7)]
    assert [c.kind for c in crossings] == [DOWN, UP, DOWN]
    assert stats(p).des + stats(q).des == 6
    assert stats(p).maj + stats(q).maj == 45

    swapped = pair_crossings(q, p)
    assert [c.vertex for c in swapped] == [c.vertex for c in crossings]
    assert [c.kind for c in swapped] == [c.kind.flipped() for c in crossings]

def test_identical_paths_do_not_cross():
    p = parse_path("NENENE")
    assert pair_crossings(p, p) == []

def test_precedes():
    assert precedes(Point(0, 2), Point(2, 0))
    assert not precedes(Point(2, 0), Point(0, 2))
    assert not precedes(Point(0, 0), Point(1, 0))

def test_enumerate_paths():
    paths = list(enumerate_paths(Point(0, 0), Point(2, 2)))
    assert len(paths) == count_paths(Point(0, 0), Point(2, 2)) == 6
    assert len(set(paths)) == 6
    assert all(p.end == Point(2, 2) for p in paths)
    assert list(enumerate_paths(Point(1, 1), Point(0, 3))) == []
    assert count_paths(Point(1, 1), Point(0, 3)) == 0
    assert [p.steps for p in enumerate_paths(Point(3, 3), Point(3, 3))] == [""]

@given(st.text(alphabet="NE", max_size=16))
def test_path_invariants(word):
    p = parse_path(word)
    assert len(p.vertices()) == len(word) + 1
    assert p.vertices()[-1] == p.end
    s = stats(p)
    assert s.des == len(p.valleys())
    assert s.maj <= s.des * len(word)
    assert abs(s.des - s.peaks) <= 1
    assert LatticePath.from_json(p.json()) == p
