import os,sys, pathlib
currentdir = pathlib.Path(__file__).parent
parentdir = os.path.dirname(currentdir)
sys.path.insert(0,parentdir)

from itertools import product

import pytest
from hypothesis import given, strategies as st

from latticecross import (
    Point, Bracket, CrossingKind,
    LatticePath, parse_path, stats, diagonal_crossings,
    TwoRowedArray,
    encode_path, decode_array, truncate,
    array_crossings, first_crossing_kind,
    alpha, beta, nu,
    enumerate_arrays,
    InvalidArray, ShapeMismatch,
    NoSuchCrossing, WrongKind, ImproperCrossing,
    BijectionError,
)
from latticecross.arrays import array_sum, double_bracket, crossing_map, reduce_chain, expand_chain
from latticecross.oracle import _corner_valley

UP, DOWN = CrossingKind.UPWARD, CrossingKind.DOWNWARD

# a path from (1,0) to (7,8) with three diagonal crossings
PATH = parse_path("ENENNNENEENNNE", Point(1, 0))
ARRAY = TwoRowedArray(1, 0, 7, 8, (2, 3, 4, 6), (0, 1, 4, 5))

def kinds_and_entries(a):
    return [(c.kind, c.entries[0]) for c in array_crossings(a)]

def test_encode_path():
    assert encode_path(PATH) == ARRAY
    assert decode_array(ARRAY) == PATH
    assert truncate(ARRAY) == PATH
    assert str(ARRAY) == "{1,2,3,4,6,7}/{0,0,1,4,5,8}"
    assert double_bracket(ARRAY)
    assert ARRAY.shape == (4, 4)
    assert not double_bracket(TwoRowedArray(0, 0, 3, 3, (2,), (1,)))

def test_encoding_keeps_major_index():
    s = stats(PATH)
    assert array_sum(ARRAY) - s.des * (PATH.start.x + PATH.start.y) == s.maj

def test_array_crossings():
    crossings = array_crossings(ARRAY)
    assert kinds_and_entries(ARRAY) == [(UP, ("c", 2)), (DOWN, ("d", 4)), (UP, ("c", 4))]
    assert [c.vertex for c in crossings] == [Point(3, 3), Point(5, 5), Point(6, 6)]
    assert [c.vertex for c in diagonal_crossings(PATH)] == [c.vertex for c in crossings]

def test_crossings_with_unequal_rows():
    a = TwoRowedArray(0, 2, 7, 5, (1, 4, 5, 7), (2, 3))
    assert kinds_and_entries(a) == [(DOWN, ("d", 2)), (UP, ("c", 2))]
    assert truncate(a) == LatticePath(Point(0, 2), "ENEEENNE")
    assert first_crossing_kind(a) is DOWN

    b = TwoRowedArray(0, 0, 8, 6, (3, 4), (1, 2, 5, 7), bracket=Bracket.XV_YU)
    assert kinds_and_entries(b) == [(DOWN, ("d", 1)), (UP, ("c", 2)), (DOWN, ("d", 3))]
    assert truncate(b) == LatticePath(Point(0, 0), "NEEENENNNEE")
    assert first_crossing_kind(b) is DOWN

def test_detector_when_last_valley_meets_upper_bound():
    # XV_YU with d_m = u: the last valley flattens out in the truncated path
    a = TwoRowedArray(0, 0, 2, 4, (1, 3), (0, 2), bracket=Bracket.XV_YU)
    assert kinds_and_entries(a) == [(UP, ("c", 1)), (DOWN, ("d", 2))]
    p = truncate(a)
    assert p == LatticePath(Point(0, 0), "ENNEEE")
    assert [(c.kind, c.vertex) for c in diagonal_crossings(p)] == [
        (c.kind, c.vertex) for c in array_crossings(a)
    ]

def test_first_crossing_kind():
    assert first_crossing_kind(ARRAY) is UP
    assert first_crossing_kind(TwoRowedArray(0, 0, 7, 7, (2, 3, 6), (0, 3, 5))) is UP
    assert first_crossing_kind(TwoRowedArray(0, 0, 3, 3, (2,), (1,))) is DOWN

def test_beta_then_alpha():
    once = beta(2, ARRAY)
    assert once == TwoRowedArray(1, 0, 7, 8, (2, 3, 4), (0, 1, 4, 5, 6), bracket=Bracket.XV_YU)
    assert kinds_and_entries(once)[:2] == [(UP, ("c", 2)), (DOWN, ("d", 4))]
    twice = alpha(1, once)
    assert twice == TwoRowedArray(1, 0, 7, 8, (2, 3, 4, 5, 6), (0, 1, 4))
    assert reduce_chain(ARRAY, 2) == twice
    assert expand_chain(twice, 2) == ARRAY
    assert beta(2, once) == ARRAY
    assert array_sum(twice) == array_sum(ARRAY)

def test_reduce_three_crossings():
    a = TwoRowedArray(0, 0, 7, 7, (2, 3, 6), (0, 3, 5))
    assert kinds_and_entries(a) == [(UP, ("c", 1)), (DOWN, ("d", 3)), (UP, ("c", 3))]
    step = alpha(3, a)
    assert step == TwoRowedArray(0, 0, 7, 7, (2, 3, 6), (0, 3, 5), bracket=Bracket.XV_YU)
    step = beta(2, step)
    assert step == TwoRowedArray(0, 0, 7, 7, (2, 3), (0, 3, 5, 6))
    step = alpha(1, step)
    expected = TwoRowedArray(0, 0, 7, 7, (2, 3, 5, 6), (0, 3), bracket=Bracket.XV_YU)
    assert step == expected
    assert reduce_chain(a, 3) == expected
    assert expand_chain(expected, 3) == a

def test_map_errors():
    with pytest.raises(WrongKind):
        alpha(2, ARRAY)
    with pytest.raises(WrongKind):
        beta(1, ARRAY)
    with pytest.raises(NoSuchCrossing):
        alpha(4, ARRAY)
    with pytest.raises(NoSuchCrossing):
        crossing_map(0, ARRAY)
    with pytest.raises(ImproperCrossing):
        alpha(1, TwoRowedArray(1, 0, 2, 3, (2,), (0,)))
    assert issubclass(ImproperCrossing, BijectionError)

def test_nu():
    image = nu(ARRAY)
    assert image == TwoRowedArray(-8, -7, 0, -1, (-5, -4, -1, 0), (-6, -4, -3, -2))
    assert nu(image) == ARRAY
    other = TwoRowedArray(0, 0, 8, 6, (3, 4), (1, 2, 5, 7), bracket=Bracket.XV_YU)
    assert nu(other).bracket is Bracket.XV_YU
    assert nu(nu(other)) == other

def test_validation():
    with pytest.raises(InvalidArray):
        TwoRowedArray(0, 0, 5, 5, (3, 2), ())
    with pytest.raises(InvalidArray):
        TwoRowedArray(0, 0, 5, 5, (0,), ())
    with pytest.raises(InvalidArray):
        TwoRowedArray(0, 0, 5, 5, (), (5,))
    with pytest.raises(InvalidArray):
        TwoRowedArray(0, 0, 5, 5, (5,), (), bracket=Bracket.XV_YU)
    TwoRowedArray(0, 0, 5, 5, (), (5,), bracket=Bracket.XV_YU)
    with pytest.raises(ShapeMismatch):
        decode_array(TwoRowedArray(0, 0, 5, 5, (1, 2), (0,)))
    with pytest.raises(ShapeMismatch):
        decode_array(TwoRowedArray(0, 0, 5, 5, (1,), (0,), bracket=Bracket.XV_YU))

def test_json():
    assert TwoRowedArray.from_json(ARRAY.json()) == ARRAY
    assert ARRAY.json()["bracket"] == "XU_YV"
    assert ARRAY.entry("c", 0) == 1
    assert ARRAY.entry("d", 5) == 8
    assert ARRAY.entry("c", 9, extend=True) == 7
    with pytest.raises(IndexError):
        ARRAY.entry("c", 9)

def test_enumerate_arrays():
    arrays = list(enumerate_arrays(Bracket.XU_YV, 0, 0, 3, 2, 2, 1))
    # 3 choose 2 top rows, 2 choose 1 bottom rows
    assert len(arrays) == 6
    assert len(set(arrays)) == 6
    assert list(enumerate_arrays(Bracket.XU_YV, 0, 0, 3, 2, -1, 1)) == []

@st.composite
def two_rowed_arrays(draw, bracket=None):
    low = draw(st.integers(0, 2))
    x, y = draw(st.integers(0, low)), draw(st.integers(0, low))
    u, v = draw(st.integers(low, 6)), draw(st.integers(low, 6))
    if bracket is None:
        bracket = draw(st.sampled_from(list(Bracket)))
    if bracket is Bracket.XU_YV:
        top, bottom = range(x + 1, u + 1), range(y, v)
    else:
        top, bottom = range(x + 1, v), range(y, u + 1)
    c = sorted(draw(st.sets(st.sampled_from(top)))) if len(top) else []
    d = sorted(draw(st.sets(st.sampled_from(bottom)))) if len(bottom) else []
    return TwoRowedArray(x, y, u, v, c, d, bracket=bracket)

@given(two_rowed_arrays(Bracket.XU_YV))
def test_detector_agrees_with_truncated_path(a):
    assert [(c.kind, c.vertex) for c in array_crossings(a)] == [
        (c.kind, c.vertex) for c in diagonal_crossings(truncate(a))
    ]

@given(two_rowed_arrays())
def test_crossing_maps(a):
    crossings = array_crossings(a)
    assert nu(nu(a)) == a
    for r in range(1, len(crossings) + 1):
        try:
            image = crossing_map(r, a)
        except BijectionError:
            continue
        assert image.bracket is a.bracket.toggled()
        assert crossing_map(r, image) == a
        assert array_sum(image) == array_sum(a)
        kept = [(c.kind, c.vertex) for c in array_crossings(image)[:r]]
        assert kept == [(c.kind, c.vertex) for c in crossings[:r]]

@given(st.text(alphabet="NE", max_size=12), st.integers(0, 3), st.integers(0, 3))
def test_odd_crossings_share_a_kind(word, x, y):
    a = encode_path(LatticePath(Point(x, y), word))
    crossings = array_crossings(a)
    for c in crossings[::2]:
        assert c.kind is first_crossing_kind(a)
    for c in crossings[1::2]:
        assert c.kind is not first_crossing_kind(a)

@given(two_rowed_arrays())
def test_crossings_alternate_from_first_kind(a):
    first = first_crossing_kind(a)
    kinds = [c.kind for c in array_crossings(a)]
    assert all(kind is first for kind in kinds[::2])
    assert all(kind is first.flipped() for kind in kinds[1::2])

def forced_parity(a):
    """1 or 0 when the crossing count is forced odd or even, else None."""
    len_c, len_d = a.shape
    if a.x > a.y or (a.x == a.y and a.d and a.d[0] == a.y):
        starts_below = True
    elif a.x < a.y:
        starts_below = False
    else:
        return None
    if a.u == a.v: return None
    if a.bracket is Bracket.XU_YV:
        if a.u < a.v and len_c >= len_d: ends_below = False
        elif a.u > a.v and len_c <= len_d: ends_below = True
        else: return None
    else:
        if a.u < a.v and len_c <= len_d: ends_below = True
        elif a.u > a.v and len_c >= len_d: ends_below = False
        else: return None
    return int(starts_below != ends_below)

@pytest.mark.parametrize("window", [2, pytest.param(4, marks=pytest.mark.slow)])
def test_crossing_parity_is_forced(window):
    span = range(window + 1)
    checked = 0
    for x, y, u, v in product(span, span, span, span):
        if max(x, y) > min(u, v): continue
        for bracket in Bracket:
            for len_c in span:
                for len_d in span:
                    for a in enumerate_arrays(bracket, x, y, u, v, len_c, len_d):
                        # a valley in the corner (u, u) hides the last crossing
                        if _corner_valley(a): continue
                        parity = forced_parity(a)
                        if parity is None: continue
                        checked += 1
                        assert len(array_crossings(a)) % 2 == parity, a
    assert checked > 0
