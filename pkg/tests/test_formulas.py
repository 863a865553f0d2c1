import os,sys, pathlib
currentdir = pathlib.Path(__file__).parent
parentdir = os.path.dirname(currentdir)
sys.path.insert(0,parentdir)

import pytest

from latticecross import (
    Point, Interval, Bracket, Assignment,
    QTPoly, one, zero, monomial, from_text,
    LineQuery, PairQuery, LineCase,
    line_case,
    lemma_qbin2, lemma_sum_closed, lemma_sum_array,
    g_poly, case_ix_rational,
    f_poly, f_poly_direct, h_poly,
    NegativeExponent, UnsupportedConfiguration, Condition13Violated,
)
from latticecross.formulas import path_poly

def outcome(fn, *args):
    try:
        return fn(*args)
    except NegativeExponent:
        return None

def test_lemma_qbin2():
    assert lemma_qbin2(0, 0) == 1
    assert str(lemma_qbin2(1, 1)) == "1 + t*q"
    assert lemma_qbin2(2, 2) == from_text("1 + t*q + 2*t*q^2 + t*q^3 + t^2*q^4")
    assert lemma_qbin2(3, 0) == 1
    assert lemma_qbin2(4, 3).specialize(t=1, q=1) == 35

def test_path_poly():
    assert path_poly(Point(1, 1), Point(2, 2)) == lemma_qbin2(1, 1)
    assert path_poly(Point(2, 2), Point(1, 3)) == zero()

def test_sequence_sums():
    assert lemma_sum_closed(Interval.X_U, 0, 0, 3, 0, 2) == from_text("q^3 + q^4 + q^5")
    assert lemma_sum_closed(Interval.Y_V, 0, 1, 0, 4, 2) == from_text("q^3 + q^4 + q^5")
    assert lemma_sum_closed(Interval.X_V, 0, 0, 0, 3, 1) == from_text("q + q^2")
    assert lemma_sum_closed(Interval.Y_U, 0, 1, 2, 0, 2) == from_text("q^3")
    assert lemma_sum_closed(Interval.X_U, 0, 0, 3, 0, 0) == 1
    with pytest.raises(NegativeExponent):
        lemma_sum_closed(Interval.Y_V, 0, -2, 0, 0, 1)

def test_array_sums():
    assert lemma_sum_array(Bracket.XU_YV, 0, 0, 2, 2, 1, 0) == from_text("q + 2*q^2 + q^3")
    assert lemma_sum_array(Bracket.XU_YV, 0, 0, 2, 2, 1, 2) == zero()
    # one entry from (0,2) and one from [0,2]
    assert lemma_sum_array(Bracket.XV_YU, 0, 0, 2, 2, 1, 0) == from_text("q + q^2 + q^3")

def test_line_cases():
    assert line_case(LineQuery(8, 6, 1)) is LineCase.BETWEEN_RISING
    assert line_case(LineQuery(2, 6, -1)) is LineCase.BETWEEN_FALLING
    assert line_case(LineQuery(2, 2, -1)) is LineCase.BELOW_BOTH
    assert line_case(LineQuery(2, 2, 3)) is LineCase.ABOVE_BOTH
    assert line_case(LineQuery(3, 1, 0)) is LineCase.AT_START_RISING
    assert line_case(LineQuery(1, 3, 0)) is LineCase.AT_START_FALLING
    assert line_case(LineQuery(3, 1, 2)) is LineCase.AT_END_RISING
    assert line_case(LineQuery(1, 3, -2)) is LineCase.AT_END_FALLING
    assert line_case(LineQuery(2, 2, 0)) is LineCase.AT_START_AND_END
    assert LineCase.BELOW_BOTH.json() == "BELOW_BOTH"

def test_line_query():
    with pytest.raises(ValueError):
        LineQuery(-1, 0)
    query = LineQuery(8, 6, 1, 3)
    assert LineQuery.from_json(query.json()) == query
    assert query.with_r(0) == LineQuery(8, 6, 1)

def test_g_poly_without_threshold():
    for a in range(5):
        for b in range(5):
            for ell in range(-b - 2, a + 3):
                assert g_poly(LineQuery(a, b, ell)) == lemma_qbin2(a, b)

def test_g_poly_small():
    assert str(g_poly(LineQuery(1, 1, 0))) == "1 + t*q"
    assert g_poly(LineQuery(0, 0, 0, 1)) == zero()
    assert g_poly(LineQuery(0, 0, 5)) == one()
    # UDDU crosses once at its middle vertex, DUUD too
    assert g_poly(LineQuery(2, 2, 0, 1)) == monomial(1, 1, 1) + monomial(1, 1, 3)
    assert g_poly(LineQuery(2, 2, 0, 2)) == zero()

def test_g_poly_contains_three_crossing_path():
    # DUDUUUDUDDUUUD crosses height 1 three times, with des 4 and maj 21
    value = g_poly(LineQuery(8, 6, 1, 3))
    assert value.coeff(4, 21) >= 1
    assert value.is_nonnegative()

def test_g_poly_decreases_in_r():
    for r in range(1, 6):
        fewer = g_poly(LineQuery(4, 3, 1, r - 1))
        more = g_poly(LineQuery(4, 3, 1, r))
        assert (fewer - more).is_nonnegative()

def test_through_both_ends_two_ways():
    for a in range(1, 5):
        for r in range(6):
            assert case_ix_rational(a, r) == g_poly(LineQuery(a, a, 0, r))
            g_poly(LineQuery(a, a, 0, r), cross_check=True)
    with pytest.raises(ValueError):
        case_ix_rational(0, 0)

def test_f_poly():
    a, b = Point(0, 0), Point(1, 1)
    assert f_poly(0, a, a, b, b) == lemma_qbin2(1, 1) * lemma_qbin2(1, 1)
    assert f_poly(1, a, a, b, b) == monomial(1, 1, 1)
    assert f_poly(5, a, a, b, b) == zero()

def test_f_poly_matches_direct_sum():
    a1, a2 = Point(0, 1), Point(1, 0)
    for b1, b2 in ((Point(2, 3), Point(3, 2)), (Point(3, 2), Point(2, 3)), (Point(2, 2), Point(2, 2))):
        for k in range(-2, 3):
            assert outcome(f_poly, k, a1, a2, b1, b2) == outcome(f_poly_direct, k, a1, a2, b1, b2)

def test_f_poly_direct_requires_antidiagonal():
    with pytest.raises(Condition13Violated):
        f_poly_direct(0, Point(0, 0), Point(1, 0), Point(2, 2), Point(2, 2))

def test_pair_query():
    query = PairQuery.from_targets((0, 2), (2, 0), (10, 7), (8, 8), 3)
    assert query.assignment is Assignment.P_TO_B2
    assert query.b1 == Point(8, 8)
    assert query.targets() == (Point(10, 7), Point(8, 8))
    assert PairQuery.from_json(query.json()) == query
    assert query.with_r(0).r == 0
    other = PairQuery.from_targets((0, 1), (1, 0), (2, 3), (3, 2))
    assert other.assignment is Assignment.P_TO_B1
    with pytest.raises(ValueError):
        PairQuery((0, 0), (0, 0), (1, 1), (1, 1), r=-1)

def test_h_poly_counts_all_pairs():
    query = PairQuery.from_targets((0, 1), (1, 0), (2, 3), (3, 2))
    assert h_poly(query).specialize(t=1, q=1) == 36

def test_h_poly_three_crossings():
    query = PairQuery.from_targets((0, 2), (2, 0), (10, 7), (8, 8), 3)
    value = h_poly(query)
    # the pair EEENNEEENNNEEEE / NNENNNENEEENEN has des 6 and maj 45
    assert value.coeff(6, 45) >= 1
    assert value.is_nonnegative()
    relabelled = PairQuery.from_targets((2, 0), (0, 2), (8, 8), (10, 7), 3)
    assert h_poly(relabelled) == value

def test_h_poly_shared_ends():
    a, b = Point(0, 0), Point(1, 1)
    assert h_poly(PairQuery(a, a, b, b)) == lemma_qbin2(1, 1) * lemma_qbin2(1, 1)
    assert h_poly(PairQuery(a, a, b, b, r=1)) == zero()

def test_h_poly_errors():
    with pytest.raises(Condition13Violated):
        h_poly(PairQuery.from_targets((0, 0), (1, 0), (1, 1), (2, 2)))
    with pytest.raises(UnsupportedConfiguration):
        h_poly(PairQuery.from_targets((0, 1), (1, 0), (1, 1), (2, 2)))
    with pytest.raises(UnsupportedConfiguration):
        h_poly(PairQuery.from_targets((0, 0), (0, 0), (1, 1), (2, 2)))
