import os,sys, pathlib
currentdir = pathlib.Path(__file__).parent
parentdir = os.path.dirname(currentdir)
sys.path.insert(0,parentdir)

import pickle
from math import comb

import pytest
from hypothesis import given, settings, strategies as st

from latticecross import (
    QTPoly,
    zero, one, constant, monomial, shift, total,
    qbinom, exact_div_one_minus_q_pow,
    to_text, to_latex, from_text,
    NonDivisible, NegativeExponent,
)

def test_qbinom_small():
    assert qbinom(4, 2).terms() == {(0, 0): 1, (0, 1): 1, (0, 2): 2, (0, 3): 1, (0, 4): 1}
    assert qbinom(5, 0) == 1
    assert qbinom(5, 5) == 1

def test_qbinom_vanishes_outside_range():
    assert qbinom(3, 5).is_zero()
    assert qbinom(3, -1).is_zero()
    assert qbinom(-2, 0).is_zero()

@given(st.integers(0, 10), st.integers(0, 10))
def test_qbinom_at_q_one_is_binomial(m, n):
    assert qbinom(m, n).specialize(t=1, q=1) == (comb(m, n) if n <= m else 0)

@given(st.integers(0, 9), st.integers(0, 9))
def test_qbinom_symmetry(m, n):
    assert qbinom(m, n) == qbinom(m, m - n)

def test_arithmetic():
    p = one() + monomial(1, 1, 1)
    assert str(p * p) == "1 + 2*t*q + t^2*q^2"
    assert p - p == zero()
    assert -p + p == 0
    assert total([p, p, p]) == constant(3) * p
    assert total([]) == zero()

def test_qbinom_pascal_recurrence():
    for m in range(1, 13):
        for n in range(m + 1):
            assert qbinom(m, n) == qbinom(m - 1, n - 1) + shift(qbinom(m - 1, n), 0, n)
            assert qbinom(m, n) == shift(qbinom(m - 1, n - 1), 0, m - n) + qbinom(m - 1, n)

polys = st.dictionaries(
    st.tuples(st.integers(0, 3), st.integers(0, 6)),
    st.integers(-20, 20),
    max_size=5,
).map(QTPoly.from_terms)

@given(polys, polys, polys)
def test_ring_laws(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a + zero() == a
    assert a * one() == a
    assert a * zero() == zero()
    assert a - a == zero()

def test_polynomials_are_immutable():
    p = one() + monomial(1, 1, 1)
    with pytest.raises(AttributeError):
        p._poly = zero().poly
    assert pickle.loads(pickle.dumps(p)) == p

def test_monomial_rejects_negative_exponent():
    with pytest.raises(NegativeExponent):
        monomial(1, 0, -1)

def test_shift():
    assert shift(monomial(2, 1, 3), 0, -2) == monomial(2, 1, 1)
    assert shift(zero(), 0, -5) == zero()
    with pytest.raises(NegativeExponent):
        shift(monomial(1, 0, 1), 0, -2)

def test_exact_division():
    p = QTPoly.from_terms({(0, 0): 1, (1, 2): 3, (2, 5): -1})
    factor = one() - monomial(1, 0, 3)
    assert exact_div_one_minus_q_pow(p * factor, 3) == p

def test_exact_division_failures():
    with pytest.raises(NonDivisible):
        exact_div_one_minus_q_pow(one() + monomial(1, 0, 1), 2)
    with pytest.raises(ValueError):
        exact_div_one_minus_q_pow(one(), 0)

def test_specialize():
    p = QTPoly.from_terms({(0, 0): 1, (1, 1): 2, (2, 1): 1})
    assert p.specialize(t=1, q=1) == 4
    assert p.specialize(t=1) == QTPoly.from_terms({(0, 0): 1, (0, 1): 3})
    assert p.specialize(q=2) == QTPoly.from_terms({(0, 0): 1, (1, 0): 4, (2, 0): 2})

def test_queries():
    p = QTPoly.from_terms({(0, 0): 1, (1, 1): 2})
    assert p.coeff(1, 1) == 2
    assert p.coeff(3, 3) == 0
    assert p.degree_t() == 1
    assert zero().degree_t() == -1
    assert p.is_nonnegative()
    assert not (p - monomial(5, 2, 0)).is_nonnegative()

def test_text_forms():
    p = one() + monomial(1, 1, 2) + monomial(2, 2, 3)
    assert to_text(p) == "1 + t*q^2 + 2*t^2*q^3"
    assert to_text(zero()) == "0"
    assert to_latex(one() - monomial(1, 0, 1)) == "1 - q"
    assert to_latex(monomial(3, 2, 10)) == "3 t^{2} q^{10}"

def test_from_text():
    for text in ("0", "1 + t*q", "1 + -q", "-2*t^3 + 5*t*q^12"):
        assert to_text(from_text(text)) == to_text(from_text(to_text(from_text(text))))
    assert from_text("1 + t*q^2 + 2*t^2*q^3") == one() + monomial(1, 1, 2) + monomial(2, 2, 3)
    assert from_text("1 + -q") == one() - monomial(1, 0, 1)
    with pytest.raises(ValueError):
        from_text("1 + x")

def test_json():
    p = QTPoly.from_terms({(0, 0): 1, (3, 4): 12345678901234567890})
    data = p.json()
    assert data == {"terms": [{"t": 0, "q": 0, "c": "1"}, {"t": 3, "q": 4, "c": "12345678901234567890"}]}
    assert QTPoly.from_json(data) == p
    assert hash(QTPoly.from_json(data)) == hash(p)
