"""Exact polynomials in ``t`` and ``q`` with integer coefficients.

`QTPoly` wraps a `sympy.Poly` over ``ZZ`` in the generators ``(t, q)``; ``t`` tracks descents and
``q`` tracks the major index throughout the package.
"""

from __future__ import annotations

from functools import lru_cache
import re
from typing import (
    Any,
    Union, Optional,
    Tuple, List, Dict,
    Iterable, Iterator,
)

import sympy
from sympy import ZZ

from .errors import NonDivisible, NegativeExponent
from .models import Frozen

t, q = sympy.symbols("t q")
GENS = (t, q)

class QTPoly(Frozen):
    """Represents a polynomial in ``t`` and ``q`` with arbitrary-precision integer coefficients.

    Values are immutable. Two polynomials compare equal iff their term maps are equal.

    Hint:
        The usual operators work: ::

            >>> p = QTPoly.from_terms({(0, 0): 1, (1, 1): 1})
            >>> str(p * p)
            '1 + 2*t*q + t^2*q^2'

    Args:
        poly: A `sympy.Poly` in ``(t, q)`` or a mapping ``{(t_exp, q_exp): coeff}``.
    """
    __slots__ = ("_poly",)

    def __init__(self, poly: Union[sympy.Poly,Dict[Tuple[int,int],int],None]=None):
        if poly is None:
            poly = sympy.Poly(0, *GENS, domain=ZZ)
        elif isinstance(poly, dict):
            for (i, j) in poly:
                if i < 0 or j < 0:
                    raise NegativeExponent(f"negative exponent in term {(i, j)!r}")
            rep = {(int(i), int(j)): int(c) for (i, j), c in poly.items() if c}
            if rep:
                poly = sympy.Poly.from_dict(rep, *GENS, domain=ZZ)
            else:
                poly = sympy.Poly(0, *GENS, domain=ZZ)
        elif not isinstance(poly, sympy.Poly):
            raise TypeError(f"{self.__class__.__name__} takes a sympy.Poly or a term dict")
        object.__setattr__(self, "_poly", poly)

    @classmethod
    def from_terms(cls, terms: Dict[Tuple[int,int],int]) -> QTPoly:
        return cls(dict(terms))

    @property
    def poly(self) -> sympy.Poly:
        """The underlying `sympy.Poly`.
        """
        return self._poly

    def terms(self) -> Dict[Tuple[int,int],int]:
        """Return the term map ``{(t_exp, q_exp): coeff}``; zero coefficients never appear.
        """
        if self._poly.is_zero: return {}
        return {(int(i), int(j)): int(c) for (i, j), c in self._poly.terms()}

    def sorted_terms(self) -> List[Tuple[int,int,int]]:
        """Return ``(t_exp, q_exp, coeff)`` triples in ascending ``(t_exp, q_exp)`` order.
        """
        return sorted((i, j, c) for (i, j), c in self.terms().items())

    def coeff(self, i: int, j: int) -> int:
        """Return the coefficient of ``t^i q^j``.
        """
        return self.terms().get((i, j), 0)

    def is_zero(self) -> bool:
        return bool(self._poly.is_zero)

    def is_nonnegative(self) -> bool:
        """Whether every coefficient is nonnegative.
        """
        return all(c > 0 for c in self.terms().values())

    def degree_t(self) -> int:
        """Degree in ``t``; ``-1`` for the zero polynomial.
        """
        if self.is_zero(): return -1
        return max(i for (i, _) in self.terms())

    def specialize(self, t: Optional[int]=None, q: Optional[int]=None) -> Union[QTPoly,int]:
        """Substitute integers for ``t`` and/or ``q``.

        Returns an `int` when both are given, otherwise a `QTPoly` in the remaining variable.
        """
        terms: Dict[Tuple[int,int],int] = {}
        for (i, j), c in self.terms().items():
            value = c
            if t is not None:
                value *= t ** i
                i = 0
            if q is not None:
                value *= q ** j
                j = 0
            terms[i, j] = terms.get((i, j), 0) + value
        if t is not None and q is not None:
            return terms.get((0, 0), 0)
        return QTPoly(terms)

    # arithmetic

    def __add__(self, other):
        if isinstance(other, int): other = constant(other)
        if not isinstance(other, QTPoly): return NotImplemented
        return QTPoly(self._poly + other._poly)

    __radd__ = __add__

    def __neg__(self):
        return QTPoly(-self._poly)

    def __sub__(self, other):
        if isinstance(other, int): other = constant(other)
        if not isinstance(other, QTPoly): return NotImplemented
        return QTPoly(self._poly - other._poly)

    def __rsub__(self, other):
        if isinstance(other, int): other = constant(other)
        if not isinstance(other, QTPoly): return NotImplemented
        return QTPoly(other._poly - self._poly)

    def __mul__(self, other):
        if isinstance(other, int): other = constant(other)
        if not isinstance(other, QTPoly): return NotImplemented
        return QTPoly(self._poly * other._poly)

    __rmul__ = __mul__

    def __eq__(self, other):
        if isinstance(other, int): other = constant(other)
        if isinstance(other, QTPoly):
            return self.terms() == other.terms()
        return NotImplemented

    def __ne__(self, other):
        x = self.__eq__(other)

        if x is NotImplemented:
            return NotImplemented
        else:
            return not x

    def __hash__(self):
        return hash(tuple(self.sorted_terms()))

    # text forms

    def __repr__(self):
        return f"{self.__class__.__name__}({str(self)!r})"

    def __str__(self):
        return to_text(self)

    def json(self) -> Dict[str,Any]:
        """Return ``{"terms": [{"t": i, "q": j, "c": "<decimal>"}, ...]}`` in canonical order.
        """
        return {"terms": [{"t": i, "q": j, "c": str(c)} for i, j, c in self.sorted_terms()]}

    @staticmethod
    def from_json(poly: Dict[str,Any]) -> QTPoly:
        terms: Dict[Tuple[int,int],int] = {}
        for term in poly["terms"]:
            key = (int(term["t"]), int(term["q"]))
            terms[key] = terms.get(key, 0) + int(term["c"])
        return QTPoly(terms)

# constructors

def zero() -> QTPoly:
    return QTPoly()

def constant(c: int) -> QTPoly:
    return QTPoly({(0, 0): c})

def one() -> QTPoly:
    return constant(1)

def monomial(c: int, t_exp: int, q_exp: int) -> QTPoly:
    """Return ``c * t^t_exp * q^q_exp``.

    Raises:
        NegativeExponent: If either exponent is negative.
    """
    if t_exp < 0 or q_exp < 0:
        raise NegativeExponent(f"cannot build t^{t_exp}*q^{q_exp}")
    return QTPoly({(t_exp, q_exp): c})

def shift(p: QTPoly, t_exp: int, q_exp: int) -> QTPoly:
    """Multiply ``p`` by ``t^t_exp * q^q_exp``; exponents may be negative if ``p`` absorbs them.

    Raises:
        NegativeExponent: If a term of the product would have a negative exponent.
    """
    return QTPoly({(i + t_exp, j + q_exp): c for (i, j), c in p.terms().items()})

def total(polys: Iterable[QTPoly]) -> QTPoly:
    """Sum of polynomials; the empty sum is zero.
    """
    acc = zero()._poly
    for p in polys:
        acc = acc + p._poly
    return QTPoly(acc)

# ring operations as functions

def add(p: QTPoly, r: QTPoly) -> QTPoly:
    return p + r

def mul(p: QTPoly, r: QTPoly) -> QTPoly:
    return p * r

def exact_div_one_minus_q_pow(p: QTPoly, a: int) -> QTPoly:
    """Divide ``p`` by ``1 - q^a`` exactly.

    Args:
        p: The dividend.
        a: A positive integer.

    Raises:
        NonDivisible: If the remainder is nonzero.
    """
    if a < 1:
        raise ValueError(f"a must be positive, given {a!r}")
    divisor = sympy.Poly(1 - q**a, *GENS, domain=ZZ)
    quotient, remainder = p.poly.div(divisor)
    if not remainder.is_zero:
        raise NonDivisible(f"{p} is not divisible by 1 - q^{a}")
    # div may promote the domain to QQ
    return QTPoly({(int(i), int(j)): int(c) for (i, j), c in quotient.terms()})

@lru_cache(maxsize=None)
def _qbinom_terms(m: int, n: int) -> Tuple[Tuple[int,int],...]:
    # [m choose n] = prod_{i=1..n} (1 - q^{m-n+i}) / (1 - q^i)
    numerator = sympy.Poly(1, q, domain=ZZ)
    denominator = sympy.Poly(1, q, domain=ZZ)
    for i in range(1, n + 1):
        numerator = numerator * sympy.Poly(1 - q**(m - n + i), q, domain=ZZ)
        denominator = denominator * sympy.Poly(1 - q**i, q, domain=ZZ)
    quotient, remainder = numerator.div(denominator)
    if not remainder.is_zero:
        raise NonDivisible(f"q-binomial [{m} choose {n}] did not divide exactly")
    return tuple((int(j), int(c)) for (j,), c in quotient.terms())

def qbinom(m: int, n: int) -> QTPoly:
    """Return the Gaussian binomial coefficient ``[m choose n]_q``.

    It is the zero polynomial unless ``0 <= n <= m``.
    """
    if not 0 <= n <= m: return zero()
    n = min(n, m - n)
    return QTPoly({(0, j): c for j, c in _qbinom_terms(m, n)})

# text forms

def _term_text(i: int, j: int, c: int, *, latex: bool=False) -> str:
    factors = []
    if i: factors.append("t" if i == 1 else (f"t^{{{i}}}" if latex else f"t^{i}"))
    if j: factors.append("q" if j == 1 else (f"q^{{{j}}}" if latex else f"q^{j}"))
    sep = " " if latex else "*"
    if not factors: return str(c)
    body = sep.join(factors)
    if c == 1: return body
    if c == -1: return f"-{body}"
    return f"{c}{sep}{body}"

def to_text(p: QTPoly) -> str:
    """Canonical text form, e.g. ``"1 + t*q^2 + 2*t^2*q^3"``; the zero polynomial is ``"0"``.
    """
    terms = p.sorted_terms()
    if not terms: return "0"
    return " + ".join(_term_text(i, j, c) for i, j, c in terms)

def to_latex(p: QTPoly) -> str:
    """Expanded LaTeX form with plain monomials.
    """
    terms = p.sorted_terms()
    if not terms: return "0"
    text = " + ".join(_term_text(i, j, c, latex=True) for i, j, c in terms)
    return text.replace("+ -", "- ")

_TERM_PATTERN = re.compile(
    r"^(?P<c>-?\d+)?\*?(?:t(?:\^(?P<i>\d+))?)?\*?(?:q(?:\^(?P<j>\d+))?)?$"
)

def from_text(text: str) -> QTPoly:
    """Parse the canonical text form produced by `to_text`.
    """
    text = text.strip()
    if text == "0": return zero()
    terms: Dict[Tuple[int,int],int] = {}
    for chunk in text.split(" + "):
        chunk = chunk.strip()
        negative = chunk.startswith("-") and not chunk[1:2].isdigit()
        if negative: chunk = chunk[1:]
        match = _TERM_PATTERN.match(chunk)
        if match is None or not chunk:
            raise ValueError(f"Malformed term given: {chunk!r}")
        c = int(match.group("c")) if match.group("c") else 1
        if negative: c = -c
        i = 0
        if "t" in chunk: i = int(match.group("i") or 1)
        j = 0
        if "q" in chunk: j = int(match.group("j") or 1)
        terms[i, j] = terms.get((i, j), 0) + c
    return QTPoly(terms)
