"""
Exact Laurent polynomials in one variable q with signed 64-bit coefficients.

Values are immutable and stored sparsely as {exponent: coefficient}. Every
constructor and arithmetic result is range-checked, so an overflow surfaces as
CoefficientOverflow instead of wrapping.

Quantum numbers follow the balanced convention

    [a] = q^(a-1) + q^(a-3) + ... + q^(1-a),   [0] = 0,   [-a] = -[a]

and quantum binomials are computed by exact division of products of them.
"""

import re
from typing import Iterable, Mapping, Union

from .exceptions import CoefficientOverflow, InexactDivision, LaurentParseError

INT64_MIN = -(2**63)
INT64_MAX = 2**63 - 1


def _checked(terms: Mapping[int, int]) -> dict[int, int]:
    out = {}
    for exp, coeff in terms.items():
        if coeff == 0:
            continue
        if coeff < INT64_MIN or coeff > INT64_MAX:
            raise CoefficientOverflow(f"Coefficient {coeff} of q^{exp} exceeds 64 bits")
        out[int(exp)] = int(coeff)
    return out


class LaurentPoly:
    """
    An integer Laurent polynomial in q.

    >>> (LaurentPoly.q() + LaurentPoly.monomial(-1)) ** 2
    LaurentPoly('q^2 + 2 + q^-2')
    """

    __slots__ = ("_terms",)

    def __init__(self, terms: Union[Mapping[int, int], None] = None):
        self._terms = _checked(terms or {})

    @classmethod
    def zero(cls) -> 'LaurentPoly':
        return cls()

    @classmethod
    def one(cls) -> 'LaurentPoly':
        return cls({0: 1})

    @classmethod
    def monomial(cls, exp: int, coeff: int = 1) -> 'LaurentPoly':
        return cls({exp: coeff})

    @classmethod
    def q(cls) -> 'LaurentPoly':
        return cls({1: 1})

    @classmethod
    def coerce(cls, value: Union['LaurentPoly', int]) -> 'LaurentPoly':
        if isinstance(value, LaurentPoly):
            return value
        if isinstance(value, int):
            return cls({0: value})
        raise TypeError(f"Cannot interpret {type(value).__name__} as a Laurent polynomial")

    @property
    def terms(self) -> dict[int, int]:
        """Copy of the {exponent: coefficient} mapping."""
        return dict(self._terms)

    def items(self) -> list[tuple[int, int]]:
        """Terms sorted by descending exponent."""
        return sorted(self._terms.items(), reverse=True)

    def coefficient(self, exp: int) -> int:
        return self._terms.get(exp, 0)

    def is_zero(self) -> bool:
        return not self._terms

    def min_degree(self) -> int | None:
        """Lowest exponent, or None for the zero polynomial."""
        return min(self._terms) if self._terms else None

    def max_degree(self) -> int | None:
        """Highest exponent, or None for the zero polynomial."""
        return max(self._terms) if self._terms else None

    def is_nonnegative(self) -> bool:
        return all(c > 0 for c in self._terms.values())

    def coefficient_sum(self) -> int:
        """Value at q = 1."""
        return sum(self._terms.values())

    # arithmetic

    def __add__(self, other):
        try:
            other = LaurentPoly.coerce(other)
        except TypeError:
            return NotImplemented
        out = dict(self._terms)
        for exp, coeff in other._terms.items():
            out[exp] = out.get(exp, 0) + coeff
        return LaurentPoly(out)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly({e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        try:
            other = LaurentPoly.coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return LaurentPoly.coerce(other) - self

    def __mul__(self, other):
        try:
            other = LaurentPoly.coerce(other)
        except TypeError:
            return NotImplemented
        out: dict[int, int] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                out[e1 + e2] = out.get(e1 + e2, 0) + c1 * c2
        return LaurentPoly(out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            if len(self._terms) == 1:
                (exp, coeff), = self._terms.items()
                if coeff in (1, -1):
                    return LaurentPoly({exp * k: coeff ** (-k)})
            raise ValueError("Only monomials with unit coefficient can be inverted")
        result = LaurentPoly.one()
        for _ in range(k):
            result = result * self
        return result

    def shift(self, k: int) -> 'LaurentPoly':
        """Multiply by q^k."""
        if k == 0:
            return self
        return LaurentPoly({e + k: c for e, c in self._terms.items()})

    def scale(self, sign: int, shift: int) -> 'LaurentPoly':
        """Return sign * q^shift * self."""
        if sign not in (1, -1):
            raise ValueError(f"sign must be +1 or -1, got {sign}")
        return LaurentPoly({e + shift: sign * c for e, c in self._terms.items()})

    def bar(self) -> 'LaurentPoly':
        """Substitute q -> q^-1."""
        return LaurentPoly({-e: c for e, c in self._terms.items()})

    def at_minus_q(self) -> 'LaurentPoly':
        """Substitute q -> -q."""
        return LaurentPoly({e: (-c if e % 2 else c) for e, c in self._terms.items()})

    def exact_divide(self, other: 'LaurentPoly') -> 'LaurentPoly':
        """
        Divide by a nonzero polynomial, raising InexactDivision on a remainder.
        """
        other = LaurentPoly.coerce(other)
        if other.is_zero():
            raise ZeroDivisionError("Division by the zero polynomial")
        if self.is_zero():
            return LaurentPoly()
        lo_n, hi_n = self.min_degree(), self.max_degree()
        lo_d, hi_d = other.min_degree(), other.max_degree()
        num = [self.coefficient(e) for e in range(lo_n, hi_n + 1)]
        den = [other.coefficient(e) for e in range(lo_d, hi_d + 1)]
        if len(num) < len(den):
            raise InexactDivision(f"{self} is not divisible by {other}")
        quot = [0] * (len(num) - len(den) + 1)
        for i in reversed(range(len(quot))):
            top = num[i + len(den) - 1]
            if top % den[-1]:
                raise InexactDivision(f"{self} is not divisible by {other}")
            quot[i] = top // den[-1]
            for j, dc in enumerate(den):
                num[i + j] -= quot[i] * dc
        if any(num):
            raise InexactDivision(f"{self} is not divisible by {other}")
        return LaurentPoly({lo_n - lo_d + i: c for i, c in enumerate(quot)})

    # protocol

    def __eq__(self, other):
        if isinstance(other, int):
            other = LaurentPoly({0: other})
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    def __bool__(self):
        return bool(self._terms)

    def __reduce__(self):
        return (LaurentPoly, (self._terms,))

    def __str__(self):
        return render(self)

    def __repr__(self):
        return f"LaurentPoly('{render(self)}')"


def add(p: LaurentPoly, r: LaurentPoly) -> LaurentPoly:
    return p + r


def mul(p: LaurentPoly, r: LaurentPoly) -> LaurentPoly:
    return p * r


def scale(p: LaurentPoly, sign: int, shift: int) -> LaurentPoly:
    return p.scale(sign, shift)


def bar(p: LaurentPoly) -> LaurentPoly:
    return p.bar()


def poly_sum(polys: Iterable[LaurentPoly]) -> LaurentPoly:
    """Sum an iterable of polynomials, accumulating before the range check."""
    out: dict[int, int] = {}
    for p in polys:
        for e, c in p._terms.items():
            out[e] = out.get(e, 0) + c
    return LaurentPoly(out)


def qint(a: int) -> LaurentPoly:
    """Quantum integer [a]."""
    if a < 0:
        return -qint(-a)
    return LaurentPoly({a - 1 - 2 * k: 1 for k in range(a)})


def qfact(a: int) -> LaurentPoly:
    """Quantum factorial [1][2]...[a]."""
    if a < 0:
        raise ValueError(f"qfact needs a nonnegative argument, got {a}")
    result = LaurentPoly.one()
    for k in range(1, a + 1):
        result = result * qint(k)
    return result


def qbin(a: int, b: int) -> LaurentPoly:
    """
    Quantum binomial [a choose b] = [a][a-1]...[a-b+1] / [b]!.

    Vanishes for b < 0 and for b > a >= 0.
    """
    if b < 0:
        return LaurentPoly()
    numerator = LaurentPoly.one()
    for k in range(b):
        numerator = numerator * qint(a - k)
    if numerator.is_zero():
        return numerator
    return numerator.exact_divide(qfact(b))


def _render_term(coeff: int, exp: int) -> str:
    if exp == 0:
        return str(coeff)
    var = "q" if exp == 1 else f"q^{exp}"
    return var if coeff == 1 else f"{coeff}*{var}"


def render(p: LaurentPoly) -> str:
    """
    Canonical text form: descending exponents joined by ' + ' / ' - '.

    >>> render(qint(3))
    'q^2 + 1 + q^-2'
    """
    items = p.items()
    if not items:
        return "0"
    parts = []
    for idx, (exp, coeff) in enumerate(items):
        term = _render_term(abs(coeff), exp)
        if idx == 0:
            parts.append(term if coeff > 0 else f"-{term}")
        else:
            parts.append(f"{'+' if coeff > 0 else '-'} {term}")
    return " ".join(parts)


_TERM = re.compile(
    r"(?P<coeff>\d+)?\s*(?P<star>\*)?\s*(?P<var>q(?:\s*\^\s*(?:\{\s*(?P<bexp>[+-]?\d+)\s*\}|(?P<exp>[+-]?\d+)))?)?"
)


def parse(text: str) -> LaurentPoly:
    """
    Read the text form produced by render (and lenient variants such as 'q^{-2}' or '3q').

    Raises:
        LaurentParseError: with the character position of the first offending token
    """
    pos = 0
    length = len(text)
    terms: dict[int, int] = {}
    first = True

    def skip_ws(i):
        while i < length and text[i].isspace():
            i += 1
        return i

    pos = skip_ws(pos)
    if pos == length:
        raise LaurentParseError("empty input", pos)
    while pos < length:
        sign = 1
        if text[pos] in "+-":
            sign = -1 if text[pos] == "-" else 1
            pos = skip_ws(pos + 1)
        elif not first:
            raise LaurentParseError(f"expected '+' or '-', found {text[pos]!r}", pos)
        start = pos
        match = _TERM.match(text, pos)
        if match is None or match.end() == start or not (match.group("coeff") or match.group("var")):
            raise LaurentParseError("expected a term", start)
        if match.group("star") and not match.group("var"):
            raise LaurentParseError("expected 'q' after '*'", match.end())
        coeff = int(match.group("coeff")) if match.group("coeff") else 1
        if match.group("var"):
            raw = match.group("bexp") or match.group("exp")
            exp = int(raw) if raw is not None else 1
        else:
            exp = 0
        terms[exp] = terms.get(exp, 0) + sign * coeff
        pos = skip_ws(match.end())
        first = False
    return LaurentPoly(terms)
