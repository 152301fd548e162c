"""
Exact Laurent polynomials in one variable q

A polynomial is stored as a sorted tuple of (exponent, coefficient) pairs with
no zero coefficient, so equality of values is equality of term tuples.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Iterable, Mapping, Tuple, Union

from ..errors import PolynomialParseError, ZeroEvaluationError, InvalidParameterError


logger = logging.getLogger(__name__)

BigRational = Fraction
Scalar = Union[int, "LaurentPolynomial"]


@dataclass(frozen=True)
class LaurentPolynomial:
    """Immutable Laurent polynomial with integer coefficients"""
    terms: Tuple[Tuple[int, int], ...] = ()

    @classmethod
    def from_dict(cls, mapping: Mapping[int, int]) -> LaurentPolynomial:
        """
        Build a polynomial from an exponent -> coefficient mapping

        Zero coefficients are dropped.
        """
        return cls(tuple(sorted((int(e), int(c)) for e, c in mapping.items() if c != 0)))

    @classmethod
    def constant(cls, value: int) -> LaurentPolynomial:
        return monomial(value, 0)

    def as_dict(self) -> Dict[int, int]:
        return dict(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return not self.terms or (len(self.terms) == 1 and self.terms[0][0] == 0)

    def coefficient(self, exponent: int) -> int:
        for e, c in self.terms:
            if e == exponent:
                return c
        return 0

    def degree(self) -> int:
        """Highest exponent; raises for the zero polynomial"""
        if not self.terms:
            raise InvalidParameterError("Zero polynomial has no degree")
        return self.terms[-1][0]

    def valuation(self) -> int:
        """Lowest exponent; raises for the zero polynomial"""
        if not self.terms:
            raise InvalidParameterError("Zero polynomial has no valuation")
        return self.terms[0][0]

    def coefficient_sum(self) -> int:
        return sum(c for _, c in self.terms)

    def __add__(self, other: Scalar) -> LaurentPolynomial:
        return add(self, _coerce(other))

    __radd__ = __add__

    def __neg__(self) -> LaurentPolynomial:
        return LaurentPolynomial(tuple((e, -c) for e, c in self.terms))

    def __sub__(self, other: Scalar) -> LaurentPolynomial:
        return add(self, -_coerce(other))

    def __rsub__(self, other: Scalar) -> LaurentPolynomial:
        return add(_coerce(other), -self)

    def __mul__(self, other: Scalar) -> LaurentPolynomial:
        if isinstance(other, int):
            return scale(self, other)
        return mul(self, other)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> LaurentPolynomial:
        if exponent < 0:
            # only monomials q^e have Laurent inverses
            if len(self.terms) == 1 and self.terms[0][1] in (1, -1):
                e, c = self.terms[0]
                return monomial(c ** -exponent, e * exponent)
            raise InvalidParameterError(f"Cannot invert non-monomial {self}")
        result = ONE
        base = self
        while exponent:
            if exponent & 1:
                result = mul(result, base)
            base = mul(base, base)
            exponent >>= 1
        return result

    def __str__(self) -> str:
        return to_string(self)

    def __repr__(self) -> str:
        return f"LaurentPolynomial('{to_string(self)}')"


def _coerce(value: Scalar) -> LaurentPolynomial:
    if isinstance(value, LaurentPolynomial):
        return value
    if isinstance(value, int):
        return monomial(value, 0)
    raise TypeError(f"Cannot combine LaurentPolynomial with {type(value).__name__}")


def monomial(c: int, e: int) -> LaurentPolynomial:
    """The single term c*q^e; the zero polynomial when c = 0"""
    if c == 0:
        return ZERO
    return LaurentPolynomial(((e, c),))


def add(a: LaurentPolynomial, b: LaurentPolynomial) -> LaurentPolynomial:
    """Termwise sum"""
    if not a.terms:
        return b
    if not b.terms:
        return a
    acc = dict(a.terms)
    for e, c in b.terms:
        acc[e] = acc.get(e, 0) + c
    return LaurentPolynomial.from_dict(acc)


def mul(a: LaurentPolynomial, b: LaurentPolynomial) -> LaurentPolynomial:
    """Convolution product"""
    if not a.terms or not b.terms:
        return ZERO
    acc: Dict[int, int] = {}
    for ea, ca in a.terms:
        for eb, cb in b.terms:
            acc[ea + eb] = acc.get(ea + eb, 0) + ca * cb
    return LaurentPolynomial.from_dict(acc)


def scale(p: LaurentPolynomial, factor: int) -> LaurentPolynomial:
    if factor == 0:
        return ZERO
    return LaurentPolynomial(tuple((e, c * factor) for e, c in p.terms))


def shift(p: LaurentPolynomial, exponent: int) -> LaurentPolynomial:
    """Multiply by q^exponent"""
    return LaurentPolynomial(tuple((e + exponent, c) for e, c in p.terms))


def poly_sum(values: Iterable[LaurentPolynomial]) -> LaurentPolynomial:
    acc: Dict[int, int] = {}
    for p in values:
        for e, c in p.terms:
            acc[e] = acc.get(e, 0) + c
    return LaurentPolynomial.from_dict(acc)


def poly_product(values: Iterable[LaurentPolynomial]) -> LaurentPolynomial:
    result = ONE
    for p in values:
        result = mul(result, p)
        if not result.terms:
            break
    return result


def substitute_power(p: LaurentPolynomial, e: int) -> LaurentPolynomial:
    """Substitute q -> q^e"""
    acc: Dict[int, int] = {}
    for exp, c in p.terms:
        acc[exp * e] = acc.get(exp * e, 0) + c
    return LaurentPolynomial.from_dict(acc)


def eval_at(p: LaurentPolynomial, x: Union[int, Fraction]) -> Fraction:
    """
    Exact value of p at q = x

    Args:
        p: Polynomial to evaluate
        x: Rational evaluation point

    Returns:
        Fraction value

    Raises:
        ZeroEvaluationError: If x = 0 and p has a negative exponent
    """
    x = Fraction(x)
    if x == 0:
        if p.terms and p.terms[0][0] < 0:
            raise ZeroEvaluationError(f"Cannot evaluate {p} at q = 0")
        return Fraction(p.coefficient(0))
    return sum((c * x ** e for e, c in p.terms), Fraction(0))


def to_string(p: LaurentPolynomial, var: str = "q") -> str:
    """
    Canonical text, terms in increasing exponent order

    Example:
        2*q^-1 + 3
    """
    if not p.terms:
        return "0"

    parts = []
    for idx, (e, c) in enumerate(p.terms):
        magnitude = abs(c)
        if e == 0:
            body = str(magnitude)
        else:
            power = var if e == 1 else f"{var}^{e}"
            body = power if magnitude == 1 else f"{magnitude}*{power}"

        if idx == 0:
            parts.append(f"-{body}" if c < 0 else body)
        else:
            parts.append(f" - {body}" if c < 0 else f" + {body}")
    return "".join(parts)


class _Scanner:
    """Cursor over canonical polynomial text"""

    def __init__(self, text: str, var: str):
        self.text = text
        self.var = var
        self.pos = 0

    def skip_space(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip_space()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def take(self, char: str) -> bool:
        if self.peek() == char:
            self.pos += 1
            return True
        return False

    def digits(self) -> str:
        self.skip_space()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        return self.text[start:self.pos]

    def signed_int(self) -> int:
        sign = -1 if self.take("-") else 1
        if sign == 1:
            self.take("+")
        digits = self.digits()
        if not digits:
            raise PolynomialParseError("Expected integer exponent", self.pos)
        return sign * int(digits)


def parse(text: str, var: str = "q") -> LaurentPolynomial:
    """
    Parse canonical text into a polynomial

    Grammar:
        poly := term (("+"|"-") term)*
        term := coeff? ("*"? "q" ("^" int)?)?

    Raises:
        PolynomialParseError: On malformed input, with the failing position
    """
    scanner = _Scanner(text, var)
    acc: Dict[int, int] = {}

    sign = 1
    if scanner.take("-"):
        sign = -1
    else:
        scanner.take("+")

    while True:
        scanner.skip_space()
        start = scanner.pos
        digits = scanner.digits()
        coefficient = int(digits) if digits else 1
        starred = scanner.take("*")
        if scanner.take(var):
            exponent = scanner.signed_int() if scanner.take("^") else 1
        elif starred or not digits:
            raise PolynomialParseError(f"Expected '{var}'", scanner.pos if starred else start)
        else:
            exponent = 0
        acc[exponent] = acc.get(exponent, 0) + sign * coefficient

        nxt = scanner.peek()
        if nxt == "":
            break
        if nxt == "+":
            sign = 1
        elif nxt == "-":
            sign = -1
        else:
            raise PolynomialParseError(f"Unexpected character {nxt!r}", scanner.pos)
        scanner.pos += 1

    return LaurentPolynomial.from_dict(acc)


def to_json(p: LaurentPolynomial) -> Dict[str, str]:
    """JSON form: decimal exponent strings to decimal coefficient strings"""
    return {str(e): str(c) for e, c in p.terms}


def from_json(data: Mapping[str, str]) -> LaurentPolynomial:
    try:
        return LaurentPolynomial.from_dict({int(e): int(c) for e, c in data.items()})
    except (TypeError, ValueError) as e:
        raise InvalidParameterError(f"Invalid polynomial JSON: {data}") from e


ZERO = LaurentPolynomial()
ONE = LaurentPolynomial(((0, 1),))
Q = LaurentPolynomial(((1, 1),))
