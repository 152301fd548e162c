"""
Shared helpers for identity checkers
"""
from typing import Any, Iterator, Sequence, Tuple

from ..errors import InvalidParameterError
from ..qlaurent import LaurentPolynomial, bracket_product, eval_at, monomial, poly_product


def require(condition: bool, message: str):
    """
    Raises:
        InvalidParameterError: If the condition does not hold
    """
    if not condition:
        raise InvalidParameterError(message)


def q_power(e: int) -> LaurentPolynomial:
    return monomial(1, e)


def constant(value: int) -> LaurentPolynomial:
    return monomial(value, 0)


def term(*factors: LaurentPolynomial) -> LaurentPolynomial:
    return poly_product(factors)


def rising(a: int, b: int) -> int:
    """a(a+1)...(a+b-1); 1 when b = 0"""
    result = 1
    for i in range(b):
        result *= a + i
    return result


def shifted_product(start: int, step: int, count: int) -> LaurentPolynomial:
    """[start][start+step]...[start+(count-1)step]"""
    return bracket_product(start, step, count)


def bounded_compositions(total: int, bounds: Sequence[Tuple[int, int]]) -> Iterator[Tuple[int, ...]]:
    """Tuples (x_1..x_n) with lo_i <= x_i <= hi_i summing to total"""
    if not bounds:
        if total == 0:
            yield ()
        return
    lo, hi = bounds[0]
    rest_lo = sum(b[0] for b in bounds[1:])
    rest_hi = sum(b[1] for b in bounds[1:])
    for head in range(max(lo, total - rest_hi), min(hi, total - rest_lo) + 1):
        for tail in bounded_compositions(total - head, bounds[1:]):
            yield (head,) + tail


def params_of(**kwargs: Any) -> Tuple[Tuple[str, Any], ...]:
    """Report parameters in keyword order"""
    return tuple((key, tuple(value) if isinstance(value, list) else value) for key, value in kwargs.items())


def at_one(p: LaurentPolynomial) -> int:
    """Integer value at q = 1"""
    return int(eval_at(p, 1))
