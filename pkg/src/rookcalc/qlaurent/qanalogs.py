"""
q-brackets, q-factorials and Gaussian binomials in base q^e

All values are Laurent polynomials in q. The base exponent e may be any
integer: e = 0 gives the ordinary integer analogues, negative e gives the
analogues in q^-1, q^-2, ...
"""
import itertools
import logging
from functools import lru_cache
from typing import Iterator, Tuple

from .polynomial import LaurentPolynomial, ONE, ZERO, add, monomial, mul, shift, poly_sum
from ..constants import QANALOG_CACHE_SIZE
from ..errors import InvalidParameterError


logger = logging.getLogger(__name__)


@lru_cache(maxsize=QANALOG_CACHE_SIZE)
def bracket(t: int, e: int = 1) -> LaurentPolynomial:
    """
    The q-bracket [t] in base q^e

    For t >= 0 this is 1 + q^e + ... + q^(e(t-1)). Negative arguments follow
    [-m] = -q^(-em) [m], the extension consistent with (q^(et) - 1)/(q^e - 1).

    Args:
        t: Bracket argument, any integer
        e: Base exponent

    Returns:
        Laurent polynomial
    """
    if e == 0:
        return monomial(t, 0)
    if t >= 0:
        return LaurentPolynomial.from_dict({e * i: 1 for i in range(t)})
    return LaurentPolynomial.from_dict({e * (t + i): -1 for i in range(-t)})


def bracket_product(start: int, step: int, count: int) -> LaurentPolynomial:
    """Product of [start + step*i] for i = 0..count-1; 1 when count <= 0"""
    result = ONE
    for i in range(count):
        result = mul(result, bracket(start + step * i, 1))
        if result.is_zero():
            break
    return result


@lru_cache(maxsize=QANALOG_CACHE_SIZE)
def q_factorial(n: int, e: int = 1) -> LaurentPolynomial:
    """
    [n]! in base q^e

    Raises:
        InvalidParameterError: If n < 0
    """
    if n < 0:
        raise InvalidParameterError(f"q-factorial needs n >= 0, got {n}")
    if n == 0:
        return ONE
    return mul(q_factorial(n - 1, e), bracket(n, e))


@lru_cache(maxsize=QANALOG_CACHE_SIZE)
def _gaussian_row(n: int, e: int) -> Tuple[LaurentPolynomial, ...]:
    if n == 0:
        return (ONE,)
    prev = _gaussian_row(n - 1, e)
    row = [ONE]
    for k in range(1, n):
        # G(n,k) = G(n-1,k-1) + q^(ek) G(n-1,k)
        row.append(add(prev[k - 1], shift(prev[k], e * k)))
    row.append(ONE)
    return tuple(row)


def q_binomial(n: int, k: int, e: int = 1) -> LaurentPolynomial:
    """
    Gaussian binomial [n choose k] in base q^e, computed division-free

    Args:
        n: Top argument, n >= 0
        k: Bottom argument; 0 outside 0..n
        e: Base exponent; e = 0 gives the ordinary binomial

    Raises:
        InvalidParameterError: If n < 0
    """
    if n < 0:
        raise InvalidParameterError(f"Gaussian binomial needs n >= 0, got {n}")
    if k < 0 or k > n:
        return ZERO
    for m in range(n):
        # fill bottom-up so the cached recursion never runs deep
        _gaussian_row(m, e)
    return _gaussian_row(n, e)[k]


def _check_oracle_args(n: int, k: int):
    if n < 0 or k < 0 or k > n:
        raise InvalidParameterError(f"Oracle needs 0 <= k <= n, got n={n}, k={k}")


def q_binomial_monotone_oracle(n: int, k: int) -> LaurentPolynomial:
    """
    Sum of q^(t_1+...+t_{n-k}) over weakly increasing t_1 <= ... <= t_{n-k} in 0..k
    """
    _check_oracle_args(n, k)
    return poly_sum(
        monomial(1, sum(seq))
        for seq in itertools.combinations_with_replacement(range(k + 1), n - k)
    )


def _compositions(total: int, parts: int) -> Iterator[Tuple[int, ...]]:
    """Weak compositions of total into the given number of parts"""
    if parts == 1:
        yield (total,)
        return
    for head in range(total + 1):
        for tail in _compositions(total - head, parts - 1):
            yield (head,) + tail


def q_binomial_composition_oracle(n: int, k: int) -> LaurentPolynomial:
    """
    Sum of q^(0 t_0 + 1 t_1 + ... + k t_k) over t_0 + ... + t_k = n - k
    """
    _check_oracle_args(n, k)
    return poly_sum(
        monomial(1, sum(i * t for i, t in enumerate(comp)))
        for comp in _compositions(n - k, k + 1)
    )
