"""
Generalized Bell polynomials B[n;x] = sum_k S[n,k] x^k
"""
import logging
from dataclasses import dataclass
from typing import Tuple

from .tables import TableKind, get_table
from ..errors import InvalidParameterError
from ..qlaurent import LaurentPolynomial, ZERO, poly_sum, scale, to_string


logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class BellPolynomial:
    """coefficients[k] is the coefficient of x^k"""
    coefficients: Tuple[LaurentPolynomial, ...]

    def coefficient(self, k: int) -> LaurentPolynomial:
        return self.coefficients[k] if 0 <= k < len(self.coefficients) else ZERO

    def degree(self) -> int:
        """Largest k with a nonzero coefficient, -1 for the zero polynomial"""
        for k in range(len(self.coefficients) - 1, -1, -1):
            if not self.coefficients[k].is_zero():
                return k
        return -1

    def evaluate(self, x0: int) -> LaurentPolynomial:
        """Substitute the integer x0 for x (0^0 = 1)"""
        return poly_sum(scale(c, x0 ** k) for k, c in enumerate(self.coefficients))

    def __str__(self) -> str:
        terms = [f"({to_string(c)})*x^{k}" for k, c in enumerate(self.coefficients) if not c.is_zero()]
        return " + ".join(terms) if terms else "0"


def _bell(kind: TableKind, params: Tuple[int, ...], n: int) -> BellPolynomial:
    if n < 0:
        raise InvalidParameterError(f"Bell polynomial index must be >= 0, got {n}")
    return BellPolynomial(tuple(get_table(kind, params).row(n)))


def bell_poly(n: int, s: int) -> BellPolynomial:
    """B_{s,q}[n;x]"""
    return _bell(TableKind.S, (s,), n)


def bell_number(n: int, s: int) -> LaurentPolynomial:
    """B_{s,q}[n] = B_{s,q}[n;1]"""
    return bell_poly(n, s).evaluate(1)


def bell_cd(n: int, s: int, c: int, d: int) -> BellPolynomial:
    return _bell(TableKind.CD, (s, c, d), n)


def bell_type2(n: int, alpha: int, beta: int, rho: int) -> BellPolynomial:
    """Type II Bell polynomial sum_k S^{1,1,q}_{n,k}(alpha, beta, rho) x^k"""
    return _bell(TableKind.TYPE2, (alpha, beta, rho), n)
