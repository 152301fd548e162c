"""
Hsu-Shiue defining relation at q = 1

    (x|alpha)_n = sum_k S^1_{n,k}(alpha, beta, rho) (x - rho|beta)_k

with (z|g)_n = z(z - g)...(z - (n-1)g). Both sides are polynomials in x,
held as LaurentPolynomial in the variable x. The Type II table at q = 1
supplies the coefficients; the relation is tried with rho as written and
with rho negated.
"""
import logging

from .tables import type2
from ..constants import CROSS_CHECK_N_MAX
from ..errors import InvalidParameterError
from ..qlaurent import LaurentPolynomial, ONE, add, eval_at, monomial, mul, poly_sum, scale
from ..report import IdentityReport, PRINTED_VARIANT, Variant, evaluate_variants


logger = logging.getLogger(__name__)

NEGATED_VARIANT = "negated"

X = monomial(1, 1)


def generalized_falling(shift: int, gamma: int, n: int) -> LaurentPolynomial:
    """(x + shift | gamma)_n as a polynomial in x"""
    result = ONE
    for i in range(n):
        result = mul(result, add(X, monomial(shift - i * gamma, 0)))
    return result


def _type2_at_one(n: int, k: int, alpha: int, beta: int, rho: int) -> int:
    value = eval_at(type2(n, k, alpha, beta, rho), 1)
    return int(value)


def check_hsu_shiue(n: int, alpha: int, beta: int, rho: int) -> IdentityReport:
    """
    Check the Hsu-Shiue relation for the Type II numbers at q = 1

    Returns:
        Report whose variant names the rho convention that holds:
        "printed" for (x - rho|beta)_k, "negated" for (x + rho|beta)_k
    """
    if n < 0 or n > CROSS_CHECK_N_MAX:
        raise InvalidParameterError(f"Hsu-Shiue check needs 0 <= n <= {CROSS_CHECK_N_MAX}, got {n}")

    lhs = generalized_falling(0, alpha, n)
    coefficients = [_type2_at_one(n, k, alpha, beta, rho) for k in range(n + 1)]

    def rhs(sign: int) -> LaurentPolynomial:
        return poly_sum(
            scale(generalized_falling(sign * rho, beta, k), coefficients[k]) for k in range(n + 1)
        )

    params = (("n", n), ("alpha", alpha), ("beta", beta), ("rho", rho))
    return evaluate_variants("hsu_shiue", params, [
        Variant(PRINTED_VARIANT, lhs, rhs(-1)),
        Variant(NEGATED_VARIANT, lhs, rhs(1), note="rho enters the falling factorial as x + rho"),
    ])
