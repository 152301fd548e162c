"""
Convolutions for S^{c,d}_{s,q} and the Type II numbers

After m - j rooks in the first m columns of J^{c,d}_{n+m}, the remaining
columns look like a J'-board with bottom pre-weight
A_j = d + mc + (m-j)(s-1) and other cells c. Under the Type II reading
(s, c, d) = (1-beta, beta-alpha, -rho) this is A_j = beta j - alpha m - rho.
"""
import logging

from .common import params_of, q_power, require, shifted_product, term
from ..qlaurent import LaurentPolynomial, ZERO, q_binomial, scale
from ..report import IdentityReport, PRINTED_VARIANT, Variant, evaluate_variants, single_report
from ..stirling import bell_type2, stirling_cd, type2


logger = logging.getLogger(__name__)


def _check_nmk(n: int, m: int, k: int):
    require(n >= 0 and m >= 0, f"Need n, m >= 0, got n={n}, m={m}")
    require(0 <= k <= n + m, f"Need 0 <= k <= n+m, got k={k}")


def _cd_shift(j: int, m: int, s: int, c: int, d: int) -> int:
    return d + m * c + (m - j) * (s - 1)


def _type2_shift(j: int, m: int, alpha: int, beta: int, rho: int) -> int:
    return beta * j - alpha * m - rho


def check_t1(n: int, m: int, k: int, s: int, c: int, d: int) -> IdentityReport:
    """S^{c,d}_{s,q}[n+m,k] split after column m, binomial base q^(c+s-1)"""
    _check_nmk(n, m, k)
    rhs = ZERO
    for r in range(n + 1):
        for j in range(m + 1):
            a = _cd_shift(j, m, s, c, d)
            rhs += term(
                stirling_cd(m, j, s, c, d),
                q_power(r * a),
                q_binomial(n, r, c + s - 1),
                stirling_cd(r, k - j, s, c, 0),
                shifted_product(a, c + s - 1, n - r),
            )
    return single_report(
        "t1", params_of(n=n, m=m, k=k, s=s, c=c, d=d),
        stirling_cd(n + m, k, s, c, d), rhs,
    )


def _t1_type2_rhs(n: int, m: int, k: int, alpha: int, beta: int, rho: int) -> LaurentPolynomial:
    rhs = ZERO
    for r in range(n + 1):
        for j in range(m + 1):
            a = _type2_shift(j, m, alpha, beta, rho)
            rhs += term(
                type2(m, j, alpha, beta, rho),
                q_power(r * a),
                q_binomial(n, r, -alpha),
                type2(r, k - j, alpha, beta, 0),
                shifted_product(a, -alpha, n - r),
            )
    return rhs


def check_t1_type2(n: int, m: int, k: int, alpha: int, beta: int, rho: int) -> IdentityReport:
    """
    Type II form of check_t1

    The display writes the left side as S^{1,1,q}_{n,k}; the convolution needs
    index n+m, kept as the repair variant.
    """
    _check_nmk(n, m, k)
    rhs = _t1_type2_rhs(n, m, k, alpha, beta, rho)
    return evaluate_variants("t1_type2", params_of(n=n, m=m, k=k, alpha=alpha, beta=beta, rho=rho), [
        Variant(PRINTED_VARIANT, type2(n, k, alpha, beta, rho), rhs),
        Variant("lhs_index_n_plus_m", type2(n + m, k, alpha, beta, rho), rhs,
                note="left side S^{1,1,q}_{n+m,k}"),
    ])


def check_mezz(n: int, m: int, alpha: int, beta: int, rho: int, x0: int) -> IdentityReport:
    """
    Type II Bell polynomial B_{n+m;x} at x = x0 split after column m

    The display drops the x^j carried by the first m columns; restoring it is
    the repair variant.
    """
    require(n >= 0 and m >= 0, f"Need n, m >= 0, got n={n}, m={m}")
    lhs = bell_type2(n + m, alpha, beta, rho).evaluate(x0)

    def rhs(with_x_power: bool) -> LaurentPolynomial:
        total = ZERO
        for r in range(n + 1):
            tail = bell_type2(r, alpha, beta, 0).evaluate(x0)
            for j in range(m + 1):
                a = _type2_shift(j, m, alpha, beta, rho)
                lead = type2(m, j, alpha, beta, rho)
                if with_x_power:
                    lead = scale(lead, x0 ** j)
                total += term(
                    lead,
                    q_power(r * a),
                    q_binomial(n, r, -alpha),
                    tail,
                    shifted_product(a, -alpha, n - r),
                )
        return total

    return evaluate_variants("mezz", params_of(n=n, m=m, alpha=alpha, beta=beta, rho=rho, x0=x0), [
        Variant(PRINTED_VARIANT, lhs, rhs(False)),
        Variant("restore_x_power", lhs, rhs(True), note="factor x^j restored on S^{1,1,q}_{m,j}"),
    ])


def check_thm46(n: int, m: int, k: int, s: int, c: int, d: int) -> IdentityReport:
    """S^{c,d}_{s,q}[n+m,k] through the [r k-j]_{q^(s-1)} expansion"""
    _check_nmk(n, m, k)
    rhs = ZERO
    for r in range(n + 1):
        for j in range(m + 1):
            a = _cd_shift(j, m, s, c, d)
            rhs += term(
                stirling_cd(m, j, s, c, d),
                q_power(a * (k - j)),
                q_binomial(r, k - j, s - 1),
                stirling_cd(n, r, s, c, 0),
                shifted_product(a, s - 1, r - k + j),
            )
    return single_report(
        "thm46", params_of(n=n, m=m, k=k, s=s, c=c, d=d),
        stirling_cd(n + m, k, s, c, d), rhs,
    )


def check_thm46_type2(n: int, m: int, k: int, alpha: int, beta: int, rho: int) -> IdentityReport:
    """
    Type II form of check_thm46

    The display's bracket [rho + alpha m - beta(j+i)] has the sign of its
    constant part flipped; [beta j - rho - alpha m - beta i] is the repair.
    """
    _check_nmk(n, m, k)

    def rhs(printed: bool) -> LaurentPolynomial:
        total = ZERO
        for r in range(n + 1):
            for j in range(m + 1):
                a = _type2_shift(j, m, alpha, beta, rho)
                if printed:
                    brackets = shifted_product(rho + alpha * m - beta * j, -beta, r - k + j)
                else:
                    brackets = shifted_product(a, -beta, r - k + j)
                total += term(
                    type2(m, j, alpha, beta, rho),
                    q_power((rho + alpha * m - beta * j) * (j - k)),
                    q_binomial(r, k - j, -beta),
                    type2(n, r, alpha, beta, 0),
                    brackets,
                )
        return total

    lhs = type2(n + m, k, alpha, beta, rho)
    return evaluate_variants("thm46_type2", params_of(n=n, m=m, k=k, alpha=alpha, beta=beta, rho=rho), [
        Variant(PRINTED_VARIANT, lhs, rhs(True)),
        Variant("bracket_sign", lhs, rhs(False), note="bracket [beta j - rho - alpha m - beta i]"),
    ])
