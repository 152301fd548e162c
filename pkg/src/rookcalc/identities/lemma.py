"""
Two expansions of the rook sum on J'_{n,alpha}

    oh:   sum_r q^(alpha r) [n r]_{q^s} S[r,k] prod_{i<n-r} [alpha + s i]
    oh1:  sum_r q^(alpha k) S[n,r] [r k]_{q^(s-1)} prod_{i<r-k} [alpha + i(s-1)]

Both equal the total weight of (n-k)-rook placements on J'_{n,alpha} under
any rule, while their r-th terms differ in general.
"""
import logging
from typing import List, Optional

from .common import params_of, q_power, require, shifted_product, term
from ..qlaurent import LaurentPolynomial, poly_sum, q_binomial
from ..report import IdentityReport, PRINTED_VARIANT, Variant, evaluate_variants, single_report
from ..rookboard import Rule, WeightParams, board_jprime, rook_sum
from ..stirling import stirling_s


logger = logging.getLogger(__name__)


def _check_args(n: int, k: int):
    require(0 <= k <= n, f"Need 0 <= k <= n, got n={n}, k={k}")


def oh_lhs(n: int, k: int, alpha: int, s: int, rule: Rule) -> LaurentPolynomial:
    return rook_sum(board_jprime(n, alpha), n - k, rule, WeightParams(s))


def oh_term(n: int, k: int, alpha: int, s: int, r: int) -> LaurentPolynomial:
    return term(
        q_power(alpha * r),
        q_binomial(n, r, s),
        stirling_s(r, k, s),
        shifted_product(alpha, s, n - r),
    )


def oh1_term(n: int, k: int, alpha: int, s: int, r: int, prefactor_exponent: Optional[int] = None) -> LaurentPolynomial:
    exponent = alpha * k if prefactor_exponent is None else prefactor_exponent
    return term(
        q_power(exponent),
        stirling_s(n, r, s),
        q_binomial(r, k, s - 1),
        shifted_product(alpha, s - 1, r - k),
    )


def check_oh(n: int, k: int, alpha: int, s: int, rule: Rule = Rule.BOTTOM_SHIFT) -> IdentityReport:
    """
    Rook sum on J'_{n,alpha} against the q^(alpha r) expansion

    Args:
        n: Board size
        k: n - k rooks are placed
        alpha: Bottom-cell pre-weight
        s: Weight parameter
        rule: Increment rule for the rook sum

    Returns:
        IdentityReport
    """
    _check_args(n, k)
    lhs = oh_lhs(n, k, alpha, s, rule)
    rhs = poly_sum(oh_term(n, k, alpha, s, r) for r in range(n + 1))
    return single_report("oh", params_of(n=n, k=k, alpha=alpha, s=s, rule=rule.value), lhs, rhs)


def check_oh1(n: int, k: int, alpha: int, s: int, rule: Rule = Rule.BOTTOM_SHIFT) -> IdentityReport:
    """
    Rook sum on J'_{n,alpha} against the q^(alpha k) expansion

    The derivation writes the prefactor as a bare q^alpha; that reading is
    kept as a second variant so sweeps show where it disagrees.
    """
    _check_args(n, k)
    lhs = oh_lhs(n, k, alpha, s, rule)
    printed = poly_sum(oh1_term(n, k, alpha, s, r) for r in range(n + 1))
    bare = poly_sum(oh1_term(n, k, alpha, s, r, prefactor_exponent=alpha) for r in range(n + 1))
    return evaluate_variants("oh1", params_of(n=n, k=k, alpha=alpha, s=s, rule=rule.value), [
        Variant(PRINTED_VARIANT, lhs, printed),
        Variant("proof_display_exponent", lhs, bare, note="prefactor q^alpha in place of q^(alpha k)"),
    ])


def oh_term_mismatches(n: int, k: int, alpha: int, s: int) -> List[int]:
    """Values of r where the r-th terms of the two expansions differ"""
    _check_args(n, k)
    return [
        r for r in range(n + 1)
        if oh_term(n, k, alpha, s, r) != oh1_term(n, k, alpha, s, r)
    ]
