"""
Splitting J_N into groups of adjacent columns

First form: J_{m_1+...+m_J} cut into groups of m_1, ..., m_J columns.
Second form: J_{n+J-1} cut into groups of k_1, ..., k_J columns separated by
single rookless columns. Each group is a J'-board whose bottom pre-weight is
the column total the groups to its right leave behind.
"""
import logging
from typing import Sequence

from .common import bounded_compositions, params_of, q_power, require, term
from ..constants import MULTISPLIT_MAX_PARTS
from ..qlaurent import LaurentPolynomial, ONE, ZERO, mul
from ..report import IdentityReport, PRINTED_VARIANT, Variant, evaluate_variants, single_report
from ..rookboard import Rule, WeightParams, board_jprime, rook_sum
from ..stirling import stirling_s


logger = logging.getLogger(__name__)


def _check_list(values: Sequence[int], name: str):
    require(0 < len(values) <= MULTISPLIT_MAX_PARTS,
            f"{name} needs 1..{MULTISPLIT_MAX_PARTS} parts, got {len(values)}")
    require(all(v >= 0 for v in values), f"{name} entries must be >= 0, got {list(values)}")


def _group_sum(size: int, rooks: int, alpha: int, s: int) -> LaurentPolynomial:
    return rook_sum(board_jprime(size, alpha), rooks, Rule.SAME_ROW, WeightParams(s))


def check_multisplit_1(m_list: Sequence[int], k: int, s: int) -> IdentityReport:
    """
    S_{s,q}[m_1+...+m_J, k] as a sum over j_1+...+j_J = k of products of group rook sums

    Group i carries m_i - j_i rooks on J'_{m_i, a_i} with
    a_i = sum_{t<i} (j_t(1-s) + s m_t).
    """
    m_list = tuple(m_list)
    _check_list(m_list, "m_list")
    total = sum(m_list)
    require(0 <= k <= total, f"Need 0 <= k <= {total}, got k={k}")

    rhs = ZERO
    for js in bounded_compositions(k, [(0, m) for m in m_list]):
        product = ONE
        alpha = 0
        for m_i, j_i in zip(m_list, js):
            product = mul(product, _group_sum(m_i, m_i - j_i, alpha, s))
            if product.is_zero():
                break
            alpha += j_i * (1 - s) + s * m_i
        rhs += product
    return single_report("multisplit_1", params_of(m_list=m_list, k=k, s=s), stirling_s(total, k, s), rhs)


def _multisplit_2_rhs(n: int, m_list: Sequence[int], s: int, printed: bool) -> LaurentPolynomial:
    rhs = ZERO
    for ks in bounded_compositions(n, [(m, n) for m in m_list]):
        product = ONE
        alpha = 0
        for i, (k_i, m_i) in enumerate(zip(ks, m_list)):
            if printed:
                exponent = alpha - i
            else:
                exponent = alpha - 1 if i else 0
            product = term(product, q_power(exponent), _group_sum(k_i, k_i - m_i, alpha, s))
            if product.is_zero():
                break
            alpha += k_i + 1 + (k_i - m_i) * (s - 1)
        rhs += product
    return rhs


def check_multisplit_2(n: int, m_list: Sequence[int], s: int) -> IdentityReport:
    """
    S_{s,q}[n+J-1, m_1+...+m_J+J-1] as a sum over compositions k_1+...+k_J = n

    Group i holds k_i - m_i rooks on J'_{k_i, a_i} with
    a_i = sum_{t<i} (k_t + 1 + (k_t - m_t)(s-1)); the rookless column before
    group i (i >= 2) weighs q^(a_i - 1). The printed prefactor
    q^(sum_{t<i} k_t + (k_t - m_t)(s-1)) is a_i - (i-1) and only agrees for J <= 2.
    """
    m_list = tuple(m_list)
    _check_list(m_list, "m_list")
    parts = len(m_list)
    require(n >= sum(m_list), f"Need n >= {sum(m_list)}, got n={n}")

    lhs = stirling_s(n + parts - 1, sum(m_list) + parts - 1, s)
    return evaluate_variants("multisplit_2", params_of(n=n, m_list=m_list, s=s), [
        Variant(PRINTED_VARIANT, lhs, _multisplit_2_rhs(n, m_list, s, printed=True)),
        Variant("separator_exponent", lhs, _multisplit_2_rhs(n, m_list, s, printed=False),
                note="rookless column before group i weighs q^(a_i - 1)"),
    ])
