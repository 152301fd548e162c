"""
Spivey-type convolutions for S_{s,q}[n+m,k] and the Bell polynomials

The j-th weight shift below is a_j = j(1-s) + s m, the column pre-weight the
first m columns leave behind after m - j rooks.
"""
import logging
from math import comb

from .common import constant, params_of, q_power, require, shifted_product, term
from ..qlaurent import LaurentPolynomial, ZERO, poly_sum, q_binomial, scale
from ..report import IdentityReport, single_report
from ..stirling import bell_poly, oracle_bell, oracle_partitions, stirling_s


logger = logging.getLogger(__name__)


def _shift(j: int, m: int, s: int) -> int:
    return j * (1 - s) + s * m


def _check_nm(n: int, m: int):
    require(n >= 0 and m >= 0, f"Need n, m >= 0, got n={n}, m={m}")


def spivey_rhs(n: int, m: int, k: int, s: int) -> LaurentPolynomial:
    return poly_sum(
        term(
            stirling_s(m, j, s),
            q_power(r * _shift(j, m, s)),
            q_binomial(n, r, s),
            stirling_s(r, k - j, s),
            shifted_product(_shift(j, m, s), s, n - r),
        )
        for r in range(n + 1)
        for j in range(m + 1)
    )


def check_spivey_general(n: int, m: int, k: int, s: int) -> IdentityReport:
    """S_{s,q}[n+m,k] as a double sum over the split after column m"""
    _check_nm(n, m)
    require(0 <= k <= n + m, f"Need 0 <= k <= n+m, got k={k}")
    return single_report(
        "spivey_general", params_of(n=n, m=m, k=k, s=s),
        stirling_s(n + m, k, s), spivey_rhs(n, m, k, s),
    )


def check_bell_general(n: int, m: int, s: int, x0: int) -> IdentityReport:
    """B_{s,q}[n+m;x] at x = x0 from the same split; x0 = 1 gives the Bell numbers"""
    _check_nm(n, m)
    lhs = bell_poly(n + m, s).evaluate(x0)
    rhs = poly_sum(
        term(
            scale(stirling_s(m, j, s), x0 ** j),
            q_power(r * _shift(j, m, s)),
            q_binomial(n, r, s),
            bell_poly(r, s).evaluate(x0),
            shifted_product(_shift(j, m, s), s, n - r),
        )
        for r in range(n + 1)
        for j in range(m + 1)
    )
    return single_report("bell_general", params_of(n=n, m=m, s=s, x0=x0), lhs, rhs)


def thm_ne_rhs(n: int, m: int, k: int, s: int) -> LaurentPolynomial:
    total = ZERO
    for r in range(n + 1):
        for j in range(m + 1):
            a = _shift(j, m, s)
            total += term(
                stirling_s(m, j, s),
                q_power(a * (k - j)),
                q_binomial(r, k - j, s - 1),
                stirling_s(n, r, s),
                shifted_product(a, s - 1, r - k + j),
            )
    return total


def check_thm_ne(n: int, m: int, k: int, s: int) -> IdentityReport:
    """S_{s,q}[n+m,k] through the [r k-j]_{q^(s-1)} expansion"""
    _check_nm(n, m)
    require(0 <= k <= n + m, f"Need 0 <= k <= n+m, got k={k}")
    return single_report(
        "thm_ne", params_of(n=n, m=m, k=k, s=s),
        stirling_s(n + m, k, s), thm_ne_rhs(n, m, k, s),
    )


def check_bell_ne(n: int, m: int, s: int, x0: int) -> IdentityReport:
    """B_{s,q}[n+m;x0] as the x0^k-weighted sum of the thm_ne expansion"""
    _check_nm(n, m)
    lhs = bell_poly(n + m, s).evaluate(x0)
    rhs = poly_sum(scale(thm_ne_rhs(n, m, k, s), x0 ** k) for k in range(n + m + 1))
    return single_report("bell_ne", params_of(n=n, m=m, s=s, x0=x0), lhs, rhs)


def check_thm_ne_s0(n: int, m: int, k: int) -> IdentityReport:
    """
    q-Stirling numbers of the second kind with a 1/q binomial

        S_q[n+m,k] = sum_{r,j} S_q[m,j] q^(j(k-j)) [r k-j]_{1/q} S_q[n,r] [j][j-1]...[k-r+1]
    """
    _check_nm(n, m)
    require(0 <= k <= n + m, f"Need 0 <= k <= n+m, got k={k}")
    rhs = ZERO
    for r in range(n + 1):
        for j in range(m + 1):
            falling = shifted_product(j, -1, j - k + r)
            rhs += term(
                stirling_s(m, j, 0),
                q_power(j * (k - j)),
                q_binomial(r, k - j, -1),
                stirling_s(n, r, 0),
                falling,
            )
    return single_report("thm_ne_s0", params_of(n=n, m=m, k=k), stirling_s(n + m, k, 0), rhs)


def check_thm_sec(n: int, m: int, j: int, s: int, form: str = "hey1") -> IdentityReport:
    """
    S_{s,q}[n+1,m+j+1] split at the first rookless column after column k

    Args:
        form: "hey1" for the [n-k r]_{q^s} expansion, "hey2" for [r j]_{q^(s-1)}
    """
    require(form in ("hey1", "hey2"), f"Unknown form {form!r}, expected hey1 or hey2")
    require(m >= 0 and j >= 0 and m + j <= n, f"Need m, j >= 0 and m+j <= n, got n={n}, m={m}, j={j}")

    rhs = ZERO
    for k in range(m, n + 1):
        lead = stirling_s(k, m, s)
        if lead.is_zero():
            continue
        a = (k - m) * (s - 1) + k + 1
        for r in range(n - k + 1):
            if form == "hey1":
                rhs += term(
                    lead,
                    q_power(r * a + k + (k - m) * (s - 1)),
                    q_binomial(n - k, r, s),
                    stirling_s(r, j, s),
                    shifted_product(a, s, n - k - r),
                )
            else:
                rhs += term(
                    lead,
                    q_power((j + 1) * (k + (k - m) * (s - 1)) + j),
                    q_binomial(r, j, s - 1),
                    stirling_s(n - k, r, s),
                    shifted_product(a, s - 1, r - j),
                )
    return single_report(
        "thm_sec", params_of(n=n, m=m, j=j, s=s, form=form),
        stirling_s(n + 1, m + j + 1, s), rhs,
    )


def check_katriel(n: int, m: int) -> IdentityReport:
    """B_q[n+m] = sum_{r,j} S_q[m,j] q^(rj) C(n,r) B_q[r] [j]^(n-r), the s = 0 Bell split"""
    _check_nm(n, m)
    rhs = poly_sum(
        term(
            stirling_s(m, j, 0),
            q_power(r * j),
            q_binomial(n, r, 0),
            bell_poly(r, 0).evaluate(1),
            shifted_product(j, 0, n - r),
        )
        for r in range(n + 1)
        for j in range(m + 1)
    )
    return single_report("katriel", params_of(n=n, m=m), bell_poly(n + m, 0).evaluate(1), rhs)


def check_spivey_classical(n: int, m: int) -> IdentityReport:
    """
    B(n+m) = sum_{k,j} j^(n-k) C(n,k) S(m,j) B(k) on brute-force counts
    """
    _check_nm(n, m)
    rhs = sum(
        j ** (n - k) * comb(n, k) * oracle_partitions(m, j) * oracle_bell(k)
        for k in range(n + 1)
        for j in range(m + 1)
    )
    return single_report("spivey_classical", params_of(n=n, m=m), constant(oracle_bell(n + m)), constant(rhs))
