"""
(n+m)! identities on unsigned Stirling numbers of the first kind

c(n,k) is read off the s = 1 table at q = 1.
"""
import logging
from math import comb, factorial

from .common import at_one, constant, params_of, require, rising
from ..report import IdentityReport, PRINTED_VARIANT, Variant, evaluate_variants, single_report
from ..stirling import stirling_s


logger = logging.getLogger(__name__)

FACTORIAL_FORMS = ("shifted", "plain")


def cycles(n: int, k: int) -> int:
    """c(n,k) from S_{1,q}[n,k] at q = 1"""
    return at_one(stirling_s(n, k, 1))


def _check_nm(n: int, m: int):
    require(n >= 0 and m >= 0, f"Need n, m >= 0, got n={n}, m={m}")


def check_mezo_dual(n: int, m: int) -> IdentityReport:
    """
    (n+m)! = sum_{r,j} c(m,j) m^(rising n-r) C(.,.) r!

    Printed with C(m,j); the s = 1, q = 1 reduction of the Bell split has C(n,r).
    """
    _check_nm(n, m)
    lhs = constant(factorial(n + m))
    printed = sum(
        cycles(m, j) * rising(m, n - r) * comb(m, j) * factorial(r)
        for r in range(n + 1)
        for j in range(m + 1)
    )
    reduced = sum(
        cycles(m, j) * rising(m, n - r) * comb(n, r) * factorial(r)
        for r in range(n + 1)
        for j in range(m + 1)
    )
    return evaluate_variants("mezo_dual", params_of(n=n, m=m), [
        Variant(PRINTED_VARIANT, lhs, constant(printed)),
        Variant("reduction_of_an", lhs, constant(reduced), note="binomial C(n,r) in place of C(m,j)"),
    ])


def check_mezo_factorial(n: int, m: int, form: str = "shifted") -> IdentityReport:
    """
    (n+m)! as a triple sum over r, j, k

    Args:
        form: "shifted" for sum c(m,j) C(r,k-j) c(n,r) m^(r-k+j),
            "plain" for sum c(m,j) C(r,k) c(n,r) m^k
    """
    _check_nm(n, m)
    require(form in FACTORIAL_FORMS, f"Unknown form {form!r}, expected one of {FACTORIAL_FORMS}")

    total = 0
    for r in range(n + 1):
        c_nr = cycles(n, r)
        if not c_nr:
            continue
        for j in range(m + 1):
            c_mj = cycles(m, j)
            if not c_mj:
                continue
            if form == "shifted":
                total += sum(c_mj * comb(r, k - j) * c_nr * m ** (r - k + j) for k in range(j, j + r + 1))
            else:
                total += sum(c_mj * comb(r, k) * c_nr * m ** k for k in range(r + 1))
    return single_report(
        "mezo_factorial", params_of(n=n, m=m, form=form),
        constant(factorial(n + m)), constant(total),
    )
