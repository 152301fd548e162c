"""
Identity reports and formula variants

A checked identity is a list of variants: the formula as printed first, then
named repairs. The report records which variants the computed values satisfy
and keeps both sides of the one it settles on.
"""
import logging
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Sequence, Tuple

from .qlaurent import LaurentPolynomial, to_json


logger = logging.getLogger(__name__)

PRINTED_VARIANT = "printed"

Params = Tuple[Tuple[str, Any], ...]


@dataclass(frozen=True)
class Variant:
    name: str
    lhs: LaurentPolynomial
    rhs: LaurentPolynomial
    note: str = ""

    @property
    def holds(self) -> bool:
        return self.lhs == self.rhs


@dataclass(frozen=True)
class IdentityReport:
    """Outcome of checking one identity instance; holds iff diff is zero"""
    identity: str
    params: Params
    holds: bool
    lhs: LaurentPolynomial
    rhs: LaurentPolynomial
    diff: LaurentPolynomial
    variant: str = PRINTED_VARIANT
    printed_holds: bool = True
    note: str = ""
    satisfied: Tuple[str, ...] = field(default_factory=tuple)

    def param(self, name: str) -> Any:
        for key, value in self.params:
            if key == name:
                return value
        raise KeyError(name)

    def sort_key(self) -> Tuple[str, str]:
        return self.identity, repr(self.params)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "identity": self.identity,
            "params": {key: list(value) if isinstance(value, tuple) else value for key, value in self.params},
            "holds": self.holds,
            "lhs": to_json(self.lhs),
            "rhs": to_json(self.rhs),
            "diff": to_json(self.diff),
            "variant": self.variant,
            "printed_holds": self.printed_holds,
            "satisfied": list(self.satisfied),
            "note": self.note,
        }


def format_params(params: Params) -> str:
    return ", ".join(f"{key}={value}" for key, value in params)


def evaluate_variants(identity: str, params: Params, variants: Sequence[Variant]) -> IdentityReport:
    """
    Build a report from formula variants

    Args:
        identity: Registered identity name
        params: Ordered (name, value) pairs
        variants: Printed form first, then repairs

    Returns:
        Report on the first satisfied variant, or on the printed form when none holds
    """
    if not variants:
        raise ValueError(f"No formula variants given for {identity}")

    satisfied = tuple(v.name for v in variants if v.holds)
    chosen: Optional[Variant] = next((v for v in variants if v.holds), None)
    printed = variants[0]

    if not printed.holds:
        if chosen is None:
            logger.warning(f"{identity}({format_params(params)}): no formula variant holds")
        else:
            logger.info(f"{identity}({format_params(params)}): printed form fails, {chosen.name} holds")
    if chosen is None:
        chosen = printed

    return IdentityReport(
        identity=identity,
        params=params,
        holds=chosen.holds,
        lhs=chosen.lhs,
        rhs=chosen.rhs,
        diff=chosen.lhs - chosen.rhs,
        variant=chosen.name,
        printed_holds=printed.holds,
        note=chosen.note,
        satisfied=satisfied,
    )


def single_report(identity: str, params: Params, lhs: LaurentPolynomial, rhs: LaurentPolynomial) -> IdentityReport:
    """Report for an identity with one formula"""
    return evaluate_variants(identity, params, [Variant(PRINTED_VARIANT, lhs, rhs)])


def failures(reports: Sequence[IdentityReport]) -> List[IdentityReport]:
    return [r for r in reports if not r.holds]
