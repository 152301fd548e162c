"""
Registry of checkable identities and the sweep runner
"""
import itertools
import logging
from concurrent import futures
from dataclasses import dataclass, field
from typing import Any, Callable, Dict, Iterator, List, Mapping, Optional, Tuple

from .factorial import FACTORIAL_FORMS, check_mezo_dual, check_mezo_factorial
from .lemma import check_oh, check_oh1
from .multisplit import check_multisplit_1, check_multisplit_2
from .spivey import (
    check_bell_general,
    check_bell_ne,
    check_katriel,
    check_spivey_classical,
    check_spivey_general,
    check_thm_ne,
    check_thm_ne_s0,
    check_thm_sec,
)
from .sweep import SweepSpec
from .type2 import check_mezz, check_t1, check_t1_type2, check_thm46, check_thm46_type2
from ..constants import MULTISPLIT_MAX_ENTRY, MULTISPLIT_MAX_PARTS, ORACLE_ENUMERATION_N_MAX
from ..errors import InvalidParameterError, UnknownIdentityError
from ..report import IdentityReport
from ..rookboard import Rule
from ..stirling import check_hsu_shiue
from ..utils import worker_count


logger = logging.getLogger(__name__)

ALL_IDENTITIES = "all"


def _part_lists() -> Tuple[Tuple[int, ...], ...]:
    lists = []
    for parts in range(1, MULTISPLIT_MAX_PARTS + 1):
        lists.extend(itertools.product(range(MULTISPLIT_MAX_ENTRY + 1), repeat=parts))
    return tuple(lists)


def _split_size(values: Mapping[str, Any]) -> int:
    return values.get("n", 0) + values.get("m", 0)


def _parts_size(values: Mapping[str, Any]) -> int:
    return max(sum(values["m_list"]), values.get("n", 0))


@dataclass(frozen=True)
class IdentityEntry:
    """
    A registered identity

    Args:
        name: Name used on the command line
        check: Checker returning an IdentityReport
        params: Keyword arguments of the checker, in sweep order
        choices: Fixed value lists for parameters that are not integer ranges
        size: Board size of an instance, compared against SweepSpec.max_total
        size_cap: Hard bound on the size regardless of the sweep
    """
    name: str
    check: Callable[..., IdentityReport]
    params: Tuple[str, ...]
    choices: Mapping[str, Tuple[Any, ...]] = field(default_factory=dict)
    size: Callable[[Mapping[str, Any]], int] = _split_size
    size_cap: Optional[int] = None

    def instances(self, spec: SweepSpec) -> Iterator[Dict[str, Any]]:
        """Cartesian product of the parameter values, filtered by size"""
        axes = [self.choices[p] if p in self.choices else spec.values(p) for p in self.params]
        for combo in itertools.product(*axes):
            values = dict(zip(self.params, combo))
            size = self.size(values)
            if spec.max_total is not None and size > spec.max_total:
                continue
            if self.size_cap is not None and size > self.size_cap:
                continue
            yield values


_RULES = (Rule.SAME_ROW, Rule.BOTTOM_SHIFT)

REGISTRY: Dict[str, IdentityEntry] = {entry.name: entry for entry in [
    IdentityEntry("oh", check_oh, ("n", "k", "alpha", "s", "rule"), {"rule": _RULES}),
    IdentityEntry("oh1", check_oh1, ("n", "k", "alpha", "s", "rule"), {"rule": _RULES}),
    IdentityEntry("spivey_general", check_spivey_general, ("n", "m", "k", "s")),
    IdentityEntry("bell_general", check_bell_general, ("n", "m", "s", "x0")),
    IdentityEntry("thm_ne", check_thm_ne, ("n", "m", "k", "s")),
    IdentityEntry("bell_ne", check_bell_ne, ("n", "m", "s", "x0")),
    IdentityEntry("thm_ne_s0", check_thm_ne_s0, ("n", "m", "k")),
    IdentityEntry("thm_sec", check_thm_sec, ("n", "m", "j", "s", "form"),
                  {"form": ("hey1", "hey2")}, size=lambda v: v["n"] + 1),
    IdentityEntry("multisplit_1", check_multisplit_1, ("m_list", "k", "s"),
                  {"m_list": _part_lists()}, size=_parts_size),
    IdentityEntry("multisplit_2", check_multisplit_2, ("n", "m_list", "s"),
                  {"m_list": _part_lists()}, size=_parts_size),
    IdentityEntry("t1", check_t1, ("n", "m", "k", "s", "c", "d")),
    IdentityEntry("t1_type2", check_t1_type2, ("n", "m", "k", "alpha", "beta", "rho")),
    IdentityEntry("mezz", check_mezz, ("n", "m", "alpha", "beta", "rho", "x0")),
    IdentityEntry("thm46", check_thm46, ("n", "m", "k", "s", "c", "d")),
    IdentityEntry("thm46_type2", check_thm46_type2, ("n", "m", "k", "alpha", "beta", "rho")),
    IdentityEntry("katriel", check_katriel, ("n", "m")),
    IdentityEntry("mezo_dual", check_mezo_dual, ("n", "m")),
    IdentityEntry("mezo_factorial", check_mezo_factorial, ("n", "m", "form"), {"form": FACTORIAL_FORMS}),
    IdentityEntry("spivey_classical", check_spivey_classical, ("n", "m"), size_cap=ORACLE_ENUMERATION_N_MAX),
    IdentityEntry("hsu_shiue", check_hsu_shiue, ("n", "alpha", "beta", "rho"), size=lambda v: v["n"]),
]}


def identity_names() -> List[str]:
    return list(REGISTRY)


def get_identity(name: str) -> IdentityEntry:
    """
    Raises:
        UnknownIdentityError: If the name is not registered
    """
    entry = REGISTRY.get(name)
    if entry is None:
        raise UnknownIdentityError(f"Unknown identity {name!r}, expected one of: {', '.join(REGISTRY)} or {ALL_IDENTITIES}")
    return entry


def resolve_identities(name: str) -> List[IdentityEntry]:
    if name == ALL_IDENTITIES:
        return list(REGISTRY.values())
    return [get_identity(name)]


def _evaluate(entry: IdentityEntry, values: Dict[str, Any]) -> Optional[IdentityReport]:
    try:
        return entry.check(**values)
    except InvalidParameterError as e:
        logger.debug(f"{entry.name}: skipping {values}: {e}")
        return None


def run_sweep(identity_name: str, spec: SweepSpec, max_workers: Optional[int] = None) -> List[IdentityReport]:
    """
    Check every instance of an identity over a sweep

    Instances outside an identity's domain are skipped. Reports come back in
    registry order, then in Cartesian-product order of the parameters.

    Args:
        identity_name: Registered name, or "all"
        spec: Parameter ranges
        max_workers: Worker threads; defaults to ROOKCALC_THREADS

    Returns:
        List of IdentityReport

    Raises:
        UnknownIdentityError: If the identity is not registered
    """
    entries = resolve_identities(identity_name)
    jobs: List[Tuple[IdentityEntry, Dict[str, Any]]] = [
        (entry, values) for entry in entries for values in entry.instances(spec)
    ]
    workers = worker_count(max_workers)
    logger.info(f"Sweep {identity_name}: {len(jobs)} instances on {workers} worker(s), {spec.describe()}")

    results: Dict[int, IdentityReport] = {}
    if workers == 1:
        for idx, (entry, values) in enumerate(jobs):
            report = _evaluate(entry, values)
            if report is not None:
                results[idx] = report
    else:
        with futures.ThreadPoolExecutor(max_workers=workers) as executor:
            pending = {executor.submit(_evaluate, entry, values): idx for idx, (entry, values) in enumerate(jobs)}
            for future in futures.as_completed(pending):
                report = future.result()
                if report is not None:
                    results[pending[future]] = report

    reports = [results[idx] for idx in sorted(results)]
    failed = sum(1 for r in reports if not r.holds)
    if failed:
        logger.warning(f"Sweep {identity_name}: {failed} of {len(reports)} instances fail")
    else:
        logger.info(f"Sweep {identity_name}: all {len(reports)} instances hold")
    return reports
