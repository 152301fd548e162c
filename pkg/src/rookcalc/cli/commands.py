"""
Command handlers

Each handler takes a CliConfig and returns (rendered text, exit code).
Invalid input raises a RookcalcError subclass carrying its own exit code.
"""
import logging
from fractions import Fraction
from typing import Any, Dict, List, Optional, Tuple

from .output import evaluate, render_reports, render_sequence, render_table, render_value
from .parser import CliConfig
from ..config import load_preset
from ..constants import (
    BELL_N_MAX,
    CROSS_CHECK_N_MAX,
    EXIT_IDENTITY_FAILED,
    EXIT_OK,
    ORACLE_PLACEMENT_CAP,
    RECURRENCE_N_MAX,
)
from ..errors import CrossCheckError, InvalidParameterError, SizeCapError
from ..identities import run_sweep
from ..qlaurent import LaurentPolynomial, to_string
from ..rookboard import (
    Board,
    Rule,
    WeightParams,
    board_jcd,
    board_jn,
    count_placements,
    parse_board_spec,
    rook_sum,
)
from ..stirling import TableKind, bell_cd, bell_poly, bell_type2, get_table
from ..utils import parse_int, parse_range, parse_rational, worker_count


logger = logging.getLogger(__name__)

CommandResult = Tuple[str, int]

TYPE2_FLAGS = ("alpha", "beta", "rho")


def _int(config: CliConfig, name: str, default: int) -> int:
    return parse_int(config.get(name, default), name)


def _n_max(config: CliConfig, cap: int, what: str) -> int:
    n_max = parse_int(config.get("n_max"), "n-max")
    if n_max < 0:
        raise InvalidParameterError(f"n-max must be >= 0, got {n_max}")
    if n_max > cap:
        raise SizeCapError(f"n-max {n_max} exceeds the {what} cap of {cap}")
    return n_max


def _q(config: CliConfig) -> Optional[Fraction]:
    text = config.get("q")
    return None if text is None else parse_rational(text)


def table_params(kind: TableKind, config: CliConfig) -> Tuple[int, ...]:
    """Parameter tuple of a table kind, with defaults s=0, c=1, d=0, alpha=0, beta=1, rho=0"""
    if kind is TableKind.S:
        return (_int(config, "s", 0),)
    if kind is TableKind.CD:
        return _int(config, "s", 0), _int(config, "c", 1), _int(config, "d", 0)
    return _int(config, "alpha", 0), _int(config, "beta", 1), _int(config, "rho", 0)


def _param_names(kind: TableKind) -> Tuple[str, ...]:
    if kind is TableKind.S:
        return ("s",)
    if kind is TableKind.CD:
        return ("s", "c", "d")
    return TYPE2_FLAGS


def _meta(command: str, kind: TableKind, params: Tuple[int, ...], q: Optional[Fraction]) -> Dict[str, Any]:
    return {
        "command": command,
        "kind": kind.value,
        "params": dict(zip(_param_names(kind), params)),
        "q": None if q is None else str(q),
    }


def cross_check_board(kind: TableKind, params: Tuple[int, ...], n: int) -> Tuple[Board, int]:
    """Board and weight parameter s whose (n - k)-rook sums give row n of the table"""
    if kind is TableKind.S:
        return board_jn(n), params[0]
    table = get_table(kind, params)
    return board_jcd(n, table.c, table.d), table.s


def cross_check(kind: TableKind, params: Tuple[int, ...], rows: List[List[LaurentPolynomial]]):
    """
    Compare every table entry with the rook-placement oracle

    Raises:
        CrossCheckError: On the first entry that disagrees
    """
    for n, row in enumerate(rows):
        board, s = cross_check_board(kind, params, n)
        for k, value in enumerate(row):
            oracle = rook_sum(board, n - k, Rule.SAME_ROW, WeightParams(s))
            if oracle != value:
                raise CrossCheckError(
                    f"{kind.value}{params} at ({n},{k}): recurrence gives {to_string(value)}, "
                    f"rook placements give {to_string(oracle)}"
                )
        logger.debug(f"Cross-checked row {n} of {kind.value}{params}")
    logger.info(f"Cross-check of {kind.value}{params} passed for {len(rows)} rows")


def cmd_table(config: CliConfig) -> CommandResult:
    """Triangle of values (n, k) for 0 <= k <= n <= n_max"""
    kind = TableKind.parse(config.get("kind"))
    checking = bool(config.get("cross_check", False))
    n_max = _n_max(config, CROSS_CHECK_N_MAX if checking else RECURRENCE_N_MAX,
                   "cross-check" if checking else "recurrence")
    params = table_params(kind, config)
    q = _q(config)

    table = get_table(kind, params)
    rows = [table.row(n) for n in range(n_max + 1)]
    if checking:
        cross_check(kind, params, rows)

    values = [[evaluate(v, q) for v in row] for row in rows]
    return render_table(values, config.format, _meta("table", kind, params, q)), EXIT_OK


def bell_kind(config: CliConfig) -> TableKind:
    """Explicit --kind, else type2 when any of alpha, beta, rho is bound, else s"""
    kind = config.get("kind")
    if kind is not None:
        return TableKind.parse(kind)
    if any(config.get(name) is not None for name in TYPE2_FLAGS):
        return TableKind.TYPE2
    return TableKind.S


def cmd_bell(config: CliConfig) -> CommandResult:
    """Bell polynomials B[n; x0] for n = 0..n_max"""
    kind = bell_kind(config)
    n_max = _n_max(config, BELL_N_MAX, "Bell")
    params = table_params(kind, config)
    x0 = _int(config, "x", 1)
    q = _q(config)

    if kind is TableKind.S:
        polys = [bell_poly(n, *params) for n in range(n_max + 1)]
    elif kind is TableKind.CD:
        polys = [bell_cd(n, *params) for n in range(n_max + 1)]
    else:
        polys = [bell_type2(n, *params) for n in range(n_max + 1)]

    values = [evaluate(p.evaluate(x0), q) for p in polys]
    meta = _meta("bell", kind, params, q)
    meta["x"] = x0
    return render_sequence(values, config.format, meta), EXIT_OK


def cmd_oracle(config: CliConfig) -> CommandResult:
    """Rook sum of a board spec by direct enumeration"""
    spec = str(config.get("board"))
    board = parse_board_spec(spec)
    k = parse_int(config.get("rooks"), "rooks")
    rule = Rule.parse(config.get("rule"))
    s = _int(config, "s", 1)
    q = _q(config)

    total = count_placements(board, k)
    if total > ORACLE_PLACEMENT_CAP:
        raise SizeCapError(f"{total} placements of {k} rooks exceed the cap of {ORACLE_PLACEMENT_CAP}")
    logger.info(f"Enumerating {total} placements of {k} rooks on {spec}")

    value = evaluate(rook_sum(board, k, rule, WeightParams(s), max_workers=worker_count(None)), q)
    meta = {"board": spec, "rooks": k, "rule": rule.value, "s": s}
    if q is not None:
        meta["q"] = str(q)
    return render_value(value, config.format, meta), EXIT_OK


def cmd_verify(config: CliConfig) -> CommandResult:
    """
    Sweep an identity, or all of them, and report

    The preset supplies default ranges; command-line ranges replace them
    parameter by parameter. Exit code 0 iff every instance holds.
    """
    preset = load_preset(str(config.get("preset")), config.get("config"))
    spec = preset.to_spec()
    for name, text in sorted(config.ranges.items()):
        lo, hi = parse_range(text, name)
        spec = spec.with_range(name, lo, hi)
    if config.get("max_total") is not None:
        spec = spec.with_max_total(parse_int(config.get("max_total"), "max-total"))

    threads = config.get("threads")
    workers = parse_int(threads, "threads") if threads is not None else None
    reports = run_sweep(str(config.get("identity")), spec, max_workers=workers)

    text = render_reports(reports, config.format, failures_only=bool(config.get("failures_only", False)))
    failed = any(not r.holds for r in reports)
    return text, EXIT_IDENTITY_FAILED if failed else EXIT_OK


COMMANDS = {
    "table": cmd_table,
    "bell": cmd_bell,
    "oracle": cmd_oracle,
    "verify": cmd_verify,
}
