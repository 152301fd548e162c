"""
Rendering of tables, sequences, rook sums and identity reports

Every renderer returns the full text, newline-terminated, so output is
byte-identical for identical inputs.
"""
import csv
import io
import json
from fractions import Fraction
from typing import Any, Dict, List, Optional, Sequence, Union

from ..constants import FORMAT_CSV, FORMAT_JSON
from ..qlaurent import LaurentPolynomial, eval_at, to_json, to_string
from ..report import IdentityReport, format_params

Value = Union[LaurentPolynomial, Fraction]


def evaluate(p: LaurentPolynomial, q: Optional[Fraction]) -> Value:
    return p if q is None else eval_at(p, q)


def value_text(value: Value) -> str:
    if isinstance(value, LaurentPolynomial):
        return to_string(value)
    return str(value)


def value_json(value: Value) -> Dict[str, Any]:
    entry: Dict[str, Any] = {"value": value_text(value)}
    if isinstance(value, LaurentPolynomial):
        entry["poly"] = to_json(value)
    return entry


def _csv(header: Sequence[str], rows: Sequence[Sequence[Any]]) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buffer.getvalue()


def _json(document: Dict[str, Any]) -> str:
    return json.dumps(document, indent=2) + "\n"


def render_table(rows: List[List[Value]], fmt: str, meta: Dict[str, Any]) -> str:
    """
    Render a triangle

    Pretty rows read "n: v_0, v_1, ..., v_n"; CSV has header n,k,value.
    """
    if fmt == FORMAT_CSV:
        return _csv(("n", "k", "value"), [
            (n, k, value_text(v)) for n, row in enumerate(rows) for k, v in enumerate(row)
        ])
    if fmt == FORMAT_JSON:
        entries = []
        for n, row in enumerate(rows):
            for k, v in enumerate(row):
                entry = {"n": n, "k": k}
                entry.update(value_json(v))
                entries.append(entry)
        return _json({**meta, "rows": entries})
    return "".join(f"{n}: {', '.join(value_text(v) for v in row)}\n" for n, row in enumerate(rows))


def render_sequence(values: List[Value], fmt: str, meta: Dict[str, Any]) -> str:
    """Render values indexed by n; pretty lines read "n: value" """
    if fmt == FORMAT_CSV:
        return _csv(("n", "value"), [(n, value_text(v)) for n, v in enumerate(values)])
    if fmt == FORMAT_JSON:
        entries = []
        for n, v in enumerate(values):
            entry = {"n": n}
            entry.update(value_json(v))
            entries.append(entry)
        return _json({**meta, "values": entries})
    return "".join(f"{n}: {value_text(v)}\n" for n, v in enumerate(values))


def render_value(value: Value, fmt: str, meta: Dict[str, Any]) -> str:
    if fmt == FORMAT_CSV:
        return _csv(tuple(meta) + ("value",), [tuple(meta.values()) + (value_text(value),)])
    if fmt == FORMAT_JSON:
        return _json({**meta, **value_json(value)})
    return value_text(value) + "\n"


def report_line(report: IdentityReport) -> str:
    status = "holds" if report.holds else "FAILS"
    line = f"{report.identity}({format_params(report.params)}): {status} [{report.variant}]"
    if not report.holds:
        line += f" lhs={to_string(report.lhs)} rhs={to_string(report.rhs)} diff={to_string(report.diff)}"
    elif report.note:
        line += f" {report.note}"
    return line


def render_reports(reports: Sequence[IdentityReport], fmt: str, failures_only: bool = False) -> str:
    """
    Render identity reports with a summary

    Args:
        reports: Reports in sweep order
        fmt: Output format
        failures_only: Leave holding reports out of the listing (the summary still counts them)
    """
    failed = [r for r in reports if not r.holds]
    shown = failed if failures_only else list(reports)
    repaired = sum(1 for r in reports if r.holds and not r.printed_holds)

    if fmt == FORMAT_CSV:
        return _csv(("identity", "params", "holds", "variant", "printed_holds", "lhs", "rhs", "diff"), [
            (r.identity, format_params(r.params), r.holds, r.variant, r.printed_holds,
             to_string(r.lhs), to_string(r.rhs), to_string(r.diff))
            for r in shown
        ])
    if fmt == FORMAT_JSON:
        return _json({
            "summary": {"checked": len(reports), "failed": len(failed), "repaired": repaired},
            "reports": [r.to_dict() for r in shown],
        })
    lines = [report_line(r) for r in shown]
    lines.append(f"{len(reports)} checked, {len(failed)} failed, {repaired} held only after repair")
    return "\n".join(lines) + "\n"
