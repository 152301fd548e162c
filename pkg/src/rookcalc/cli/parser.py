"""
Command-line parser
"""
import argparse
import re
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence

from ..constants import (
    DEFAULT_FORMAT,
    DEFAULT_PRESET,
    FORMAT_CSV,
    FORMAT_JSON,
    FORMAT_PRETTY,
    PROGRAM_NAME,
    PROGRAM_VERSION,
    RULE_BOTTOM_SHIFT,
    RULE_SAME_ROW,
    TABLE_KIND_CD,
    TABLE_KIND_S,
    TABLE_KIND_TYPE2,
)
from ..errors import InvalidParameterError

FORMATS = (FORMAT_PRETTY, FORMAT_CSV, FORMAT_JSON)

# values such as -1..2 or -3/4 would otherwise be read as options
_NEGATIVE_VALUE = re.compile(r"^-\d")

# verify flags that take a lo..hi range, mapped to sweep parameter names
RANGE_FLAGS = {
    "s": "s",
    "j": "j",
    "alpha": "alpha",
    "beta": "beta",
    "rho": "rho",
    "c": "c",
    "d": "d",
    "x": "x0",
}
# verify flags taking an upper bound, swept from 0
MAX_FLAGS = {"n_max": "n", "m_max": "m", "k_max": "k"}


@dataclass
class CliConfig:
    """Parsed command line"""
    command: str
    bindings: Dict[str, object] = field(default_factory=dict)
    ranges: Dict[str, str] = field(default_factory=dict)
    format: str = DEFAULT_FORMAT
    output: Optional[str] = None

    def get(self, name: str, default: object = None) -> object:
        value = self.bindings.get(name)
        return default if value is None else value


def normalize_argv(argv: Sequence[str]) -> List[str]:
    """Join "--flag -1..2" into "--flag=-1..2" so negative values survive argparse"""
    result: List[str] = []
    idx = 0
    argv = list(argv)
    while idx < len(argv):
        token = argv[idx]
        if (token.startswith("--") and "=" not in token and idx + 1 < len(argv)
                and _NEGATIVE_VALUE.match(argv[idx + 1])):
            result.append(f"{token}={argv[idx + 1]}")
            idx += 2
            continue
        result.append(token)
        idx += 1
    return result


class ArgumentParser(argparse.ArgumentParser):
    """Reports usage errors as InvalidParameterError instead of exiting"""

    def error(self, message: str):
        raise InvalidParameterError(f"{self.prog}: {message}")


def _add_output(parser: argparse.ArgumentParser):
    parser.add_argument("--format", choices=FORMATS, default=DEFAULT_FORMAT, help="Output format")
    parser.add_argument("--output", default=None, help="Write to this file instead of standard output")


def build_parser() -> argparse.ArgumentParser:
    parser = ArgumentParser(
        prog=PROGRAM_NAME,
        description="Generalized q-Stirling and Bell numbers by rook placements and recurrences",
    )
    parser.add_argument("--version", action="version", version=f"{PROGRAM_NAME} {PROGRAM_VERSION}")
    sub = parser.add_subparsers(dest="command", required=True)

    table = sub.add_parser("table", help="Triangle of Stirling-type numbers")
    table.add_argument("--kind", choices=(TABLE_KIND_S, TABLE_KIND_CD, TABLE_KIND_TYPE2), default=TABLE_KIND_S)
    table.add_argument("--s", type=str, default=None, help="Weight parameter s (default 0)")
    table.add_argument("--c", type=str, default=None, help="Pre-weight c for kind cd (default 1)")
    table.add_argument("--d", type=str, default=None, help="Bottom pre-weight d for kind cd (default 0)")
    table.add_argument("--alpha", type=str, default=None, help="Type II alpha (default 0)")
    table.add_argument("--beta", type=str, default=None, help="Type II beta (default 1)")
    table.add_argument("--rho", type=str, default=None, help="Type II rho (default 0)")
    table.add_argument("--n-max", type=str, required=True, help="Largest row index")
    table.add_argument("--q", type=str, default=None, help="Evaluate at this rational q")
    table.add_argument("--cross-check", action="store_true", help="Verify every entry against rook placements")
    _add_output(table)

    bell = sub.add_parser("bell", help="Generalized Bell numbers")
    bell.add_argument("--kind", choices=(TABLE_KIND_S, TABLE_KIND_CD, TABLE_KIND_TYPE2), default=None,
                      help="Defaults to type2 when alpha, beta or rho is given, else s")
    bell.add_argument("--s", type=str, default=None)
    bell.add_argument("--c", type=str, default=None)
    bell.add_argument("--d", type=str, default=None)
    bell.add_argument("--alpha", type=str, default=None)
    bell.add_argument("--beta", type=str, default=None)
    bell.add_argument("--rho", type=str, default=None)
    bell.add_argument("--x", type=str, default="1", help="Integer value substituted for x")
    bell.add_argument("--n-max", type=str, required=True)
    bell.add_argument("--q", type=str, default=None)
    _add_output(bell)

    oracle = sub.add_parser("oracle", help="Rook sum on a board by enumeration")
    oracle.add_argument("--board", required=True, help="word=<UV-string>;pre=<uniform int | j,b=v;...>")
    oracle.add_argument("--rooks", type=str, required=True)
    oracle.add_argument("--rule", choices=(RULE_SAME_ROW, RULE_BOTTOM_SHIFT), default=RULE_SAME_ROW)
    oracle.add_argument("--s", type=str, default="1")
    oracle.add_argument("--q", type=str, default=None)
    _add_output(oracle)

    verify = sub.add_parser("verify", help="Check identities over a parameter sweep")
    verify.add_argument("--identity", required=True, help="Identity name or 'all'")
    verify.add_argument("--preset", default=DEFAULT_PRESET, help="Sweep preset")
    verify.add_argument("--config", default=None, help="YAML file with extra presets")
    verify.add_argument("--n-max", type=str, default=None)
    verify.add_argument("--m-max", type=str, default=None)
    verify.add_argument("--k-max", type=str, default=None)
    for flag in RANGE_FLAGS:
        verify.add_argument(f"--{flag}", type=str, default=None, help="lo..hi")
    verify.add_argument("--max-total", type=str, default=None, help="Bound on n + m")
    verify.add_argument("--threads", type=str, default=None)
    verify.add_argument("--failures-only", action="store_true", help="Print failing reports only")
    _add_output(verify)

    return parser


def parse_args(argv: Sequence[str]) -> CliConfig:
    """
    Parse arguments into a CliConfig

    Raises:
        InvalidParameterError: On usage errors
    """
    args = build_parser().parse_args(normalize_argv(argv))
    values = vars(args)
    command = values.pop("command")
    fmt = values.pop("format")
    output = values.pop("output")

    ranges: Dict[str, str] = {}
    if command == "verify":
        for flag, param in list(RANGE_FLAGS.items()) + list(MAX_FLAGS.items()):
            value = values.pop(flag)
            if value is not None:
                ranges[param] = f"0..{value}" if flag in MAX_FLAGS else value
    return CliConfig(command=command, bindings=values, ranges=ranges, format=fmt, output=output)