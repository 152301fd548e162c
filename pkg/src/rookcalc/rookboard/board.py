"""
Ferrers boards with per-cell default pre-weights

Columns are numbered 1..n from right to left. A cell is addressed by its
column j and its bottom offset b (1 = bottom cell). Boards are drawn
top-aligned: the cell (j, b) sits in row column_length(j) - b + 1 counted from
the top, so the columns share their top row.

Board spec format (CLI):
    word=<UV-string>;pre=<uniform int | j,b=v;...>
Example:
    word=VUVUVUV;pre=1;1,1=3;2,1=3
"""
import logging
from dataclasses import dataclass
from typing import Dict, List, Mapping, Optional, Tuple, Union

from ..constants import (
    BOARD_DEFAULT_PREWEIGHT,
    BOARD_SPEC_PRE_KEY,
    BOARD_SPEC_WORD_KEY,
)
from ..errors import InvalidBoardError, InvalidParameterError


logger = logging.getLogger(__name__)

Cell = Tuple[int, int]
PreweightSpec = Union[int, Mapping[Cell, int]]


@dataclass(frozen=True)
class Board:
    """Ferrers board; preweights[j-1][b-1] is the default pre-weight of cell (j, b)"""
    column_lengths: Tuple[int, ...]
    preweights: Tuple[Tuple[int, ...], ...]

    def __post_init__(self):
        if len(self.column_lengths) != len(self.preweights):
            raise InvalidBoardError("Pre-weight columns do not match column lengths")
        previous = 0
        for j, (length, column) in enumerate(zip(self.column_lengths, self.preweights), start=1):
            if length < 0:
                raise InvalidBoardError(f"Column {j} has negative length {length}")
            if length < previous:
                raise InvalidBoardError(
                    f"Column lengths must weakly increase right to left, column {j} has {length} < {previous}"
                )
            if len(column) != length:
                raise InvalidBoardError(f"Column {j} has {len(column)} pre-weights for {length} cells")
            previous = length

    @property
    def n_columns(self) -> int:
        return len(self.column_lengths)

    def cell_count(self) -> int:
        return sum(self.column_lengths)

    def column_length(self, j: int) -> int:
        return self.column_lengths[j - 1]

    def preweight(self, j: int, b: int) -> int:
        if not (1 <= j <= self.n_columns and 1 <= b <= self.column_lengths[j - 1]):
            raise InvalidBoardError(f"Cell ({j},{b}) is not on the board")
        return self.preweights[j - 1][b - 1]

    def nonempty_columns(self) -> List[int]:
        return [j for j, length in enumerate(self.column_lengths, start=1) if length > 0]

    def column_totals(self) -> List[int]:
        return column_totals(self)


def column_totals(b: Board) -> List[int]:
    """Per-column sum of default pre-weights, right to left"""
    return [sum(column) for column in b.preweights]


def board_from_lengths(lengths: List[int], default_pre: PreweightSpec = BOARD_DEFAULT_PREWEIGHT,
                       bottom: Optional[int] = None) -> Board:
    """
    Build a board from column lengths (right to left)

    Args:
        lengths: Column lengths, column 1 first
        default_pre: Uniform pre-weight, or a mapping (j, b) -> value over a default of 1
        bottom: Optional pre-weight overriding every bottom cell

    Returns:
        Board
    """
    if isinstance(default_pre, int):
        uniform, overrides = default_pre, {}
    else:
        uniform, overrides = BOARD_DEFAULT_PREWEIGHT, dict(default_pre)

    columns = []
    for j, length in enumerate(lengths, start=1):
        column = []
        for b in range(1, length + 1):
            value = uniform
            if b == 1 and bottom is not None:
                value = bottom
            column.append(overrides.pop((j, b), value))
        columns.append(tuple(column))

    if overrides:
        cell = sorted(overrides)[0]
        raise InvalidBoardError(f"Pre-weight given for cell {cell[0]},{cell[1]} which is not on the board")

    return Board(column_lengths=tuple(lengths), preweights=tuple(columns))


def word_column_lengths(word: str) -> List[int]:
    """
    Column lengths (right to left) of the board outlined by a UV-word

    The column under a U step is as tall as the number of V steps after it.

    Raises:
        InvalidBoardError: On letters other than U and V
    """
    if not word:
        raise InvalidBoardError("Board word must be nonempty")

    lengths = []
    v_seen = 0
    for pos in range(len(word) - 1, -1, -1):
        letter = word[pos]
        if letter == "V":
            v_seen += 1
        elif letter == "U":
            lengths.append(v_seen)
        else:
            raise InvalidBoardError(f"Invalid letter {letter!r} at position {pos} of board word {word!r}")
    return lengths


def board_from_word(word: str, default_pre: PreweightSpec = BOARD_DEFAULT_PREWEIGHT) -> Board:
    """
    Board outlined by a word in U (horizontal step) and V (vertical step)

    Example:
        UVUUUVVU has column lengths 0, 2, 2, 2, 3 right to left
    """
    return board_from_lengths(word_column_lengths(word.upper()), default_pre)


def board_jn(n: int) -> Board:
    """J_n: outlined by (VU)^n, every cell pre-weight 1, column lengths 0..n-1"""
    _check_size(n)
    return board_from_word("VU" * n) if n else Board((), ())


def board_jprime(n: int, alpha: int) -> Board:
    """J'_{n,alpha}: outlined by (VU)^n V, bottom cells alpha, other cells 1"""
    _check_size(n)
    return board_from_lengths(list(range(1, n + 1)), 1, bottom=alpha)


def board_jcd(n: int, c: int, d: int) -> Board:
    """
    J^{c,d}_n: outlined by (VU)^n V, bottom cells d, other cells c

    Column j has total pre-weight c(j-1) + d. For (c, d) = (1, 0) the column
    totals are those of J_n: the extra bottom cell of column 1 has pre-weight
    0 and can never carry weight.
    """
    _check_size(n)
    return board_from_lengths(list(range(1, n + 1)), c, bottom=d)


def board_jump(n: int, m: int) -> Board:
    """m-jump board: column heights 0, m, 2m, ..., (n-1)m, every cell pre-weight 1"""
    _check_size(n)
    if m < 0:
        raise InvalidParameterError(f"Jump size must be >= 0, got {m}")
    return board_from_lengths([m * j for j in range(n)], 1)


def _check_size(n: int):
    if n < 0:
        raise InvalidParameterError(f"Board size must be >= 0, got {n}")


def parse_board_spec(spec: str) -> Board:
    """
    Parse a CLI board spec

    Args:
        spec: "word=<UV-string>;pre=<uniform int | j,b=v;...>". The pre part may
            start with a uniform value followed by per-cell overrides.

    Returns:
        Board

    Raises:
        InvalidBoardError: If the spec is malformed
    """
    head, sep, pre_text = spec.partition(f";{BOARD_SPEC_PRE_KEY}=")
    key, eq, word = head.strip().partition("=")
    if key.strip() != BOARD_SPEC_WORD_KEY or not eq:
        raise InvalidBoardError(f"Board spec must start with '{BOARD_SPEC_WORD_KEY}=': {spec!r}")

    if not sep:
        return board_from_word(word.strip())

    uniform = BOARD_DEFAULT_PREWEIGHT
    overrides: Dict[Cell, int] = {}
    for idx, item in enumerate(part.strip() for part in pre_text.split(";")):
        if not item:
            continue
        try:
            if "=" not in item:
                if idx != 0:
                    raise ValueError(item)
                uniform = int(item)
                continue
            cell_text, value_text = item.split("=", 1)
            j_text, b_text = cell_text.split(",", 1)
            overrides[(int(j_text), int(b_text))] = int(value_text)
        except ValueError:
            raise InvalidBoardError(f"Invalid pre-weight entry {item!r} in board spec {spec!r}")

    if not overrides:
        return board_from_word(word.strip(), uniform)

    lengths = word_column_lengths(word.strip().upper())
    base = board_from_lengths(lengths, uniform)
    for (j, b) in overrides:
        base.preweight(j, b)  # raises for cells off the board
    columns = [list(column) for column in base.preweights]
    for (j, b), value in overrides.items():
        columns[j - 1][b - 1] = value
    return Board(column_lengths=base.column_lengths, preweights=tuple(tuple(c) for c in columns))
