"""
Rook placements, increment rules and weights

Rooks are processed column by column from right to left. When a column is
reached its current pre-weights are final: with no rook it contributes
q^(sum of its pre-weights); with a rook at bottom offset b it contributes
q^(pre-weights strictly below b) * [pre-weight at b], cells above the rook
being cancelled. The rook then adds s - 1 to one cell in every column to its
left, chosen by the rule.
"""
import itertools
import logging
from concurrent import futures
from dataclasses import dataclass
from enum import Enum
from typing import Dict, Iterator, List, Optional, Sequence, Tuple

from .board import Board
from ..constants import RULE_BOTTOM_SHIFT, RULE_SAME_ROW, ROOK_SUM_CHUNK
from ..errors import InvalidBoardError, InvalidParameterError
from ..qlaurent import LaurentPolynomial, ONE, ZERO, bracket, monomial, mul, poly_sum


logger = logging.getLogger(__name__)


class Rule(Enum):
    """Which cell of each column to the left receives a rook's increment"""
    SAME_ROW = RULE_SAME_ROW
    BOTTOM_SHIFT = RULE_BOTTOM_SHIFT

    @classmethod
    def parse(cls, name: str) -> "Rule":
        try:
            return cls(name.strip().lower())
        except ValueError:
            raise InvalidParameterError(
                f"Unknown rule {name!r}, expected one of {[r.value for r in cls]}"
            )


@dataclass(frozen=True)
class WeightParams:
    s: int


@dataclass(frozen=True)
class RookPlacement:
    """At most one rook per column, stored as sorted (column, bottom_offset) pairs"""
    rooks: Tuple[Tuple[int, int], ...] = ()

    @classmethod
    def from_dict(cls, rooks: Dict[int, int]) -> "RookPlacement":
        return cls(tuple(sorted(rooks.items())))

    def as_dict(self) -> Dict[int, int]:
        return dict(self.rooks)

    def __len__(self) -> int:
        return len(self.rooks)

    def validate(self, board: Board):
        """
        Raises:
            InvalidBoardError: If two rooks share a column or a rook is off the board
        """
        columns = [j for j, _ in self.rooks]
        if len(set(columns)) != len(columns):
            raise InvalidBoardError(f"Placement {format_placement(self)} has two rooks in one column")
        for j, b in self.rooks:
            if not (1 <= j <= board.n_columns and 1 <= b <= board.column_length(j)):
                raise InvalidBoardError(f"Rook {j}:{b} is not on the board")


def format_placement(placement: RookPlacement) -> str:
    """Rooks as j:b pairs, right to left"""
    return " ".join(f"{j}:{b}" for j, b in placement.rooks)


def _increment_target(rule: Rule, target_length: int, top_offset: int, rooks_so_far: int) -> int:
    if rule is Rule.SAME_ROW:
        return target_length - top_offset
    return rooks_so_far + 1


def _process(board: Board, placement: RookPlacement, rule: Rule, params: WeightParams,
             want_weight: bool) -> Tuple[LaurentPolynomial, List[List[int]]]:
    current = [list(column) for column in board.preweights]
    rooks = placement.as_dict()
    increment = params.s - 1
    weight = ONE
    placed = 0

    for j in range(1, board.n_columns + 1):
        column = current[j - 1]
        b = rooks.get(j)
        if b is None:
            if want_weight:
                weight = mul(weight, monomial(1, sum(column)))
            continue

        if want_weight:
            weight = mul(weight, mul(monomial(1, sum(column[:b - 1])), bracket(column[b - 1], 1)))
        for above in range(b, len(column)):
            column[above] = 0
        placed += 1

        top_offset = len(column) - b
        for left in range(j + 1, board.n_columns + 1):
            target_column = current[left - 1]
            target = _increment_target(rule, len(target_column), top_offset, placed)
            if 1 <= target <= len(target_column):
                target_column[target - 1] += increment
            else:
                logger.debug(f"Rule {rule.value}: no cell {left},{target} for rook {j}:{b}, increment skipped")

    return weight, current


def placement_weight(b: Board, placement: RookPlacement, rule: Rule, params: WeightParams) -> LaurentPolynomial:
    """
    Weight of a rook placement under a rule

    Args:
        b: Board
        placement: Valid placement on the board
        rule: Increment rule
        params: Weight parameters (s)

    Returns:
        Laurent polynomial weight
    """
    placement.validate(b)
    weight, _ = _process(b, placement, rule, params, want_weight=True)
    return weight


def cell_preweights_after(b: Board, placement: RookPlacement, rule: Rule,
                          params: WeightParams) -> List[List[int]]:
    """
    Final pre-weight of every cell, cancelled cells set to 0

    Returns:
        List indexed [j-1][b-1], the values drawn in a rook-placement figure
    """
    placement.validate(b)
    _, grid = _process(b, placement, rule, params, want_weight=False)
    return grid


def enumerate_placements(b: Board, k: int) -> Iterator[RookPlacement]:
    """
    Every placement of exactly k rooks, at most one per column, each once

    Columns are chosen in lexicographic order, then rook heights.
    """
    if k < 0:
        return
    for columns in itertools.combinations(b.nonempty_columns(), k):
        ranges = [range(1, b.column_length(j) + 1) for j in columns]
        for heights in itertools.product(*ranges):
            yield RookPlacement(tuple(zip(columns, heights)))


def count_placements(b: Board, k: int) -> int:
    """Number of k-rook placements: elementary symmetric function of column lengths"""
    if k < 0:
        return 0
    e = [1] + [0] * k
    for length in b.column_lengths:
        for i in range(k, 0, -1):
            e[i] += e[i - 1] * length
    return e[k]


def _partial_sum(b: Board, chunk: Sequence[RookPlacement], rule: Rule, params: WeightParams) -> LaurentPolynomial:
    return poly_sum(_process(b, p, rule, params, want_weight=True)[0] for p in chunk)


def rook_sum(b: Board, k: int, rule: Rule, params: WeightParams,
             max_workers: Optional[int] = None) -> LaurentPolynomial:
    """
    Total weight of all k-rook placements on a board

    Args:
        b: Board
        k: Number of rooks
        rule: Increment rule
        params: Weight parameters (s)
        max_workers: Split the enumeration across this many threads

    Returns:
        Laurent polynomial; 0 when no placement exists
    """
    if k < 0 or k > len(b.nonempty_columns()):
        return ZERO

    if not max_workers or max_workers <= 1:
        return poly_sum(_process(b, p, rule, params, want_weight=True)[0] for p in enumerate_placements(b, k))

    logger.debug(f"rook_sum: {count_placements(b, k)} placements across {max_workers} workers")
    placements = enumerate_placements(b, k)
    partials = []
    with futures.ThreadPoolExecutor(max_workers=max_workers) as executor:
        while True:
            chunk = list(itertools.islice(placements, ROOK_SUM_CHUNK))
            if not chunk:
                break
            partials.append(executor.submit(_partial_sum, b, chunk, rule, params))
        return poly_sum(f.result() for f in partials)


def goldman_haglund_weight(b: Board, placement: RookPlacement, s: int) -> LaurentPolynomial:
    """
    Weight of a placement computed cell by cell, Goldman-Haglund style

    A cell above a rook weighs 1; otherwise with v rooks strictly to its right
    in its row it weighs [(s-1)v + 1] if it holds a rook and q^((s-1)v + 1)
    if not. Only defined for boards whose default pre-weights are all 1.

    Raises:
        InvalidParameterError: If some default pre-weight differs from 1
    """
    if any(value != 1 for column in b.preweights for value in column):
        raise InvalidParameterError("Goldman-Haglund weights need every default pre-weight equal to 1")
    placement.validate(b)

    rooks = placement.as_dict()
    rook_rows = {j: b.column_length(j) - h for j, h in rooks.items()}
    factors = []
    for j in range(1, b.n_columns + 1):
        length = b.column_length(j)
        for h in range(1, length + 1):
            rook_height = rooks.get(j)
            if rook_height is not None and h > rook_height:
                continue
            row = length - h
            v = sum(1 for jj, r in rook_rows.items() if jj < j and r == row)
            preweight = (s - 1) * v + 1
            if rook_height == h:
                factors.append(bracket(preweight, 1))
            else:
                factors.append(monomial(1, preweight))
    result = ONE
    for factor in factors:
        result = mul(result, factor)
    return result
