"""
Memoized recurrence tables for generalized q-Stirling numbers

Three kinds share one table type:
    s      S_{s,q}[n,k]
    cd     S^{c,d}_{s,q}[n,k]
    type2  Type II numbers S^{1,1,q}_{n,k}(alpha, beta, rho), read as
           S^{beta-alpha,-rho}_{1-beta,q}[n,k]

Tables fill lazily row by row and are cached per parameter tuple; the
least recently used tables are dropped beyond TABLE_CACHE_SIZE.
"""
import logging
import threading
from collections import OrderedDict
from dataclasses import dataclass
from enum import Enum
from typing import List, Tuple

from ..constants import TABLE_CACHE_SIZE, TABLE_KIND_CD, TABLE_KIND_S, TABLE_KIND_TYPE2
from ..errors import InvalidParameterError
from ..qlaurent import LaurentPolynomial, ONE, ZERO, add, bracket, monomial, mul, scale


logger = logging.getLogger(__name__)


class TableKind(Enum):
    S = TABLE_KIND_S
    CD = TABLE_KIND_CD
    TYPE2 = TABLE_KIND_TYPE2

    @classmethod
    def parse(cls, name: str) -> "TableKind":
        try:
            return cls(name.strip().lower())
        except ValueError:
            raise InvalidParameterError(f"Unknown table kind {name!r}, expected one of {[k.value for k in cls]}")


@dataclass(frozen=True)
class RecurrenceStep:
    """Coefficients of one recurrence step: value = q^exponent * left + [bracket_arg] * below"""
    exponent: int
    bracket_arg: int


class StirlingTable:
    """
    Lazily filled triangle of one kind and parameter tuple

    Args:
        kind: Table kind
        params: (s,) for kind s, (s, c, d) for kind cd, (alpha, beta, rho) for type2
    """

    def __init__(self, kind: TableKind, params: Tuple[int, ...]):
        expected = 1 if kind is TableKind.S else 3
        if len(params) != expected:
            raise InvalidParameterError(f"Table kind {kind.value} takes {expected} parameters, got {len(params)}")
        self.kind = kind
        self.params = tuple(int(p) for p in params)
        if kind is TableKind.S:
            self.s, self.c, self.d = self.params[0], 1, 0
        elif kind is TableKind.CD:
            self.s, self.c, self.d = self.params
        else:
            alpha, beta, rho = self.params
            self.s, self.c, self.d = 1 - beta, beta - alpha, -rho
        self._rows: List[Tuple[LaurentPolynomial, ...]] = [(ONE,)]
        self._lock = threading.Lock()

    def __repr__(self) -> str:
        return f"StirlingTable({self.kind.value}, {self.params})"

    def step(self, n: int, k: int) -> RecurrenceStep:
        """Coefficients expressing entry (n, k) through row n-1, n >= 1"""
        if self.kind is TableKind.S:
            s = self.s
            return RecurrenceStep(s * (n - 1) - (s - 1) * (k - 1), s * (n - 1) - (s - 1) * k)
        c, d, s = self.c, self.d, self.s
        return RecurrenceStep(c * (n - 1) + d + (n - k) * (s - 1), c * (n - 1) + d + (n - k - 1) * (s - 1))

    def _entry(self, row: Tuple[LaurentPolynomial, ...], k: int) -> LaurentPolynomial:
        return row[k] if 0 <= k < len(row) else ZERO

    def _compute(self, n: int, k: int, previous: Tuple[LaurentPolynomial, ...]) -> LaurentPolynomial:
        if k == 0 and self.kind is TableKind.S:
            return ZERO
        st = self.step(n, k)
        left = mul(monomial(1, st.exponent), self._entry(previous, k - 1)) if k >= 1 else ZERO
        below = mul(bracket(st.bracket_arg, 1), self._entry(previous, k))
        return add(left, below)

    def _fill(self, n: int):
        with self._lock:
            while len(self._rows) <= n:
                m = len(self._rows)
                previous = self._rows[m - 1]
                self._rows.append(tuple(self._compute(m, k, previous) for k in range(m + 1)))
                logger.debug(f"{self!r}: filled row {m}")

    def value(self, n: int, k: int) -> LaurentPolynomial:
        """Entry (n, k); 0 for k < 0 or k > n"""
        if n < 0:
            raise InvalidParameterError(f"Table index n must be >= 0, got {n}")
        if k < 0 or k > n:
            return ZERO
        self._fill(n)
        return self._rows[n][k]

    def row(self, n: int) -> List[LaurentPolynomial]:
        if n < 0:
            raise InvalidParameterError(f"Table index n must be >= 0, got {n}")
        self._fill(n)
        return list(self._rows[n])

    def filled_rows(self) -> int:
        return len(self._rows)

    def audit(self) -> List[Tuple[int, int]]:
        """
        Re-check every stored entry against its recurrence

        Returns:
            (n, k) of every entry that does not satisfy it; empty when consistent
        """
        rows = list(self._rows)
        bad = []
        if rows[0] != (ONE,):
            bad.append((0, 0))
        for n in range(1, len(rows)):
            for k in range(n + 1):
                if rows[n][k] != self._compute(n, k, rows[n - 1]):
                    bad.append((n, k))
        if bad:
            logger.warning(f"{self!r}: {len(bad)} entries fail their recurrence")
        return bad


_TABLES: "OrderedDict[Tuple[TableKind, Tuple[int, ...]], StirlingTable]" = OrderedDict()
_TABLES_LOCK = threading.Lock()


def get_table(kind: TableKind, params: Tuple[int, ...]) -> StirlingTable:
    """Shared table for a kind and parameter tuple"""
    key = (kind, tuple(params))
    with _TABLES_LOCK:
        table = _TABLES.get(key)
        if table is None:
            table = StirlingTable(kind, key[1])
            _TABLES[key] = table
            if len(_TABLES) > TABLE_CACHE_SIZE:
                evicted, _ = _TABLES.popitem(last=False)
                logger.debug(f"Dropped cached table {evicted[0].value}{evicted[1]}")
        else:
            _TABLES.move_to_end(key)
        return table


def cached_table_count() -> int:
    with _TABLES_LOCK:
        return len(_TABLES)


def clear_tables():
    with _TABLES_LOCK:
        _TABLES.clear()


def stirling_s(n: int, k: int, s: int) -> LaurentPolynomial:
    """S_{s,q}[n,k] by its recurrence, with S[n,0] = S[0,n] = delta_{0,n}"""
    return get_table(TableKind.S, (s,)).value(n, k)


def stirling_cd(n: int, k: int, s: int, c: int, d: int) -> LaurentPolynomial:
    """
    S^{c,d}_{s,q}[n,k] by its recurrence

    S[0,0] = 1 and S[n,k] = 0 outside 0 <= k <= n. Column k = 0 is computed,
    not forced: it vanishes for n > 0 exactly when [d] = 0 stops the chain.
    """
    return get_table(TableKind.CD, (s, c, d)).value(n, k)


def type2(n: int, k: int, alpha: int, beta: int, rho: int) -> LaurentPolynomial:
    """Type II generalized q-Stirling number S^{1,1,q}_{n,k}(alpha, beta, rho)"""
    return stirling_cd(n, k, 1 - beta, beta - alpha, -rho)


def mssha(n: int, k: int, s: int, h: int) -> LaurentPolynomial:
    """h^(n-k) * S_{s,q}[n,k], the normal-ordering scaling"""
    if k < 0 or k > n:
        return ZERO
    return scale(stirling_s(n, k, s), h ** (n - k))


def stirling_table(kind: TableKind, params: Tuple[int, ...], n_max: int) -> List[List[LaurentPolynomial]]:
    """Rows 0..n_max of a table"""
    table = get_table(kind, params)
    return [table.row(n) for n in range(n_max + 1)]


def remmel_wachs_step(n: int, k: int, alpha: int, beta: int, rho: int, sign: int) -> RecurrenceStep:
    """
    Coefficients of the Type II recursion at p = 1 with rho entering as sign*rho

        T[n,k] = q^((k-1)beta - (n-1)alpha + sign*rho) T[n-1,k-1]
                 + [k beta - (n-1)alpha + sign*rho] T[n-1,k]
    """
    return RecurrenceStep(
        (k - 1) * beta - (n - 1) * alpha + sign * rho,
        k * beta - (n - 1) * alpha + sign * rho,
    )


def replay_remmel_wachs(n_max: int, alpha: int, beta: int, rho: int, sign: int) -> List[Tuple[int, int]]:
    """
    Replay the Type II recursion for 1 <= k <= n <= n_max against type2 values

    Args:
        sign: +1 for rho as written, -1 for rho negated

    Returns:
        (n, k) of every step that does not reproduce the table
    """
    if sign not in (1, -1):
        raise InvalidParameterError(f"sign must be +1 or -1, got {sign}")
    bad = []
    for n in range(1, n_max + 1):
        for k in range(1, n + 1):
            st = remmel_wachs_step(n, k, alpha, beta, rho, sign)
            expected = add(
                mul(monomial(1, st.exponent), type2(n - 1, k - 1, alpha, beta, rho)),
                mul(bracket(st.bracket_arg, 1), type2(n - 1, k, alpha, beta, rho)),
            )
            if expected != type2(n, k, alpha, beta, rho):
                bad.append((n, k))
    return bad
