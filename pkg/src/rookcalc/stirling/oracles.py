"""
Brute-force counting oracles for the classical Stirling and Bell numbers
"""
import itertools
import logging
from collections import Counter
from functools import lru_cache
from typing import Iterator, Sequence, Tuple

from ..constants import ORACLE_ENUMERATION_N_MAX
from ..errors import InvalidParameterError, SizeCapError


logger = logging.getLogger(__name__)


def _check(n: int, k: int = 0):
    if n > ORACLE_ENUMERATION_N_MAX:
        raise SizeCapError(f"Oracle enumeration is capped at n = {ORACLE_ENUMERATION_N_MAX}, got {n}")
    if n < 0 or k < 0:
        raise InvalidParameterError(f"Oracle needs n, k >= 0, got n={n}, k={k}")


def restricted_growth_strings(n: int) -> Iterator[Tuple[int, ...]]:
    """
    Every set partition of {1..n} as a restricted growth string

    a_1 = 0 and a_i <= 1 + max(a_1..a_{i-1}); block labels are the values.
    """
    if n == 0:
        yield ()
        return

    def extend(prefix: Tuple[int, ...], top: int) -> Iterator[Tuple[int, ...]]:
        if len(prefix) == n:
            yield prefix
            return
        for label in range(top + 2):
            yield from extend(prefix + (label,), max(top, label))

    yield from extend((0,), 0)


def cycle_count(perm: Sequence[int]) -> int:
    """Number of cycles of a permutation given in one-line form on 0..n-1"""
    seen = [False] * len(perm)
    cycles = 0
    for start in range(len(perm)):
        if seen[start]:
            continue
        cycles += 1
        i = start
        while not seen[i]:
            seen[i] = True
            i = perm[i]
    return cycles


@lru_cache(maxsize=None)
def _block_histogram(n: int) -> Counter:
    logger.debug(f"Enumerating set partitions of a {n}-set")
    return Counter((max(rgs) + 1) if rgs else 0 for rgs in restricted_growth_strings(n))


@lru_cache(maxsize=None)
def _cycle_histogram(n: int) -> Counter:
    logger.debug(f"Enumerating permutations of a {n}-set")
    return Counter(cycle_count(perm) for perm in itertools.permutations(range(n)))


def oracle_partitions(n: int, k: int) -> int:
    """Set partitions of an n-set into exactly k blocks, by enumeration"""
    _check(n, k)
    return _block_histogram(n)[k]


def oracle_cycles(n: int, k: int) -> int:
    """Permutations of an n-set with exactly k cycles, by enumeration"""
    _check(n, k)
    return _cycle_histogram(n)[k]


def oracle_bell(n: int) -> int:
    """All set partitions of an n-set, by enumeration"""
    _check(n)
    return sum(_block_histogram(n).values())
