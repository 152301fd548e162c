"""
Parameter sweeps over identity instances
"""
import logging
from dataclasses import dataclass, field
from typing import Dict, Optional, Tuple

from ..errors import InvalidParameterError
from ..utils import format_range


logger = logging.getLogger(__name__)


@dataclass
class SweepSpec:
    """
    Inclusive integer ranges per parameter name

    A range with lo > hi is empty and makes every sweep over it empty.
    max_total bounds the board size of each instance (n + m for the split
    identities).
    """
    ranges: Dict[str, Tuple[int, int]] = field(default_factory=dict)
    max_total: Optional[int] = None

    def values(self, name: str) -> range:
        """
        Raises:
            InvalidParameterError: If the sweep has no range for the parameter
        """
        if name not in self.ranges:
            raise InvalidParameterError(f"Sweep has no range for parameter {name!r}")
        lo, hi = self.ranges[name]
        return range(lo, hi + 1)

    def with_range(self, name: str, lo: int, hi: int) -> "SweepSpec":
        ranges = dict(self.ranges)
        ranges[name] = (lo, hi)
        return SweepSpec(ranges=ranges, max_total=self.max_total)

    def with_max_total(self, max_total: Optional[int]) -> "SweepSpec":
        return SweepSpec(ranges=dict(self.ranges), max_total=max_total)

    def describe(self) -> str:
        parts = [f"{name}={format_range(lo, hi)}" for name, (lo, hi) in sorted(self.ranges.items())]
        if self.max_total is not None:
            parts.append(f"max_total={self.max_total}")
        return " ".join(parts)
