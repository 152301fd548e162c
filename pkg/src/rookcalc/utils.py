"""
Helper utilities
"""
import os
import logging
from fractions import Fraction
from typing import Any, List, Tuple

from .constants import DEFAULT_THREADS, ENV_THREADS, MAX_THREADS, RANGE_SEPARATOR
from .errors import InvalidParameterError


logger = logging.getLogger(__name__)


def safe_int(value: Any, default: int = 0) -> int:
    """
    Safely convert value to int

    Args:
        value: Value to convert
        default: Default value if conversion fails

    Returns:
        Integer value or default
    """
    try:
        return int(value)
    except (ValueError, TypeError):
        return default


def parse_int(text: str, name: str = "value") -> int:
    """
    Parse a decimal integer

    Raises:
        InvalidParameterError: If the text is not an integer
    """
    try:
        return int(str(text).strip())
    except ValueError:
        raise InvalidParameterError(f"Invalid integer for {name}: {text!r}")


def parse_range(text: str, name: str = "range") -> Tuple[int, int]:
    """
    Parse an inclusive integer range

    Args:
        text: "lo..hi" or a single integer
        name: Parameter name for error messages

    Returns:
        (lo, hi); lo > hi denotes the empty range

    Raises:
        InvalidParameterError: If the range format is invalid
    """
    text = str(text).strip()
    lo_text, sep, hi_text = text.partition(RANGE_SEPARATOR)
    if not sep:
        value = parse_int(text, name)
        return value, value
    return parse_int(lo_text, name), parse_int(hi_text, name)


def format_range(lo: int, hi: int) -> str:
    return f"{lo}{RANGE_SEPARATOR}{hi}"


def parse_rational(text: str) -> Fraction:
    """
    Parse an exact rational such as "1", "-3/4" or "0.5"

    Raises:
        InvalidParameterError: If the text is not a rational number
    """
    try:
        return Fraction(str(text).strip())
    except (ValueError, ZeroDivisionError):
        raise InvalidParameterError(f"Invalid rational number: {text!r}")


def parse_int_list(text: str) -> List[int]:
    """Parse "1,2,3" into [1, 2, 3]"""
    items = [item for item in str(text).split(",") if item.strip()]
    if not items:
        raise InvalidParameterError(f"Empty integer list: {text!r}")
    return [parse_int(item, "list entry") for item in items]


def worker_count(requested: Any = None) -> int:
    """
    Number of worker threads for sweeps

    Args:
        requested: Explicit count; falls back to the ROOKCALC_THREADS environment variable

    Returns:
        Thread count clamped to 1..MAX_THREADS
    """
    if requested is None:
        requested = os.getenv(ENV_THREADS)
    count = safe_int(requested, DEFAULT_THREADS)
    if count < 1 or count > MAX_THREADS:
        logger.warning(f"Thread count {count} out of range, clamping to 1..{MAX_THREADS}")
    return max(1, min(MAX_THREADS, count))
