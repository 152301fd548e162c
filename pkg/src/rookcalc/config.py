"""
Configuration management for rookcalc sweep presets
"""
import os
import logging
import yaml
from dataclasses import dataclass, field
from typing import Any, Dict, Optional, Tuple

from .constants import DEFAULT_PRESET, ENV_CONFIG
from .errors import InvalidParameterError
from .identities.sweep import SweepSpec
from .utils import parse_range


logger = logging.getLogger(__name__)

BUILTIN_PRESETS = """
desk:
  max_total: 6
  ranges:
    n: 0..6
    m: 0..6
    k: 0..6
    j: 0..6
    s: -1..3
    alpha: -1..2
    beta: -1..2
    rho: -1..2
    c: -1..2
    d: -1..2
    x0: 0..2

quick:
  max_total: 3
  ranges:
    n: 0..3
    m: 0..3
    k: 0..3
    j: 0..3
    s: 0..2
    alpha: 0..1
    beta: 0..1
    rho: 0..1
    c: 0..1
    d: 0..1
    x0: 1..2
"""


@dataclass
class SweepPreset:
    """Named sweep configuration"""
    name: str
    ranges: Dict[str, Tuple[int, int]] = field(default_factory=dict)
    max_total: Optional[int] = None

    def to_spec(self) -> SweepSpec:
        return SweepSpec(ranges=dict(self.ranges), max_total=self.max_total)


def _parse_bounds(name: str, value: Any) -> Tuple[int, int]:
    if isinstance(value, (list, tuple)):
        if len(value) != 2:
            raise InvalidParameterError(f"Range for {name} must have two bounds, got {value}")
        return int(value[0]), int(value[1])
    return parse_range(str(value), name)


def _parse_preset(name: str, data: Dict[str, Any]) -> SweepPreset:
    if not isinstance(data, dict):
        raise InvalidParameterError(f"Preset {name!r} must be a mapping")
    ranges = {key: _parse_bounds(key, value) for key, value in (data.get('ranges') or {}).items()}
    max_total = data.get('max_total')
    return SweepPreset(name=name, ranges=ranges, max_total=int(max_total) if max_total is not None else None)


def parse_presets(text: str) -> Dict[str, SweepPreset]:
    """
    Parse sweep presets from YAML text

    Args:
        text: YAML document mapping preset names to {max_total, ranges}

    Returns:
        Dict of preset name to SweepPreset

    Example presets.yaml:
        tiny:
          max_total: 2
          ranges:
            n: 0..2
            m: [0, 2]
            s: -1..1
    """
    try:
        data = yaml.safe_load(text) or {}
    except yaml.YAMLError as e:
        raise InvalidParameterError(f"Invalid preset YAML: {e}")
    if not isinstance(data, dict):
        raise InvalidParameterError("Preset YAML must map preset names to settings")
    return {str(name): _parse_preset(str(name), body) for name, body in data.items()}


def load_presets(config_path: Optional[str] = None) -> Dict[str, SweepPreset]:
    """
    Built-in presets, overlaid with a YAML file

    Args:
        config_path: Preset file; defaults to the ROOKCALC_CONFIG environment variable

    Returns:
        Dict of preset name to SweepPreset
    """
    presets = parse_presets(BUILTIN_PRESETS)
    config_path = config_path or os.getenv(ENV_CONFIG)
    if config_path:
        if not os.path.exists(config_path):
            raise InvalidParameterError(f"Config file not found: {config_path}")
        with open(config_path, 'r') as f:
            presets.update(parse_presets(f.read()))
        logger.info(f"Loaded sweep presets from {config_path}")
    return presets


def load_preset(name: str = DEFAULT_PRESET, config_path: Optional[str] = None) -> SweepPreset:
    """
    Look up one preset by name

    Raises:
        InvalidParameterError: If no such preset exists
    """
    presets = load_presets(config_path)
    if name not in presets:
        raise InvalidParameterError(f"Unknown preset {name!r}, expected one of {sorted(presets)}")
    return presets[name]
