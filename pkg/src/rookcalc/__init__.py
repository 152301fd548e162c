"""
rookcalc: generalized q-Stirling and Bell numbers from weighted rook placements
"""
from .constants import PROGRAM_VERSION

__version__ = PROGRAM_VERSION
