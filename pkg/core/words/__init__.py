"""
words - 有限词、单边周期词与双无限序列
"""

from .errors import AlphabetError, WordParseError
from .literal import parse_left, parse_one_sided, parse_sequence
from .patterns import PatternSet, build_pattern_set, canonical_pattern_set, y_membership
from .sequence import BiInfiniteSequence, find_pattern
from .word import (
    BINARY_ALPHABET,
    FiniteWord,
    OneSidedWord,
    parse_compact,
    parse_marked,
    render_compact,
    transpose,
)

__all__ = [
    "AlphabetError",
    "BINARY_ALPHABET",
    "BiInfiniteSequence",
    "FiniteWord",
    "OneSidedWord",
    "PatternSet",
    "WordParseError",
    "build_pattern_set",
    "canonical_pattern_set",
    "find_pattern",
    "parse_compact",
    "parse_left",
    "parse_marked",
    "parse_one_sided",
    "parse_sequence",
    "render_compact",
    "transpose",
    "y_membership",
]
