"""
SpectraLogic - λ_i、Markov 值与 Lagrange 值的结果编排
"""

from typing import Any, Dict, Optional, Tuple

from core.data import get_registry
from core.spectra import (
    decimal_renderer,
    lagrange_value,
    lambda_at,
    markov_value,
    named_sequence,
    replay_certificate,
)
from core.words import BiInfiniteSequence, parse_sequence

DEFAULT_DIGITS = 20


def resolve_sequence(text: str) -> BiInfiniteSequence:
    """序列字面量；也接受注册表中以序列定义的常数名（如 "f" 即 ρ）"""
    definition = get_registry().get_constant(text.strip())
    if definition is not None and definition.get("kind") == "sequence":
        return named_sequence(text.strip())
    return parse_sequence(text)


def lambda_result(text: str, index: int, digits: Optional[int]) -> Tuple[Dict[str, Any], Optional[bool]]:
    digits = DEFAULT_DIGITS if digits is None else digits
    sequence = resolve_sequence(text)
    return {
        "sequence": sequence.to_literal(),
        "index": index,
        "lambda": lambda_at(sequence, index).to_dict(digits),
    }, None


def markov_result(text: str, digits: Optional[int]) -> Tuple[Dict[str, Any], Optional[bool]]:
    """m(A) 及证书；证书复核的结论作为验证结论"""
    digits = DEFAULT_DIGITS if digits is None else digits
    sequence = resolve_sequence(text)
    value, certificate = markov_value(sequence)
    replayed = replay_certificate(sequence, value.value, certificate)
    return {
        "sequence": sequence.to_literal(),
        "markov": value.to_dict(digits),
        "certificate": certificate.to_dict(decimal_renderer(digits)),
        "replayed": replayed,
    }, replayed


def lagrange_result(word: str, digits: Optional[int]) -> Tuple[Dict[str, Any], Optional[bool]]:
    digits = DEFAULT_DIGITS if digits is None else digits
    return {"word": word, "lagrange": lagrange_value(word).to_dict(digits)}, None
