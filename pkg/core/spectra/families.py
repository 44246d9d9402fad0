"""
Lagrange / Markov 谱研究中反复出现的序列族

【内容】
- ρ 与 S(w)：Freiman 族，σ = λ_0(S(∅))
- 成员族 B(γ)：m(B) 由 λ_0 达到且落在 C∞ 附近的窄区间内
- 周期词族 P_a，ℓ 随 a 增大趋于 C∞
所有字面量都来自注册表
"""

import logging
from typing import Tuple, Union

from core.data import get_registry
from core.words import (
    BiInfiniteSequence,
    FiniteWord,
    OneSidedWord,
    parse_compact,
    parse_marked,
    parse_one_sided,
    parse_sequence,
    y_membership,
)

from .errors import PatternViolationError

logger = logging.getLogger(__name__)


def named_sequence(name: str) -> BiInfiniteSequence:
    """
    注册表中以序列定义的常数对应的序列（如 "f" -> ρ，"sigma" -> S(∅)）

    Raises:
        KeyError: 名称不存在或不是序列定义
    """
    definition = get_registry().get_constant(name)
    if definition is None or definition.get("kind") != "sequence":
        raise KeyError(name)
    return parse_sequence(definition["literal"])


def rho() -> BiInfiniteSequence:
    """ρ，λ_0(ρ) = m(ρ) = f"""
    return named_sequence("f")


def freiman_sequence(w: Union[FiniteWord, str] = "") -> BiInfiniteSequence:
    """
    S(w) = over(1 2_2 1_2 2_4) ; 1 2_2 1_2 2_4 1 2_2 1_2 2_2 1 w 1 over(2_2 1_2 2_2 1 2_2)

    Args:
        w: 任意 {1,2} 有限词（可为空）
    """
    word = parse_compact(w) if isinstance(w, str) else w
    word.require_binary()
    limits = get_registry().limit
    core = f"{limits('freiman_head')} {word.render_compact()}".strip()
    literal = (
        f"{limits('freiman_left')} ; {core} ; "
        f"{limits('freiman_foot')} over({limits('freiman_period')})"
    )
    return parse_sequence(literal)


def membership_sequence(gamma: Union[OneSidedWord, str]) -> BiInfiniteSequence:
    """
    B(γ) = over(1 2_2 1_2 2_4) ; 1 2_2 1_2 2_4 1 2_2 1_2 2_2 1_2 ; γ

    Args:
        gamma: 最终周期的单边 {1,2} 词

    Raises:
        PatternViolationError: 1_2 2_2 1_2 γ 含有 P 中的词
    """
    tail = parse_one_sided(gamma) if isinstance(gamma, str) else gamma
    tail.require_binary()
    limits = get_registry().limit
    guarded = tail.prepend(parse_compact(limits("membership_guard")).digits)
    ok, position = y_membership(guarded)
    if not ok:
        raise PatternViolationError("1_2 2_2 1_2 γ 含有禁止词", position)

    literal = f"{limits('membership_left')} ; {limits('membership_core')} ; {tail.render_compact()}"
    return parse_sequence(literal)


def pa_word(a: int) -> Tuple[FiniteWord, int]:
    """
    周期词 P_a = (2_3 1_3)^a 1 2_4 … 2* … 1_2 (2_3 1_3)^a

    Args:
        a: 块的重复次数，a >= 1

    Returns:
        (P_a, 星号下标)
    """
    if a < 1:
        raise ValueError("a 必须 >= 1")
    limits = get_registry().limit
    block = parse_compact(limits("pa_block")) * a
    centre, star = parse_marked(limits("pa_centre"))
    return block + centre + block, len(block) + star


def pa_sequence(a: int) -> BiInfiniteSequence:
    """overline{P_a}，原点在星号位置"""
    word, star = pa_word(a)
    return BiInfiniteSequence.periodic(word, star)
