"""
Gauss–Cantor 集与深度 n 的构造区间尺度

【尺度公式】
对字母表中 n 个词的拼接 c_1…c_m，取其渐近分母 q_m、q_{m−1}，
∏_{k=1}^{m} [0; c_k, …, c_m + t]^{-2} = (q_m + q_{m−1} t)^2，
t 取 [0; overline{2}] = √2 − 1 与 [0; overline{1}] = (√5 − 1)/2 两个端点尾部；
较小者为 λ_{n,R}，较大者为 Λ_{n,R}
"""

import csv
import itertools
import logging
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, List, Sequence, Tuple, Union

from core.arith import QuadraticSurd
from core.cf import mobius_coefficients, periodic_tail_value
from core.data import get_registry
from core.words import FiniteWord, parse_compact

from .errors import DimensionInputError

logger = logging.getLogger(__name__)

DEFAULT_COST_GUARD = 2 ** 20
# 两个端点尾部
TAIL_DIGITS = (1, 2)


@dataclass(frozen=True)
class GaussCantorSpec:
    """
    有限前缀码字母表 B

    Raises:
        DimensionInputError: 少于两个词、含空词或某个词是另一个的前缀
    """

    alphabet: Tuple[FiniteWord, ...]

    def __post_init__(self) -> None:
        words = tuple(FiniteWord(tuple(w)) for w in self.alphabet)
        if len(words) < 2:
            raise DimensionInputError("字母表至少需要两个词")
        for word in words:
            if not len(word) or any(d < 1 for d in word):
                raise DimensionInputError(f"字母表中的词必须非空且由正整数组成: {word}")
        for a, b in itertools.permutations(words, 2):
            if b.digits[: len(a)] == a.digits:
                raise DimensionInputError(f"字母表不是前缀码: {a} 是 {b} 的前缀")
        object.__setattr__(self, "alphabet", words)

    @classmethod
    def parse(cls, text: str) -> "GaussCantorSpec":
        """"1_2;2_2" 形式的文本，也接受注册表中的字母表名称（如 "pairs"）"""
        named = get_registry().get_alphabet(text.strip())
        items: Iterable[str] = named if named is not None else text.split(";")
        return cls(tuple(parse_compact(item) for item in items if item.strip()))

    def __str__(self) -> str:
        return ";".join(w.render_compact() for w in self.alphabet)


@dataclass(frozen=True)
class ScalePair:
    """一个构造区间的最小、最大尺度（均 > 1）"""

    word: FiniteWord
    lambda_min: QuadraticSurd
    lambda_max: QuadraticSurd


def _scale(q: int, q_prev: int, tail: QuadraticSurd) -> QuadraticSurd:
    root = tail * q_prev + q
    return root * root


def scale_pair(word: Sequence[int]) -> ScalePair:
    """拼接词的 (λ, Λ)"""
    _, _, q, q_prev = mobius_coefficients(tuple(word))
    a, b = (_scale(q, q_prev, periodic_tail_value((d,))) for d in TAIL_DIGITS)
    low, high = (a, b) if a <= b else (b, a)
    return ScalePair(FiniteWord(tuple(word)), low, high)


def interval_scales(
    spec: GaussCantorSpec,
    n: int,
    cost_guard: int = DEFAULT_COST_GUARD,
) -> List[ScalePair]:
    """
    深度 n 的全部构造区间尺度

    Args:
        spec: 字母表
        n: 深度，>= 1
        cost_guard: |B|^n 的上限

    Returns:
        按 B^n 字典序排列的 ScalePair

    Raises:
        DimensionInputError: n < 1 或 |B|^n 超过 cost_guard
    """
    if n < 1:
        raise DimensionInputError("深度必须 >= 1")
    count = len(spec.alphabet) ** n
    if count > cost_guard:
        raise DimensionInputError(f"|B|^n = {count} 超过计算量上限 {cost_guard}")

    pairs = []
    for choice in itertools.product(spec.alphabet, repeat=n):
        digits: Tuple[int, ...] = ()
        for word in choice:
            digits += word.digits
        pairs.append(scale_pair(digits))
    logger.debug("深度 %d：%d 个构造区间", n, len(pairs))
    return pairs


def dump_scales_csv(pairs: Iterable[ScalePair], path: Union[str, Path], digits: int = 20) -> Path:
    """把全部 ScalePair 写成 CSV（word, lambda_min, lambda_max）"""
    target = Path(path)
    with target.open("w", newline="", encoding="utf-8") as handle:
        writer = csv.writer(handle)
        writer.writerow(["word", "lambda_min", "lambda_max"])
        for pair in pairs:
            writer.writerow([
                pair.word.render_compact(),
                pair.lambda_min.enclose_bits(4 * digits).render(digits)[0],
                pair.lambda_max.enclose_bits(4 * digits).render(digits)[0],
            ])
    logger.info("尺度已写入 %s", target)
    return target
