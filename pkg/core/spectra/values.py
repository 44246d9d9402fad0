"""
SpectrumValue / λ_i / Lagrange 值

【设计原则】
1. λ_i(A) = [a_i; a_{i+1}, …] + [0; a_{i−1}, a_{i−2}, …]，两侧分别精确求值
2. 结果保存为 SurdSum，区间只在渲染时按需收紧
3. 纯周期序列的 ℓ 与 m 相等，都是各相位 λ 的最大值
"""

import logging
from dataclasses import dataclass
from typing import Any, Callable, Dict, List, Tuple, Union

from gmpy2 import mpq

from core.arith import Enclosure, SurdLike, SurdSum, coerce_sum, enclose, render_certified
from core.cf import eval_zero_tail
from core.words import BiInfiniteSequence, FiniteWord, parse_compact

from .errors import UnsupportedSequenceError

logger = logging.getLogger(__name__)

# 默认区间宽度 10^-DEFAULT_WIDTH_DIGITS
DEFAULT_WIDTH_DIGITS = 40
# 渲染时收紧区间的最大轮数
_RENDER_ROUNDS = 8


@dataclass(frozen=True)
class SpectrumValue:
    """精确值及其认证区间"""

    value: SurdSum
    enclosure: Enclosure

    @classmethod
    def of(cls, value: SurdSum, width_digits: int = DEFAULT_WIDTH_DIGITS) -> "SpectrumValue":
        return cls(value, enclose(value, mpq(1, 10 ** width_digits)))

    def render(self, digits: int) -> Tuple[str, int]:
        """
        认证十进制渲染

        区间不够窄时逐轮收紧，直到认证位数达到 digits

        Returns:
            (文本, 认证小数位数)
        """
        enc = self.enclosure
        text, certified = enc.render(digits)
        width_digits = digits + 2
        for _ in range(_RENDER_ROUNDS):
            if certified >= digits:
                break
            enc = enclose(self.value, mpq(1, 10 ** width_digits))
            text, certified = render_certified(enc.lo, enc.hi, digits)
            width_digits += 10
        return text, certified

    def compare(self, other: Union["SpectrumValue", SurdSum]):
        other_value = other.value if isinstance(other, SpectrumValue) else other
        return self.value.compare(other_value)

    def __float__(self) -> float:
        return float(self.value)

    def to_dict(self, digits: int) -> Dict[str, Any]:
        text, certified = self.render(digits)
        return {
            "value_decimal": text,
            "certified_digits": certified,
            "exact": self.value.to_dict(),
        }


def _require_sequence(A: Any) -> BiInfiniteSequence:
    if not isinstance(A, BiInfiniteSequence):
        raise UnsupportedSequenceError(
            f"只支持两侧最终周期的序列，收到 {type(A).__name__}"
        )
    return A


def lambda_sum(A: BiInfiniteSequence, i: int) -> SurdSum:
    """λ_i(A) 的精确值"""
    A = _require_sequence(A)
    forward = A.forward_word(i)
    head = forward.digit_at(0)
    return SurdSum((eval_zero_tail(forward.drop(1)), eval_zero_tail(A.backward_word(i)), head))


def lambda_at(A: BiInfiniteSequence, i: int) -> SpectrumValue:
    """
    Perron 函数 λ_i(A)

    Args:
        A: 两侧最终周期的序列
        i: 位置

    Raises:
        UnsupportedSequenceError: A 不是 BiInfiniteSequence
    """
    return SpectrumValue.of(lambda_sum(A, i))


def phase_values(period: FiniteWord) -> List[SurdSum]:
    """纯周期序列 overline{period} 在每个相位的 λ 值"""
    if not len(period):
        raise ValueError("周期不能为空")
    return [lambda_sum(BiInfiniteSequence.periodic(period, r), 0) for r in range(len(period))]


def max_with_position(values: List[SurdSum]) -> Tuple[int, SurdSum]:
    """精确比较取最大值；并列时取最小下标"""
    best_index, best = 0, values[0]
    for index in range(1, len(values)):
        if values[index] > best:
            best_index, best = index, values[index]
    return best_index, best


def lagrange_value(w: Union[FiniteWord, str]) -> SpectrumValue:
    """
    ℓ(overline{w}) = m(overline{w})，各相位 λ 的最大值

    Args:
        w: 非空 {1,2} 词，或其紧凑文本

    Raises:
        ValueError: 空词
        AlphabetError: 含 {1,2} 以外的数字
    """
    word = parse_compact(w) if isinstance(w, str) else w
    if not len(word):
        raise ValueError("Lagrange 值需要非空周期")
    word.require_binary()
    phase, best = max_with_position(phase_values(word))
    logger.debug("ℓ(over(%s)) 在相位 %d 取到", word, phase)
    return SpectrumValue.of(best)


def decimal_renderer(digits: int) -> Callable[[SurdLike], str]:
    """报告用的渲染函数：精确值 -> digits 位认证十进制文本"""

    def render(value: SurdLike) -> str:
        text, _ = SpectrumValue.of(coerce_sum(value), width_digits=digits + 4).render(digits)
        return text

    return render
