"""
λ_j 在部分赋值窗口上的认证界

【设计原则】
1. λ_j = a_j + [0; a_{j+1}, a_{j+2}, …] + [0; a_{j−1}, a_{j−2}, …]，两侧相互独立
2. 每一侧逐位贪心：已赋值的位照抄，空位按交错规则取极值数字，
   最后一个已赋值位之后接 extremal_tail
3. 两侧的极值尾部都在 Q(√3) 中，端点因此是单域精确值

【注意】
- 未赋值的 a_j 取 1（下界）或 2（上界）
- 窗口之外的位置视为 {1,2} 中的自由位
"""

import logging
from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, Mapping, Tuple

from core.arith import ArithmeticDomainError, Enclosure, QuadraticSurd, SurdSum

from .engine import Direction, extremal_completion, extremal_digit

logger = logging.getLogger(__name__)

# 渲染/分离用的区间宽度
_ENCLOSURE_WIDTH_BITS = 96


@dataclass(frozen=True)
class WindowBound:
    """
    {λ_j(B) : B 扩展窗口} 的认证界

    lower / upper 是可取到的精确端点；enclosure 包含 [lower, upper]
    """

    j: int
    lower: QuadraticSurd
    upper: QuadraticSurd
    enclosure: Enclosure

    @property
    def is_exact(self) -> bool:
        return self.lower == self.upper

    def as_sums(self) -> Tuple[SurdSum, SurdSum]:
        return SurdSum((self.lower,)), SurdSum((self.upper,))


def side_digits(
    window: Mapping[int, int], j: int, step: int, direction: Direction
) -> Tuple[int, ...]:
    """
    一侧到最后一个已赋值位为止的数字（空位按极值规则填充）

    Args:
        window: 位置 -> 数字
        j: λ 的中心位置
        step: +1 前向，−1 后向
        direction: 该侧要取的极值方向
    """
    reach = 0
    for position in window:
        offset = (position - j) * step
        if offset > reach:
            reach = offset
    digits = []
    for k in range(1, reach + 1):
        digit = window.get(j + step * k)
        digits.append(digit if digit is not None else extremal_digit(k, direction))
    return tuple(digits)


@lru_cache(maxsize=1 << 16)
def _side_value(digits: Tuple[int, ...], direction: Direction) -> QuadraticSurd:
    return extremal_completion(digits, direction)


def side_extreme(
    window: Mapping[int, int], j: int, step: int, direction: Direction
) -> QuadraticSurd:
    """一侧 [0; …] 在所有扩展上的极值"""
    return _side_value(side_digits(window, j, step, direction), direction)


def bound_lambda_window(window: Mapping[int, int], j: int) -> WindowBound:
    """
    λ_j 在窗口所有 {1,2} 扩展上的精确上下确界

    Args:
        window: 位置 -> 数字的部分赋值
        j: 中心位置

    Returns:
        WindowBound，lower/upper 由极值补全取到

    Raises:
        ArithmeticDomainError: 窗口为空
    """
    if not window:
        raise ArithmeticDomainError("窗口不能为空")

    centre = window.get(j)
    low_digit = centre if centre is not None else 1
    high_digit = centre if centre is not None else 2

    lower = (
        side_extreme(window, j, +1, Direction.MIN)
        + side_extreme(window, j, -1, Direction.MIN)
        + low_digit
    )
    upper = (
        side_extreme(window, j, +1, Direction.MAX)
        + side_extreme(window, j, -1, Direction.MAX)
        + high_digit
    )
    lo = lower.enclose_bits(_ENCLOSURE_WIDTH_BITS).lo
    hi = upper.enclose_bits(_ENCLOSURE_WIDTH_BITS).hi
    return WindowBound(j=j, lower=lower, upper=upper, enclosure=Enclosure(lo, hi))


def window_from_word(digits: Tuple[int, ...], star: int, j: int = 0) -> Dict[int, int]:
    """带星号的词 -> 以 j 为星号位置的窗口"""
    return {j + k - star: digit for k, digit in enumerate(digits)}
