"""
cf-engine - 连分数的精确求值与比较

【设计原则】
1. 有限连分数用收敛子递推求出精确有理数
2. 周期尾部是其 Möbius 变换的吸引不动点，用 surd_from_fixed_point 精确求解
3. 比较完全符号化：第一个不同的下标与交错规则决定大小

【约定】
- 所有单边词都按零首项 [0; b_1, b_2, …] 理解
- 带尾 t = [0; 余下部分] 时：[0; w, 余下] = (p_m + p_{m−1}·t) / (q_m + q_{m−1}·t)
"""

import logging
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from math import lcm
from typing import Iterable, Sequence, Tuple

from gmpy2 import mpq

from core.arith import Ordering, QuadraticSurd, Rational, surd_from_fixed_point
from core.words import OneSidedWord

logger = logging.getLogger(__name__)


class Direction(Enum):
    """极值方向"""

    MIN = "min"
    MAX = "max"


@dataclass(frozen=True)
class Convergents:
    """
    收敛子 p_k/q_k，k = 0 … n

    行列式恒等式 p_k q_{k−1} − p_{k−1} q_k = (−1)^{k−1}
    """

    pairs: Tuple[Tuple[int, int], ...]

    @classmethod
    def of(cls, a0: int, digits: Iterable[int]) -> "Convergents":
        p_prev, q_prev = 1, 0
        p, q = a0, 1
        pairs = [(p, q)]
        for digit in digits:
            p, p_prev = digit * p + p_prev, p
            q, q_prev = digit * q + q_prev, q
            pairs.append((p, q))
        return cls(tuple(pairs))

    def __len__(self) -> int:
        return len(self.pairs)

    def __getitem__(self, k: int) -> Tuple[int, int]:
        return self.pairs[k]

    def last(self) -> Tuple[int, int]:
        return self.pairs[-1]

    def determinant_holds(self) -> bool:
        for k in range(1, len(self.pairs)):
            p, q = self.pairs[k]
            p_prev, q_prev = self.pairs[k - 1]
            if p * q_prev - p_prev * q != (-1) ** (k - 1):
                return False
        return True


def mobius_coefficients(digits: Sequence[int]) -> Tuple[int, int, int, int]:
    """
    [0; digits, 尾] 的 Möbius 系数 (p_m, p_{m−1}, q_m, q_{m−1})

    值 = (p_m + p_{m−1}·t) / (q_m + q_{m−1}·t)，t 为尾部的零首项值
    """
    p_prev, q_prev = 1, 0
    p, q = 0, 1
    for digit in digits:
        p, p_prev = digit * p + p_prev, p
        q, q_prev = digit * q + q_prev, q
    return p, p_prev, q, q_prev


def apply_prefix(digits: Sequence[int], tail: QuadraticSurd) -> QuadraticSurd:
    """[0; digits, 尾]，tail 为尾部的零首项值"""
    if not digits:
        return tail
    p, p_prev, q, q_prev = mobius_coefficients(digits)
    return (tail * p_prev + p) / (tail * q_prev + q)


def eval_finite(a0: int, word: Iterable[int]) -> Rational:
    """[a0; w] 的精确有理值"""
    p, q = Convergents.of(a0, word).last()
    return mpq(p, q)


@lru_cache(maxsize=4096)
def _periodic_tail(period: Tuple[int, ...]) -> QuadraticSurd:
    p, p_prev, q, q_prev = mobius_coefficients(period)
    # t = (p + p'·t)/(q + q'·t)  ⇒  q'·t² + (q − p')·t − p = 0
    root = surd_from_fixed_point(q_prev, q - p_prev, -p, +1)
    if not 0 < root < 1:
        raise AssertionError(f"周期 {period} 的不动点不在 (0,1) 内")
    return root


def periodic_tail_value(period: Sequence[int]) -> QuadraticSurd:
    """[0; overline{period}]"""
    return _periodic_tail(tuple(period))


def eval_zero_tail(word: OneSidedWord) -> QuadraticSurd:
    """[0; u, overline{v}]"""
    return apply_prefix(word.preperiod.digits, periodic_tail_value(word.period.digits))


def eval_periodic(a0: int, word: OneSidedWord) -> QuadraticSurd:
    """[a0; u, overline{v}] 的精确值（规范形式）"""
    return eval_zero_tail(word) + a0


def first_difference(x: OneSidedWord, y: OneSidedWord) -> int:
    """
    第一个不同数字的下标（从 1 开始）；完全相同返回 0
    """
    if x == y:
        return 0
    horizon = max(len(x.preperiod), len(y.preperiod)) + lcm(len(x.period), len(y.period))
    for k in range(horizon):
        if x.digit_at(k) != y.digit_at(k):
            return k + 1
    return 0


def compare_words(x: OneSidedWord, y: OneSidedWord) -> Ordering:
    """
    按交错规则比较 [0; x] 与 [0; y]

    第一个不同下标为 k 时：[0; x] > [0; y] 当且仅当 (−1)^k (x_k − y_k) > 0
    """
    k = first_difference(x, y)
    if k == 0:
        return Ordering.EQUAL
    delta = x.digit_at(k - 1) - y.digit_at(k - 1)
    return Ordering.GREATER if (-1) ** k * delta > 0 else Ordering.LESS


def extremal_digit(index: int, direction: Direction) -> int:
    """
    第 index 位（从 1 开始）在 {1,2} 中的最优选择

    奇数位：数字越小值越大；偶数位：数字越大值越大
    """
    wants_large_value = direction is Direction.MAX
    odd = index % 2 == 1
    return 1 if odd == wants_large_value else 2


def extremal_tail(prefix_length: int, direction: Direction) -> OneSidedWord:
    """
    使 [0; w, s] 在 s ∈ {1,2}^∞ 上取最大（最小）的尾部，|w| = prefix_length

    结果是按奇偶定相位的 overline{1,2} 或 overline{2,1}
    """
    first = extremal_digit(prefix_length + 1, direction)
    return OneSidedWord.periodic((first, 3 - first))


def extremal_completion(prefix: Sequence[int], direction: Direction) -> QuadraticSurd:
    """[0; prefix, extremal_tail]，值属于 Q(√3)"""
    tail = extremal_tail(len(prefix), direction)
    return apply_prefix(tuple(prefix), periodic_tail_value(tail.period.digits))


def agreement_gap(common_prefix: Iterable[int]) -> Rational:
    """
    共享前缀 w（长度 m）的两个连分数之差的上界

    两者都落在端点为 p_m/q_m 与 (p_m+p_{m−1})/(q_m+q_{m−1}) 的柱集中，
    长度为 1/(q_m (q_m + q_{m−1}))
    """
    _, _, q, q_prev = mobius_coefficients(tuple(common_prefix))
    return mpq(1, q * (q + q_prev))
