"""
BiInfiniteSequence - 两侧最终周期的双无限序列

【存储约定】
- left：位置 −1, −2, −3, … 向外读取（与 right 共用 OneSidedWord 机制）
- core：位置 0 … |core|−1
- right：位置 |core|, |core|+1, …

【设计原则】
1. digit_at 对所有整数下标都有定义
2. forward_word / backward_word 直接给出 λ_i 两侧所需的单边词
"""

from dataclasses import dataclass
from typing import List, Tuple

from .word import FiniteWord, OneSidedWord


@dataclass(frozen=True)
class BiInfiniteSequence:
    """(a_n)_{n∈Z}，带有原点"""

    left: OneSidedWord
    core: FiniteWord
    right: OneSidedWord

    # ------------------------------------------------------------------
    # 构造
    # ------------------------------------------------------------------

    @classmethod
    def periodic(cls, word: FiniteWord, origin: int = 0) -> "BiInfiniteSequence":
        """
        纯周期序列 overline{word}，原点位于 word[origin]
        """
        digits = tuple(word)
        k = origin % len(digits)
        rotated = digits[k:] + digits[:k]
        return cls(
            left=OneSidedWord.periodic(rotated[::-1]),
            core=FiniteWord(),
            right=OneSidedWord.periodic(rotated),
        )

    @classmethod
    def parse(cls, text: str) -> "BiInfiniteSequence":
        from .literal import parse_sequence

        return parse_sequence(text)

    # ------------------------------------------------------------------
    # 下标访问
    # ------------------------------------------------------------------

    def digit_at(self, i: int) -> int:
        n = len(self.core)
        if 0 <= i < n:
            return self.core[i]
        if i >= n:
            return self.right.digit_at(i - n)
        return self.left.digit_at(-i - 1)

    def digits(self, start: int, stop: int) -> Tuple[int, ...]:
        return tuple(self.digit_at(i) for i in range(start, stop))

    @property
    def right_periodic_start(self) -> int:
        """右尾周期部分的第一个位置"""
        return len(self.core) + len(self.right.preperiod)

    @property
    def left_periodic_start(self) -> int:
        """左尾周期部分（向外）的第一个位置"""
        return -1 - len(self.left.preperiod)

    def forward_word(self, i: int) -> OneSidedWord:
        """a_i, a_{i+1}, a_{i+2}, …"""
        n = len(self.core)
        if i >= n:
            return self.right.drop(i - n)
        if i >= 0:
            return self.right.prepend(self.core.digits[i:])
        head = self.left.prefix(-i)[::-1]
        return self.right.prepend(head + self.core.digits)

    def backward_word(self, i: int) -> OneSidedWord:
        """a_{i−1}, a_{i−2}, …（从 i−1 向外）"""
        j = i - 1
        n = len(self.core)
        if j < 0:
            return self.left.drop(-j - 1)
        if j < n:
            return self.left.prepend(self.core.digits[: j + 1][::-1])
        head = self.right.prefix(j - n + 1)[::-1]
        return self.left.prepend(head + self.core.digits[::-1])

    # ------------------------------------------------------------------
    # 变换
    # ------------------------------------------------------------------

    def shift(self, k: int) -> "BiInfiniteSequence":
        """B_i = A_{i+k}"""
        return BiInfiniteSequence(
            left=self.backward_word(k),
            core=FiniteWord(),
            right=self.forward_word(k),
        )

    def reversed(self) -> "BiInfiniteSequence":
        """R_k = A_{−k}；λ_k(R) = λ_{−k}(A)"""
        return BiInfiniteSequence(
            left=self.forward_word(1),
            core=FiniteWord((self.digit_at(0),)),
            right=self.left,
        )

    def is_binary(self) -> bool:
        return self.left.is_binary() and self.core.is_binary() and self.right.is_binary()

    def require_binary(self) -> "BiInfiniteSequence":
        self.left.require_binary()
        self.core.require_binary()
        self.right.require_binary()
        return self

    def to_literal(self) -> str:
        """
        渲染为序列字面量（分号紧跟在第 0 位之后）
        """
        written_left = self.backward_word(1)  # a_0, a_{−1}, …
        left_text = f"over({written_left.period.transpose().render_compact()})"
        if len(written_left.preperiod):
            left_text += " " + written_left.preperiod.transpose().render_compact()
        right_text = self.forward_word(1).render_compact()
        return f"{left_text} ; {right_text}"


def find_pattern(
    haystack: BiInfiniteSequence, needle: FiniteWord, start: int, stop: int
) -> List[int]:
    """
    在窗口 [start, stop) 中查找 needle 的所有起始位置
    """
    width = len(needle)
    if width == 0:
        return list(range(start, stop))
    target = tuple(needle)
    return [s for s in range(start, stop) if haystack.digits(s, s + width) == target]
