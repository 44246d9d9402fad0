"""
Enclosure - 认证有理区间

【约定】
- lo <= hi
- 每个产生 Enclosure 的操作都必须说明它认证的是哪个实数
"""

from dataclasses import dataclass
from typing import Any, Dict, Tuple

from gmpy2 import mpq

from .errors import ArithmeticDomainError
from .rational import Rational, rational_to_text, render_certified


@dataclass(frozen=True)
class Enclosure:
    """有理区间 [lo, hi]，保证包含被认证的实数"""

    lo: Rational
    hi: Rational

    def __post_init__(self) -> None:
        object.__setattr__(self, "lo", mpq(self.lo))
        object.__setattr__(self, "hi", mpq(self.hi))
        if self.lo > self.hi:
            raise ArithmeticDomainError(f"区间端点倒置: [{self.lo}, {self.hi}]")

    @classmethod
    def exact(cls, value: Rational) -> "Enclosure":
        """退化区间（精确值）"""
        return cls(value, value)

    @property
    def width(self) -> Rational:
        return self.hi - self.lo

    def contains(self, value: Rational) -> bool:
        return self.lo <= value <= self.hi

    def __add__(self, other: "Enclosure") -> "Enclosure":
        if not isinstance(other, Enclosure):
            other = Enclosure.exact(mpq(other))
        return Enclosure(self.lo + other.lo, self.hi + other.hi)

    __radd__ = __add__

    def hull(self, other: "Enclosure") -> "Enclosure":
        return Enclosure(min(self.lo, other.lo), max(self.hi, other.hi))

    def is_below(self, other: "Enclosure") -> bool:
        """严格分离：本区间完全位于 other 左侧"""
        return self.hi < other.lo

    def render(self, digits: int) -> Tuple[str, int]:
        """
        认证十进制渲染

        Returns:
            (文本, 认证小数位数)
        """
        return render_certified(self.lo, self.hi, digits)

    def to_dict(self) -> Dict[str, Any]:
        return {"lo": rational_to_text(self.lo), "hi": rational_to_text(self.hi)}
