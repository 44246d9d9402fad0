"""
Rational - 任意精度有理数

【设计原则】
1. 所有认证界的底层载体
2. 直接使用 gmpy2.mpq，不自行实现分数运算
3. 只提供构造、解析与十进制截断渲染等辅助函数

【规范形式】
- 分母恒为正
- 分子分母互素（mpq 自动约分）
"""

import re
from typing import Optional, Tuple, Union

from gmpy2 import mpq, mpz

from .errors import ArithmeticDomainError

# Rational 即 mpq 类型，供类型标注使用
Rational = type(mpq(0))

RationalLike = Union[int, str, "Rational"]

_DECIMAL_PATTERN = re.compile(
    r"^\s*(?P<sign>[+-]?)(?P<int>\d*)(?:\.(?P<frac>\d*))?(?:[eE](?P<exp>[+-]?\d+))?\s*$"
)


def as_rational(value: RationalLike) -> Rational:
    """
    将整数、mpq 或文本转换为 Rational

    文本支持三种写法："63/20"、"3.1181201786"、"1e-9"

    Args:
        value: 待转换的值

    Returns:
        规范形式的 mpq

    Raises:
        ArithmeticDomainError: 文本无法解析
    """
    if isinstance(value, str):
        return parse_rational(value)
    if isinstance(value, float):
        raise ArithmeticDomainError("浮点数不能作为认证输入，请使用十进制字符串")
    return mpq(value)


def parse_rational(text: str) -> Rational:
    """解析分数或十进制文本（不经过二进制浮点）"""
    if "/" in text:
        num, _, den = text.partition("/")
        try:
            return mpq(int(num.strip()), int(den.strip()))
        except (ValueError, ZeroDivisionError) as exc:
            raise ArithmeticDomainError(f"无法解析有理数: {text!r}") from exc

    match = _DECIMAL_PATTERN.match(text)
    if match is None or not (match.group("int") or match.group("frac")):
        raise ArithmeticDomainError(f"无法解析有理数: {text!r}")

    frac = match.group("frac") or ""
    digits = int((match.group("int") or "0") + frac)
    exponent = int(match.group("exp") or 0) - len(frac)
    value = mpq(digits) * mpq(10) ** exponent if exponent >= 0 else mpq(digits, 10 ** (-exponent))
    return -value if match.group("sign") == "-" else value


def floor_rational(value: Rational) -> int:
    """有理数向下取整"""
    return int(mpz(value.numerator) // mpz(value.denominator))


def render_certified(
    lo: Rational, hi: Rational, digits: int
) -> Tuple[str, int]:
    """
    渲染区间 [lo, hi] 两端一致的十进制位

    采用向零截断：只输出两端点截断结果完全相同的位数，
    因此每一位都是经过认证的。

    Args:
        lo: 下端点
        hi: 上端点
        digits: 期望的小数位数上限

    Returns:
        (十进制文本, 实际认证的小数位数)；区间跨零时返回 ("", -1)
    """
    if lo < 0 < hi:
        return "", -1

    negative = hi <= 0 and lo < 0
    a, b = (-hi, -lo) if negative else (lo, hi)

    certified: Optional[int] = None
    for n in range(digits, -1, -1):
        scale = mpq(10) ** n
        if floor_rational(a * scale) == floor_rational(b * scale):
            certified = n
            break

    if certified is None:
        return "", -1

    truncated = floor_rational(a * mpq(10) ** certified)
    int_part, frac_part = divmod(truncated, 10 ** certified) if certified else (truncated, 0)
    text = str(int_part)
    if certified:
        text += "." + str(frac_part).rjust(certified, "0")
    if negative and truncated != 0:
        text = "-" + text
    return text, certified


def rational_to_text(value: Rational) -> str:
    """JSON 输出用：有理数的精确文本"""
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"
