"""
exact-arith - 精确算术层

有理数、二次无理数与认证区间；下游所有比较都建立在这里的精确判定之上
"""

from .enclosure import Enclosure
from .errors import ArithmeticDomainError
from .rational import Rational, as_rational, parse_rational, rational_to_text, render_certified
from .surd import (
    Ordering,
    QuadraticSurd,
    SurdLike,
    SurdSum,
    coerce_sum,
    combination_sign,
    enclose,
    surd_compare,
    surd_from_fixed_point,
)

__all__ = [
    "ArithmeticDomainError",
    "Enclosure",
    "Ordering",
    "QuadraticSurd",
    "Rational",
    "SurdLike",
    "SurdSum",
    "as_rational",
    "coerce_sum",
    "combination_sign",
    "enclose",
    "parse_rational",
    "rational_to_text",
    "render_certified",
    "surd_compare",
    "surd_from_fixed_point",
]
