"""
Palis–Takens 指数：Σ scale^{-s} = 1 的认证解

【设计原则】
1. numpy 浮点二分给出候选 s
2. 候选两侧各取一个十进制端点，用 mpmath.iv 外舍入区间算术确认
   Σ(s_lo) ≥ 1 ≥ Σ(s_hi)；确认失败时加宽括号重试
3. Σ 在 s 上严格递减（所有尺度 > 1），括号即为证书
"""

import logging
from dataclasses import dataclass
from enum import Enum
from typing import Any, Dict, List, Optional, Sequence, Tuple, Union

import numpy as np
from gmpy2 import mpq
from mpmath import iv

from core.arith import Enclosure, QuadraticSurd, Rational, as_rational, render_certified

from .errors import CertificationError, DimensionInputError
from .gauss_cantor import DEFAULT_COST_GUARD, GaussCantorSpec, ScalePair, interval_scales

logger = logging.getLogger(__name__)

DEFAULT_TOL = "1e-9"
# 尺度区间的二进制精度与 iv 的工作精度
SCALE_BITS = 96
IV_PREC = 113
# 括号端点的十进制位数
BRACKET_DIGITS = 12
MAX_WIDEN_ROUNDS = 8
MAX_BISECTIONS = 200


class ExponentMode(Enum):
    """ALPHA 用 Λ（下界 α_n），BETA 用 λ（上界 β_n）"""

    ALPHA = "alpha"
    BETA = "beta"


ScaleInput = Union[ScalePair, QuadraticSurd, Rational, int, str]


@dataclass(frozen=True)
class ExponentBracket:
    """
    认证括号 [lower, upper]

    Attributes:
        estimate: numpy 二分得到的浮点解
        sum_at_lower / sum_at_upper: 端点处 Σ 的区间（十进制文本）
    """

    mode: ExponentMode
    bracket: Enclosure
    estimate: float
    count: int
    sum_at_lower: str = ""
    sum_at_upper: str = ""

    @property
    def lower(self) -> Rational:
        return self.bracket.lo

    @property
    def upper(self) -> Rational:
        return self.bracket.hi

    def to_dict(self) -> Dict[str, Any]:
        text, certified = self.bracket.render(BRACKET_DIGITS)
        return {
            "mode": self.mode.value,
            "lower": _decimal(self.lower),
            "upper": _decimal(self.upper),
            "value_decimal": text,
            "certified_digits": certified,
            "count": self.count,
            "sum_at_lower": self.sum_at_lower,
            "sum_at_upper": self.sum_at_upper,
        }


def _decimal(value: Rational) -> str:
    text, _ = render_certified(value, value, BRACKET_DIGITS + 2)
    return text


def _scale_of(item: ScaleInput, mode: ExponentMode) -> Enclosure:
    if isinstance(item, ScalePair):
        item = item.lambda_max if mode is ExponentMode.ALPHA else item.lambda_min
    if isinstance(item, QuadraticSurd):
        return item.enclose_bits(SCALE_BITS)
    return Enclosure.exact(as_rational(item))


def _to_iv(value: Rational):
    return iv.mpf(int(value.numerator)) / iv.mpf(int(value.denominator))


def _certified_sum(scales: List[Enclosure], s: Rational) -> Tuple[Any, Any]:
    """
    Σ x^{-s} 的外舍入区间

    Returns:
        (尺度取上端点时的和, 尺度取下端点时的和)，真实的和介于两者之间
    """
    exponent = -_to_iv(s)
    low = iv.mpf(0)
    high = iv.mpf(0)
    for enc in scales:
        low += iv.exp(exponent * iv.log(_to_iv(enc.hi)))
        high += iv.exp(exponent * iv.log(_to_iv(enc.lo)))
    return low, high


def _bisect(values: np.ndarray, tol: float) -> float:
    def pressure(s: float) -> float:
        return float(np.sum(np.exp(-s * np.log(values)))) - 1.0

    lo, hi = 0.0, 1.0
    while pressure(hi) > 0:
        lo, hi = hi, 2 * hi
    for _ in range(MAX_BISECTIONS):
        if hi - lo <= tol:
            break
        mid = (lo + hi) / 2
        if pressure(mid) > 0:
            lo = mid
        else:
            hi = mid
    return (lo + hi) / 2


def _round_down(value: float, digits: int) -> Rational:
    scale = 10 ** digits
    return mpq(int(np.floor(value * scale)), scale)


def _round_up(value: float, digits: int) -> Rational:
    scale = 10 ** digits
    return mpq(int(np.ceil(value * scale)), scale)


def solve_exponent(
    scales: Sequence[ScaleInput],
    mode: ExponentMode = ExponentMode.ALPHA,
    tol: Union[str, Rational] = DEFAULT_TOL,
) -> ExponentBracket:
    """
    求解 Σ scale^{-s} = 1

    Args:
        scales: ScalePair（按 mode 取 Λ 或 λ）或直接给出的正尺度
        mode: ALPHA / BETA
        tol: 括号宽度目标

    Returns:
        ExponentBracket；只有一个尺度时为 [0, 0]

    Raises:
        DimensionInputError: tol <= 0 或存在不大于 1 的尺度
        CertificationError: 加宽括号后仍无法确认
    """
    tol = as_rational(tol)
    if tol <= 0:
        raise DimensionInputError("tol 必须为正")
    enclosures = [_scale_of(item, mode) for item in scales]
    for enc in enclosures:
        if enc.lo <= 1:
            raise DimensionInputError("所有尺度必须 > 1（收缩）")
    count = len(enclosures)
    if count <= 1:
        return ExponentBracket(mode, Enclosure.exact(0), 0.0, count)

    values = np.array([float((enc.lo + enc.hi) / 2) for enc in enclosures], dtype=np.float64)
    estimate = _bisect(values, float(tol) / 4)

    saved = iv.prec
    iv.prec = IV_PREC
    try:
        half = float(tol) / 2
        for _ in range(MAX_WIDEN_ROUNDS):
            lower = max(mpq(0), _round_down(estimate - half, BRACKET_DIGITS))
            upper = _round_up(estimate + half, BRACKET_DIGITS)
            at_lower, _ = _certified_sum(enclosures, lower)
            _, at_upper = _certified_sum(enclosures, upper)
            # iv 比较只在区间完全分离时返回 True
            if (at_lower >= 1) is True and (at_upper <= 1) is True:
                logger.debug("%s 括号 [%s, %s] 已确认", mode.value, lower, upper)
                return ExponentBracket(
                    mode=mode,
                    bracket=Enclosure(lower, upper),
                    estimate=estimate,
                    count=count,
                    sum_at_lower=str(at_lower),
                    sum_at_upper=str(at_upper),
                )
            half *= 2
            logger.debug("括号未确认，加宽到 ±%g", half)
    finally:
        iv.prec = saved
    raise CertificationError(f"无法确认 {mode.value} 的括号（估计值 {estimate!r}）")


@dataclass(frozen=True)
class DimensionBounds:
    """α_n ≤ HD(K(B)) ≤ β_n"""

    spec: GaussCantorSpec
    depth: int
    alpha: ExponentBracket
    beta: ExponentBracket
    scales: Optional[List[ScalePair]] = None

    def to_dict(self) -> Dict[str, Any]:
        return {
            "alphabet": str(self.spec),
            "depth": self.depth,
            "intervals": self.alpha.count,
            "alpha": self.alpha.to_dict(),
            "beta": self.beta.to_dict(),
        }


def hd_bounds(
    spec: GaussCantorSpec,
    n: int,
    tol: Union[str, Rational] = DEFAULT_TOL,
    cost_guard: int = DEFAULT_COST_GUARD,
    keep_scales: bool = False,
) -> DimensionBounds:
    """
    深度 n 的 Hausdorff 维数上下界

    Raises:
        DimensionInputError: 输入不合法
        CertificationError: α_n 的括号高于 β_n 的括号
    """
    scales = interval_scales(spec, n, cost_guard)
    alpha = solve_exponent(scales, ExponentMode.ALPHA, tol)
    beta = solve_exponent(scales, ExponentMode.BETA, tol)
    if alpha.lower > beta.upper:
        raise CertificationError(f"α_{n} > β_{n}：最小/最大尺度标签可能颠倒")
    logger.info("HD(K(%s)) ∈ [%.6f, %.6f]（深度 %d）", spec, alpha.estimate, beta.estimate, n)
    return DimensionBounds(spec, n, alpha, beta, scales if keep_scales else None)
