"""
周期族 P_a 与成员族 B(γ) 的数值检查
"""

import logging
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional

from core.arith import SurdSum, as_rational, combination_sign
from core.cf import Direction, eval_zero_tail, extremal_completion
from core.constants import constant_value
from core.data import get_registry
from core.spectra import (
    MarkovCertificate,
    SpectrumValue,
    lagrange_value,
    lambda_sum,
    markov_value,
    pa_sequence,
    pa_word,
    membership_sequence,
)
from core.words import OneSidedWord, parse_compact

logger = logging.getLogger(__name__)

# 与极限比较的两个位置
SIDE_POSITION = 9


@dataclass(frozen=True)
class PaValues:
    """overline{P_a} 在原点与 ±9 处的 λ 值以及 ℓ"""

    a: int
    ell: SpectrumValue
    lambda_0: SpectrumValue
    lambda_9: SpectrumValue
    lambda_minus9: SpectrumValue

    def to_dict(self, render) -> Dict[str, Any]:
        return {
            "a": self.a,
            "ell": render(self.ell.value),
            "lambda_0": render(self.lambda_0.value),
            "lambda_9": render(self.lambda_9.value),
            "lambda_-9": render(self.lambda_minus9.value),
            "ell_at_origin": self.ell.value == self.lambda_0.value,
        }


def appendix_pa(a: int) -> PaValues:
    """
    计算 ℓ(overline{P_a}) 与 λ_0、λ_{±9}

    Args:
        a: a >= 1
    """
    word, _ = pa_word(a)
    sequence = pa_sequence(a)
    return PaValues(
        a=a,
        ell=lagrange_value(word),
        lambda_0=SpectrumValue.of(lambda_sum(sequence, 0)),
        lambda_9=SpectrumValue.of(lambda_sum(sequence, SIDE_POSITION)),
        lambda_minus9=SpectrumValue.of(lambda_sum(sequence, -SIDE_POSITION)),
    )


def _distance_shrinks(previous: SurdSum, current: SurdSum, limit: SurdSum) -> bool:
    """|current − limit| < |previous − limit|，用带符号的整系数组合精确判定"""
    s_prev = combination_sign([(1, previous), (-1, limit)])
    s_cur = combination_sign([(1, current), (-1, limit)])
    if s_cur == 0:
        return s_prev != 0
    return combination_sign([(s_cur, current), (-s_cur, limit), (-s_prev, previous), (s_prev, limit)]) < 0


@dataclass
class AppendixReport:
    """a = first…last 的 P_a 检查；ℓ 从上方收敛到 C∞"""

    rows: List[PaValues]
    limit: SurdSum
    limit_9: SurdSum
    limit_minus9: SurdSum
    ell_converging: bool
    ell_above_limit: bool
    side_converging: bool
    certificate: Optional[MarkovCertificate] = None
    markov_at_origin: bool = False

    @property
    def passed(self) -> bool:
        return (self.ell_converging and self.ell_above_limit
                and self.side_converging and self.markov_at_origin)

    def to_dict(self, render) -> Dict[str, Any]:
        return {
            "rows": [row.to_dict(render) for row in self.rows],
            "limits": {
                "C_inf": render(self.limit),
                "lambda_9": render(self.limit_9),
                "lambda_-9": render(self.limit_minus9),
            },
            "ell_converging": self.ell_converging,
            "ell_above_limit": self.ell_above_limit,
            "side_converging": self.side_converging,
            "markov": None if self.certificate is None else self.certificate.to_dict(render),
            "markov_at_origin": self.markov_at_origin,
            "status": "PASS" if self.passed else "FAIL",
        }


def verify_appendix(first: int = 2, last: int = 10) -> AppendixReport:
    """
    检查 ℓ(P_a) 始终高于 C∞ 并单调地向它靠近、λ_{±9} 向各自极限单调靠近，
    并对最大的 a 用 markov_value 确认 m = λ_0

    Raises:
        ValueError: first < 1 或 last < first
    """
    if first < 1 or last < first:
        raise ValueError("需要 1 <= first <= last")
    limit = constant_value("C_inf")
    limit_9 = constant_value("pa_limit_9")
    limit_minus9 = constant_value("pa_limit_minus9")
    rows = [appendix_pa(a) for a in range(first, last + 1)]
    pairs = list(zip(rows, rows[1:]))

    report = AppendixReport(
        rows=rows,
        limit=limit,
        limit_9=limit_9,
        limit_minus9=limit_minus9,
        ell_converging=all(_distance_shrinks(p.ell.value, q.ell.value, limit) for p, q in pairs),
        ell_above_limit=all(row.ell.value > limit for row in rows),
        side_converging=all(
            _distance_shrinks(p.lambda_9.value, q.lambda_9.value, limit_9)
            and _distance_shrinks(p.lambda_minus9.value, q.lambda_minus9.value, limit_minus9)
            for p, q in pairs
        ),
    )
    value, certificate = markov_value(pa_sequence(last))
    report.certificate = certificate
    report.markov_at_origin = certificate.attaining_position == 0 and value.value == rows[-1].lambda_0.value
    logger.info("周期族 P_a（a=%d…%d）：%s", first, last, "PASS" if report.passed else "FAIL")
    return report


@dataclass
class MembershipReport:
    """B(γ) 的成员检查"""

    gamma: str
    lambda_0: SurdSum
    lower: SurdSum
    upper: SurdSum
    markov: Optional[SpectrumValue] = None
    certificate: Optional[MarkovCertificate] = None
    checks: Dict[str, bool] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return bool(self.checks) and all(self.checks.values())

    def to_dict(self, render) -> Dict[str, Any]:
        return {
            "gamma": self.gamma,
            "lambda_0": render(self.lambda_0),
            "lower": render(self.lower),
            "upper": render(self.upper),
            "markov": None if self.markov is None else render(self.markov.value),
            "certificate": None if self.certificate is None else self.certificate.to_dict(render),
            "checks": self.checks,
            "status": "PASS" if self.passed else "FAIL",
        }


def verify_membership(gamma: str = "over(2_2 1_2)") -> MembershipReport:
    """
    检查 m(B) = λ_0(B) 落在 (membership_low, membership_high) 内

    两个极值界由前 17 位前向数字加上极大/极小尾部给出

    Raises:
        PatternViolationError: 1_2 2_2 1_2 γ 含有禁止词
    """
    sequence = membership_sequence(gamma)
    registry = get_registry()
    tail = OneSidedWord.parse(gamma)
    prefix = parse_compact(registry.limit("freiman_head")).digits
    backward = SurdSum((sequence.digit_at(0), eval_zero_tail(sequence.backward_word(0))))

    report = MembershipReport(
        gamma=tail.render_compact(),
        lambda_0=lambda_sum(sequence, 0),
        lower=backward + extremal_completion(prefix, Direction.MIN),
        upper=backward + extremal_completion(prefix, Direction.MAX),
    )
    value, certificate = markov_value(sequence)
    report.markov = value
    report.certificate = certificate
    report.checks = {
        "lower_below_lambda_0": report.lower < report.lambda_0,
        "lambda_0_below_upper": report.lambda_0 < report.upper,
        "lower_above_bound": report.lower > as_rational(registry.limit("membership_low")),
        "upper_below_bound": report.upper < as_rational(registry.limit("membership_high")),
        "markov_at_origin": certificate.attaining_position == 0 and value.value == report.lambda_0,
    }
    logger.info("B(%s)：%s", report.gamma, "PASS" if report.passed else "FAIL")
    return report
