"""
f 的闭式验证与常数夹逼链

【闭式判定】
1. λ_0(ρ) 两侧的纯周期分量各自满足由 Möbius 系数导出的二次方程
2. 两个 SurdSum 渲染到相同的 digits 位认证小数
3. 两侧的二次域（平方类）一致时由 surd_compare 给出精确 EQUAL；
   否则只能在 10^-80 区间内确认一致，报告中注明 "numerical"
"""

import logging
from dataclasses import dataclass, field
from typing import Any, Dict, List, Tuple

from gmpy2 import is_square, mpq

from core.arith import Ordering, QuadraticSurd, SurdSum, as_rational, enclose, surd_compare
from core.cf import mobius_coefficients, periodic_tail_value
from core.data import get_registry
from core.spectra import SpectrumValue, lagrange_value, markov_value, rho
from core.words import parse_sequence

from .named import constant_value, evaluate_definition

logger = logging.getLogger(__name__)

MIN_CLOSED_FORM_DIGITS = 40
FALLBACK_WIDTH_DIGITS = 80

SANDWICH_ORDER = ("c_inf", "f", "sigma", "C_inf")


@dataclass
class ClosedFormReport:
    """
    闭式验证报告

    Attributes:
        components: (周期, 二次方程系数, 是否满足)
        method: "exact" 或 "numerical"
    """

    digits: int
    value: SpectrumValue
    closed_form: SpectrumValue
    components: List[Tuple[str, Tuple[int, int, int], bool]] = field(default_factory=list)
    decimal: str = ""
    certified_digits: int = 0
    agree: bool = False
    method: str = "exact"
    orderings: Dict[str, bool] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return (
            all(ok for _, _, ok in self.components)
            and self.agree
            and self.certified_digits >= self.digits
            and all(self.orderings.values())
        )

    def to_dict(self) -> Dict[str, Any]:
        return {
            "digits": self.digits,
            "value_decimal": self.decimal,
            "certified_digits": self.certified_digits,
            "components": [
                {"period": period, "quadratic": list(coeffs), "satisfied": ok}
                for period, coeffs, ok in self.components
            ],
            "method": self.method,
            "precision_digits": self.digits if self.method == "exact" else FALLBACK_WIDTH_DIGITS,
            "agree": self.agree,
            "orderings": self.orderings,
            "lambda_0": self.value.value.to_dict(),
            "closed_form": self.closed_form.value.to_dict(),
            "status": "PASS" if self.passed else "FAIL",
        }


def _component(period: Tuple[int, ...]) -> Tuple[str, Tuple[int, int, int], bool]:
    """t = [0; overline{period}] 满足 q' t² + (q − p') t − p = 0"""
    p, p_prev, q, q_prev = mobius_coefficients(period)
    coeffs = (q_prev, q - p_prev, -p)
    tail = periodic_tail_value(period)
    text = " ".join(str(d) for d in period)
    return text, coeffs, tail.satisfies(*coeffs)


def _closed_form() -> SurdSum:
    definition = get_registry().get_constant("f")
    terms = [
        QuadraticSurd(int(t["p"]), int(t["q"]), int(t["d"]), int(t["r"]))
        for t in definition["closed_form"]
    ]
    return SurdSum(terms)


def _same_fields(x: SurdSum, y: SurdSum) -> bool:
    def radicands(s: SurdSum) -> List[int]:
        return [t.d for t in s.terms if not t.is_rational]

    left, right = radicands(x), radicands(y)
    if len(left) != len(right):
        return False
    return all(any(is_square(d * e) for e in right) for d in left)


def verify_f_closed_form(digits: int = MIN_CLOSED_FORM_DIGITS) -> ClosedFormReport:
    """
    验证 λ_0(ρ) 与 f 的闭式一致

    Args:
        digits: 认证位数，>= 40

    Raises:
        ValueError: digits < 40
    """
    if digits < MIN_CLOSED_FORM_DIGITS:
        raise ValueError(f"digits 必须 >= {MIN_CLOSED_FORM_DIGITS}")
    sequence = rho()
    forward = sequence.forward_word(0).drop(1)
    backward = sequence.backward_word(0)

    exact = evaluate_definition(get_registry().get_constant("f"))
    closed = _closed_form()
    report = ClosedFormReport(
        digits=digits,
        value=SpectrumValue.of(exact, width_digits=digits + 4),
        closed_form=SpectrumValue.of(closed, width_digits=digits + 4),
    )
    report.components = [_component(forward.period.digits), _component(backward.period.digits)]

    report.decimal, report.certified_digits = report.value.render(digits)
    closed_text, _ = report.closed_form.render(digits)

    if _same_fields(exact, closed):
        report.method = "exact"
        report.agree = surd_compare(exact, closed) is Ordering.EQUAL
    else:
        report.method = "numerical"
        width = mpq(1, 10 ** FALLBACK_WIDTH_DIGITS)
        left, right = enclose(exact, width), enclose(closed, width)
        report.agree = not (left.is_below(right) or right.is_below(left))
        logger.warning("两侧二次域不同，只在 10^-%d 精度内确认一致", FALLBACK_WIDTH_DIGITS)
    report.agree = report.agree and closed_text == report.decimal

    c_inf, f, sigma, big_c = (constant_value(name) for name in SANDWICH_ORDER)
    report.orderings = {
        "f < sigma": f < sigma,
        "c_inf < f < C_inf": c_inf < f < big_c,
    }
    logger.info("f 闭式验证（%s）：%s", report.method, "PASS" if report.passed else "FAIL")
    return report


@dataclass
class SandwichReport:
    """c∞ < f < σ < C∞ 及外侧有理界"""

    values: Dict[str, SurdSum]
    checks: Dict[str, bool]

    @property
    def passed(self) -> bool:
        return all(self.checks.values())

    def to_dict(self, render) -> Dict[str, Any]:
        return {
            "values": {name: render(v) for name, v in self.values.items()},
            "checks": self.checks,
            "status": "PASS" if self.passed else "FAIL",
        }


def verify_sandwich() -> SandwichReport:
    """
    3.118117 < c∞ < f < σ < C∞ < 3.1181201786，
    并用 markov_value / lagrange_value 重新推导 f 与 c∞
    """
    registry = get_registry()
    values = {name: constant_value(name) for name in SANDWICH_ORDER}
    low = as_rational(registry.limit("sandwich_low"))
    high = as_rational(registry.limit("sandwich_high"))

    checks = {"sandwich_low < c_inf": values["c_inf"] > low}
    for left, right in zip(SANDWICH_ORDER, SANDWICH_ORDER[1:]):
        checks[f"{left} < {right}"] = values[left] < values[right]
    checks["C_inf < sandwich_high"] = values["C_inf"] < high

    markov, _ = markov_value(rho())
    checks["f == m(rho)"] = markov.value == values["f"]
    period = parse_sequence(registry.get_constant("c_inf")["literal"]).forward_word(0).period
    checks["c_inf == ell(period)"] = lagrange_value(period).value == values["c_inf"]

    report = SandwichReport(values=values, checks=checks)
    logger.info("常数夹逼链：%s", "PASS" if report.passed else "FAIL")
    return report
