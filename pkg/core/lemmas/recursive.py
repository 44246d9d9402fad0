"""
递推下界与 f 的极小性链

【递推下界】
value(a) = [2; 前向词, (2_3 1_3)^{a+2}, 极小尾] + [0; 后向词, (1_3 2_3)^{a+1}, 极小尾]
对 a 严格递增并收敛到 C∞

【极小性链】
固定 λ_0 的后向一侧为 [0; 2_3 1_2 2_2 1, overline{2_4 1_2 2_2 1}]，
前向一侧在 chain_base 之后逐位写入 (2_3 1_3)^∞ 的数字，每一步取极小补全；
写入的数字与极小补全本来的选择不同时下界严格增大，相同时下界不变，极限为 f
"""

import logging
from dataclasses import dataclass, field
from typing import Any, Dict, Iterable, List, Optional, Tuple

from core.arith import SurdSum
from core.cf import Direction, eval_zero_tail, extremal_completion, extremal_digit
from core.constants import constant_value
from core.data import get_registry
from core.spectra import SpectrumValue, freiman_sequence, lambda_sum, markov_value, rho
from core.words import FiniteWord, OneSidedWord, parse_compact

logger = logging.getLogger(__name__)

# 链中写入 (2_3 1_3)^∞ 的位数
CHAIN_DIGITS = 18
INDEX_READING = "n-relative"


def recursive_lower_bound(a: int) -> SpectrumValue:
    """
    递推下界表达式的精确值

    Args:
        a: 块的重复参数，a >= 0

    Raises:
        ValueError: a < 0
    """
    if a < 0:
        raise ValueError("a 必须 >= 0")
    limits = get_registry().limit
    block = parse_compact(limits("chain_block"))
    forward = parse_compact(limits("recursive_forward")) + block * (a + 2)
    backward = parse_compact(limits("recursive_backward")) + block.transpose() * (a + 1)
    value = SurdSum((
        2,
        extremal_completion(forward.digits, Direction.MIN),
        extremal_completion(backward.digits, Direction.MIN),
    ))
    return SpectrumValue.of(value)


@dataclass
class RecursiveReport:
    """递推下界 a = 0…count−1 的单调性与上界检查"""

    values: List[SpectrumValue]
    limit: SurdSum
    increasing: bool
    below_limit: bool

    @property
    def passed(self) -> bool:
        return self.increasing and self.below_limit

    def to_dict(self, render) -> Dict[str, Any]:
        return {
            "index_reading": INDEX_READING,
            "limit": render(self.limit),
            "values": [{"a": a, "decimal": render(v.value)} for a, v in enumerate(self.values)],
            "increasing": self.increasing,
            "below_limit": self.below_limit,
            "status": "PASS" if self.passed else "FAIL",
        }


def verify_recursive_bounds(count: int = 11) -> RecursiveReport:
    """
    检查 value(0) < value(1) < … < value(count−1) < C∞

    Args:
        count: 检查的 a 的个数（>= 1）
    """
    if count < 1:
        raise ValueError("count 必须 >= 1")
    limit = constant_value("C_inf")
    values = [recursive_lower_bound(a) for a in range(count)]
    increasing = all(values[k].value < values[k + 1].value for k in range(count - 1))
    below = all(v.value < limit for v in values)
    logger.info("递推下界：递增=%s，低于 C∞=%s", increasing, below)
    return RecursiveReport(values=values, limit=limit, increasing=increasing, below_limit=below)


@dataclass(frozen=True)
class ChainStep:
    """链中一步：已写入的位数、对应的下界，以及这一位是否改变了极小补全"""

    digits_forced: int
    suffix: str
    bound: SurdSum
    refines: bool = True


@dataclass
class ChainReport:
    """
    极小性链报告

    Attributes:
        steps: 逐位写入的每一步
        increasing: 改变极小补全的步骤下界严格增大，其余步骤下界不变
        final: 前向一侧取 (2_3 1_3)^∞ 时的值
        final_equals_f: final 与 λ_0(ρ) 精确相等
        freiman_checks: S(w) 的附加检查 (w, λ_0 是否取到 m, λ_0 > f)
    """

    steps: List[ChainStep]
    final: SurdSum
    f: SurdSum
    increasing: bool
    below_f: bool
    final_equals_f: bool
    freiman_checks: List[Tuple[str, bool, Optional[bool]]] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        freiman_ok = all(above is not False for _, _, above in self.freiman_checks)
        return self.increasing and self.below_f and self.final_equals_f and freiman_ok

    def to_dict(self, render) -> Dict[str, Any]:
        return {
            "steps": [
                {"digits_forced": s.digits_forced, "suffix": s.suffix, "bound": render(s.bound), "refines": s.refines}
                for s in self.steps
            ],
            "final": render(self.final),
            "f": render(self.f),
            "increasing": self.increasing,
            "below_f": self.below_f,
            "final_equals_f": self.final_equals_f,
            "freiman": [
                {"w": w, "attained_at_origin": at_origin, "above_f": above}
                for w, at_origin, above in self.freiman_checks
            ],
            "status": "PASS" if self.passed else "FAIL",
        }


def _backward_side() -> SurdSum:
    sequence = rho()
    return SurdSum((sequence.digit_at(0), eval_zero_tail(sequence.backward_word(0))))


def _freiman_check(w: str, f: SurdSum) -> Tuple[str, bool, Optional[bool]]:
    sequence = freiman_sequence(w)
    value, certificate = markov_value(sequence)
    at_origin = certificate.attaining_position == 0
    above = value.value > f if at_origin else None
    return w, at_origin, above


def _step_ok(before: ChainStep, after: ChainStep) -> bool:
    if after.refines:
        return after.bound > before.bound
    return after.bound == before.bound


def verify_f_minimality_chain(freiman_words: Iterable[str] = ("",)) -> ChainReport:
    """
    逐位强制数字，检查下界严格递增并终止于 f

    Args:
        freiman_words: 附加检查的 S(w) 中的 w；m(S(w)) = λ_0(S(w)) 时要求其值 > f
    """
    limits = get_registry().limit
    base = parse_compact(limits("chain_base"))
    block = parse_compact(limits("chain_block"))
    backward = _backward_side()
    tail = OneSidedWord(FiniteWord(), block)

    steps: List[ChainStep] = []
    for k in range(CHAIN_DIGITS + 1):
        forced = base + tail.prefix(k)
        bound = backward + extremal_completion(forced.digits, Direction.MIN)
        refines = k == 0 or forced.digits[-1] != extremal_digit(len(forced), Direction.MIN)
        steps.append(ChainStep(k, forced.render_compact(), bound, refines))

    final = backward + eval_zero_tail(OneSidedWord(base, block))
    f = lambda_sum(rho(), 0)
    report = ChainReport(
        steps=steps,
        final=final,
        f=f,
        increasing=all(_step_ok(before, after) for before, after in zip(steps, steps[1:])),
        below_f=all(step.bound < f for step in steps),
        final_equals_f=final == f and f == constant_value("f"),
    )
    report.freiman_checks = [_freiman_check(w, f) for w in freiman_words]
    logger.info("极小性链：%d 步，%s", len(steps), "PASS" if report.passed else "FAIL")
    return report
