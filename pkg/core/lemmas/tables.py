"""
禁止串 / 允许串表的逐条验证

【规则】
- 禁止串：λ_j 在所有补全上的最小值 > 阈值
- 允许串：λ_j 在所有补全上的最大值 < 条目阈值；条目阈值不成立时改与引理结论
  allowed_conclusion 比较，并在报告中写明所用阈值
- 注册表里的 erratum 说明原样进入报告
- 带辅助假设的条目（如 λ_{j−6} ≤ 3.15）：在词两侧各扩展 3 位做小规模搜索，
  只保留满足假设的补全，再对幸存窗口取最小（最大）值；假设不可满足时条目空真成立
"""

import logging
from dataclasses import dataclass
from typing import Any, Dict, List, Mapping, Optional

from core.arith import QuadraticSurd, Rational, as_rational, render_certified
from core.cf import bound_lambda_window, window_from_word
from core.data import get_registry
from core.words import FiniteWord, parse_marked

from .constraints import LambdaBound, WindowConstraint
from .search import IndexRange, forced_window_search

logger = logging.getLogger(__name__)

# 带辅助假设时词两侧扩展的位数
AUX_MARGIN = 3


@dataclass(frozen=True)
class TableEntry:
    """一条引理条目的验证结果"""

    label: str
    word: FiniteWord
    star: int
    threshold: Rational
    bound: Optional[QuadraticSurd]
    passed: bool
    kind: str
    completions: int
    threshold_used: Optional[str] = None
    erratum: Optional[str] = None

    def to_dict(self, render) -> Dict[str, Any]:
        return {
            "label": self.label,
            "word": self.word.render_compact(),
            "kind": self.kind,
            "threshold": render_threshold(self.threshold),
            "bound": None if self.bound is None else {
                "decimal": render(self.bound),
                "exact": self.bound.to_dict(),
            },
            "completions": self.completions,
            "threshold_used": self.threshold_used,
            "erratum": self.erratum,
            "status": "PASS" if self.passed else "FAIL",
        }


def render_threshold(value: Rational) -> str:
    """阈值的十进制文本（去掉末尾的 0）"""
    text, _ = render_certified(value, value, 12)
    return text.rstrip("0").rstrip(".") if "." in text else text


def _aux_caps(entry: Mapping[str, Any]) -> List[LambdaBound]:
    return [
        LambdaBound(int(cap["offset"]), as_rational(str(cap["bound"])), bool(cap.get("inclusive", True)))
        for cap in entry.get("aux_caps", [])
    ]


def _entry_bound(entry: Mapping[str, Any], lower: bool, conclusion: Optional[Rational] = None) -> TableEntry:
    word, star = parse_marked(entry["word"])
    threshold = as_rational(str(entry["threshold"]))
    window = window_from_word(word.digits, star, 0)
    caps = _aux_caps(entry)

    if caps:
        first = -star - AUX_MARGIN
        last = len(word) - 1 - star + AUX_MARGIN
        outcome = forced_window_search(
            WindowConstraint(assigned=window, lambda_caps=tuple(caps)),
            IndexRange.inclusive(first, last),
        )
        candidates = [
            {first + k: digit for k, digit in enumerate(survivor)}
            for survivor in outcome.surviving_windows
        ]
    else:
        candidates = [window]

    bound: Optional[QuadraticSurd] = None
    for candidate in candidates:
        result = bound_lambda_window(candidate, 0)
        value = result.lower if lower else result.upper
        if bound is None or (value < bound if lower else value > bound):
            bound = value

    threshold_used: Optional[str] = None
    if bound is None:
        passed = True
    elif lower:
        passed = bound > threshold
        threshold_used = "entry" if passed else None
    elif bound < threshold:
        passed, threshold_used = True, "entry"
    elif conclusion is not None and bound < conclusion:
        passed, threshold_used = True, "conclusion"
    else:
        passed = False
    kind = "forbidden" if lower else "allowed"
    logger.debug("条目 (%s) %s：%s", entry["label"], kind, "PASS" if passed else "FAIL")
    return TableEntry(
        label=str(entry["label"]),
        word=word,
        star=star,
        threshold=threshold,
        bound=bound,
        passed=passed,
        kind=kind,
        completions=len(candidates),
        threshold_used=threshold_used,
        erratum=entry.get("erratum"),
    )


def verify_forbidden_table() -> List[TableEntry]:
    """禁止串 (1)–(13)：λ_j 的认证下界超过各自阈值"""
    return [_entry_bound(entry, lower=True) for entry in get_registry().forbidden_table()]


def verify_allowed_table() -> List[TableEntry]:
    """允许串 (15)–(21)：λ_j 的认证上界低于条目阈值，否则低于引理结论阈值"""
    registry = get_registry()
    conclusion = as_rational(registry.limit("allowed_conclusion"))
    return [_entry_bound(entry, lower=False, conclusion=conclusion) for entry in registry.allowed_table()]
