"""
强制窗口预设（lf4 / lf3p）的搜索与判定

【判定】
- lf4：每个幸存窗口在 [−14,16] 上等于 W，或在 [−16,14] 上等于 W^T；两种形态都必须出现
- lf3p：每个幸存窗口在 [−14,16] 上等于 W，且 [−15,16] 上属于两种可能之一
"""

import logging
from dataclasses import dataclass, field
from typing import Any, Dict, List, Mapping, Optional, Tuple

from core.data import get_registry
from core.words import FiniteWord, parse_compact

from .constraints import WindowConstraint, constraint_from_dict
from .search import IndexRange, SearchOutcome, forced_window_search

logger = logging.getLogger(__name__)


@dataclass
class WindowReport:
    """预设搜索报告"""

    name: str
    constraint: WindowConstraint
    outcome: SearchOutcome
    passed: bool
    matches: Dict[str, int] = field(default_factory=dict)
    mismatches: List[str] = field(default_factory=list)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "preset": self.name,
            "constraints": self.constraint.to_dict(),
            "search": self.outcome.to_dict(),
            "matches": self.matches,
            "mismatches": self.mismatches,
            "status": "PASS" if self.passed else "FAIL",
        }


def load_preset(name: str) -> Tuple[WindowConstraint, IndexRange, Mapping[str, Any]]:
    """
    读取预设

    Returns:
        (约束, 搜索区间, 期望结果描述)

    Raises:
        KeyError: 预设不存在
    """
    preset = get_registry().get_preset(name)
    if preset is None:
        raise KeyError(name)
    first, last = preset["range"]
    return constraint_from_dict(preset), IndexRange.inclusive(first, last), preset.get("expect", {})


def _window_digits(outcome: SearchOutcome, window: FiniteWord, first: int, last: int) -> FiniteWord:
    offset = first - outcome.index_range.start
    return window[offset: offset + last - first + 1]


def judge_outcome(name: str, constraint: WindowConstraint, outcome: SearchOutcome,
                  expect: Mapping[str, Any]) -> WindowReport:
    """按预设的期望检查幸存窗口"""
    report = WindowReport(name=name, constraint=constraint, outcome=outcome, passed=False)
    if not expect:
        report.passed = True
        return report

    word = parse_compact(expect["word"])
    first, last = expect["window"]
    mirror: Optional[Tuple[int, int]] = tuple(expect["mirror_window"]) if expect.get("mirror_window") else None
    alternatives = [
        (tuple(alt["window"]), parse_compact(alt["word"]))
        for alt in expect.get("extended_alternatives", [])
    ]
    report.matches = {"direct": 0, "mirror": 0}

    for survivor in outcome.surviving_windows:
        direct = _window_digits(outcome, survivor, first, last) == word
        reflected = mirror is not None and _window_digits(outcome, survivor, *mirror) == word.transpose()
        if direct:
            report.matches["direct"] += 1
        if reflected:
            report.matches["mirror"] += 1
        if not (direct or reflected):
            report.mismatches.append(survivor.render_compact())
            continue
        if direct and alternatives:
            extended = [alt_word for (a, b), alt_word in alternatives
                        if _window_digits(outcome, survivor, a, b) == alt_word]
            if not extended:
                report.mismatches.append(survivor.render_compact())
                continue
            key = f"extended:{extended[0].render_compact()}"
            report.matches[key] = report.matches.get(key, 0) + 1

    report.passed = bool(outcome.surviving_windows) and not report.mismatches
    if mirror is not None:
        # 约束关于 0 对称时，直接形态与转置形态必须同时出现
        report.passed = report.passed and report.matches["direct"] > 0 and report.matches["mirror"] > 0
    return report


def verify_forced_window(
    name: str,
    node_guard: Optional[int] = None,
    allow_large: bool = False,
) -> WindowReport:
    """
    运行预设搜索并判定

    Args:
        name: "lf4" 或 "lf3p"
        node_guard: 节点上限
        allow_large: 放行大区间

    Raises:
        KeyError: 预设不存在
        SearchGuardError: 超出保护上限
    """
    constraint, index_range, expect = load_preset(name)
    outcome = forced_window_search(constraint, index_range, node_guard=node_guard, allow_large=allow_large)
    report = judge_outcome(name, constraint, outcome, expect)
    logger.info("预设 %s：%d 个幸存窗口，%d 个节点", name, len(outcome.surviving_windows), outcome.nodes_explored)
    return report
