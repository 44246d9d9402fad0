"""
forced_window_search - 带剪枝的深度优先窗口搜索

【设计原则】
1. 位置按到 0 的距离递增赋值 (0, 1, −1, 2, −2, …)，每个位置先试 2 再试 1
2. 每个节点用 bound_lambda_window 检查全部约束，任何一个被证明违反就剪枝
3. 剪枝只依赖已证明的不等式，幸存集合与分支顺序无关

【保护】
- 搜索范围超过 MAX_RANGE 个位置时拒绝（allow_large 可放行）
- 节点数超过 node_guard 时中止；默认 10^8，可由 MSL_NODE_GUARD 覆盖
"""

import logging
import os
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Tuple

from core.words import FiniteWord

from .constraints import WindowConstraint
from .errors import SearchGuardError

logger = logging.getLogger(__name__)

MAX_RANGE = 40
DEFAULT_NODE_GUARD = 10 ** 8
# 剪枝日志最多保留的条数
PRUNE_LOG_LIMIT = 10_000


def default_node_guard() -> int:
    """节点上限：环境变量 MSL_NODE_GUARD 优先"""
    text = os.environ.get("MSL_NODE_GUARD")
    if text:
        try:
            return int(text)
        except ValueError:
            logger.warning("忽略无效的 MSL_NODE_GUARD=%r", text)
    return DEFAULT_NODE_GUARD


@dataclass(frozen=True)
class IndexRange:
    """半开位置区间 [start, stop)"""

    start: int
    stop: int

    @classmethod
    def inclusive(cls, first: int, last: int) -> "IndexRange":
        return cls(first, last + 1)

    def __len__(self) -> int:
        return max(0, self.stop - self.start)

    def positions(self) -> range:
        return range(self.start, self.stop)

    def __contains__(self, i: int) -> bool:
        return self.start <= i < self.stop

    def __str__(self) -> str:
        return f"[{self.start}, {self.stop - 1}]"


@dataclass(frozen=True)
class PruneRecord:
    """一次剪枝：部分赋值与被违反的约束"""

    window: Tuple[Tuple[int, int], ...]
    reason: str


@dataclass
class SearchOutcome:
    """
    搜索结果

    Attributes:
        surviving_windows: 幸存的完整窗口（按位置升序的数字）
        nodes_explored: 检查过的节点数
        prune_log: trace 模式下的剪枝记录
    """

    index_range: IndexRange
    surviving_windows: List[FiniteWord] = field(default_factory=list)
    nodes_explored: int = 0
    prune_log: Optional[List[PruneRecord]] = None

    def restricted(self, first: int, last: int) -> List[FiniteWord]:
        """幸存窗口在 [first, last] 上的限制（去重、保序）"""
        offset = first - self.index_range.start
        width = last - first + 1
        unique: List[FiniteWord] = []
        for window in self.surviving_windows:
            part = window[offset: offset + width]
            if part not in unique:
                unique.append(part)
        return unique

    def digit_at(self, window: FiniteWord, i: int) -> int:
        return window[i - self.index_range.start]

    def to_dict(self) -> Dict[str, Any]:
        return {
            "range": [self.index_range.start, self.index_range.stop - 1],
            "survivors": [w.render_compact() for w in self.surviving_windows],
            "nodes_explored": self.nodes_explored,
        }


def search_order(index_range: IndexRange) -> List[int]:
    """按到 0 的距离递增，同距离先正后负"""
    return sorted(index_range.positions(), key=lambda i: (abs(i), i < 0))


def forced_window_search(
    constraint: WindowConstraint,
    index_range: IndexRange,
    node_guard: Optional[int] = None,
    allow_large: bool = False,
    trace: bool = False,
) -> SearchOutcome:
    """
    枚举满足约束的全部窗口

    Args:
        constraint: 预赋值与 λ 上下界
        index_range: 搜索的位置区间
        node_guard: 节点上限，None 时取 default_node_guard()
        allow_large: 放行超过 MAX_RANGE 的区间
        trace: 记录剪枝日志

    Returns:
        SearchOutcome，幸存窗口按数字字典序排列

    Raises:
        SearchGuardError: 区间过大或节点数超限
    """
    if len(index_range) > MAX_RANGE and not allow_large:
        raise SearchGuardError(
            f"搜索区间 {index_range} 含 {len(index_range)} 个位置，超过上限 {MAX_RANGE}"
        )
    guard = node_guard if node_guard is not None else default_node_guard()

    outcome = SearchOutcome(index_range=index_range, prune_log=[] if trace else None)
    window: Dict[int, int] = dict(constraint.assigned)
    free = [i for i in search_order(index_range) if i not in constraint.assigned]
    survivors: List[Tuple[int, ...]] = []

    def visit(depth: int) -> None:
        outcome.nodes_explored += 1
        if outcome.nodes_explored > guard:
            raise SearchGuardError(f"节点数超过上限 {guard}")

        reason = constraint.violation(window)
        if reason is not None:
            if outcome.prune_log is not None and len(outcome.prune_log) < PRUNE_LOG_LIMIT:
                outcome.prune_log.append(PruneRecord(tuple(sorted(window.items())), reason))
            return
        if depth == len(free):
            survivors.append(tuple(window[i] for i in index_range.positions()))
            return

        position = free[depth]
        for digit in (2, 1):
            window[position] = digit
            visit(depth + 1)
        del window[position]

    visit(0)
    outcome.surviving_windows = [FiniteWord(digits) for digits in sorted(survivors)]
    logger.debug(
        "窗口搜索 %s：%d 个节点，%d 个幸存",
        index_range,
        outcome.nodes_explored,
        len(survivors),
    )
    return outcome
