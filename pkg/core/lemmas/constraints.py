"""
WindowConstraint - 部分赋值与 λ 上下界约束

【判定规则】
- 上界 λ_p < b（inclusive 时 λ_p ≤ b）：窗口的最小补全已不满足时剪枝
- 下界 λ_p > b（inclusive 时 λ_p ≥ b）：窗口的最大补全已不满足时剪枝
- 所有判定都是精确的二次无理数比较
"""

import logging
from dataclasses import dataclass, field
from typing import Any, Dict, Iterable, Mapping, Optional, Tuple

from core.arith import Rational, as_rational, rational_to_text
from core.cf import bound_lambda_window
from core.words import parse_compact

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class LambdaBound:
    """单个位置上的 λ 界"""

    position: int
    bound: Rational
    inclusive: bool = False

    def describe(self, relation: str) -> str:
        op = {"<": "≤" if self.inclusive else "<", ">": "≥" if self.inclusive else ">"}[relation]
        return f"λ_{self.position} {op} {rational_to_text(self.bound)}"


@dataclass(frozen=True)
class WindowConstraint:
    """
    搜索约束

    Attributes:
        assigned: 预先固定的位置 -> 数字
        lambda_caps: λ 上界
        lambda_floors: λ 下界
    """

    assigned: Mapping[int, int] = field(default_factory=dict)
    lambda_caps: Tuple[LambdaBound, ...] = ()
    lambda_floors: Tuple[LambdaBound, ...] = ()

    def violation(self, window: Mapping[int, int]) -> Optional[str]:
        """
        窗口是否已被某个约束排除

        Returns:
            被违反约束的描述；全部可能满足时返回 None
        """
        if not window:
            return None
        for cap in self.lambda_caps:
            low = bound_lambda_window(window, cap.position).lower
            if (low > cap.bound) if cap.inclusive else (low >= cap.bound):
                return cap.describe("<")
        for floor in self.lambda_floors:
            high = bound_lambda_window(window, floor.position).upper
            if (high < floor.bound) if floor.inclusive else (high <= floor.bound):
                return floor.describe(">")
        return None

    def to_dict(self) -> Dict[str, Any]:
        return {
            "assigned": {str(k): v for k, v in sorted(self.assigned.items())},
            "lambda_caps": [c.describe("<") for c in self.lambda_caps],
            "lambda_floors": [f.describe(">") for f in self.lambda_floors],
        }


def _bounds(entries: Iterable[Mapping[str, Any]]) -> Tuple[LambdaBound, ...]:
    result = []
    for entry in entries:
        bound = as_rational(str(entry["bound"]))
        inclusive = bool(entry.get("inclusive", False))
        for position in entry["positions"]:
            result.append(LambdaBound(int(position), bound, inclusive))
    return tuple(result)


def constraint_from_dict(data: Mapping[str, Any]) -> WindowConstraint:
    """
    由预设或 JSON 文件构建约束

    格式：
        {"assigned": {"start": -6, "word": "2 1_2 2_4"} | {"-1": 2, ...} | null,
         "caps": [{"positions": [...], "bound": "3.15", "inclusive": false}],
         "floors": [...]}
    """
    assigned: Dict[int, int] = {}
    spec = data.get("assigned")
    if spec:
        if "word" in spec:
            start = int(spec["start"])
            for k, digit in enumerate(parse_compact(spec["word"])):
                assigned[start + k] = digit
        else:
            assigned = {int(k): int(v) for k, v in spec.items()}
    return WindowConstraint(
        assigned=assigned,
        lambda_caps=_bounds(data.get("caps", [])),
        lambda_floors=_bounds(data.get("floors", [])),
    )
