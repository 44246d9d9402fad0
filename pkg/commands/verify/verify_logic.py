"""
VerifyLogic - 引理与命题验证的结果编排

【设计原则】
1. 只负责调用 core.lemmas / core.constants 并整理结果字典
2. 每个函数返回 (结果字典, 是否全部 PASS)
"""

import json
import logging
from pathlib import Path
from typing import Any, Dict, Optional, Sequence, Tuple

from core.constants import verify_f_closed_form
from core.lemmas import (
    IndexRange,
    constraint_from_dict,
    forced_window_search,
    verify_allowed_table,
    verify_appendix,
    verify_f_minimality_chain,
    verify_forbidden_table,
    verify_forced_window,
    verify_membership,
    verify_recursive_bounds,
)
from core.spectra import decimal_renderer

logger = logging.getLogger(__name__)

DEFAULT_DIGITS = 20
TABLES = ("f1", "f2")

Result = Tuple[Dict[str, Any], bool]


def _digits(digits: Optional[int]) -> int:
    return DEFAULT_DIGITS if digits is None else digits


def lemma_tables(table: Optional[str], digits: Optional[int]) -> Result:
    """禁止串表 f1 与允许串表 f2；table 为 None 时两张都验证"""
    render = decimal_renderer(_digits(digits))
    selected = TABLES if table is None else (table,)
    results: Dict[str, Any] = {}
    passed = True
    for name in selected:
        entries = verify_forbidden_table() if name == "f1" else verify_allowed_table()
        results[name] = [entry.to_dict(render) for entry in entries]
        passed = passed and all(entry.passed for entry in entries)
    return results, passed


def window_from_file(path: Path, node_guard: Optional[int], allow_large: bool) -> Result:
    """
    约束文件：{"range": [first, last], "assigned": …, "caps": […], "floors": […]}

    没有期望结果可比对，非空的幸存集合即视为 PASS
    """
    data = json.loads(Path(path).read_text(encoding="utf-8"))
    if "range" not in data:
        raise ValueError("约束文件缺少 range 字段")
    first, last = data["range"]
    constraint = constraint_from_dict(data)
    outcome = forced_window_search(
        constraint, IndexRange.inclusive(int(first), int(last)),
        node_guard=node_guard, allow_large=allow_large,
    )
    results = {
        "constraints": constraint.to_dict(),
        "search": outcome.to_dict(),
    }
    return results, bool(outcome.surviving_windows)


def forced_window(preset: str, node_guard: Optional[int], allow_large: bool) -> Result:
    report = verify_forced_window(preset, node_guard=node_guard, allow_large=allow_large)
    return report.to_dict(), report.passed


def minimality_chain(freiman_words: Sequence[str], digits: Optional[int]) -> Result:
    report = verify_f_minimality_chain(freiman_words or ("",))
    return report.to_dict(decimal_renderer(_digits(digits))), report.passed


def recursive_bounds(count: int, digits: Optional[int]) -> Result:
    report = verify_recursive_bounds(count)
    return report.to_dict(decimal_renderer(_digits(digits))), report.passed


def appendix(last: int, digits: Optional[int]) -> Result:
    report = verify_appendix(2, last)
    return report.to_dict(decimal_renderer(_digits(digits))), report.passed


def membership(gamma: str, digits: Optional[int]) -> Result:
    report = verify_membership(gamma)
    return report.to_dict(decimal_renderer(_digits(digits))), report.passed


def closed_form(digits: Optional[int]) -> Result:
    report = verify_f_closed_form(40 if digits is None else digits)
    return report.to_dict(), report.passed
