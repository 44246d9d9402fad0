"""
ConstantsLogic - constants 命令的结果编排

【设计原则】
1. 只负责调用 core.constants 并整理结果字典
2. 不包含参数解析与输出代码
"""

from typing import Any, Dict, Optional, Tuple

from core.constants import SANDWICH_ORDER, compute_constant, verify_sandwich
from core.spectra import decimal_renderer

DEFAULT_DIGITS = 20


def show_constants(name: Optional[str], digits: Optional[int]) -> Tuple[Dict[str, Any], Optional[bool]]:
    """
    单个常数只做计算；不指定名称时给出四个常数并检查夹逼链

    Raises:
        UnknownConstantError: 名称不存在
        ValueError: digits 超出范围
    """
    digits = DEFAULT_DIGITS if digits is None else digits
    if name is not None:
        return {"constants": [compute_constant(name, digits).to_dict()]}, None

    constants = [compute_constant(n, digits).to_dict() for n in SANDWICH_ORDER]
    sandwich = verify_sandwich()
    results = {
        "constants": constants,
        "sandwich": sandwich.to_dict(decimal_renderer(digits)),
    }
    return results, sandwich.passed
