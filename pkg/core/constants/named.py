"""
NamedConstant - 谱的命名常数（c∞、C∞、f、σ 等）

【定义方式（注册表 kind 字段）】
- sequence：λ_position(序列字面量)
- split：lead + [0; forward] + [0; backward]，两侧为最终周期单边词
"""

import logging
from dataclasses import dataclass
from typing import Any, Dict, List, Mapping

from core.arith import Enclosure, SurdSum
from core.cf import eval_zero_tail
from core.data import get_registry
from core.spectra import SpectrumValue, lambda_sum
from core.words import parse_one_sided, parse_sequence

from .errors import UnknownConstantError

logger = logging.getLogger(__name__)

MAX_DIGITS = 200


@dataclass(frozen=True)
class NamedConstant:
    """命名常数及其认证十进制展开"""

    name: str
    definition: str
    value: SurdSum
    enclosure: Enclosure
    decimal: str
    certified_digits: int

    def to_dict(self) -> Dict[str, Any]:
        return {
            "name": self.name,
            "definition": self.definition,
            "value_decimal": self.decimal,
            "certified_digits": self.certified_digits,
            "exact": self.value.to_dict(),
        }


def evaluate_definition(definition: Mapping[str, Any]) -> SurdSum:
    """
    按注册表定义精确求值

    Raises:
        ValueError: 未知的 kind
    """
    kind = definition.get("kind")
    if kind == "sequence":
        return lambda_sum(parse_sequence(definition["literal"]), int(definition.get("position", 0)))
    if kind == "split":
        forward = eval_zero_tail(parse_one_sided(definition["forward"]))
        backward = eval_zero_tail(parse_one_sided(definition["backward"]))
        return SurdSum((forward, backward, int(definition["lead"])))
    raise ValueError(f"未知的常数定义类型: {kind!r}")


def _definition(name: str) -> Mapping[str, Any]:
    definition = get_registry().get_constant(name)
    if definition is None:
        raise UnknownConstantError(name)
    return definition


def constant_value(name: str) -> SurdSum:
    """
    命名常数的精确值

    Raises:
        UnknownConstantError: 名称不存在
    """
    return evaluate_definition(_definition(name))


def list_constants() -> List[str]:
    return get_registry().list_constants()


def compute_constant(name: str, digits: int) -> NamedConstant:
    """
    计算并渲染命名常数

    Args:
        name: c_inf / C_inf / f / sigma 等
        digits: 认证小数位数，不超过 MAX_DIGITS

    Raises:
        UnknownConstantError: 名称不存在
        ValueError: digits 超出范围
    """
    if not 0 <= digits <= MAX_DIGITS:
        raise ValueError(f"digits 必须在 0…{MAX_DIGITS} 之间")
    definition = _definition(name)
    spectrum = SpectrumValue.of(evaluate_definition(definition), width_digits=digits + 4)
    text, certified = spectrum.render(digits)
    logger.debug("常数 %s：%s（%d 位认证）", name, text, certified)
    return NamedConstant(
        name=name,
        definition=str(definition.get("description", "")),
        value=spectrum.value,
        enclosure=spectrum.enclosure,
        decimal=text,
        certified_digits=certified,
    )
