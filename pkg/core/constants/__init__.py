"""
constants - c∞、C∞、f、σ 等命名常数的精确求值与相互关系
"""

from .checks import SANDWICH_ORDER, ClosedFormReport, SandwichReport, verify_f_closed_form, verify_sandwich
from .errors import UnknownConstantError
from .named import MAX_DIGITS, NamedConstant, compute_constant, constant_value, evaluate_definition, list_constants

__all__ = [
    "ClosedFormReport",
    "MAX_DIGITS",
    "NamedConstant",
    "SANDWICH_ORDER",
    "SandwichReport",
    "UnknownConstantError",
    "compute_constant",
    "constant_value",
    "evaluate_definition",
    "list_constants",
    "verify_f_closed_form",
    "verify_sandwich",
]
