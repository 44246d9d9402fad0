"""
cf-engine - 连分数求值、比较与 {1,2} 上的极值补全
"""

from .engine import (
    Convergents,
    Direction,
    agreement_gap,
    apply_prefix,
    compare_words,
    eval_finite,
    eval_periodic,
    eval_zero_tail,
    extremal_completion,
    extremal_digit,
    extremal_tail,
    first_difference,
    mobius_coefficients,
    periodic_tail_value,
)
from .window import WindowBound, bound_lambda_window, side_extreme, window_from_word

__all__ = [
    "Convergents",
    "Direction",
    "WindowBound",
    "agreement_gap",
    "apply_prefix",
    "bound_lambda_window",
    "compare_words",
    "eval_finite",
    "eval_periodic",
    "eval_zero_tail",
    "extremal_completion",
    "extremal_digit",
    "extremal_tail",
    "first_difference",
    "mobius_coefficients",
    "periodic_tail_value",
    "side_extreme",
    "window_from_word",
]
