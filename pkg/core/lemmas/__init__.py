"""
lemma-verifier - 禁止/允许串表、强制窗口搜索与各命题的数值步骤
"""

from .appendix import AppendixReport, PaValues, MembershipReport, appendix_pa, verify_appendix, verify_membership
from .constraints import LambdaBound, WindowConstraint, constraint_from_dict
from .errors import SearchGuardError
from .presets import WindowReport, load_preset, verify_forced_window
from .recursive import (
    ChainReport,
    RecursiveReport,
    recursive_lower_bound,
    verify_f_minimality_chain,
    verify_recursive_bounds,
)
from .search import IndexRange, SearchOutcome, forced_window_search
from .tables import TableEntry, verify_allowed_table, verify_forbidden_table

__all__ = [
    "AppendixReport",
    "ChainReport",
    "IndexRange",
    "LambdaBound",
    "PaValues",
    "MembershipReport",
    "RecursiveReport",
    "SearchGuardError",
    "SearchOutcome",
    "TableEntry",
    "WindowConstraint",
    "WindowReport",
    "appendix_pa",
    "constraint_from_dict",
    "forced_window_search",
    "load_preset",
    "recursive_lower_bound",
    "verify_allowed_table",
    "verify_appendix",
    "verify_f_minimality_chain",
    "verify_forbidden_table",
    "verify_forced_window",
    "verify_membership",
    "verify_recursive_bounds",
]
