"""
dimension - Gauss–Cantor 集的 Palis–Takens 维数上下界
"""

from .errors import CertificationError, DimensionInputError
from .exponent import DEFAULT_TOL, DimensionBounds, ExponentBracket, ExponentMode, hd_bounds, solve_exponent
from .gauss_cantor import GaussCantorSpec, ScalePair, dump_scales_csv, interval_scales, scale_pair

__all__ = [
    "CertificationError",
    "DEFAULT_TOL",
    "DimensionBounds",
    "DimensionInputError",
    "ExponentBracket",
    "ExponentMode",
    "GaussCantorSpec",
    "ScalePair",
    "dump_scales_csv",
    "hd_bounds",
    "interval_scales",
    "scale_pair",
    "solve_exponent",
]
