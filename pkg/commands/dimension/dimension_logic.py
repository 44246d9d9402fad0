"""
DimensionLogic - Hausdorff 维数上下界的结果编排
"""

from pathlib import Path
from typing import Any, Dict, Optional, Tuple

from core.dimension import DEFAULT_TOL, GaussCantorSpec, dump_scales_csv, hd_bounds


def bounds_result(
    alphabet: str,
    depth: int,
    tol: Optional[str],
    csv_path: Optional[Path] = None,
) -> Tuple[Dict[str, Any], Optional[bool]]:
    """
    计算 [α_n, β_n]；给出 csv_path 时同时导出全部尺度

    Raises:
        DimensionInputError: 字母表或深度不合法
    """
    spec = GaussCantorSpec.parse(alphabet)
    bounds = hd_bounds(spec, depth, tol or DEFAULT_TOL, keep_scales=csv_path is not None)
    results = bounds.to_dict()
    if csv_path is not None and bounds.scales is not None:
        results["csv"] = str(dump_scales_csv(bounds.scales, csv_path))
    return results, None
