"""
DimensionCommand - dimension 命令组

【UI/功能分离】
- 参数界面：DimensionCommand（此文件）
- 结果编排：dimension_logic.py
"""

import argparse
from pathlib import Path
from typing import Any, Dict, List, Optional, Tuple

from core.base import BaseCommand, RunReport

from .dimension_logic import bounds_result


class DimensionCommand(BaseCommand):
    """dimension bounds --alphabet "1_2;2_2" --depth 12 [--tol 1e-9] [--csv FILE]"""

    NAME = "dimension"
    HELP = "Gauss–Cantor 集的 Hausdorff 维数上下界"

    def configure(self, actions: Any, common: argparse.ArgumentParser) -> None:
        bounds = actions.add_parser("bounds", parents=[common], help="α_n ≤ HD ≤ β_n")
        bounds.add_argument("--alphabet", default="pairs", help='以 ; 分隔的词，或注册表中的字母表名（默认 pairs）')
        bounds.add_argument("--depth", type=int, default=12)
        bounds.add_argument("--csv", type=Path, default=None, help="导出全部 ScalePair 的 CSV 文件")

    def handle(self, args: argparse.Namespace) -> Tuple[Dict[str, Any], Optional[bool]]:
        return bounds_result(args.alphabet, args.depth, args.tol, args.csv)

    def text_lines(self, report: RunReport) -> List[str]:
        results = report.results
        alpha, beta = results["alpha"], results["beta"]
        return [
            f"K({results['alphabet']}), depth {results['depth']}, {results['intervals']} intervals",
            f"alpha_{results['depth']} in [{alpha['lower']}, {alpha['upper']}]",
            f"beta_{results['depth']}  in [{beta['lower']}, {beta['upper']}]",
        ]
