"""
ConstantsCommand - constants 命令组

【UI/功能分离】
- 参数界面：ConstantsCommand（此文件）
- 结果编排：constants_logic.py
"""

import argparse
from typing import Any, Dict, List, Optional, Tuple

from core.base import BaseCommand, RunReport

from .constants_logic import show_constants


class ConstantsCommand(BaseCommand):
    """
    constants show [--name NAME] [--digits N]

    指定名称时只输出该常数的认证十进制展开
    """

    NAME = "constants"
    HELP = "命名常数 c_inf / C_inf / f / sigma 的认证十进制展开"

    def configure(self, actions: Any, common: argparse.ArgumentParser) -> None:
        show = actions.add_parser("show", parents=[common], help="计算并显示常数")
        show.add_argument("--name", default=None, help="常数名称，省略时显示全部并检查夹逼链")

    def handle(self, args: argparse.Namespace) -> Tuple[Dict[str, Any], Optional[bool]]:
        return show_constants(args.name, args.digits)

    def text_lines(self, report: RunReport) -> List[str]:
        constants = report.results["constants"]
        if len(constants) == 1:
            return [constants[0]["value_decimal"]]
        lines = [f"{c['name']}: {c['value_decimal']}" for c in constants]
        for check, ok in report.results["sandwich"]["checks"].items():
            lines.append(f"{'PASS' if ok else 'FAIL'}  {check}")
        return lines
