"""
VerifyCommand - verify 命令组

【UI/功能分离】
- 参数界面：VerifyCommand（此文件）
- 结果编排：verify_logic.py
"""

import argparse
from pathlib import Path
from typing import Any, Dict, List, Optional, Tuple

from core.base import BaseCommand, RunReport

from . import verify_logic


class VerifyCommand(BaseCommand):
    """
    verify lemmas      [--table f1|f2]
    verify window      --preset lf4|lf3p | --constraints FILE
    verify chain       [--freiman W ...]
    verify recursive   [--count N]
    verify appendix    [--a N]
    verify membership      [--gamma G]
    verify closed-form [--digits N]
    """

    NAME = "verify"
    HELP = "引理表、强制窗口搜索与各命题的数值步骤"

    def configure(self, actions: Any, common: argparse.ArgumentParser) -> None:
        lemmas = actions.add_parser("lemmas", parents=[common], help="禁止串表 f1 / 允许串表 f2")
        lemmas.add_argument("--table", choices=verify_logic.TABLES, default=None)

        window = actions.add_parser("window", parents=[common], help="带剪枝的强制窗口搜索")
        source = window.add_mutually_exclusive_group(required=True)
        source.add_argument("--preset", choices=("lf4", "lf3p"))
        source.add_argument("--constraints", type=Path, help="约束 JSON 文件")

        chain = actions.add_parser("chain", parents=[common], help="f 的极小性链")
        chain.add_argument("--freiman", nargs="*", default=[], metavar="W",
                           help="附加检查的 S(w) 中的 w（默认只检查 S(∅)）")

        recursive = actions.add_parser("recursive", parents=[common], help="递推下界")
        recursive.add_argument("--count", type=int, default=11)

        appendix = actions.add_parser("appendix", parents=[common], help="周期族 P_a")
        appendix.add_argument("--a", dest="a", type=int, default=10, help="最大的 a（从 2 开始）")

        membership = actions.add_parser("membership", parents=[common], help="成员族 B(γ)")
        membership.add_argument("--gamma", default="over(2_2 1_2)")

        actions.add_parser("closed-form", parents=[common], help="f 的闭式")

    def handle(self, args: argparse.Namespace) -> Tuple[Dict[str, Any], Optional[bool]]:
        action = args.action
        if action == "lemmas":
            return verify_logic.lemma_tables(args.table, args.digits)
        if action == "window":
            if args.constraints is not None:
                return verify_logic.window_from_file(args.constraints, args.node_guard, args.allow_large)
            return verify_logic.forced_window(args.preset, args.node_guard, args.allow_large)
        if action == "chain":
            return verify_logic.minimality_chain(args.freiman, args.digits)
        if action == "recursive":
            return verify_logic.recursive_bounds(args.count, args.digits)
        if action == "appendix":
            return verify_logic.appendix(args.a, args.digits)
        if action == "membership":
            return verify_logic.membership(args.gamma, args.digits)
        return verify_logic.closed_form(args.digits)

    def is_certified(self, action: str, results: Dict[str, Any]) -> bool:
        # 闭式的数值回退只在 10^-80 内比对
        return action != "closed-form" or results.get("method") == "exact"

    def text_lines(self, report: RunReport) -> List[str]:
        if report.command != "verify lemmas":
            return super().text_lines(report)
        lines = []
        for entries in report.results.values():
            for entry in entries:
                bound = entry["bound"]["decimal"] if entry["bound"] else "vacuous"
                relation = ">" if entry["kind"] == "forbidden" else "<"
                line = f"{entry['status']}  ({entry['label']}) {entry['word']}: {bound} {relation} {entry['threshold']}"
                if entry.get("threshold_used") == "conclusion":
                    line += "  [仅低于结论阈值]"
                if entry.get("erratum"):
                    line += "  [勘误]"
                lines.append(line)
        return lines
