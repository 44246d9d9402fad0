"""
SpectraCommand - spectra 命令组

【UI/功能分离】
- 参数界面：SpectraCommand（此文件）
- 结果编排：spectra_logic.py
"""

import argparse
from typing import Any, Dict, List, Optional, Tuple

from core.base import BaseCommand, RunReport

from .spectra_logic import lagrange_result, lambda_result, markov_result


class SpectraCommand(BaseCommand):
    """
    spectra lambda   --seq LIT [--pos I]
    spectra markov   --seq LIT
    spectra lagrange --word W
    """

    NAME = "spectra"
    HELP = "Perron 函数 λ_i、Markov 值与 Lagrange 值"

    def configure(self, actions: Any, common: argparse.ArgumentParser) -> None:
        lam = actions.add_parser("lambda", parents=[common], help="λ_i(A)")
        lam.add_argument("--seq", "--sequence", dest="sequence", required=True, help='如 "over(1 2_2 1_2 2_4) ; 1 2_2 ; over(2_3 1_3)" 或常数名')
        lam.add_argument("--pos", "--index", dest="index", type=int, default=0, help="位置 i（默认 0）")

        markov = actions.add_parser("markov", parents=[common], help="m(A) 及可复核证书")
        markov.add_argument("--seq", "--sequence", dest="sequence", required=True, help="序列字面量或常数名")

        lagrange = actions.add_parser("lagrange", parents=[common], help="ℓ(overline{w})")
        lagrange.add_argument("--word", required=True, help='周期词，如 "2_4 1_2 2_2 1"')

    def handle(self, args: argparse.Namespace) -> Tuple[Dict[str, Any], Optional[bool]]:
        if args.action == "lambda":
            return lambda_result(args.sequence, args.index, args.digits)
        if args.action == "markov":
            return markov_result(args.sequence, args.digits)
        return lagrange_result(args.word, args.digits)

    def text_lines(self, report: RunReport) -> List[str]:
        results = report.results
        if report.command.endswith("lambda"):
            return [f"λ_{results['index']} = {results['lambda']['value_decimal']}"]
        if report.command.endswith("lagrange"):
            return [f"ℓ = {results['lagrange']['value_decimal']}"]
        certificate = results["certificate"]
        where = (
            "attained in limit" if certificate["attained_in_limit"]
            else f"attained at {certificate['attaining_position']}"
        )
        return [
            f"m = {results['markov']['value_decimal']} ({where}, method {certificate['method']})",
            f"replay: {report.status}",
        ]
