"""
BaseCommand 基类 - 所有命令插件的强制抽象基类

设计原则：
1. 只负责参数界面与输出格式，不包含数学计算
2. 不保存任何状态
3. 子类必须严格遵循构造函数签名：def __init__(self)

【红线规则】
- 命令插件必须继承 BaseCommand
- 主程序只加载并信任继承自 BaseCommand 的类
- 插件之间不得互相导入，只能导入 core
"""

import argparse
import logging
import time
from abc import ABC, abstractmethod
from typing import Any, Dict, List, Optional, Tuple

from .report import RunReport

logger = logging.getLogger(__name__)

# 不回显到报告 inputs 中的参数
_HIDDEN_ARGS = {"command", "verbose"}


class BaseCommand(ABC):
    """
    所有命令插件的抽象基类

    职责：
    - 在 argparse 中注册自己的子命令组
    - 把操作结果整理为 RunReport

    不负责：
    - 精确计算（交给 core 中的模块或 *_logic.py）
    - 日志配置与进程退出码（由 main.run 负责）
    """

    # 子类必须定义：命令组名称（如 "verify"）与帮助文本
    NAME: str = ""
    HELP: str = ""

    def __init__(self) -> None:
        """
        强制构造函数签名

        【红线规则】
        - 不接受任何参数
        - 构造阶段不得读取注册表或执行计算
        """

    @classmethod
    def get_name(cls) -> str:
        return cls.NAME

    def register(self, subparsers: Any, common: argparse.ArgumentParser) -> argparse.ArgumentParser:
        """
        注册命令组

        Args:
            subparsers: 顶层 add_subparsers() 的返回值
            common: 携带 --json/--digits 等公共选项的父解析器
        """
        parser = subparsers.add_parser(self.NAME, help=self.HELP, description=self.HELP)
        actions = parser.add_subparsers(dest="action", metavar="ACTION")
        actions.required = True
        self.configure(actions, common)
        parser.set_defaults(command=self)
        return parser

    @abstractmethod
    def configure(self, actions: Any, common: argparse.ArgumentParser) -> None:
        """子类在此添加各个动作的子解析器（应以 parents=[common] 继承公共选项）"""

    @abstractmethod
    def handle(self, args: argparse.Namespace) -> Tuple[Dict[str, Any], Optional[bool]]:
        """
        执行动作

        Returns:
            (结果字典, 验证结论)；纯计算动作返回 None 作为结论
        """

    def text_lines(self, report: RunReport) -> List[str]:
        """
        文本模式的输出行

        子类可覆盖此方法给出更紧凑的输出
        """
        return report.text_lines()

    def is_certified(self, action: str, results: Dict[str, Any]) -> bool:
        """
        结果是否全部来自精确值或认证区间

        只做有限精度比对的动作在子类中返回 False
        """
        return True

    def execute(self, args: argparse.Namespace) -> RunReport:
        """执行并计时，返回报告"""
        started = time.perf_counter()
        results, passed = self.handle(args)
        report = RunReport(
            command=f"{self.NAME} {args.action}",
            inputs=echo_inputs(args),
            results=results,
            certified=self.is_certified(args.action, results),
            passed=passed,
            elapsed=time.perf_counter() - started,
        )
        logger.debug("%s 完成：%s，耗时 %.3fs", report.command, report.status, report.elapsed)
        return report


def echo_inputs(args: argparse.Namespace) -> Dict[str, Any]:
    """参数回显：只保留可直接写入 JSON 的值"""
    echo: Dict[str, Any] = {}
    for key, value in sorted(vars(args).items()):
        if key in _HIDDEN_ARGS:
            continue
        if value is None or isinstance(value, (str, int, bool)):
            echo[key] = value
        elif isinstance(value, (list, tuple)) and all(isinstance(v, (str, int)) for v in value):
            echo[key] = list(value)
        else:
            echo[key] = str(value)
    return echo
