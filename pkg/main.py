"""
程序入口

【设计原则】
1. 只负责初始化框架
2. 配置日志（写到 stderr，stdout 只留给报告）
3. 安装注册表
4. 发现并注册命令插件，分派执行
5. 不负责具体计算与输出格式细节
"""

import argparse
import logging
import os
import sys
from pathlib import Path
from typing import List, Optional, Sequence, Tuple

from core import BaseCommand, CommandLoader, RunReport
from core.base import ExitCode
from core.data import Registry, set_registry
from core.dimension import CertificationError
from core.lemmas import SearchGuardError

logger = logging.getLogger("msl")

COMMANDS_DIR = Path(__file__).parent / "commands"
PROG = "msl"

# 映射到退出码 2 的领域错误（ValueError 覆盖解析、字母表、维数输入与注册表错误）
USAGE_ERRORS = (ValueError, KeyError, SearchGuardError, OSError)


def configure_logging(verbose: int = 0) -> None:
    """
    配置根日志器

    级别优先取 -v 次数（1 = INFO，2 = DEBUG），否则取 MSL_LOG_LEVEL，默认 WARNING
    """
    if verbose >= 2:
        level = logging.DEBUG
    elif verbose == 1:
        level = logging.INFO
    else:
        level = getattr(logging, os.environ.get("MSL_LOG_LEVEL", "WARNING").upper(), logging.WARNING)
    logging.basicConfig(
        level=level,
        stream=sys.stderr,
        format="%(asctime)s %(levelname)s %(name)s: %(message)s",
        force=True,
    )


def common_options() -> argparse.ArgumentParser:
    """所有动作共享的选项"""
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="输出 JSON 报告")
    common.add_argument("--digits", type=int, default=None, help="认证小数位数")
    common.add_argument("--tol", default=None, help='容差（十进制文本，如 "1e-9"）')
    common.add_argument("--no-meta", action="store_true", help="JSON 中不含耗时等元信息")
    common.add_argument("-v", "--verbose", action="count", default=0, help="-v INFO，-vv DEBUG")
    common.add_argument("--node-guard", type=int, default=None, help="搜索节点上限（覆盖 MSL_NODE_GUARD）")
    common.add_argument("--allow-large", action="store_true", help="放行超过 40 个位置的搜索区间")
    common.add_argument("--registry", type=Path, default=None, help="替换内置的注册表文件")
    return common


def build_parser(commands_dir: Path = COMMANDS_DIR) -> Tuple[argparse.ArgumentParser, List[BaseCommand]]:
    """
    由发现的命令插件构建解析器

    Returns:
        (解析器, 已加载的命令)
    """
    parser = argparse.ArgumentParser(
        prog=PROG,
        description="Markov / Lagrange 谱在 Freiman 间隙附近的精确计算与引理验证",
    )
    subparsers = parser.add_subparsers(dest="group", metavar="COMMAND")
    subparsers.required = True

    loader = CommandLoader(commands_dir)
    commands = loader.load_all()
    for error in loader.get_load_errors():
        logger.warning("插件加载失败: %s", error)

    common = common_options()
    for command in commands:
        command.register(subparsers, common)
    return parser, commands


def emit(command: BaseCommand, report: RunReport, as_json: bool, no_meta: bool) -> None:
    if as_json:
        sys.stdout.write(report.to_json(no_meta) + "\n")
    else:
        sys.stdout.write("\n".join(command.text_lines(report)) + "\n")


def run(argv: Optional[Sequence[str]] = None) -> int:
    """
    解析参数并执行一个动作

    Returns:
        0 全部 PASS（或纯计算完成），1 有 FAIL，2 用法或输入错误
    """
    parser, _ = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse 在 --help 时以 0 退出，用法错误以 2 退出
        return int(exc.code) if isinstance(exc.code, int) else ExitCode.USAGE

    configure_logging(args.verbose)
    command: BaseCommand = args.command

    try:
        if args.registry is not None:
            set_registry(Registry(args.registry))
        report = command.execute(args)
    except CertificationError as exc:
        logger.error("%s", exc)
        print(f"{PROG}: certification failed: {exc}", file=sys.stderr)
        return ExitCode.FAIL
    except USAGE_ERRORS as exc:
        logger.debug("输入错误", exc_info=True)
        print(f"{PROG}: error: {exc}", file=sys.stderr)
        return ExitCode.USAGE

    emit(command, report, args.json, args.no_meta)
    return int(report.exit_code)


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
