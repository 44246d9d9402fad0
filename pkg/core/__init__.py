"""
Core Package - 命令框架与共享的数学模块

子包：
- arith / words / cf：精确算术、词与连分数引擎
- spectra / lemmas / constants / dimension：谱值、引理验证、命名常数、维数界
- data / base / loader：注册表、命令基类与插件加载
"""

from .base import BaseCommand, RunReport
from .loader import CommandLoader

__all__ = [
    "BaseCommand",
    "CommandLoader",
    "RunReport",
]
