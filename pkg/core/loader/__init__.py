"""
Loader Package - 命令插件加载器
"""

from .command_loader import CommandLoader, CommandLoadError

__all__ = ["CommandLoadError", "CommandLoader"]
