"""
Base Package - 命令基类与运行报告
"""

from .base_command import BaseCommand, echo_inputs
from .report import SCHEMA_VERSION, ExitCode, RunReport

__all__ = ["BaseCommand", "ExitCode", "RunReport", "SCHEMA_VERSION", "echo_inputs"]
