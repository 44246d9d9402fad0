"""
RunReport - 一次命令执行的结果报告

【约定】
- JSON 顶层带 "schema": 1
- 所有数值字段都是十进制字符串（或整数、布尔），不输出二进制浮点
- no_meta 时去掉耗时等随运行变化的字段，相同参数得到逐字节相同的输出
"""

import json
from dataclasses import dataclass, field
from enum import IntEnum
from typing import Any, Dict, List, Optional

SCHEMA_VERSION = 1


class ExitCode(IntEnum):
    """进程退出码"""

    OK = 0
    FAIL = 1
    USAGE = 2


@dataclass
class RunReport:
    """
    命令执行报告

    Attributes:
        command: "verify lemmas" 这样的完整命令名
        inputs: 解析后的参数回显
        results: 各操作的结果字典
        certified: 结果中的每个数值都带有精确值或认证区间；由命令按实际使用的方法给出
        passed: None 表示纯计算命令，True/False 表示验证结论
        elapsed: 耗时（秒）
    """

    command: str
    inputs: Dict[str, Any] = field(default_factory=dict)
    results: Dict[str, Any] = field(default_factory=dict)
    certified: bool = True
    passed: Optional[bool] = None
    elapsed: float = 0.0

    @property
    def exit_code(self) -> ExitCode:
        return ExitCode.FAIL if self.passed is False else ExitCode.OK

    @property
    def status(self) -> str:
        if self.passed is None:
            return "DONE"
        return "PASS" if self.passed else "FAIL"

    def to_dict(self, no_meta: bool = False) -> Dict[str, Any]:
        data: Dict[str, Any] = {
            "schema": SCHEMA_VERSION,
            "command": self.command,
            "inputs": self.inputs,
            "results": self.results,
            "certified": self.certified,
            "status": self.status,
        }
        if not no_meta:
            data["meta"] = {"elapsed": f"{self.elapsed:.3f}"}
        return data

    def to_json(self, no_meta: bool = False) -> str:
        return json.dumps(self.to_dict(no_meta), ensure_ascii=False, indent=2, sort_keys=True)

    def text_lines(self) -> List[str]:
        """默认的文本输出：把结果字典展开成 key: value 行"""
        lines: List[str] = []
        _flatten(self.results, "", lines)
        lines.append(f"status: {self.status}")
        return lines


def _flatten(value: Any, prefix: str, lines: List[str]) -> None:
    if isinstance(value, dict):
        for key, item in value.items():
            _flatten(item, f"{prefix}.{key}" if prefix else str(key), lines)
    elif isinstance(value, list) and any(isinstance(item, (dict, list)) for item in value):
        for index, item in enumerate(value):
            _flatten(item, f"{prefix}[{index}]", lines)
    else:
        lines.append(f"{prefix}: {value}")
