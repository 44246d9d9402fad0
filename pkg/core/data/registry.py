"""
Registry - 验证数据目录

【设计目的】
1. 集中存放引理表、搜索预设、命名常数与字母表
2. 计算模块只通过 get_registry() 读取，不自行硬编码数据
3. 数据与代码分离，修改阈值不需要改动算法

【注意】
- 数值一律以十进制或分数字符串保存，读取时转为 Rational
- 禁止串用带星号的紧凑记法，例如 "1 2* 1"

【文件格式】
JSON，或安装了 PyYAML 时的 YAML
"""

import json
import logging
import os
from pathlib import Path
from typing import Any, Dict, List, Optional, Union

logger = logging.getLogger(__name__)

DEFAULT_REGISTRY_PATH = Path(__file__).resolve().parents[2] / "data" / "registry.json"

_SECTIONS = ("forbidden", "allowed", "extra_patterns", "presets", "constants", "alphabets", "limits")


class RegistryError(ValueError):
    """注册表文件缺失或结构不完整"""


class Registry:
    """
    验证数据目录管理器

    负责加载和查询表格、预设、常数定义
    """

    def __init__(self, registry_path: Optional[Union[str, Path]] = None) -> None:
        """
        初始化数据目录

        Args:
            registry_path: 目录文件路径（JSON/YAML），缺省为随包数据

        Raises:
            RegistryError: 文件不存在或缺少必需的段
        """
        self._registry_path = Path(registry_path) if registry_path else DEFAULT_REGISTRY_PATH
        self._data: Dict[str, Any] = {}
        self._load()

    def _load(self) -> None:
        """加载目录文件"""
        if not self._registry_path.exists():
            raise RegistryError(f"注册表文件不存在: {self._registry_path}")

        with open(self._registry_path, "r", encoding="utf-8") as f:
            if self._registry_path.suffix == ".json":
                data = json.load(f)
            else:
                import yaml

                data = yaml.safe_load(f)

        missing = [name for name in _SECTIONS if name not in data]
        if missing:
            raise RegistryError(f"注册表缺少段: {', '.join(missing)}")
        self._data = data
        logger.debug("已加载注册表 %s", self._registry_path)

    @property
    def path(self) -> Path:
        return self._registry_path

    @property
    def version(self) -> str:
        return str(self._data.get("version", ""))

    def forbidden_table(self) -> List[Dict[str, Any]]:
        """
        禁止串表（最小值须超过阈值）

        Returns:
            条目列表，每项含 label / word / threshold / aux_caps
        """
        return list(self._data["forbidden"])

    def allowed_table(self) -> List[Dict[str, Any]]:
        """
        允许串表（最大值须低于阈值）

        Returns:
            条目列表，结构同 forbidden_table
        """
        return list(self._data["allowed"])

    def extra_patterns(self) -> List[str]:
        """构成 P 时附加的词（不带星号）"""
        return list(self._data["extra_patterns"])

    def get_preset(self, name: str) -> Optional[Dict[str, Any]]:
        """
        获取窗口搜索预设

        Args:
            name: 预设名称，如 "lf4"

        Returns:
            预设定义，不存在则返回 None
        """
        return self._data["presets"].get(name)

    def list_presets(self) -> List[str]:
        return list(self._data["presets"].keys())

    def get_constant(self, name: str) -> Optional[Dict[str, Any]]:
        """
        获取命名常数的定义

        Returns:
            定义字典（kind 决定求值方式），不存在则返回 None
        """
        return self._data["constants"].get(name)

    def list_constants(self) -> List[str]:
        return list(self._data["constants"].keys())

    def get_alphabet(self, name: str) -> Optional[List[str]]:
        """Gauss–Cantor 字母表（紧凑记法的词列表）"""
        return self._data["alphabets"].get(name)

    def limit(self, name: str) -> str:
        """
        已知的极限或区间端点（十进制文本）

        Raises:
            KeyError: 名称不存在
        """
        return self._data["limits"][name]


# 全局注册表实例（单例模式）
_registry_instance: Optional[Registry] = None


def set_registry(registry: Optional[Registry]) -> None:
    """
    设置全局注册表实例

    Args:
        registry: Registry 实例；None 表示下次访问时重新加载默认文件
    """
    global _registry_instance
    _registry_instance = registry


def get_registry() -> Registry:
    """
    获取全局注册表实例

    首次访问时加载 MSL_REGISTRY 指定的文件或随包数据

    Returns:
        Registry 实例
    """
    global _registry_instance
    if _registry_instance is None:
        _registry_instance = Registry(os.environ.get("MSL_REGISTRY") or None)
    return _registry_instance
