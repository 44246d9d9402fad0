"""
CommandLoader - 命令插件自动发现与加载器

【核心职责】
1. 扫描指定目录，自动发现并导入所有子目录中的命令插件
2. 每个子目录必须有 __init__.py 并导出 BaseCommand 子类
3. 实例化并返回命令实例列表

【设计原则】
- 主程序只加载并信任继承自 BaseCommand 的类
- 命令名称由命令类自身定义
- 单个插件加载失败只记录错误，不影响其他插件
"""

import importlib.util
import logging
import sys
from pathlib import Path
from typing import List, Optional, Type, Union

from ..base.base_command import BaseCommand

logger = logging.getLogger(__name__)


class CommandLoadError(Exception):
    """命令插件加载失败"""


class CommandLoader:
    """
    命令插件自动加载器

    目录结构：
       commands/
       ├── verify/
       │   ├── __init__.py  (导出 VerifyCommand)
       │   ├── verify_command.py
       │   └── verify_logic.py
       └── dimension/
           ├── __init__.py  (导出 DimensionCommand)
           ...

    使用示例：
        loader = CommandLoader(commands_directory="commands/")
        commands = loader.load_all()
    """

    def __init__(self, commands_directory: Union[str, Path], package: str = "commands") -> None:
        """
        Args:
            commands_directory: 插件目录
            package: 插件模块在 sys.modules 中的包名前缀
        """
        self._commands_dir = Path(commands_directory)
        self._package = package
        self._loaded: List[BaseCommand] = []
        self._load_errors: List[str] = []

    def load_all(self) -> List[BaseCommand]:
        """
        加载所有命令插件（按目录名排序）

        Returns:
            实例化的命令列表
        """
        self._loaded = []
        self._load_errors = []

        if not self._commands_dir.exists():
            logger.warning("命令目录不存在: %s", self._commands_dir)
            return []

        names = set()
        for subdir in sorted(d for d in self._commands_dir.iterdir() if d.is_dir()):
            init_file = subdir / "__init__.py"
            if not init_file.exists():
                continue
            try:
                command_class = self._load_command_from_init(subdir, init_file)
                if command_class is None:
                    raise CommandLoadError("未导出 BaseCommand 子类")
                command = self._instantiate(command_class)
                if command.get_name() in names:
                    raise CommandLoadError(f"命令名 {command.get_name()!r} 重复")
                names.add(command.get_name())
                self._loaded.append(command)
            except Exception as exc:
                self._load_errors.append(f"{subdir.name}: {exc}")
                logger.warning("命令插件 %s 加载失败: %s", subdir.name, exc)

        return self._loaded

    def _load_command_from_init(self, subdir: Path, init_file: Path) -> Optional[Type[BaseCommand]]:
        module_name = f"{self._package}.{subdir.name}"

        # 防止重复导入
        if module_name in sys.modules:
            module = sys.modules[module_name]
        else:
            spec = importlib.util.spec_from_file_location(module_name, init_file)
            if spec is None or spec.loader is None:
                raise CommandLoadError(f"无法加载模块: {init_file}")
            module = importlib.util.module_from_spec(spec)
            sys.modules[module_name] = module
            try:
                spec.loader.exec_module(module)
            except Exception:
                del sys.modules[module_name]
                raise

        return self._find_command_subclass(module)

    @staticmethod
    def _find_command_subclass(module) -> Optional[Type[BaseCommand]]:
        for attr_name in dir(module):
            attr = getattr(module, attr_name)
            if isinstance(attr, type) and issubclass(attr, BaseCommand) and attr is not BaseCommand:
                return attr
        return None

    @staticmethod
    def _instantiate(command_class: Type[BaseCommand]) -> BaseCommand:
        try:
            # 使用强制构造函数签名
            return command_class()
        except TypeError as exc:
            raise CommandLoadError(
                f"{command_class.__name__} 构造函数必须为 def __init__(self): {exc}"
            ) from exc

    def get_load_errors(self) -> List[str]:
        return self._load_errors.copy()

    def get_command_count(self) -> int:
        return len(self._loaded)
