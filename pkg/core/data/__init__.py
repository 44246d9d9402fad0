"""
Data Package - 验证数据目录

引理表、搜索预设、命名常数与字母表统一由 Registry 提供
"""

from .registry import DEFAULT_REGISTRY_PATH, Registry, RegistryError, get_registry, set_registry

__all__ = [
    "DEFAULT_REGISTRY_PATH",
    "Registry",
    "RegistryError",
    "get_registry",
    "set_registry",
]
