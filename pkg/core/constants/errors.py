"""
constants 模块的异常
"""


class UnknownConstantError(KeyError):
    """注册表中没有该常数"""
