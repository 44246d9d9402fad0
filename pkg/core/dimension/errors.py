"""
dimension 模块的异常
"""


class DimensionInputError(ValueError):
    """深度为 0、字母表不是前缀码、超出计算量上限或尺度不收缩"""


class CertificationError(RuntimeError):
    """区间算术未能确认二分得到的括号"""
