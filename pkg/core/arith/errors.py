"""
exact-arith 层的异常定义
"""


class ArithmeticDomainError(ValueError):
    """精确运算的定义域错误（无实根、非二次、非法宽度等）"""
    pass
