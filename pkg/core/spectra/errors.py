"""
spectra 模块的异常
"""


class UnsupportedSequenceError(ValueError):
    """输入不是两侧最终周期的双无限序列"""


class PatternViolationError(ValueError):
    """
    序列含有 P 中的禁止词

    Attributes:
        position: 首个违例的起始位置
    """

    def __init__(self, message: str, position: int) -> None:
        super().__init__(f"{message}（位置 {position}）")
        self.position = position
