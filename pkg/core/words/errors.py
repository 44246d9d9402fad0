"""
words 层的异常定义
"""


class WordParseError(ValueError):
    """紧凑记法或序列字面量解析失败"""

    def __init__(self, message: str, position: int) -> None:
        super().__init__(f"{message}（位置 {position}）")
        self.position = position


class AlphabetError(ValueError):
    """数字超出允许的字母表"""
    pass
