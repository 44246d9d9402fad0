"""
序列字面量解析

【语法】
    seq   := left ';' core ';' right     三段式
           | left ';' right              两段式（core 为空）
           | 'over(' word ')'            纯周期序列，原点在 word 首位
    left  := 'over(' word ')' word?      按书写顺序，从左到右
    right := word? 'over(' word ')'

【原点约定】
分号紧跟在第 0 位之后：有左段时，位置 0 是左段书写的最后一位。
例如 "over(1 2_2 1_2 2_4) ; 1 2_2 1_2 2_4 1 2_2 1_2 2_2 1_2 ; over(2_3 1_3)"
表示 ρ，λ_0(ρ) = f。
"""

import re

from .errors import WordParseError
from .sequence import BiInfiniteSequence
from .word import FiniteWord, OneSidedWord, parse_compact

_OVER = re.compile(r"over\(([^()]*)\)")


def _split_over(text: str, offset: int):
    """
    拆分为 (over 前文本, over 内文本, over 后文本)

    Raises:
        WordParseError: 没有或有多个 over(...)
    """
    matches = list(_OVER.finditer(text))
    if len(matches) != 1:
        raise WordParseError("需要恰好一个 over(...) 周期标记", offset)
    match = matches[0]
    return text[: match.start()], match.group(1), text[match.end():]


def _word(text: str, offset: int) -> FiniteWord:
    try:
        return parse_compact(text)
    except WordParseError as exc:
        raise WordParseError(str(exc).split("（")[0], offset + exc.position) from exc


def parse_one_sided(text: str, offset: int = 0) -> OneSidedWord:
    """解析 "u over(v)"（向右读）"""
    before, inner, after = _split_over(text, offset)
    if after.strip():
        raise WordParseError("over(...) 之后不能再有数字", offset + len(text) - len(after))
    period = _word(inner, offset + len(before) + 5)
    if not len(period):
        raise WordParseError("周期不能为空", offset + len(before))
    return OneSidedWord(_word(before, offset), period)


def parse_left(text: str, offset: int = 0) -> OneSidedWord:
    """
    解析左段 "over(v) u"（按书写顺序），返回向外读取的单边词
    """
    before, inner, after = _split_over(text, offset)
    if before.strip():
        raise WordParseError("左段的 over(...) 之前不能有数字", offset)
    period = _word(inner, offset + len(before) + 5)
    if not len(period):
        raise WordParseError("周期不能为空", offset + len(before))
    tail = _word(after, offset + len(text) - len(after))
    return OneSidedWord(tail.transpose(), period.transpose())


def parse_sequence(text: str) -> BiInfiniteSequence:
    """
    解析序列字面量

    Raises:
        WordParseError: 语法错误或尾部不是周期的
    """
    parts = text.split(";")
    offsets = []
    position = 0
    for part in parts:
        offsets.append(position)
        position += len(part) + 1

    if len(parts) == 1:
        before, inner, after = _split_over(text, 0)
        if before.strip() or after.strip():
            raise WordParseError("单段字面量必须是 over(...) 形式", 0)
        word = _word(inner, len(before) + 5)
        if not len(word):
            raise WordParseError("周期不能为空", len(before))
        return BiInfiniteSequence.periodic(word)

    if len(parts) == 2:
        left = parse_left(parts[0], offsets[0])
        core = FiniteWord()
        right = parse_one_sided(parts[1], offsets[1])
    elif len(parts) == 3:
        left = parse_left(parts[0], offsets[0])
        core = _word(parts[1], offsets[1])
        right = parse_one_sided(parts[2], offsets[2])
    else:
        raise WordParseError("分号过多", offsets[3] - 1)

    # 以 core 首位为原点构造后左移一位：位置 0 是左段书写的最后一位
    return BiInfiniteSequence(left=left, core=core, right=right).shift(-1)
