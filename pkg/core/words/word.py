"""
FiniteWord / OneSidedWord - 有限词与最终周期单边词

【设计原则】
1. 值对象不可变，所有操作返回新对象
2. 单边词规范化：周期为本原词，前周期最短
3. 紧凑记法 "2_4 1_2" 的解析与渲染集中在此处

【注意】
- 数字只要求为正整数；{1,2} 字母表限制在谱/搜索模块边界检查
"""

import re
from dataclasses import dataclass
from typing import Iterable, Iterator, List, Optional, Sequence, Tuple, Union

from .errors import AlphabetError, WordParseError

BINARY_ALPHABET = (1, 2)

# 一个记号：数字、可选的重数、可选的星号标记
_TOKEN = re.compile(r"(?P<digit>\d+)(?:_(?P<count>\d+))?(?P<star>\*)?|(?P<sep>[\s,]+)|(?P<bad>.)")


def _tokenize(text: str, allow_star: bool) -> Tuple[List[int], Optional[int]]:
    """
    展开紧凑记法

    Returns:
        (数字列表, 星号所在下标或 None)
    """
    digits: List[int] = []
    star: Optional[int] = None
    for match in _TOKEN.finditer(text):
        if match.group("sep"):
            continue
        position = match.start()
        if match.group("bad") is not None:
            raise WordParseError(f"非法字符 {match.group('bad')!r}", position)

        digit = int(match.group("digit"))
        count = int(match.group("count")) if match.group("count") is not None else 1
        if digit == 0:
            raise WordParseError("数字必须为正整数", position)
        if count == 0:
            raise WordParseError("重数不能为零", position)
        digits.extend([digit] * count)

        if match.group("star"):
            if not allow_star:
                raise WordParseError("此处不允许星号标记", position)
            if star is not None:
                raise WordParseError("星号标记只能出现一次", position)
            star = len(digits) - 1
    return digits, star


@dataclass(frozen=True)
class FiniteWord:
    """有限词 (b_1, …, b_r)"""

    digits: Tuple[int, ...] = ()

    def __post_init__(self) -> None:
        digits = tuple(int(d) for d in self.digits)
        for index, digit in enumerate(digits):
            if digit < 1:
                raise AlphabetError(f"位置 {index} 的数字 {digit} 不是正整数")
        object.__setattr__(self, "digits", digits)

    @classmethod
    def of(cls, *digits: int) -> "FiniteWord":
        return cls(tuple(digits))

    @classmethod
    def parse(cls, text: str) -> "FiniteWord":
        return parse_compact(text)

    def __len__(self) -> int:
        return len(self.digits)

    def __iter__(self) -> Iterator[int]:
        return iter(self.digits)

    def __getitem__(self, item: Union[int, slice]):
        if isinstance(item, slice):
            return FiniteWord(self.digits[item])
        return self.digits[item]

    def __add__(self, other: Union["FiniteWord", Sequence[int]]) -> "FiniteWord":
        return FiniteWord(self.digits + tuple(other))

    def __radd__(self, other: Sequence[int]) -> "FiniteWord":
        return FiniteWord(tuple(other) + self.digits)

    def __mul__(self, times: int) -> "FiniteWord":
        return FiniteWord(self.digits * times)

    def transpose(self) -> "FiniteWord":
        return FiniteWord(self.digits[::-1])

    def is_binary(self) -> bool:
        return all(d in BINARY_ALPHABET for d in self.digits)

    def require_binary(self) -> "FiniteWord":
        """在 {1,2} 上下文的边界处检查字母表"""
        for index, digit in enumerate(self.digits):
            if digit not in BINARY_ALPHABET:
                raise AlphabetError(f"位置 {index} 的数字 {digit} 不在字母表 {{1,2}} 中")
        return self

    def render_compact(self) -> str:
        return render_compact(self.digits)

    def __str__(self) -> str:
        return self.render_compact()


def parse_compact(text: str) -> FiniteWord:
    """
    解析紧凑记法

    语法：word := (digit ('_' count)?)+，以空白或逗号分隔

    Raises:
        WordParseError: 非法记号、零重数或数字 0，附带位置
    """
    digits, _ = _tokenize(text, allow_star=False)
    return FiniteWord(tuple(digits))


def parse_marked(text: str) -> Tuple[FiniteWord, int]:
    """
    解析带星号的词（引理中的 "1 2* 1"）

    Returns:
        (词, 星号位置下标)
    """
    digits, star = _tokenize(text, allow_star=True)
    if star is None:
        raise WordParseError("缺少星号标记", len(text))
    return FiniteWord(tuple(digits)), star


def render_compact(digits: Iterable[int]) -> str:
    """游程编码为规范紧凑文本，如 (2,2,2,2,1,1) -> "2_4 1_2" """
    tokens: List[str] = []
    run_digit: Optional[int] = None
    run_length = 0
    for digit in digits:
        if digit == run_digit:
            run_length += 1
            continue
        if run_digit is not None:
            tokens.append(str(run_digit) if run_length == 1 else f"{run_digit}_{run_length}")
        run_digit, run_length = digit, 1
    if run_digit is not None:
        tokens.append(str(run_digit) if run_length == 1 else f"{run_digit}_{run_length}")
    return " ".join(tokens)


def transpose(word: FiniteWord) -> FiniteWord:
    return word.transpose()


def _primitive_root(digits: Tuple[int, ...]) -> Tuple[int, ...]:
    n = len(digits)
    for k in range(1, n + 1):
        if n % k == 0 and digits[:k] * (n // k) == digits:
            return digits[:k]
    return digits


@dataclass(frozen=True)
class OneSidedWord:
    """
    最终周期单边词 u·v·v·v…

    【规范形式】
    - 周期 v 非空且为本原词
    - 前周期 u 最短（u 的末位与 v 的末位不同）
    """

    preperiod: FiniteWord
    period: FiniteWord

    def __post_init__(self) -> None:
        pre = tuple(FiniteWord(tuple(self.preperiod)).digits)
        per = tuple(FiniteWord(tuple(self.period)).digits)
        if not per:
            raise WordParseError("周期不能为空", 0)
        per = _primitive_root(per)
        while pre and pre[-1] == per[-1]:
            per = (per[-1],) + per[:-1]
            pre = pre[:-1]
        object.__setattr__(self, "preperiod", FiniteWord(pre))
        object.__setattr__(self, "period", FiniteWord(per))

    @classmethod
    def periodic(cls, period: Union[FiniteWord, Sequence[int]]) -> "OneSidedWord":
        return cls(FiniteWord(), FiniteWord(tuple(period)))

    @classmethod
    def parse(cls, text: str) -> "OneSidedWord":
        from .literal import parse_one_sided

        return parse_one_sided(text)

    def digit_at(self, k: int) -> int:
        """第 k 位（k >= 0）"""
        if k < 0:
            raise IndexError("单边词下标必须非负")
        pre = self.preperiod.digits
        if k < len(pre):
            return pre[k]
        per = self.period.digits
        return per[(k - len(pre)) % len(per)]

    def prefix(self, n: int) -> Tuple[int, ...]:
        return tuple(self.digit_at(k) for k in range(n))

    def drop(self, n: int) -> "OneSidedWord":
        """去掉前 n 位"""
        pre = self.preperiod.digits
        if n <= len(pre):
            return OneSidedWord(FiniteWord(pre[n:]), self.period)
        per = self.period.digits
        shift = (n - len(pre)) % len(per)
        return OneSidedWord(FiniteWord(), FiniteWord(per[shift:] + per[:shift]))

    def prepend(self, digits: Iterable[int]) -> "OneSidedWord":
        return OneSidedWord(FiniteWord(tuple(digits)) + self.preperiod, self.period)

    def is_binary(self) -> bool:
        return self.preperiod.is_binary() and self.period.is_binary()

    def require_binary(self) -> "OneSidedWord":
        self.preperiod.require_binary()
        self.period.require_binary()
        return self

    def render_compact(self) -> str:
        head = self.preperiod.render_compact()
        tail = f"over({self.period.render_compact()})"
        return f"{head} {tail}" if head else tail

    def __str__(self) -> str:
        return self.render_compact()
