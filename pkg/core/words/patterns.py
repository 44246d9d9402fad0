"""
PatternSet / Y 成员判定

【规范实例 P】
- 禁止串 (1)–(13) 及其转置；(1) "1 2 1" 与 (3) "2_3 1 2_3" 都是回文，去重后 24 个
- 外加 2 1_2 2_4 1 2_2 1_2 2_3 及其转置
- 共 26 个不同的词（按 13×2+2 计数会把两个回文各算两次），构建时断言
"""

import logging
from dataclasses import dataclass
from typing import Iterable, List, Optional, Tuple, Union

from .errors import AlphabetError
from .word import FiniteWord, OneSidedWord, parse_compact, parse_marked

logger = logging.getLogger(__name__)

CANONICAL_SIZE = 26


@dataclass(frozen=True)
class PatternSet:
    """有限词集合（去重、保序）"""

    patterns: Tuple[FiniteWord, ...]

    @classmethod
    def from_words(cls, words: Iterable[FiniteWord]) -> "PatternSet":
        unique: List[FiniteWord] = []
        for word in words:
            if word not in unique:
                unique.append(word)
        return cls(tuple(unique))

    def __len__(self) -> int:
        return len(self.patterns)

    def __contains__(self, word: FiniteWord) -> bool:
        return word in self.patterns

    @property
    def max_length(self) -> int:
        return max((len(p) for p in self.patterns), default=0)

    def is_closed_under_transpose(self) -> bool:
        return all(p.transpose() in self.patterns for p in self.patterns)

    def first_occurrence(self, digits: Tuple[int, ...]) -> Optional[Tuple[int, FiniteWord]]:
        """最早出现的成员 (起始位置, 词)"""
        best: Optional[Tuple[int, FiniteWord]] = None
        for pattern in self.patterns:
            target = pattern.digits
            width = len(target)
            for start in range(0, len(digits) - width + 1):
                if best is not None and start >= best[0]:
                    break
                if digits[start: start + width] == target:
                    best = (start, pattern)
                    break
        return best


def build_pattern_set(forbidden: Iterable[str], extra: Iterable[str]) -> PatternSet:
    """
    由引理禁止串（带星号）与附加词构建 P，并加入全部转置

    Args:
        forbidden: 带星号的紧凑文本，如 "1 2* 1"
        extra: 不带星号的紧凑文本
    """
    words: List[FiniteWord] = []
    for text in forbidden:
        word, _ = parse_marked(text)
        words.extend([word, word.transpose()])
    for text in extra:
        word = parse_compact(text)
        words.extend([word, word.transpose()])
    return PatternSet.from_words(words)


def canonical_pattern_set() -> PatternSet:
    """禁止模式集合 P，共 26 个不同的词（数据来自注册表）"""
    from core.data import get_registry

    registry = get_registry()
    pattern_set = build_pattern_set(
        (entry["word"] for entry in registry.forbidden_table()),
        registry.extra_patterns(),
    )
    if len(pattern_set) != CANONICAL_SIZE:
        raise AssertionError(f"P 应有 {CANONICAL_SIZE} 个成员，实际 {len(pattern_set)}")
    return pattern_set


def y_membership(
    word: Union[OneSidedWord, FiniteWord], patterns: Optional[PatternSet] = None
) -> Tuple[bool, Optional[int]]:
    """
    判断词是否不含 P 的任何成员

    周期词扫描 前周期 + 2·周期 + 最长模式长度 位，
    任何出现都在该窗口中有代表。

    Returns:
        (是否属于 Y, 首个违例起始位置或 None)

    Raises:
        AlphabetError: 含有 {1,2} 以外的数字
    """
    patterns = patterns if patterns is not None else canonical_pattern_set()
    if isinstance(word, OneSidedWord):
        word.require_binary()
        length = len(word.preperiod) + 2 * len(word.period) + patterns.max_length
        digits = word.prefix(length)
    elif isinstance(word, FiniteWord):
        word.require_binary()
        digits = word.digits
    else:
        raise AlphabetError(f"不支持的词类型: {type(word).__name__}")

    hit = patterns.first_occurrence(digits)
    if hit is None:
        return True, None
    logger.debug("在位置 %d 发现禁止词 %s", hit[0], hit[1])
    return False, hit[0]
