"""
Markov 值 m(A) = sup_i λ_i(A) 及其可复核证书

【定位策略】
1. 精确扫描：核心段 + 每侧周期尾部的前 3 个周期
2. 间隙证书：尾部周期部分第 t 个周期的 λ 与纯周期相位值相差不超过
   agreement_gap(共享前缀)；若 相位值 + 间隙 < 扫描最大值，未扫描位置全部被压制。
   不满足时逐周期扩大扫描窗口再试
3. 收缩论证：偏差的符号随 t 周期变化、绝对值严格递减，
   因此尾部的上确界 = max(扫描到的值, 相位值)。相位值更大时上确界只在极限处取到

【并列规则】
最大值并列时取 |i| 最小者，再取负的 i
"""

import logging
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Tuple

from core.arith import Rational, SurdSum, rational_to_text
from core.cf import agreement_gap
from core.words import BiInfiniteSequence

from .errors import UnsupportedSequenceError
from .values import SpectrumValue, lambda_sum, max_with_position, phase_values

logger = logging.getLogger(__name__)

# 初始扫描进入每侧周期尾部的周期数
SCAN_PERIODS = 3
# 间隙证书最多追加的周期数
MAX_EXTRA_PERIODS = 64

METHOD_GAP = "gap"
METHOD_CONTRACTION = "contraction"


@dataclass(frozen=True)
class MarkovCertificate:
    """
    m(A) 的证书

    Attributes:
        attaining_position: 取到上确界的位置；只在极限处取到时为 None
        core_window: 精确扫描的位置区间 [start, stop)
        tail_bound: 未扫描位置相对相位值的偏差上界（收缩论证时为 0）
        periodic_phase_values: 右尾、左尾纯周期的各相位 λ 值
        attained_in_limit: 上确界是否只在极限处取到
        method: "gap" 或 "contraction"
    """

    attaining_position: Optional[int]
    core_window: Tuple[int, int]
    tail_bound: Rational
    periodic_phase_values: Tuple[Tuple[SurdSum, ...], Tuple[SurdSum, ...]]
    attained_in_limit: bool
    method: str

    def to_dict(self, render) -> Dict[str, Any]:
        """render: SurdSum -> 十进制文本"""
        right, left = self.periodic_phase_values
        return {
            "attaining_position": self.attaining_position,
            "core_window": list(self.core_window),
            "tail_bound": rational_to_text(self.tail_bound),
            "periodic_phase_values": {
                "right": [render(v) for v in right],
                "left": [render(v) for v in left],
            },
            "attained_in_limit": self.attained_in_limit,
            "method": self.method,
        }


@dataclass
class _Tail:
    """一侧周期尾部（左尾通过反转序列化为右尾处理）"""

    start: int
    period: int
    phases: List[SurdSum] = field(default_factory=list)

    def phase_of(self, i: int) -> SurdSum:
        return self.phases[(i - self.start) % self.period]


def _right_tail(A: BiInfiniteSequence) -> _Tail:
    phases = phase_values(A.right.period)
    start = A.right_periodic_start
    # phase_values 以周期首位为相位 0，与 start 对齐
    return _Tail(start=start, period=len(A.right.period), phases=phases)


def _boundary_gap(A: BiInfiniteSequence, tail: _Tail, stop: int) -> Rational:
    """
    位置 ≥ stop 的尾部偏差上界

    对 stop … stop+period−1 各取后向词与纯周期共享的前缀；更远的同相位位置
    共享更长的前缀，间隙单调不增
    """
    gap = Rational(0)
    for i in range(stop, stop + tail.period):
        shared = A.backward_word(i).prefix(i - tail.start)
        gap = max(gap, agreement_gap(shared))
    return gap


def _tie_key(i: int) -> Tuple[int, int]:
    return abs(i), 0 if i < 0 else 1


def _pick_maximum(scanned: Dict[int, SurdSum]) -> Tuple[int, SurdSum]:
    positions = sorted(scanned, key=_tie_key)
    best_position = positions[0]
    best = scanned[best_position]
    for i in positions[1:]:
        if scanned[i] > best:
            best_position, best = i, scanned[i]
    return best_position, best


def _scan(A: BiInfiniteSequence, positions, scanned: Dict[int, SurdSum]) -> None:
    for i in positions:
        if i not in scanned:
            scanned[i] = lambda_sum(A, i)


def markov_value(A: BiInfiniteSequence) -> Tuple[SpectrumValue, MarkovCertificate]:
    """
    m(A) 的精确值与证书

    Args:
        A: 两侧最终周期的序列

    Returns:
        (SpectrumValue, MarkovCertificate)

    Raises:
        UnsupportedSequenceError: A 不是 BiInfiniteSequence
    """
    if not isinstance(A, BiInfiniteSequence):
        raise UnsupportedSequenceError(f"只支持两侧最终周期的序列，收到 {type(A).__name__}")

    mirror = A.reversed()
    right = _right_tail(A)
    left = _right_tail(mirror)

    # 左尾在 mirror 中位于位置 ≥ mirror_stop，对应 A 中 ≤ −mirror_stop
    stop = right.start + SCAN_PERIODS * right.period
    mirror_stop = left.start + SCAN_PERIODS * left.period
    scanned: Dict[int, SurdSum] = {}
    _scan(A, range(-mirror_stop + 1, stop), scanned)

    all_phases = right.phases + left.phases
    _, limit_value = max_with_position(all_phases)

    for extra in range(MAX_EXTRA_PERIODS + 1):
        position, best = _pick_maximum(scanned)
        if best <= limit_value:
            break
        gap = max(_boundary_gap(A, right, stop), _boundary_gap(mirror, left, mirror_stop))
        if all(phase + gap < best for phase in all_phases):
            certificate = MarkovCertificate(
                attaining_position=position,
                core_window=(-mirror_stop + 1, stop),
                tail_bound=gap,
                periodic_phase_values=(tuple(right.phases), tuple(left.phases)),
                attained_in_limit=False,
                method=METHOD_GAP,
            )
            logger.debug("间隙证书成立：窗口 %s，追加 %d 个周期", certificate.core_window, extra)
            return SpectrumValue.of(best), certificate
        stop += right.period
        mirror_stop += left.period
        _scan(A, range(stop - right.period, stop), scanned)
        _scan(A, range(-mirror_stop + 1, -mirror_stop + 1 + left.period), scanned)
        logger.debug("间隙不足，扫描窗口扩展到 [%d, %d)", -mirror_stop + 1, stop)

    position, best = _pick_maximum(scanned)
    in_limit = best < limit_value
    value = limit_value if in_limit else best
    certificate = MarkovCertificate(
        attaining_position=None if in_limit else position,
        core_window=(-mirror_stop + 1, stop),
        tail_bound=Rational(0),
        periodic_phase_values=(tuple(right.phases), tuple(left.phases)),
        attained_in_limit=in_limit,
        method=METHOD_CONTRACTION,
    )
    logger.debug("收缩论证：极限处取到=%s", in_limit)
    return SpectrumValue.of(value), certificate


def replay_certificate(
    A: BiInfiniteSequence, value: SurdSum, certificate: MarkovCertificate
) -> bool:
    """
    独立复核 MarkovCertificate

    重新计算窗口内每个 λ_i、边界间隙与相位值，不依赖 markov_value 的搜索过程

    Returns:
        证书是否成立
    """
    mirror = A.reversed()
    right = _right_tail(A)
    left = _right_tail(mirror)
    start, stop = certificate.core_window
    mirror_stop = 1 - start

    # 窗口必须至少覆盖每侧周期尾部的前两个周期
    if stop < right.start + 2 * right.period or mirror_stop < left.start + 2 * left.period:
        return False

    scanned: Dict[int, SurdSum] = {}
    _scan(A, range(start, stop), scanned)
    for i in sorted(scanned, key=_tie_key):
        if scanned[i] > value:
            return False

    phases = right.phases + left.phases
    if certificate.attained_in_limit:
        if certificate.attaining_position is not None:
            return False
        if any(v >= value for v in scanned.values()):
            return False
        return any(p == value for p in phases) and all(p <= value for p in phases)

    position = certificate.attaining_position
    if position is None or position not in scanned or scanned[position] != value:
        return False
    # 并列规则：排在 position 之前的位置必须严格更小
    for i in sorted(scanned, key=_tie_key):
        if i == position:
            break
        if not scanned[i] < value:
            return False

    if certificate.method == METHOD_GAP:
        gap = max(_boundary_gap(A, right, stop), _boundary_gap(mirror, left, mirror_stop))
        if gap > certificate.tail_bound:
            return False
        return all(p + certificate.tail_bound < value for p in phases)
    if certificate.method == METHOD_CONTRACTION:
        return all(p <= value for p in phases)
    return False
