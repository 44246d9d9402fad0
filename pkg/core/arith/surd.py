"""
QuadraticSurd / SurdSum - 精确二次无理数

【设计原则】
1. 每个最终周期连分数的值都是 (p + q·√d)/r
2. λ_i = 前向连分数 + 后向连分数，两者可能位于不同的二次域，
   因此引入最多两项的 SurdSum
3. 相等性判定完全精确：平方根在“平方类”不同的根号数上线性无关，
   系数全为零才相等；否则用倍增精度的有理区间判定符号，必然终止

【规范形式】
- r > 0，gcd(p, q, r) = 1
- d 为完全平方数或 q = 0 时退化为有理形式 (q = 0, d = 0)
"""

import logging
from dataclasses import dataclass
from enum import IntEnum
from math import gcd
from typing import Dict, Iterable, List, Tuple, Union

from gmpy2 import is_square, isqrt, mpq, next_prime

from .enclosure import Enclosure
from .errors import ArithmeticDomainError
from .rational import Rational, rational_to_text

logger = logging.getLogger(__name__)

# 倍增精度起点（比特）
START_BITS = 64
# 试除平方因子的素数上限；根号数不超过其立方时约化完全
SQUARE_TRIAL_LIMIT = 10 ** 4


def _strip_square_factors(d: int) -> Tuple[int, int]:
    """
    剥去 d 的平方因子，返回 (d', k)，d = d'·k²

    用 gmpy2 素数把小素因子整个除净，直到素数的立方超过余数；此时余数至多含两个素因子，
    只可能以完全平方的形式带平方因子。试除超过 SQUARE_TRIAL_LIMIT 仍未结束时约化可能不完全
    """
    squarefree, factor, rest = 1, 1, d
    prime = 2
    while prime <= SQUARE_TRIAL_LIMIT and prime * prime * prime <= rest:
        exponent = 0
        while rest % prime == 0:
            rest //= prime
            exponent += 1
        factor *= prime ** (exponent // 2)
        squarefree *= prime ** (exponent % 2)
        prime = int(next_prime(prime))
    if rest > 1 and is_square(rest):
        factor *= int(isqrt(rest))
        rest = 1
    return squarefree * rest, factor


class Ordering(IntEnum):
    """三态比较结果"""

    LESS = -1
    EQUAL = 0
    GREATER = 1


def _sign(value) -> int:
    return (value > 0) - (value < 0)


@dataclass(frozen=True)
class QuadraticSurd:
    """(p + q·√d) / r"""

    p: int
    q: int
    d: int
    r: int

    def __post_init__(self) -> None:
        p, q, d, r = int(self.p), int(self.q), int(self.d), int(self.r)
        if r == 0:
            raise ArithmeticDomainError("分母不能为零")
        if d < 0:
            raise ArithmeticDomainError("根号数必须非负")

        if q == 0 or d == 0:
            q, d = 0, 0
        elif is_square(d):
            p, q, d = p + q * int(isqrt(d)), 0, 0
        else:
            d, factor = _strip_square_factors(d)
            q *= factor

        if r < 0:
            p, q, r = -p, -q, -r
        g = gcd(gcd(p, q), r)
        if g > 1:
            p, q, r = p // g, q // g, r // g

        object.__setattr__(self, "p", p)
        object.__setattr__(self, "q", q)
        object.__setattr__(self, "d", d)
        object.__setattr__(self, "r", r)

    # ------------------------------------------------------------------
    # 构造
    # ------------------------------------------------------------------

    @classmethod
    def rational(cls, value: Union[int, Rational]) -> "QuadraticSurd":
        value = mpq(value)
        return cls(int(value.numerator), 0, 0, int(value.denominator))

    @classmethod
    def from_parts(cls, a: Rational, b: Rational, d: int) -> "QuadraticSurd":
        """由 a + b·√d 构造"""
        a, b = mpq(a), mpq(b)
        r = int(a.denominator) * int(b.denominator) // gcd(int(a.denominator), int(b.denominator))
        return cls(int(a * r), int(b * r), d, r)

    # ------------------------------------------------------------------
    # 属性
    # ------------------------------------------------------------------

    @property
    def rational_part(self) -> Rational:
        return mpq(self.p, self.r)

    @property
    def radical_coeff(self) -> Rational:
        return mpq(self.q, self.r)

    @property
    def is_rational(self) -> bool:
        return self.q == 0

    def sign(self) -> int:
        """精确符号"""
        sa, sb = _sign(self.p), _sign(self.q)
        if sb == 0 or sa == sb:
            return sa if sa != 0 else sb
        if sa == 0:
            return sb
        return sa if self.p * self.p > self.q * self.q * self.d else sb

    def conjugate(self) -> "QuadraticSurd":
        return QuadraticSurd(self.p, -self.q, self.d, self.r)

    def defining_quadratic(self) -> Tuple[int, int, int]:
        """
        返回以本数为根的整系数二次式 (A, B, C)：A·x² + B·x + C = 0

        由 (r·x − p)² = q²·d 展开；有理数返回 (0, r, −p)
        """
        if self.is_rational:
            return 0, self.r, -self.p
        a, b, c = self.r * self.r, -2 * self.p * self.r, self.p * self.p - self.q * self.q * self.d
        g = gcd(gcd(a, b), c)
        return a // g, b // g, c // g

    def satisfies(self, a: int, b: int, c: int) -> bool:
        """代入 a·x² + b·x + c 是否精确为零"""
        value = self * self * a + self * b + c
        return value.p == 0 and value.q == 0

    # 比较与 == 都走精确判定：大根号数的平方因子未必剥净，字段不同的两个实例可能表示同一个数
    def __eq__(self, other: object) -> bool:
        if not isinstance(other, (QuadraticSurd, int, Rational)):
            return NotImplemented
        return surd_compare(self, other) is Ordering.EQUAL

    def __hash__(self) -> int:
        # 有理部分与根号数的代表无关
        return hash(self.rational_part)

    def __lt__(self, other) -> bool:
        return surd_compare(self, other) is Ordering.LESS

    def __le__(self, other) -> bool:
        return surd_compare(self, other) is not Ordering.GREATER

    def __gt__(self, other) -> bool:
        return surd_compare(self, other) is Ordering.GREATER

    def __ge__(self, other) -> bool:
        return surd_compare(self, other) is not Ordering.LESS

    # ------------------------------------------------------------------
    # 域内运算
    # ------------------------------------------------------------------

    def _coerce(self, other) -> "QuadraticSurd":
        if isinstance(other, QuadraticSurd):
            if other.is_rational or self.is_rational or other.d == self.d:
                return other
            product = self.d * other.d
            if is_square(product):
                # √d₂ = √(d₁d₂)/d₁ · √d₁
                factor = mpq(int(isqrt(product)), self.d)
                return QuadraticSurd.from_parts(other.rational_part, other.radical_coeff * factor, self.d)
            raise ArithmeticDomainError(f"不同二次域: √{self.d} 与 √{other.d}，请使用 SurdSum")
        return QuadraticSurd.rational(other)

    def _radicand_with(self, other: "QuadraticSurd") -> int:
        return self.d if self.d else other.d

    def __add__(self, other) -> "QuadraticSurd":
        other = self._coerce(other)
        d = self._radicand_with(other)
        return QuadraticSurd.from_parts(
            self.rational_part + other.rational_part,
            self.radical_coeff + other.radical_coeff,
            d,
        )

    __radd__ = __add__

    def __neg__(self) -> "QuadraticSurd":
        return QuadraticSurd(-self.p, -self.q, self.d, self.r)

    def __sub__(self, other) -> "QuadraticSurd":
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> "QuadraticSurd":
        return (-self) + other

    def __mul__(self, other) -> "QuadraticSurd":
        other = self._coerce(other)
        d = self._radicand_with(other)
        a1, b1 = self.rational_part, self.radical_coeff
        a2, b2 = other.rational_part, other.radical_coeff
        return QuadraticSurd.from_parts(a1 * a2 + b1 * b2 * d, a1 * b2 + a2 * b1, d)

    __rmul__ = __mul__

    def reciprocal(self) -> "QuadraticSurd":
        a, b = self.rational_part, self.radical_coeff
        norm = a * a - b * b * self.d
        if norm == 0:
            raise ZeroDivisionError("零没有倒数")
        return QuadraticSurd.from_parts(a / norm, -b / norm, self.d)

    def __truediv__(self, other) -> "QuadraticSurd":
        return self * self._coerce(other).reciprocal()

    def __rtruediv__(self, other) -> "QuadraticSurd":
        return self.reciprocal() * other

    # ------------------------------------------------------------------
    # 区间与显示
    # ------------------------------------------------------------------

    def enclose_bits(self, bits: int) -> Enclosure:
        """误差不超过 |q|/(r·2^bits) 的有理区间"""
        if self.is_rational:
            return Enclosure.exact(self.rational_part)
        root = int(isqrt(self.d << (2 * bits)))
        low_root, high_root = mpq(root, 1 << bits), mpq(root + 1, 1 << bits)
        a, b = self.rational_part, self.radical_coeff
        ends = (a + b * low_root, a + b * high_root)
        return Enclosure(min(ends), max(ends))

    def __float__(self) -> float:
        enc = self.enclose_bits(64)
        return float((enc.lo + enc.hi) / 2)

    def to_dict(self) -> Dict[str, str]:
        return {"p": str(self.p), "q": str(self.q), "d": str(self.d), "r": str(self.r)}

    def __str__(self) -> str:
        if self.is_rational:
            return rational_to_text(self.rational_part)
        return f"({self.p} + {self.q}*sqrt({self.d}))/{self.r}"


SurdLike = Union["SurdSum", QuadraticSurd, int, Rational]


def surd_from_fixed_point(a: int, b: int, c: int, branch: int = 1) -> QuadraticSurd:
    """
    求 a·x² + b·x + c = 0 的根

    Args:
        a, b, c: 整数系数
        branch: +1 取 (−b + √Δ)/(2a)，−1 取 (−b − √Δ)/(2a)

    Raises:
        ArithmeticDomainError: a = 0 ("not quadratic") 或 Δ < 0 ("no real root")
    """
    if a == 0:
        raise ArithmeticDomainError("not quadratic")
    disc = b * b - 4 * a * c
    if disc < 0:
        raise ArithmeticDomainError("no real root")
    return QuadraticSurd(-b, 1 if branch >= 0 else -1, disc, 2 * a)


class _LinearForm:
    """
    c₀ + Σ cᵢ·√dᵢ，dᵢ 两两不在同一平方类

    比较与相等判定的内部表示，项数不受限制
    """

    def __init__(self) -> None:
        self.constant: Rational = mpq(0)
        self.radicals: Dict[int, Rational] = {}

    def add_surd(self, surd: QuadraticSurd, scale: int = 1) -> None:
        self.constant += surd.rational_part * scale
        if surd.is_rational:
            return
        coeff = surd.radical_coeff * scale
        for d in self.radicals:
            product = d * surd.d
            if is_square(product):
                self.radicals[d] += coeff * mpq(int(isqrt(product)), d)
                return
        self.radicals[surd.d] = coeff

    def prune(self) -> None:
        self.radicals = {d: c for d, c in self.radicals.items() if c != 0}

    def is_zero(self) -> bool:
        return self.constant == 0 and not self.radicals

    def enclose_bits(self, bits: int) -> Enclosure:
        total = Enclosure.exact(self.constant)
        for d, coeff in self.radicals.items():
            total = total + QuadraticSurd.from_parts(0, coeff, d).enclose_bits(bits)
        return total

    def sign(self) -> int:
        self.prune()
        if self.is_zero():
            return 0
        if len(self.radicals) == 1:
            (d, coeff), = self.radicals.items()
            return QuadraticSurd.from_parts(self.constant, coeff, d).sign()
        if not self.radicals:
            return _sign(self.constant)
        bits = START_BITS
        while True:
            enc = self.enclose_bits(bits)
            if enc.lo > 0:
                return 1
            if enc.hi < 0:
                return -1
            logger.debug("符号未分离，精度加倍至 %d 比特", bits * 2)
            bits *= 2


class SurdSum:
    """
    最多两项、根号数两两不同的二次无理数之和

    【约定】
    - 构造时按平方类合并同域项，有理部分并入第一项
    - 合并后仍超过两个域时报错
    """

    __slots__ = ("_terms",)

    def __init__(self, terms: Iterable[SurdLike] = ()) -> None:
        form = _LinearForm()
        for term in terms:
            for surd in _surds_of(term):
                form.add_surd(surd)
        form.prune()
        if len(form.radicals) > 2:
            raise ArithmeticDomainError("SurdSum 最多包含两个二次域")

        surds: List[QuadraticSurd] = [
            QuadraticSurd.from_parts(0, coeff, d) for d, coeff in sorted(form.radicals.items())
        ]
        if surds:
            surds[0] = surds[0] + form.constant
        else:
            surds = [QuadraticSurd.rational(form.constant)]
        self._terms: Tuple[QuadraticSurd, ...] = tuple(surds)

    @property
    def terms(self) -> Tuple[QuadraticSurd, ...]:
        return self._terms

    def __add__(self, other: SurdLike) -> "SurdSum":
        return SurdSum((self, other))

    __radd__ = __add__

    def __neg__(self) -> "SurdSum":
        return SurdSum(-t for t in self._terms)

    def __sub__(self, other: SurdLike) -> "SurdSum":
        return SurdSum((self, -coerce_sum(other)))

    def enclose(self, width: Rational) -> Enclosure:
        return enclose(self, width)

    def compare(self, other: SurdLike) -> Ordering:
        return surd_compare(self, other)

    def __lt__(self, other: SurdLike) -> bool:
        return surd_compare(self, other) is Ordering.LESS

    def __le__(self, other: SurdLike) -> bool:
        return surd_compare(self, other) is not Ordering.GREATER

    def __gt__(self, other: SurdLike) -> bool:
        return surd_compare(self, other) is Ordering.GREATER

    def __ge__(self, other: SurdLike) -> bool:
        return surd_compare(self, other) is not Ordering.LESS

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, (SurdSum, QuadraticSurd, int, Rational)):
            return NotImplemented
        return surd_compare(self, other) is Ordering.EQUAL

    # 同一数值可能有不同的根号数代表，不提供哈希
    __hash__ = None  # type: ignore[assignment]

    def __float__(self) -> float:
        enc = self.enclose(mpq(1, 1 << 60))
        return float((enc.lo + enc.hi) / 2)

    def to_dict(self) -> Dict[str, object]:
        return {"terms": [t.to_dict() for t in self._terms]}

    def __repr__(self) -> str:
        return "SurdSum(" + " + ".join(str(t) for t in self._terms) + ")"


def _surds_of(value: SurdLike) -> Tuple[QuadraticSurd, ...]:
    if isinstance(value, SurdSum):
        return value.terms
    if isinstance(value, QuadraticSurd):
        return (value,)
    return (QuadraticSurd.rational(value),)


def coerce_sum(value: SurdLike) -> SurdSum:
    return value if isinstance(value, SurdSum) else SurdSum((value,))


def surd_compare(x: SurdLike, y: SurdLike) -> Ordering:
    """
    精确比较两个 SurdSum

    先按平方类合并 x − y 的各项；全部系数为零即 EQUAL，
    否则（线性无关保证差非零）精确求符号或倍增精度区间分离。
    """
    form = _LinearForm()
    for surd in _surds_of(x):
        form.add_surd(surd)
    for surd in _surds_of(y):
        form.add_surd(surd, scale=-1)
    return Ordering(form.sign())


def enclose(x: SurdLike, width: Rational) -> Enclosure:
    """
    返回宽度不超过 width 且包含 x 的有理区间

    Raises:
        ArithmeticDomainError: width <= 0
    """
    width = mpq(width)
    if width <= 0:
        raise ArithmeticDomainError("区间宽度必须为正")
    surds = _surds_of(x)
    bits = START_BITS
    while True:
        total = Enclosure.exact(0)
        for surd in surds:
            total = total + surd.enclose_bits(bits)
        if total.width <= width:
            return total
        bits *= 2


def combination_sign(pairs: Iterable[Tuple[int, SurdLike]]) -> int:
    """
    Σ cₖ·xₖ 的精确符号（整数系数，项数与二次域个数不受限制）

    Args:
        pairs: (系数, 值) 序列
    """
    form = _LinearForm()
    for coeff, value in pairs:
        for surd in _surds_of(value):
            form.add_surd(surd, scale=coeff)
    return form.sign()
