import pytest
from gmpy2 import mpq

from core.arith import (
    ArithmeticDomainError,
    Enclosure,
    Ordering,
    QuadraticSurd,
    SurdSum,
    as_rational,
    combination_sign,
    enclose,
    parse_rational,
    render_certified,
    surd_compare,
    surd_from_fixed_point,
)


class TestQuadraticSurd:
    def test_radicand_square_factor_is_extracted(self):
        # (2 + 2√8)/4 = (1 + 2√2)/2
        x = QuadraticSurd(2, 2, 8, 4)
        assert (x.p, x.q, x.d, x.r) == (1, 2, 2, 2)

    def test_perfect_square_collapses_to_rational(self):
        x = QuadraticSurd(1, 1, 9, 1)
        assert x.is_rational
        assert x.rational_part == 4

    def test_square_factor_above_small_primes(self):
        # 53²·2 和 10007²·2 的平方因子都要剥净
        x = QuadraticSurd(0, 1, 53 * 53 * 2, 1)
        assert (x.q, x.d) == (53, 2)
        y = QuadraticSurd(0, 1, 10007 * 10007 * 2, 1)
        assert (y.q, y.d) == (10007, 2)

    def test_equality_is_by_value(self, sqrt2):
        a = QuadraticSurd(0, 1, 8, 1)
        b = QuadraticSurd(0, 2, 2, 1)
        assert a == b
        assert hash(a) == hash(b)
        assert QuadraticSurd(3, 0, 0, 1) == 3
        assert QuadraticSurd(1, 0, 0, 2) == mpq(1, 2)
        assert sqrt2 != QuadraticSurd(0, 1, 3, 1)

    def test_negative_denominator_is_normalised(self):
        x = QuadraticSurd(1, 1, 5, -2)
        assert x.r == 2 and x.p == -1 and x.q == -1

    def test_zero_denominator_rejected(self):
        with pytest.raises(ArithmeticDomainError):
            QuadraticSurd(1, 1, 2, 0)

    def test_golden_ratio_arithmetic(self):
        t = surd_from_fixed_point(1, 1, -1)
        assert t.satisfies(1, 1, -1)
        assert surd_compare(1 / t, t + 1) is Ordering.EQUAL
        assert 0 < t < 1

    def test_sign_of_mixed_terms(self):
        assert QuadraticSurd(-1, 1, 2, 1).sign() == 1
        assert QuadraticSurd(-2, 1, 2, 1).sign() == -1
        assert QuadraticSurd(3, -2, 2, 1).sign() == 1

    def test_conjugate_product_is_rational(self):
        x = QuadraticSurd(3, 1, 7, 2)
        product = x * x.conjugate()
        assert product.is_rational
        assert product.rational_part == mpq(9 - 7, 4)

    def test_defining_quadratic(self):
        x = QuadraticSurd(0, 1, 2, 1) + 1
        a, b, c = x.defining_quadratic()
        assert x.satisfies(a, b, c)
        assert (a, b, c) == (1, -2, -1)

    def test_mixed_fields_need_surd_sum(self, sqrt2, sqrt3):
        with pytest.raises(ArithmeticDomainError):
            sqrt2 + sqrt3

    def test_compatible_radicands_are_coerced(self, sqrt2):
        # √8 = 2√2
        total = sqrt2 + QuadraticSurd(0, 1, 8, 1)
        assert total == QuadraticSurd(0, 3, 2, 1)

    def test_fixed_point_errors(self):
        with pytest.raises(ArithmeticDomainError, match="not quadratic"):
            surd_from_fixed_point(0, 1, 1)
        with pytest.raises(ArithmeticDomainError, match="no real root"):
            surd_from_fixed_point(1, 0, 1)

    def test_reciprocal_of_zero(self):
        with pytest.raises(ZeroDivisionError):
            QuadraticSurd.rational(0).reciprocal()


class TestSurdSum:
    def test_two_fields_compare_exactly(self, sqrt2, sqrt3):
        total = SurdSum((sqrt2, sqrt3))
        assert total > mpq(314626, 100000)
        assert total < mpq(314627, 100000)

    def test_same_square_class_is_merged(self, sqrt2):
        total = SurdSum((sqrt2, QuadraticSurd(1, 1, 8, 1)))
        assert len(total.terms) == 1
        assert total == QuadraticSurd(1, 3, 2, 1)

    def test_three_fields_rejected(self, sqrt2, sqrt3):
        with pytest.raises(ArithmeticDomainError):
            SurdSum((sqrt2, sqrt3, QuadraticSurd(0, 1, 5, 1)))

    def test_cancellation_to_zero(self, sqrt2, sqrt3):
        total = SurdSum((sqrt2, sqrt3)) - sqrt2
        assert total == sqrt3
        assert SurdSum((sqrt2, -sqrt2)) == 0

    def test_equality_against_rationals(self):
        assert SurdSum((mpq(1, 3), mpq(2, 3))) == 1


class TestCombinationSign:
    def test_more_fields_than_a_surd_sum_holds(self, sqrt2, sqrt3):
        # √2 + √3 − √5 − 1 ≈ −0.0898
        sqrt5 = QuadraticSurd(0, 1, 5, 1)
        assert combination_sign([(1, sqrt2), (1, sqrt3), (-1, sqrt5), (-1, 1)]) == -1

    def test_exact_zero(self, sqrt2):
        assert combination_sign([(2, sqrt2), (-1, QuadraticSurd(0, 1, 8, 1))]) == 0


class TestRational:
    @pytest.mark.parametrize(
        "text, expected",
        [
            ("63/20", mpq(63, 20)),
            ("3.1181201786", mpq(31181201786, 10 ** 10)),
            ("1e-9", mpq(1, 10 ** 9)),
            ("-2.5", mpq(-5, 2)),
        ],
    )
    def test_parse(self, text, expected):
        assert parse_rational(text) == expected

    @pytest.mark.parametrize("text", ["", "abc", "1/0", "1.2.3"])
    def test_parse_rejects(self, text):
        with pytest.raises(ArithmeticDomainError):
            parse_rational(text)

    def test_float_input_rejected(self):
        with pytest.raises(ArithmeticDomainError):
            as_rational(0.5)

    def test_render_only_agreeing_digits(self):
        assert render_certified(mpq(314159, 100000), mpq(314160, 100000), 5) == ("3.141", 3)

    def test_render_exact_value(self):
        assert render_certified(mpq(1, 4), mpq(1, 4), 4) == ("0.2500", 4)

    def test_render_straddling_zero(self):
        assert render_certified(mpq(-1, 10), mpq(1, 10), 3) == ("", -1)


class TestEnclosure:
    def test_inverted_endpoints_rejected(self):
        with pytest.raises(ArithmeticDomainError):
            Enclosure(mpq(2), mpq(1))

    def test_enclose_surd_to_width(self, sqrt2):
        width = mpq(1, 10 ** 30)
        enc = enclose(sqrt2, width)
        assert enc.width <= width
        assert enc.lo * enc.lo < 2 < enc.hi * enc.hi

    def test_enclose_sum(self, sqrt2, sqrt3):
        enc = SurdSum((sqrt2, sqrt3)).enclose(mpq(1, 10 ** 20))
        assert enc.render(8) == ("3.14626436", 8)

    def test_non_positive_width_rejected(self, sqrt2):
        with pytest.raises(ArithmeticDomainError):
            enclose(sqrt2, 0)
