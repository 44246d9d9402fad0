import itertools

import pytest
from gmpy2 import mpq

from core.arith import ArithmeticDomainError, Ordering, QuadraticSurd, combination_sign
from core.cf import (
    Convergents,
    Direction,
    agreement_gap,
    apply_prefix,
    bound_lambda_window,
    compare_words,
    eval_finite,
    eval_periodic,
    eval_zero_tail,
    extremal_completion,
    extremal_tail,
    first_difference,
    mobius_coefficients,
    periodic_tail_value,
    window_from_word,
)
from core.spectra import lambda_sum
from core.words import OneSidedWord, parse_compact


class TestEvaluation:
    def test_finite_convergent(self):
        assert eval_finite(3, [7, 15, 1]) == mpq(355, 113)

    @pytest.mark.parametrize("digits", [(1, 2, 2, 1, 2), (2, 2, 2, 1, 1, 1), (3, 1, 4, 1, 5, 9)])
    def test_determinant_identity(self, digits):
        assert Convergents.of(0, digits).determinant_holds()

    def test_golden_tail(self):
        t = periodic_tail_value((1,))
        assert t.satisfies(1, 1, -1)
        assert eval_periodic(1, OneSidedWord.periodic((1,))) == QuadraticSurd(1, 1, 5, 2)

    def test_silver_tail(self):
        assert periodic_tail_value((2,)) == QuadraticSurd(-1, 1, 2, 1)

    def test_tail_satisfies_fixed_point_quadratic(self):
        period = parse_compact("2_3 1_3").digits
        p, p_prev, q, q_prev = mobius_coefficients(period)
        assert periodic_tail_value(period).satisfies(q_prev, q - p_prev, -p)

    def test_preperiod_is_applied(self):
        word = OneSidedWord.parse("2 1 over(1 2)")
        tail = periodic_tail_value((1, 2))
        assert eval_zero_tail(word) == apply_prefix((2, 1), tail)


class TestComparison:
    def test_alternating_rule(self):
        one = OneSidedWord.parse("1 over(2)")
        two = OneSidedWord.parse("2 over(2)")
        assert first_difference(one, two) == 1
        assert compare_words(one, two) is Ordering.GREATER

        x = OneSidedWord.parse("1 1 over(2)")
        y = OneSidedWord.parse("1 2 over(2)")
        assert compare_words(x, y) is Ordering.LESS

    def test_agrees_with_exact_values(self):
        words = [OneSidedWord.parse(t) for t in ("1 2 over(1)", "1 2 over(2)", "1 over(1 2)", "2 over(2 1)")]
        for x, y in itertools.product(words, repeat=2):
            exact = eval_zero_tail(x) < eval_zero_tail(y)
            assert (compare_words(x, y) is Ordering.LESS) == exact

    def test_equal_words(self):
        word = OneSidedWord.parse("over(1 2)")
        assert compare_words(word, OneSidedWord.parse("1 over(2 1)")) is Ordering.EQUAL


class TestExtremalCompletion:
    def test_tail_phase(self):
        assert extremal_tail(0, Direction.MAX) == OneSidedWord.periodic((1, 2))
        assert extremal_tail(0, Direction.MIN) == OneSidedWord.periodic((2, 1))
        assert extremal_tail(1, Direction.MAX) == OneSidedWord.periodic((2, 1))

    @pytest.mark.parametrize("length", [0, 1, 2, 3, 4])
    def test_brute_force_over_completions(self, length):
        # 每个前缀之后接 {1,2}^4 再接 over(1) 或 over(2)，值都落在极值补全之间
        for prefix in itertools.product((1, 2), repeat=length):
            high = extremal_completion(prefix, Direction.MAX)
            low = extremal_completion(prefix, Direction.MIN)
            for middle in itertools.product((1, 2), repeat=4):
                for tail in (1, 2):
                    word = OneSidedWord(prefix + middle, (tail,))
                    value = eval_zero_tail(word)
                    assert low < value < high

    def test_extremes_lie_in_sqrt3_field(self):
        value = extremal_completion((1, 2, 2), Direction.MAX)
        assert value.d == 3

    def test_agreement_gap(self):
        assert agreement_gap((2, 2)) == mpq(1, 35)
        x = eval_zero_tail(OneSidedWord.parse("2 2 over(1)"))
        y = eval_zero_tail(OneSidedWord.parse("2 2 over(2)"))
        gap = agreement_gap((2, 2))
        # x 与 y 属于不同的二次域，差的符号用 combination_sign 判定
        assert combination_sign([(1, x), (-1, y), (-1, gap)]) < 0
        assert combination_sign([(1, y), (-1, x), (-1, gap)]) < 0


class TestWindowBounds:
    def test_window_from_marked_word(self):
        assert window_from_word((1, 2, 1), 1, 0) == {-1: 1, 0: 2, 1: 1}

    def test_bounds_bracket_the_true_value(self, rho_sequence):
        window = {i: rho_sequence.digit_at(i) for i in range(-12, 13)}
        bound = bound_lambda_window(window, 0)
        exact = lambda_sum(rho_sequence, 0)
        assert bound.lower <= exact <= bound.upper
        assert bound.enclosure.lo <= bound.enclosure.hi

    def test_unassigned_centre(self):
        bound = bound_lambda_window({1: 2}, 0)
        assert bound.lower < 2 < bound.upper

    def test_tightening(self, rho_sequence):
        narrow = {i: rho_sequence.digit_at(i) for i in range(-6, 7)}
        wide = {i: rho_sequence.digit_at(i) for i in range(-14, 15)}
        a, b = bound_lambda_window(narrow, 0), bound_lambda_window(wide, 0)
        assert a.lower <= b.lower and b.upper <= a.upper

    def test_empty_window(self):
        with pytest.raises(ArithmeticDomainError):
            bound_lambda_window({}, 0)
