import dataclasses

import pytest

from core.arith import QuadraticSurd
from core.constants import constant_value
from core.spectra import (
    PatternViolationError,
    UnsupportedSequenceError,
    decimal_renderer,
    freiman_sequence,
    lagrange_value,
    lambda_at,
    lambda_sum,
    markov_value,
    pa_sequence,
    pa_word,
    phase_values,
    membership_sequence,
    replay_certificate,
)
from core.words import AlphabetError, FiniteWord, parse_sequence


class TestLambda:
    def test_f_is_lambda_zero_of_rho(self, rho_sequence):
        text, certified = lambda_at(rho_sequence, 0).render(14)
        assert text == "3.11812017815984"
        assert certified == 14

    def test_reversal_mirrors_indices(self, rho_sequence):
        mirror = rho_sequence.reversed()
        for k in (-9, -2, 0, 3, 11):
            assert lambda_sum(mirror, k) == lambda_sum(rho_sequence, -k)

    def test_shift_moves_origin(self, rho_sequence):
        assert lambda_sum(rho_sequence.shift(5), 0) == lambda_sum(rho_sequence, 5)

    def test_rejects_non_sequences(self):
        with pytest.raises(UnsupportedSequenceError):
            lambda_at("over(1 2)", 0)

    def test_phase_values_of_constant_word(self):
        values = phase_values(FiniteWord.of(2))
        assert len(values) == 1
        assert values[0] == QuadraticSurd(0, 2, 2, 1)


class TestLagrange:
    @pytest.mark.parametrize(
        "word, expected",
        [
            ("1", QuadraticSurd(0, 1, 5, 1)),
            ("2", QuadraticSurd(0, 1, 8, 1)),
            ("1_2 2_2", QuadraticSurd(0, 1, 221, 5)),
        ],
    )
    def test_classical_markov_values(self, word, expected):
        assert lagrange_value(word).value == expected

    def test_phase_invariance(self):
        assert lagrange_value("2_2 1_2").value == lagrange_value("1 2_2 1").value

    def test_c_inf_period(self):
        assert lagrange_value("2_4 1_2 2_2 1").value == constant_value("c_inf")

    def test_empty_word(self):
        with pytest.raises(ValueError):
            lagrange_value(FiniteWord())

    def test_non_binary_word(self):
        with pytest.raises(AlphabetError):
            lagrange_value("1 3")


class TestMarkov:
    def test_rho_attains_f_at_origin(self, rho_sequence):
        value, certificate = markov_value(rho_sequence)
        assert value.value == constant_value("f")
        assert certificate.attaining_position == 0
        assert not certificate.attained_in_limit
        assert replay_certificate(rho_sequence, value.value, certificate)

    def test_periodic_sequence_matches_lagrange(self):
        sequence = parse_sequence("over(1_2 2_2)")
        value, certificate = markov_value(sequence)
        assert value.value == lagrange_value("1_2 2_2").value
        assert certificate.attaining_position is not None
        assert replay_certificate(sequence, value.value, certificate)

    def test_tampered_certificate_is_rejected(self, rho_sequence):
        value, certificate = markov_value(rho_sequence)
        moved = dataclasses.replace(certificate, attaining_position=certificate.attaining_position + 1)
        assert not replay_certificate(rho_sequence, value.value, moved)
        assert not replay_certificate(rho_sequence, value.value - 1, certificate)

    def test_certificate_serialises(self, rho_sequence):
        value, certificate = markov_value(rho_sequence)
        data = certificate.to_dict(decimal_renderer(10))
        assert data["attaining_position"] == 0
        assert data["method"] in ("gap", "contraction")
        assert all(isinstance(v, str) for v in data["periodic_phase_values"]["right"])


class TestFamilies:
    def test_freiman_empty_word_gives_sigma(self, sigma_sequence):
        assert lambda_sum(sigma_sequence, 0) == constant_value("sigma")

    def test_freiman_word_is_inserted(self):
        base = freiman_sequence("")
        longer = freiman_sequence("2_2")
        # 头部占据位置 1..17，w 紧随其后
        assert longer.digits(-20, 18) == base.digits(-20, 18)
        assert longer.digits(18, 20) == (2, 2)

    def test_membership_rejects_forbidden_tail(self):
        with pytest.raises(PatternViolationError):
            membership_sequence("over(1 2)")

    def test_membership_default_tail(self, rho_sequence):
        sequence = membership_sequence("over(2_2 1_2)")
        assert sequence.digits(-30, 11) == rho_sequence.digits(-30, 11)

    def test_pa_word_shape(self):
        word, star = pa_word(2)
        assert len(word) == 70
        assert star == 25
        assert word[star] == 2

    def test_pa_sequence_origin(self):
        word, star = pa_word(3)
        sequence = pa_sequence(3)
        assert sequence.digits(0, len(word)) == word.digits[star:] + word.digits[:star]

    def test_pa_requires_positive_a(self):
        with pytest.raises(ValueError):
            pa_word(0)
