import csv

import pytest
from gmpy2 import mpq

from core.dimension import (
    DimensionInputError,
    ExponentMode,
    GaussCantorSpec,
    dump_scales_csv,
    hd_bounds,
    interval_scales,
    scale_pair,
    solve_exponent,
)
from core.words import FiniteWord


class TestGaussCantorSpec:
    def test_parse_text(self):
        spec = GaussCantorSpec.parse("1_2;2_2")
        assert spec.alphabet == (FiniteWord.of(1, 1), FiniteWord.of(2, 2))
        assert str(spec) == "1_2;2_2"

    def test_parse_registry_name(self):
        assert GaussCantorSpec.parse("pairs") == GaussCantorSpec.parse("1_2;2_2")

    def test_prefix_code_required(self):
        with pytest.raises(DimensionInputError):
            GaussCantorSpec.parse("1;1 2")

    def test_needs_two_words(self):
        with pytest.raises(DimensionInputError):
            GaussCantorSpec.parse("1_2")


class TestScales:
    def test_single_digit_scales(self):
        pair = scale_pair((1,))
        # (1 + t)² 与 t = [0; over(1)] 或 [0; over(2)]
        assert pair.lambda_min < pair.lambda_max
        assert mpq(18, 10) < pair.lambda_min < pair.lambda_max < mpq(27, 10)

    def test_depth_one(self):
        pairs = interval_scales(GaussCantorSpec.parse("pairs"), 1)
        assert [p.word.digits for p in pairs] == [(1, 1), (2, 2)]
        assert all(p.lambda_min > 1 for p in pairs)

    def test_depth_must_be_positive(self):
        with pytest.raises(DimensionInputError):
            interval_scales(GaussCantorSpec.parse("pairs"), 0)

    def test_cost_guard(self):
        with pytest.raises(DimensionInputError):
            interval_scales(GaussCantorSpec.parse("pairs"), 5, cost_guard=16)

    def test_csv_dump(self, tmp_path):
        pairs = interval_scales(GaussCantorSpec.parse("pairs"), 2)
        target = dump_scales_csv(pairs, tmp_path / "scales.csv", digits=10)
        rows = list(csv.reader(target.open(encoding="utf-8")))
        assert rows[0] == ["word", "lambda_min", "lambda_max"]
        assert len(rows) == 1 + 4
        assert rows[1][0] == "1_4"


class TestExponent:
    def test_two_halves(self):
        bracket = solve_exponent([2, 2], ExponentMode.ALPHA, "1e-9")
        assert bracket.lower <= 1 <= bracket.upper
        assert bracket.upper - bracket.lower <= mpq(1, 10 ** 8)

    def test_middle_thirds(self):
        # 2·3^{-s} = 1  ⇒  s = ln 2 / ln 3
        bracket = solve_exponent([3, 3], ExponentMode.ALPHA, "1e-9")
        assert bracket.lower < mpq(6309297536, 10 ** 10)
        assert bracket.upper > mpq(6309297535, 10 ** 10)
        assert abs(bracket.estimate - 0.6309297535714574) < 1e-8

    def test_single_scale_has_dimension_zero(self):
        bracket = solve_exponent([4], ExponentMode.BETA)
        assert bracket.lower == 0 and bracket.upper == 0

    def test_non_contracting_scale(self):
        with pytest.raises(DimensionInputError):
            solve_exponent([2, 1])

    def test_non_positive_tolerance(self):
        with pytest.raises(DimensionInputError):
            solve_exponent([2, 2], tol="0")

    def test_bracket_serialises(self):
        data = solve_exponent([3, 3], tol="1e-9").to_dict()
        assert data["mode"] == "alpha"
        assert data["value_decimal"].startswith("0.6309")


class TestBounds:
    def test_shallow_bounds_are_ordered(self):
        bounds = hd_bounds(GaussCantorSpec.parse("pairs"), 4)
        assert bounds.alpha.lower <= bounds.beta.upper
        assert bounds.alpha.count == 16
        assert bounds.scales is None

    def test_keep_scales(self):
        bounds = hd_bounds(GaussCantorSpec.parse("pairs"), 2, keep_scales=True)
        assert len(bounds.scales) == 4

    def test_serialises(self):
        data = hd_bounds(GaussCantorSpec.parse("pairs"), 3).to_dict()
        assert data["alphabet"] == "1_2;2_2"
        assert data["intervals"] == 8

    @pytest.mark.slow
    def test_depth_twelve(self):
        bounds = hd_bounds(GaussCantorSpec.parse("pairs"), 12)
        assert mpq(2628, 10 ** 4) < bounds.alpha.lower
        assert bounds.beta.upper < mpq(2646, 10 ** 4)
        assert mpq(262944, 10 ** 6) < bounds.alpha.lower
        assert bounds.alpha.upper < mpq(262945, 10 ** 6)
        assert mpq(264402, 10 ** 6) < bounds.beta.lower
        assert bounds.beta.upper < mpq(264403, 10 ** 6)

    @pytest.mark.slow
    def test_depth_ten_leading_digits(self):
        # 0.2628… / 0.2645… 这组前导数字出现在深度 10
        bounds = hd_bounds(GaussCantorSpec.parse("pairs"), 10)
        assert mpq(2628, 10 ** 4) <= bounds.alpha.lower
        assert bounds.alpha.upper < mpq(2629, 10 ** 4)
        assert mpq(2645, 10 ** 4) < bounds.beta.lower
        assert bounds.beta.upper <= mpq(2646, 10 ** 4)
