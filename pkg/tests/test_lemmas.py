import itertools

import pytest
from gmpy2 import mpq

from core.arith import as_rational, combination_sign
from core.cf import bound_lambda_window
from core.constants import constant_value
from core.lemmas import (
    IndexRange,
    LambdaBound,
    SearchGuardError,
    WindowConstraint,
    appendix_pa,
    constraint_from_dict,
    forced_window_search,
    load_preset,
    recursive_lower_bound,
    verify_allowed_table,
    verify_appendix,
    verify_f_minimality_chain,
    verify_forbidden_table,
    verify_forced_window,
    verify_membership,
    verify_recursive_bounds,
)
from core.lemmas.presets import judge_outcome
from core.lemmas.recursive import CHAIN_DIGITS
from core.lemmas.search import SearchOutcome, search_order
from core.spectra import PatternViolationError, decimal_renderer
from core.words import FiniteWord, parse_compact


class TestTables:
    def test_forbidden_table(self):
        entries = verify_forbidden_table()
        assert len(entries) == 13
        failed = [e.label for e in entries if not e.passed]
        assert not failed

    def test_allowed_table(self):
        entries = {e.label: e for e in verify_allowed_table()}
        assert len(entries) == 7
        failed = sorted(label for label, e in entries.items() if not e.passed)
        assert failed == ["19"]
        assert entries["19"].erratum

    @pytest.mark.parametrize(
        "label, low, high",
        [
            ("15", "3.0566243", "3.0566244"),
            ("16", "3.0958241", "3.0958242"),
            ("19", "3.1181176", "3.1181177"),
            ("21", "3.1180133", "3.1180134"),
        ],
    )
    def test_allowed_bounds_above_printed_threshold(self, label, low, high):
        entry = next(e for e in verify_allowed_table() if e.label == label)
        assert entry.bound > as_rational(low)
        assert entry.bound < as_rational(high)
        assert entry.bound > entry.threshold
        assert entry.erratum

    def test_allowed_threshold_used(self):
        used = {e.label: e.threshold_used for e in verify_allowed_table()}
        assert used == {
            "15": "conclusion",
            "16": "conclusion",
            "17": "entry",
            "18": "entry",
            "19": None,
            "20": "entry",
            "21": "conclusion",
        }

    def test_first_forbidden_entry(self):
        entry = verify_forbidden_table()[0]
        assert entry.word.digits == (1, 2, 1)
        assert entry.star == 1
        assert entry.bound > mpq(315, 100)
        assert entry.completions == 1

    def test_auxiliary_caps_enumerate_completions(self):
        entry = next(e for e in verify_forbidden_table() if e.label == "9")
        assert entry.completions >= 1

    def test_entry_serialises(self):
        data = verify_allowed_table()[0].to_dict(decimal_renderer(10))
        assert data["kind"] == "allowed"
        assert data["threshold"] == "3.05"
        assert data["status"] == "PASS"
        assert data["threshold_used"] == "conclusion"
        assert data["erratum"]


class TestSearch:
    def test_unconstrained_range_enumerates_everything(self):
        outcome = forced_window_search(WindowConstraint(), IndexRange(0, 3))
        assert len(outcome.surviving_windows) == 8
        assert outcome.surviving_windows[0].digits == (1, 1, 1)
        assert outcome.nodes_explored == 1 + 2 + 4 + 8

    def test_search_order(self):
        assert search_order(IndexRange.inclusive(-2, 2)) == [0, 1, -1, 2, -2]

    def test_matches_brute_force(self):
        caps = (LambdaBound(0, mpq(31, 10)), LambdaBound(1, mpq(31, 10)))
        floors = (LambdaBound(-1, mpq(27, 10)),)
        constraint = WindowConstraint(lambda_caps=caps, lambda_floors=floors)
        index_range = IndexRange.inclusive(-3, 3)
        outcome = forced_window_search(constraint, index_range)

        expected = []
        for digits in itertools.product((1, 2), repeat=len(index_range)):
            window = dict(zip(index_range.positions(), digits))
            if constraint.violation(window) is None:
                expected.append(digits)
        assert [w.digits for w in outcome.surviving_windows] == sorted(expected)

    def test_cap_prunes_one_two_one(self):
        constraint = WindowConstraint(lambda_caps=(LambdaBound(0, mpq(315, 100)),))
        outcome = forced_window_search(constraint, IndexRange.inclusive(-1, 1))
        assert all(w.digits != (1, 2, 1) for w in outcome.surviving_windows)

    def test_trace_records_prunes(self):
        constraint = WindowConstraint(lambda_caps=(LambdaBound(0, mpq(3)),))
        outcome = forced_window_search(constraint, IndexRange.inclusive(-1, 1), trace=True)
        assert outcome.prune_log
        assert all("λ_0" in record.reason for record in outcome.prune_log)

    def test_assigned_positions_are_kept(self):
        constraint = WindowConstraint(assigned={0: 2})
        outcome = forced_window_search(constraint, IndexRange.inclusive(-1, 1))
        assert all(outcome.digit_at(w, 0) == 2 for w in outcome.surviving_windows)
        assert len(outcome.surviving_windows) == 4

    def test_node_guard(self):
        with pytest.raises(SearchGuardError):
            forced_window_search(WindowConstraint(), IndexRange(0, 6), node_guard=10)

    def test_range_guard(self):
        with pytest.raises(SearchGuardError):
            forced_window_search(WindowConstraint(), IndexRange(0, 41))

    def test_restricted_windows(self):
        outcome = forced_window_search(WindowConstraint(), IndexRange(0, 3))
        assert len(outcome.restricted(1, 2)) == 4


class TestConstraints:
    def test_word_assignment(self):
        constraint = constraint_from_dict({"assigned": {"start": -1, "word": "2 1_2"}})
        assert dict(constraint.assigned) == {-1: 2, 0: 1, 1: 1}

    def test_explicit_assignment_and_bounds(self):
        constraint = constraint_from_dict({
            "assigned": {"-2": 1, "3": 2},
            "caps": [{"positions": [0, 4], "bound": "3.15"}],
            "floors": [{"positions": [1], "bound": "3.1", "inclusive": True}],
        })
        assert dict(constraint.assigned) == {-2: 1, 3: 2}
        assert [c.position for c in constraint.lambda_caps] == [0, 4]
        assert constraint.lambda_floors[0].inclusive

    def test_violation_description(self):
        constraint = WindowConstraint(lambda_caps=(LambdaBound(0, mpq(315, 100)),))
        window = {-1: 1, 0: 2, 1: 1}
        assert bound_lambda_window(window, 0).lower > mpq(315, 100)
        assert constraint.violation(window) == "λ_0 < 63/20"

    def test_preset_loading(self):
        constraint, index_range, expect = load_preset("lf4")
        assert len(index_range) == 33
        assert not constraint.assigned
        assert expect["window"] == [-14, 16]

    def test_unknown_preset(self):
        with pytest.raises(KeyError):
            load_preset("lf99")

    def test_lf4_floor_between_allowed_bound_and_c_inf(self):
        constraint, _, _ = load_preset("lf4")
        (floor,) = constraint.lambda_floors
        assert floor.position == 0
        assert not floor.inclusive
        allowed = next(e for e in verify_allowed_table() if e.label == "19")
        assert allowed.bound < floor.bound
        assert constant_value("c_inf") > floor.bound

    def test_symmetric_preset_needs_both_orientations(self):
        constraint, index_range, expect = load_preset("lf4")
        word = parse_compact(expect["word"])
        direct = FiniteWord.of(1, 1) + word
        mirrored = word.transpose() + FiniteWord.of(1, 1)

        one_sided = SearchOutcome(index_range=index_range, surviving_windows=[direct])
        report = judge_outcome("lf4", constraint, one_sided, expect)
        assert report.matches["direct"] == 1
        assert report.matches["mirror"] == 0
        assert not report.passed

        both = SearchOutcome(index_range=index_range, surviving_windows=[direct, mirrored])
        assert judge_outcome("lf4", constraint, both, expect).passed


@pytest.mark.slow
@pytest.mark.parametrize("preset", ["lf4", "lf3p"])
def test_forced_window_presets(preset):
    report = verify_forced_window(preset)
    assert report.passed, report.mismatches
    assert report.matches["direct"] > 0
    if preset == "lf4":
        assert report.matches["mirror"] > 0


class TestRecursive:
    def test_bounds_increase_below_c_inf(self):
        report = verify_recursive_bounds(11)
        assert report.increasing
        assert report.below_limit
        assert report.passed

    def test_report_carries_index_reading(self):
        data = verify_recursive_bounds(2).to_dict(decimal_renderer(12))
        assert data["index_reading"] == "n-relative"
        assert len(data["values"]) == 2

    def test_negative_a(self):
        with pytest.raises(ValueError):
            recursive_lower_bound(-1)

    def test_count_must_be_positive(self):
        with pytest.raises(ValueError):
            verify_recursive_bounds(0)


class TestMinimalityChain:
    def test_chain_increases_to_f(self):
        report = verify_f_minimality_chain()
        assert report.steps
        assert report.increasing
        assert report.below_f
        assert report.final_equals_f
        assert report.final == constant_value("f")
        assert report.passed

    def test_every_forced_digit_is_recorded(self):
        report = verify_f_minimality_chain()
        assert [s.digits_forced for s in report.steps] == list(range(CHAIN_DIGITS + 1))
        assert report.steps[0].refines
        for before, after in zip(report.steps, report.steps[1:]):
            if after.refines:
                assert after.bound > before.bound
            else:
                assert after.bound == before.bound
        assert any(s.refines for s in report.steps[1:])
        data = report.to_dict(decimal_renderer(12))
        assert [s["refines"] for s in data["steps"]] == [s.refines for s in report.steps]

    def test_freiman_check_for_empty_word(self):
        report = verify_f_minimality_chain(("",))
        (w, at_origin, above), = report.freiman_checks
        assert w == ""
        if at_origin:
            assert above is True


class TestAppendix:
    def test_single_member_is_above_c_upper(self):
        values = appendix_pa(6)
        assert values.a == 6
        assert combination_sign([(1, values.ell.value), (-1, constant_value("C_inf"))]) > 0
        assert combination_sign([(1, values.ell.value), (-1, values.lambda_0.value)]) >= 0

    def test_small_family(self):
        report = verify_appendix(2, 4)
        assert len(report.rows) == 3
        assert report.ell_above_limit
        assert report.ell_converging
        assert report.passed
        ells = [row.ell.value for row in report.rows]
        assert ells[0] > ells[1] > ells[2]
        data = report.to_dict(decimal_renderer(12))
        assert data["ell_converging"] is True and data["ell_above_limit"] is True

    @pytest.mark.slow
    def test_full_family(self):
        assert verify_appendix(2, 10).passed

    def test_invalid_range(self):
        with pytest.raises(ValueError):
            verify_appendix(5, 4)


class TestMembership:
    def test_default_gamma(self):
        report = verify_membership()
        assert report.passed, report.checks

    def test_forbidden_gamma(self):
        with pytest.raises(PatternViolationError):
            verify_membership("over(1 2)")
