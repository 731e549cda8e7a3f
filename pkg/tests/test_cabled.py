"""The cabled representation and its lane-level enumeration oracle."""

import itertools

import pytest

from braidbowl.braid import BraidWord
from braidbowl.cabled import (
    apply_generator_cabled,
    cable_index,
    check_cabled_braid_relation,
    check_cabled_formula,
    check_oracle_placement_invariance,
    crossing_oracle,
    fall_distribution,
    index_cable,
    rho_cabled_matrix,
    sweep_order,
)
from braidbowl.matrix import Matrix
from braidbowl.multiball import rho_matrix
from braidbowl.qpoly import ONE, ONE_MINUS_Q, Q, falling_probability, poly_sum


def all_words(n, max_len):
    for length in range(max_len + 1):
        for letters in itertools.product(range(1, n), repeat=length):
            yield BraidWord(n, letters)


class TestCabledCrossing:
    def test_width_one_reduces_to_single_ball_rule(self):
        assert apply_generator_cabled(1, (1, 0), 1) == [
            ((0, 1), Q),
            ((1, 0), ONE_MINUS_Q),
        ]

    def test_width_two_full_over_empty(self):
        branches = dict(apply_generator_cabled(1, (2, 0), 2))
        assert branches == {
            (0, 2): Q**4,
            (1, 1): Q * ONE_MINUS_Q * (ONE + Q) ** 2,
            (2, 0): (ONE + Q) * ONE_MINUS_Q**2,
        }

    def test_no_empty_under_lanes(self):
        assert apply_generator_cabled(1, (1, 2), 2) == [((2, 1), ONE)]

    def test_bad_index(self):
        with pytest.raises(ValueError):
            apply_generator_cabled(3, (0, 0), 2)


class TestCabledMatrix:
    def test_width_one_is_multiball_with_one_ball_cap(self):
        for word in all_words(3, 3):
            assert rho_cabled_matrix(word, 1) == rho_matrix(word, 1)

    def test_braid_relation_width_two(self):
        left = rho_cabled_matrix(BraidWord(3, (1, 2, 1)), 2)
        right = rho_cabled_matrix(BraidWord(3, (2, 1, 2)), 2)
        assert left == right

    def test_empty_word_identity(self):
        assert rho_cabled_matrix(BraidWord(2), 3) == Matrix.identity(16)

    def test_columns_sum_to_one(self):
        m = rho_cabled_matrix(BraidWord(3, (1, 2, 1, 1)), 2)
        assert all(total == ONE for total in m.column_sums().values())

    def test_ball_conservation(self):
        m = rho_cabled_matrix(BraidWord(3, (2, 1, 2)), 2)
        for i, j, _v in m.entries_sorted():
            assert sum(index_cable(i, 3, 2)) == sum(index_cable(j, 3, 2))

    def test_index_roundtrip(self):
        for idx in range(27):
            assert cable_index(index_cable(idx, 3, 2), 2) == idx


class TestCrossingOracle:
    def test_single_lane(self):
        assert crossing_oracle(1, 1, 0) == {0: Q, 1: ONE_MINUS_Q}

    def test_full_under_group_blocks_falls(self):
        assert crossing_oracle(2, 2, 2) == {0: ONE}

    def test_width_two_reference_distribution(self):
        assert crossing_oracle(2, 2, 0) == {
            0: Q**4,
            1: Q * ONE_MINUS_Q * (ONE + Q) ** 2,
            2: (ONE + Q) * ONE_MINUS_Q**2,
        }

    def test_normalization(self):
        for K in (1, 2, 3):
            for a in range(K + 1):
                for b in range(K + 1):
                    assert poly_sum(crossing_oracle(K, a, b).values()) == ONE

    def test_degenerate_cases(self):
        for K in (1, 2, 3):
            for b in range(K + 1):
                assert crossing_oracle(K, 0, b) == {0: ONE}
            for a in range(K + 1):
                assert crossing_oracle(K, a, K) == {0: ONE}

    def test_micro_order_invariance(self):
        for K in (1, 2, 3):
            lex = [(p, l) for p in range(K) for l in range(K)]
            geometric = sorted(lex, key=lambda pl: (pl[1] - pl[0], pl[0]))
            for a in range(K + 1):
                for b in range(K + 1):
                    base = crossing_oracle(K, a, b)
                    assert crossing_oracle(K, a, b, order=lex) == base
                    assert crossing_oracle(K, a, b, order=geometric) == base

    def test_order_must_cover_all_micro_crossings(self):
        with pytest.raises(ValueError):
            crossing_oracle(2, 1, 0, order=[(0, 0)])

    def test_placement_mask_validation(self):
        with pytest.raises(ValueError):
            crossing_oracle(2, 1, 0, upper=(True, True))

    def test_sweep_order_covers_square(self):
        assert sorted(sweep_order(3)) == [
            (p, l) for p in range(3) for l in range(3)
        ]


class TestFormulaChecks:
    @pytest.mark.parametrize("K", [1, 2, 3])
    def test_formula_matches_oracle(self, K):
        assert check_cabled_formula(K).passed

    def test_spot_check_width_four(self):
        for a, b in [(2, 1), (4, 0), (3, 2)]:
            oracle = crossing_oracle(4, a, b)
            for c in range(min(a, 4 - b) + 1):
                assert falling_probability(4, a, b, c) == oracle[c]

    @pytest.mark.parametrize(
        "K,a,b,placements",
        [(2, 1, 1, 4), (3, 2, 1, 9), (2, 0, 0, 1)],
    )
    def test_placement_invariance(self, K, a, b, placements):
        report = check_oracle_placement_invariance(K, a, b)
        assert report.passed
        assert report.checks == placements

    @pytest.mark.parametrize("K", [1, 2, 3])
    def test_cabled_braid_relation(self, K):
        assert check_cabled_braid_relation(3, K).passed

    def test_cabled_far_commutativity(self):
        report = check_cabled_braid_relation(4, 2)
        assert report.passed
        assert report.checks == 3  # two adjacent pairs + far pair (1, 3)


def test_fall_distribution_keys_bounded():
    dist = fall_distribution(3, 2, 2)
    assert set(dist) <= set(range(0, 2))
    assert poly_sum(dist.values()) == ONE
