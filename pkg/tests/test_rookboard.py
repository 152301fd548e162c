"""Tests for boards, placements, increment rules and rook sums"""
import random

import pytest
from hypothesis import given, strategies as st

from rookcalc.errors import InvalidBoardError, InvalidParameterError
from rookcalc.qlaurent import ONE, ZERO, bracket, eval_at, monomial, poly_product
from rookcalc.rookboard import (
    Board,
    RookPlacement,
    Rule,
    WeightParams,
    board_from_lengths,
    board_from_word,
    board_jcd,
    board_jn,
    board_jprime,
    board_jump,
    cell_preweights_after,
    column_totals,
    count_placements,
    enumerate_placements,
    format_placement,
    goldman_haglund_weight,
    parse_board_spec,
    placement_weight,
    rook_sum,
)
from rookcalc.stirling import stirling_cd, stirling_s


RULES = [Rule.SAME_ROW, Rule.BOTTOM_SHIFT]


def random_board(rng: random.Random, lengths, total_cap: int = 6) -> Board:
    """Board with the given lengths and random nonnegative pre-weights"""
    columns = []
    for length in lengths:
        budget = rng.randint(0, total_cap)
        column = [0] * length
        for _ in range(budget if length else 0):
            column[rng.randrange(length)] += 1
        columns.append(tuple(column))
    return Board(tuple(lengths), tuple(columns))


def strictly_increasing_lengths(rng: random.Random, max_columns: int = 4, max_length: int = 5):
    """Nonempty columns of strictly increasing length, so every increment target exists"""
    count = rng.randint(1, max_columns)
    lengths = sorted(rng.sample(range(1, max(max_length, max_columns) + 1), count))
    return [0] * rng.randint(0, 1) + lengths


class TestBoards:

    def test_word_with_uneven_steps(self):
        b = board_from_word("UVUUUVVU")
        assert list(b.column_lengths) == [0, 2, 2, 2, 3]
        assert b.cell_count() == 9

    def test_word_for_jn(self):
        assert list(board_from_word("VU" * 5).column_lengths) == [0, 1, 2, 3, 4]
        assert board_from_word("VU" * 5) == board_jn(5)

    def test_single_vertical_step_has_no_cells(self):
        assert board_from_word("V").cell_count() == 0

    def test_invalid_letter(self):
        with pytest.raises(InvalidBoardError):
            board_from_word("UVX")
        with pytest.raises(InvalidBoardError):
            board_from_word("")

    def test_column_totals(self):
        assert column_totals(board_jn(5)) == [0, 1, 2, 3, 4]
        assert column_totals(board_jprime(3, 2)) == [2, 3, 4]
        assert board_jprime(4, 7).column_totals() == [7, 8, 9, 10]
        assert column_totals(board_jcd(4, 3, 5)) == [5, 8, 11, 14]

    def test_jcd_with_unit_c_matches_jn_totals(self):
        for n in range(1, 7):
            assert column_totals(board_jcd(n, 1, 0)) == column_totals(board_jn(n))

    def test_jump_board(self):
        assert list(board_jump(3, 2).column_lengths) == [0, 2, 4]
        with pytest.raises(InvalidParameterError):
            board_jump(3, -1)

    def test_board_rejects_decreasing_columns(self):
        with pytest.raises(InvalidBoardError):
            Board((2, 1), ((1, 1), (1,)))

    def test_board_spec(self):
        b = parse_board_spec("word=VUVUVUV;pre=1;1,1=3;2,1=3")
        assert list(b.column_lengths) == [1, 2, 3]
        assert b.preweight(1, 1) == 3
        assert b.preweight(2, 1) == 3
        assert b.preweight(3, 2) == 1
        assert parse_board_spec("word=VUVU;pre=2").preweight(2, 1) == 2

    @pytest.mark.parametrize("spec", [
        "VUVU",
        "word=VUVU;pre=x",
        "word=VUVU;pre=1;9,1=2",
        "word=VUVZ",
    ])
    def test_bad_board_spec(self, spec):
        with pytest.raises(InvalidBoardError):
            parse_board_spec(spec)


class TestPlacements:

    def test_counts(self):
        assert list(enumerate_placements(board_jn(3), 3)) == []
        assert len(list(enumerate_placements(board_jn(3), 1))) == 3
        assert list(enumerate_placements(board_jn(4), 0)) == [RookPlacement()]

    @pytest.mark.parametrize("seed", range(10))
    def test_count_matches_enumeration(self, seed):
        rng = random.Random(seed)
        lengths = sorted(rng.randint(0, 4) for _ in range(rng.randint(1, 7)))
        b = board_from_lengths(lengths)
        for k in range(len(lengths) + 2):
            placements = list(enumerate_placements(b, k))
            assert len(placements) == count_placements(b, k)
            assert len(set(placements)) == len(placements)

    def test_invalid_placement(self):
        with pytest.raises(InvalidBoardError):
            placement_weight(board_jn(3), RookPlacement(((1, 1),)), Rule.SAME_ROW, WeightParams(1))
        with pytest.raises(InvalidBoardError):
            placement_weight(board_jn(3), RookPlacement(((2, 1), (2, 1))), Rule.SAME_ROW, WeightParams(1))

    def test_format_placement(self):
        assert format_placement(RookPlacement.from_dict({5: 1, 2: 1, 3: 2})) == "2:1 3:2 5:1"

    def test_rule_parse(self):
        assert Rule.parse("Same-Row") is Rule.SAME_ROW
        with pytest.raises(InvalidParameterError):
            Rule.parse("diagonal")


class TestWeights:

    @pytest.mark.parametrize("s", [-1, 0, 1, 2, 3, 4])
    def test_staircase_figure_weight(self, s):
        # rooks on J_5: top cell of column 2, top cell of column 3, bottom cell of column 5
        placement = RookPlacement.from_dict({2: 1, 3: 2, 5: 1})
        expected = monomial(1, 2 * s + 2) * bracket(s)
        assert placement_weight(board_jn(5), placement, Rule.SAME_ROW, WeightParams(s)) == expected

    def test_staircase_figure_at_two(self):
        placement = RookPlacement.from_dict({2: 1, 3: 2, 5: 1})
        assert placement_weight(board_jn(5), placement, Rule.SAME_ROW, WeightParams(2)) == monomial(1, 6) * (ONE + monomial(1, 1))

    def test_staircase_figure_grid(self):
        placement = RookPlacement.from_dict({2: 1, 3: 2, 5: 1})
        grid = cell_preweights_after(board_jn(5), placement, Rule.SAME_ROW, WeightParams(2))
        assert grid == [[], [1], [1, 2], [1, 1, 3], [1, 0, 0, 0]]

    @pytest.mark.parametrize("s", range(0, 4))
    @pytest.mark.parametrize("alpha", range(0, 4))
    def test_bottom_shift_figure_weight(self, s, alpha):
        placement = RookPlacement.from_dict({1: 1, 2: 2, 4: 1})
        expected = poly_product([monomial(1, 2 * s + 2 * alpha), bracket(alpha), bracket(alpha), bracket(s)])
        b = board_jprime(4, alpha)
        assert placement_weight(b, placement, Rule.BOTTOM_SHIFT, WeightParams(s)) == expected

    @pytest.mark.parametrize("n", range(0, 7))
    def test_empty_placement(self, n):
        expected = monomial(1, n * (n - 1) // 2)
        assert placement_weight(board_jn(n), RookPlacement(), Rule.SAME_ROW, WeightParams(3)) == expected
        assert rook_sum(board_jn(n), 0, Rule.BOTTOM_SHIFT, WeightParams(3)) == expected

    @pytest.mark.parametrize("seed", range(8))
    def test_weight_at_one_is_product_of_rook_cells(self, seed):
        rng = random.Random(seed)
        b = random_board(rng, strictly_increasing_lengths(rng))
        s = rng.randint(-1, 3)
        for rule in RULES:
            for k in range(len(b.nonempty_columns()) + 1):
                for placement in enumerate_placements(b, k):
                    grid = cell_preweights_after(b, placement, rule, WeightParams(s))
                    expected = 1
                    for j, h in placement.rooks:
                        expected *= grid[j - 1][h - 1]
                    assert eval_at(placement_weight(b, placement, rule, WeightParams(s)), 1) == expected

    @pytest.mark.parametrize("n", range(1, 6))
    @pytest.mark.parametrize("s", [-1, 0, 1, 2, 3])
    def test_goldman_haglund_agrees_cell_by_cell(self, n, s):
        b = board_jn(n)
        for k in range(n):
            for placement in enumerate_placements(b, k):
                assert goldman_haglund_weight(b, placement, s) == \
                    placement_weight(b, placement, Rule.SAME_ROW, WeightParams(s))

    def test_goldman_haglund_needs_unit_preweights(self):
        with pytest.raises(InvalidParameterError):
            goldman_haglund_weight(board_jprime(3, 2), RookPlacement(), 1)


class TestRookSums:

    def test_infeasible_is_zero(self):
        assert rook_sum(board_jn(3), 3, Rule.SAME_ROW, WeightParams(1)) == ZERO
        assert rook_sum(board_jn(3), -1, Rule.SAME_ROW, WeightParams(1)) == ZERO

    def test_empty_board(self):
        assert rook_sum(board_jn(0), 0, Rule.SAME_ROW, WeightParams(2)) == ONE

    @given(
        column=st.lists(st.integers(min_value=0, max_value=4), min_size=1, max_size=5),
        s=st.integers(min_value=-1, max_value=3),
    )
    def test_single_column_gives_bracket_of_total(self, column, s):
        b = Board((len(column),), (tuple(column),))
        for rule in RULES:
            assert rook_sum(b, 1, rule, WeightParams(s)) == bracket(sum(column))

    @pytest.mark.parametrize("n", range(0, 8))
    @pytest.mark.parametrize("s", [-1, 0, 1, 2, 3])
    def test_staircase_matches_recurrence(self, n, s):
        for k in range(n + 1):
            assert rook_sum(board_jn(n), n - k, Rule.SAME_ROW, WeightParams(s)) == stirling_s(n, k, s)

    @pytest.mark.parametrize("s,c,d", [(0, 1, 0), (2, 1, 1), (-1, 2, 1), (1, 0, 2), (3, -1, 2), (0, 2, -1)])
    def test_cd_board_matches_recurrence(self, s, c, d):
        for n in range(0, 6):
            for k in range(n + 1):
                assert rook_sum(board_jcd(n, c, d), n - k, Rule.SAME_ROW, WeightParams(s)) == stirling_cd(n, k, s, c, d)

    def test_rule_invariance(self):
        rng = random.Random(7411)
        for _ in range(60):
            b = random_board(rng, strictly_increasing_lengths(rng))
            s = rng.randint(-1, 3)
            for k in range(len(b.nonempty_columns()) + 1):
                assert rook_sum(b, k, Rule.SAME_ROW, WeightParams(s)) == \
                    rook_sum(b, k, Rule.BOTTOM_SHIFT, WeightParams(s))

    def test_same_row_invariance_on_any_ferrers_board(self):
        rng = random.Random(93)
        for _ in range(40):
            lengths = sorted(rng.randint(0, 3) for _ in range(rng.randint(1, 5)))
            first = random_board(rng, lengths)
            # same totals, different distribution
            columns = []
            for length, column in zip(lengths, first.preweights):
                if length:
                    spread = [0] * length
                    for _ in range(sum(column)):
                        spread[rng.randrange(length)] += 1
                    columns.append(tuple(spread))
                else:
                    columns.append(())
            second = Board(tuple(lengths), tuple(columns))
            assert column_totals(first) == column_totals(second)
            s = rng.randint(-1, 3)
            for k in range(len(lengths) + 1):
                assert rook_sum(first, k, Rule.SAME_ROW, WeightParams(s)) == \
                    rook_sum(second, k, Rule.SAME_ROW, WeightParams(s))

    @pytest.mark.slow
    def test_redistribution_invariance(self):
        rng = random.Random(20231)
        for _ in range(200):
            lengths = strictly_increasing_lengths(rng, max_columns=6, max_length=6)
            first = random_board(rng, lengths)
            columns = []
            for length, column in zip(lengths, first.preweights):
                spread = [0] * length
                for _ in range(sum(column)):
                    spread[rng.randrange(length)] += 1
                columns.append(tuple(spread))
            second = Board(tuple(lengths), tuple(columns))
            assert column_totals(first) == column_totals(second)
            s = rng.randint(-1, 3)
            for k in range(len(first.nonempty_columns()) + 1):
                sums = [rook_sum(board, k, rule, WeightParams(s)) for board in (first, second) for rule in RULES]
                assert all(value == sums[0] for value in sums), (lengths, k, s)

    def test_threaded_sum_matches_serial(self):
        b = board_jn(7)
        serial = rook_sum(b, 3, Rule.SAME_ROW, WeightParams(2))
        assert rook_sum(b, 3, Rule.SAME_ROW, WeightParams(2), max_workers=4) == serial
