"""Tests for recurrence tables, Bell polynomials and the brute-force oracles"""
from math import factorial

import pytest

from rookcalc.constants import QANALOG_CACHE_SIZE, TABLE_CACHE_SIZE
from rookcalc.errors import InvalidParameterError, SizeCapError
from rookcalc.qlaurent import ONE, ZERO, bracket, eval_at, monomial, parse, q_factorial
from rookcalc.stirling import (
    NEGATED_VARIANT,
    TableKind,
    bell_cd,
    bell_number,
    bell_poly,
    bell_type2,
    cached_table_count,
    check_hsu_shiue,
    cycle_count,
    get_table,
    mssha,
    oracle_bell,
    oracle_cycles,
    oracle_partitions,
    replay_remmel_wachs,
    restricted_growth_strings,
    stirling_cd,
    stirling_s,
    stirling_table,
    type2,
)


def at_one(p):
    return int(eval_at(p, 1))


class TestOracles:

    def test_partition_counts(self):
        assert [oracle_partitions(4, k) for k in range(5)] == [0, 1, 7, 6, 1]
        assert [oracle_bell(n) for n in range(9)] == [1, 1, 2, 5, 15, 52, 203, 877, 4140]

    def test_cycle_counts(self):
        assert [oracle_cycles(4, k) for k in range(5)] == [0, 6, 11, 6, 1]
        assert cycle_count([1, 0, 2]) == 2

    def test_restricted_growth_strings(self):
        assert list(restricted_growth_strings(0)) == [()]
        assert sorted(restricted_growth_strings(3)) == [
            (0, 0, 0), (0, 0, 1), (0, 1, 0), (0, 1, 1), (0, 1, 2),
        ]

    def test_cap(self):
        with pytest.raises(SizeCapError):
            oracle_bell(11)
        with pytest.raises(InvalidParameterError):
            oracle_partitions(-1, 0)


class TestTables:

    @pytest.mark.parametrize("n", range(0, 9))
    def test_second_kind_matches_partitions(self, n):
        for k in range(n + 1):
            assert at_one(stirling_s(n, k, 0)) == oracle_partitions(n, k)

    @pytest.mark.parametrize("n", range(0, 9))
    def test_first_kind_matches_cycles(self, n):
        for k in range(n + 1):
            assert at_one(stirling_s(n, k, 1)) == oracle_cycles(n, k)

    def test_boundaries(self):
        for s in (-1, 0, 2):
            assert stirling_s(0, 0, s) == ONE
            assert stirling_s(3, 0, s) == ZERO
            assert stirling_s(3, 4, s) == ZERO
            assert stirling_s(3, -1, s) == ZERO

    def test_symbolic_second_kind(self):
        assert stirling_s(2, 2, 0) == monomial(1, 1)
        assert stirling_s(3, 2, 0) == parse("2*q + q^2")

    def test_cd_reduces_to_s(self):
        for s in (-1, 0, 1, 2, 3):
            for n in range(6):
                for k in range(n + 1):
                    assert stirling_cd(n, k, s, 1, 0) == stirling_s(n, k, s)

    def test_cd_column_zero_is_computed(self):
        # with d != 0 the chain [d][c+d+s-1]... survives in column 0
        assert stirling_cd(1, 0, 0, 1, 2) == parse("1 + q")
        assert stirling_cd(1, 0, 0, 1, 0) == ZERO

    def test_type2_reduces_to_classical(self):
        for n in range(7):
            for k in range(n + 1):
                assert type2(n, k, 0, 1, 0) == stirling_s(n, k, 0)

    def test_type2_first_kind(self):
        # alpha = 1, beta = 0, rho = 0 reads as s = 1, c = -1, d = 0
        assert [at_one(type2(4, k, 1, 0, 0)) for k in range(5)] == [0, -6, 11, -6, 1]

    def test_mssha(self):
        assert mssha(4, 2, 0, 3) == stirling_s(4, 2, 0) * 9
        assert mssha(4, 5, 0, 3) == ZERO

    def test_table_helper(self):
        rows = stirling_table(TableKind.S, (0,), 4)
        assert [at_one(v) for v in rows[4]] == [0, 1, 7, 6, 1]
        assert len(rows) == 5

    def test_audit_is_clean(self):
        table = get_table(TableKind.CD, (2, 3, -1))
        table.row(7)
        assert table.filled_rows() == 8
        assert table.audit() == []

    def test_audit_catches_corruption(self):
        table = get_table(TableKind.S, (2,))
        table.row(4)
        table._rows[3] = tuple(v + ONE for v in table._rows[3])
        assert (3, 1) in table.audit()

    def test_invalid(self):
        with pytest.raises(InvalidParameterError):
            stirling_s(-1, 0, 0)
        with pytest.raises(InvalidParameterError):
            TableKind.parse("third")
        with pytest.raises(InvalidParameterError):
            get_table(TableKind.CD, (1,))


class TestCaches:

    def test_table_cache_is_bounded(self):
        for s in range(TABLE_CACHE_SIZE + 10):
            get_table(TableKind.S, (s,))
        assert cached_table_count() == TABLE_CACHE_SIZE

    def test_least_recently_used_table_goes_first(self):
        first = get_table(TableKind.S, (0,))
        for s in range(1, TABLE_CACHE_SIZE):
            get_table(TableKind.S, (s,))
        assert get_table(TableKind.S, (0,)) is first
        get_table(TableKind.S, (TABLE_CACHE_SIZE,))
        assert get_table(TableKind.S, (0,)) is first
        assert cached_table_count() == TABLE_CACHE_SIZE

    def test_values_survive_eviction(self):
        expected = stirling_s(5, 2, 1)
        for s in range(2, TABLE_CACHE_SIZE + 2):
            get_table(TableKind.S, (s,))
        assert stirling_s(5, 2, 1) == expected
        assert at_one(expected) == 50

    def test_qanalog_caches_are_bounded(self):
        for cached in (bracket, q_factorial):
            assert cached.cache_info().maxsize == QANALOG_CACHE_SIZE


class TestRecursionReplay:

    @pytest.mark.parametrize("alpha,beta", [(0, 1), (1, 0), (1, 2), (-1, 1), (2, 1)])
    @pytest.mark.parametrize("rho", [-2, -1, 1, 2])
    def test_negated_rho_reproduces_the_table(self, alpha, beta, rho):
        assert replay_remmel_wachs(6, alpha, beta, rho, -1) == []

    def test_rho_as_written_fails_when_nonzero(self):
        assert replay_remmel_wachs(4, 0, 1, 1, 1) != []

    def test_rho_zero_either_sign(self):
        assert replay_remmel_wachs(5, 1, 2, 0, 1) == []
        assert replay_remmel_wachs(5, 1, 2, 0, -1) == []

    def test_bad_sign(self):
        with pytest.raises(InvalidParameterError):
            replay_remmel_wachs(3, 0, 1, 0, 0)


class TestBell:

    def test_bell_numbers(self):
        assert [at_one(bell_number(n, 0)) for n in range(9)] == [1, 1, 2, 5, 15, 52, 203, 877, 4140]
        assert [at_one(bell_number(n, 1)) for n in range(6)] == [factorial(n) for n in range(6)]

    def test_symbolic_bell(self):
        assert [bell_number(n, 0) for n in range(3)] == [ONE, ONE, parse("1 + q")]

    def test_bell_polynomial(self):
        p = bell_poly(3, 0)
        assert p.degree() == 3
        assert at_one(p.coefficient(2)) == 3
        assert p.coefficient(7) == ZERO
        assert at_one(p.evaluate(2)) == 2 + 3 * 4 + 8

    def test_bell_cd_and_type2(self):
        assert bell_cd(4, 0, 1, 0).evaluate(1) == bell_number(4, 0)
        assert bell_type2(4, 0, 1, 0).evaluate(1) == bell_number(4, 0)

    def test_negative_index(self):
        with pytest.raises(InvalidParameterError):
            bell_poly(-1, 0)


class TestHsuShiue:

    @pytest.mark.parametrize("n", range(0, 6))
    @pytest.mark.parametrize("alpha,beta,rho", [(0, 1, 0), (1, 2, 1), (2, 1, -1), (1, 0, 2), (-1, 1, 1)])
    def test_negated_convention_holds(self, n, alpha, beta, rho):
        report = check_hsu_shiue(n, alpha, beta, rho)
        assert report.holds
        assert NEGATED_VARIANT in report.satisfied

    def test_printed_convention_fails_for_nonzero_rho(self):
        report = check_hsu_shiue(2, 0, 1, 1)
        assert report.holds
        assert not report.printed_holds
        assert report.variant == NEGATED_VARIANT

    def test_cap(self):
        with pytest.raises(InvalidParameterError):
            check_hsu_shiue(9, 0, 1, 0)
