from concurrent.futures import ThreadPoolExecutor
from fractions import Fraction as F

import pytest
from hypothesis import given
from hypothesis import strategies as st

from biperiodic.identities import default_grid
from biperiodic.sequences import (
    SeqParams,
    check_fib_from_lucas,
    check_lucas_from_fib,
    eps,
    floor_half,
    l,
    l_direct,
    q,
    q_direct,
)

params_values = st.fractions(min_value=-6, max_value=6, max_denominator=6).filter(
    lambda x: x != 0
)


class TestSeqParams:
    def test_zero_parameters_rejected(self):
        with pytest.raises(ValueError, match="parameter a must be nonzero"):
            SeqParams(0, 1)
        with pytest.raises(ValueError, match="parameter b must be nonzero"):
            SeqParams(1, 0)

    @given(params_values, params_values)
    def test_derived_quantities(self, a, b):
        p = SeqParams(a, b)
        assert p.ab == a * b
        assert p.disc == a * b * (a * b + 4)
        assert p.disc == a * a * b * b + 4 * a * b
        # root identities hold exactly in Q(sqrt(D))
        assert p.alpha + p.beta == p.ab
        assert p.alpha * p.beta == -p.ab
        assert p.binet_allowed == (a * b != -4)

    def test_degenerate_flag(self):
        assert not SeqParams(2, -2).binet_allowed
        assert not SeqParams(F(-1, 2), 8).binet_allowed
        assert SeqParams(1, 1).binet_allowed


class TestParityHelpers:
    @pytest.mark.parametrize("n,expected", [(1, 1), (0, 0), (-3, 1), (-4, 0), (7, 1)])
    def test_eps(self, n, expected):
        assert eps(n) == expected

    @pytest.mark.parametrize("n,expected", [(5, 2), (4, 2), (-1, -1), (-4, -2), (0, 0)])
    def test_floor_half(self, n, expected):
        assert floor_half(n) == expected


class TestScalarKernels:
    def test_fib_seed(self):
        p = SeqParams(F(5, 3), F(-3, 2))
        assert q(p, 0) == 0
        assert q(p, 1) == 1

    def test_fib_example_a2_b1(self):
        p = SeqParams(2, 1)
        assert [q(p, n) for n in range(6)] == [0, 1, 2, 3, 8, 11]
        assert q(p, 4) == 8

    def test_fib_backward_minus_one(self):
        for a, b in [(2, 1), (F(1, 2), 4), (-3, F(5, 3))]:
            assert q(SeqParams(a, b), -1) == 1

    def test_lucas_seed(self):
        p = SeqParams(F(7, 2), 5)
        assert l(p, 0) == 2
        assert l(p, 1) == F(7, 2)

    def test_lucas_example_a2_b1(self):
        p = SeqParams(2, 1)
        assert [l(p, n) for n in range(4)] == [2, 2, 4, 10]
        assert l(p, 3) == 10

    def test_lucas_backward_minus_one(self):
        for a, b in [(2, 1), (F(1, 2), 4), (-3, F(5, 3))]:
            assert l(SeqParams(a, b), -1) == -a

    def test_classical_fibonacci_and_lucas(self):
        p = SeqParams(1, 1)
        assert [q(p, n) for n in range(9)] == [0, 1, 1, 2, 3, 5, 8, 13, 21]
        assert [l(p, n) for n in range(8)] == [2, 1, 3, 4, 7, 11, 18, 29]

    def test_pell_specialization(self):
        p = SeqParams(2, 2)
        assert [q(p, n) for n in range(6)] == [0, 1, 2, 5, 12, 29]
        assert [l(p, n) for n in range(5)] == [2, 2, 6, 14, 34]

    def test_classical_negative_index_pattern(self):
        p = SeqParams(1, 1)
        # F_{-n} = (-1)^(n+1) F_n and L_{-n} = (-1)^n L_n
        for n in range(1, 12):
            assert q(p, -n) == (-1) ** (n + 1) * q(p, n)
            assert l(p, -n) == (-1) ** n * l(p, n)

    def test_backward_two_steps(self):
        for a, b in [(2, 3), (F(1, 2), 4)]:
            p = SeqParams(a, b)
            assert q(p, -2) == -a
            assert l(p, -2) == a * b + 2

    @given(params_values, params_values, st.integers(-30, 60))
    def test_memoized_equals_direct(self, a, b, n):
        p = SeqParams(a, b)
        assert q(p, n) == q_direct(p, n)
        assert l(p, n) == l_direct(p, n)

    @given(params_values, params_values, st.integers(-25, 55))
    def test_recurrence_steps_hold_everywhere(self, a, b, n):
        p = SeqParams(a, b)
        cq = a if n % 2 == 0 else b
        assert q(p, n) == cq * q(p, n - 1) + q(p, n - 2)
        cl = a if n % 2 == 1 else b
        assert l(p, n) == cl * l(p, n - 1) + l(p, n - 2)


class TestCrossRelations:
    def test_spec_examples(self):
        p21 = SeqParams(2, 1)
        assert check_lucas_from_fib(p21, 2)
        assert check_fib_from_lucas(p21, 2)
        assert check_lucas_from_fib(p21, 0)
        assert check_fib_from_lucas(SeqParams(3, F(1, 3)), 0)
        p11 = SeqParams(1, 1)
        assert check_lucas_from_fib(p11, 5)
        assert check_fib_from_lucas(p11, 3)

    def test_full_grid_window(self):
        for p in default_grid():
            for n in range(-20, 51):
                assert check_lucas_from_fib(p, n), (p, n)
                assert check_fib_from_lucas(p, n), (p, n)


def test_concurrent_memo_fills_are_consistent():
    p = SeqParams(F(2, 3), -5)
    expected = q_direct(p, 400)
    with ThreadPoolExecutor(max_workers=8) as pool:
        results = list(pool.map(lambda _: q(p, 400), range(16)))
    assert all(r == expected for r in results)
