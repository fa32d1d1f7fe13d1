from fractions import Fraction as F
from itertools import islice

import pytest

from biperiodic.exact import Mat2
from biperiodic.matrixseq import (
    MatSeqTerm,
    Source,
    cassini_lucas,
    fib_matrix,
    fib_matrix_binet,
    fib_matrix_closed,
    fib_matrix_rec,
    fib_matrix_rec_iter,
    lucas_det,
    lucas_matrix,
    lucas_matrix_binet,
    lucas_matrix_closed,
    lucas_matrix_rec,
    lucas_matrix_rec_iter,
)
from biperiodic.sequences import BinetDegenerate, SeqParams, eps, floor_half, l, q

SAMPLE = [
    SeqParams(1, 1),
    SeqParams(2, 1),
    SeqParams(2, 3),
    SeqParams(F(1, 2), 3),
    SeqParams(F(-3, 2), F(-3, 2)),  # perfect-square discriminant 225/16
    SeqParams(3, -1),               # negative discriminant
    SeqParams(F(5, 3), F(1, 2)),
]


class TestFibMatrix:
    def test_f0_is_identity(self):
        for p in SAMPLE:
            assert fib_matrix_rec(p, 0) == Mat2.identity()
            assert fib_matrix_closed(p, 0) == Mat2.identity()

    def test_f1(self):
        p = SeqParams(2, 3)
        assert fib_matrix_rec(p, 1) == Mat2(3, F(3, 2), 1, 0)

    def test_rec_example_a2_b1(self):
        assert fib_matrix_rec(SeqParams(2, 1), 2) == Mat2(3, 1, 2, 1)

    def test_rec_classical_n5(self):
        assert fib_matrix_rec(SeqParams(1, 1), 5) == Mat2(8, 5, 5, 3)

    def test_closed_example_a2_b1_n3(self):
        assert fib_matrix_closed(SeqParams(2, 1), 3) == Mat2(4, F(3, 2), 3, 1)

    def test_closed_classical_n4(self):
        assert fib_matrix_closed(SeqParams(1, 1), 4) == Mat2(5, 3, 3, 2)

    def test_negative_index_closed(self):
        p = SeqParams(2, 3)
        assert fib_matrix_closed(p, -1) == Mat2(0, F(3, 2), 1, -3)
        # F_1 * F_{-1} = (b/a) I, the addition law extended backward
        prod = fib_matrix_closed(p, 1) * fib_matrix_closed(p, -1)
        assert prod == (p.b / p.a) * Mat2.identity()

    def test_rec_rejects_negative_index(self):
        with pytest.raises(ValueError):
            fib_matrix_rec(SeqParams(1, 1), -1)

    def test_binet_identity_at_zero(self):
        for p in SAMPLE:
            assert fib_matrix_binet(p, 0) == Mat2.identity()

    def test_binet_classical_n5(self):
        assert fib_matrix_binet(SeqParams(1, 1), 5) == Mat2(8, 5, 5, 3)

    def test_binet_equals_rec_asymmetric(self):
        p = SeqParams(2, 3)
        assert fib_matrix_binet(p, 7) == fib_matrix_rec(p, 7)


class TestLucasMatrix:
    def test_initial_matrices(self):
        for p in SAMPLE:
            a, b = p.a, p.b
            assert lucas_matrix_rec(p, 0) == Mat2(a, 2, 2 * a / b, -a)
            assert lucas_matrix_rec(p, 1) == Mat2(
                a * a + 2 * a / b, a, a * a / b, 2 * a / b
            )
            assert lucas_matrix_closed(p, 0) == lucas_matrix_rec(p, 0)

    def test_rec_one_step(self):
        assert lucas_matrix_rec(SeqParams(1, 1), 2) == Mat2(4, 3, 3, 1)

    def test_closed_example_a2_b1_n2(self):
        assert lucas_matrix_closed(SeqParams(2, 1), 2) == Mat2(10, 4, 8, 2)

    def test_closed_classical_n3(self):
        assert lucas_matrix_closed(SeqParams(1, 1), 3) == Mat2(7, 4, 4, 3)

    def test_binet_reproduces_seed(self):
        for p in SAMPLE:
            assert lucas_matrix_binet(p, 0) == lucas_matrix_rec(p, 0)

    def test_binet_classical_n4(self):
        assert lucas_matrix_binet(SeqParams(1, 1), 4) == Mat2(11, 7, 7, 4)

    def test_binet_equals_rec_fractional(self):
        p = SeqParams(F(1, 2), 3)
        assert lucas_matrix_binet(p, 6) == lucas_matrix_rec(p, 6)

    def test_backward_matrix_step(self):
        # L_{-1} = L_1 - a L_0, the recurrence run backward
        for p in SAMPLE:
            expected = lucas_matrix_closed(p, 1) - p.a * lucas_matrix_closed(p, 0)
            assert lucas_matrix_closed(p, -1) == expected


class TestTripleAgreement:
    @pytest.mark.parametrize("p", SAMPLE, ids=str)
    def test_all_three_routes_agree(self, p):
        rec_f = fib_matrix_rec_iter(p)
        rec_l = lucas_matrix_rec_iter(p)
        for n in range(26):
            cf = fib_matrix_closed(p, n)
            cl = lucas_matrix_closed(p, n)
            assert next(rec_f) == cf, (p, n)
            assert next(rec_l) == cl, (p, n)
            assert fib_matrix_binet(p, n) == cf, (p, n)
            assert lucas_matrix_binet(p, n) == cl, (p, n)

    def test_headline_binet_form_agrees(self):
        # alternative closed form: F_n = A1 (alpha^n - beta^n)
        #   + B1 (alpha^(2 floor(n/2) + 2) - beta^(2 floor(n/2) + 2))
        # with A1 = [F1 - b F0]^eps(n) [a F1 - F0 - ab F0]^(1-eps(n))
        #   / ((ab)^floor(n/2) (alpha - beta))
        # and  B1 = b^eps(n) F0 / ((ab)^(floor(n/2)+1) (alpha - beta))
        for p in SAMPLE:
            a, b, ab = p.a, p.b, p.ab
            alpha, beta = p.alpha, p.beta
            f0 = Mat2.identity().lift(p.disc)
            f1 = Mat2(b, b / a, 1, 0).lift(p.disc)
            for n in range(0, 14):
                h = floor_half(n)
                if eps(n):
                    a1_num = f1 - b * f0
                else:
                    a1_num = a * f1 - f0 - ab * f0
                denom = (ab**h) * (alpha - beta)
                term1 = (a1_num * (alpha**n - beta**n)) / denom
                b1_num = (b ** eps(n)) * f0
                denom2 = (ab ** (h + 1)) * (alpha - beta)
                term2 = (b1_num * (alpha ** (2 * h + 2) - beta ** (2 * h + 2))) / denom2
                assert (term1 + term2).to_rational() == fib_matrix_rec(p, n), (p, n)


class TestDegenerate:
    def test_binet_raises(self):
        p = SeqParams(2, -2)
        with pytest.raises(BinetDegenerate):
            fib_matrix_binet(p, 3)
        with pytest.raises(BinetDegenerate):
            lucas_matrix_binet(p, 3)

    def test_rec_and_closed_still_agree(self):
        p = SeqParams(2, -2)
        rec_f = fib_matrix_rec_iter(p)
        rec_l = lucas_matrix_rec_iter(p)
        for n in range(20):
            assert next(rec_f) == fib_matrix_closed(p, n)
            assert next(rec_l) == lucas_matrix_closed(p, n)

    def test_seed_is_nilpotent_when_degenerate(self):
        p = SeqParams(2, -2)
        l0 = lucas_matrix_closed(p, 0)
        assert l0 * l0 == Mat2.zero()


class TestDeterminantAndCassini:
    @pytest.mark.parametrize(
        "a,b,n,expected",
        [(1, 1, 0, -5), (2, 1, 0, -12), (1, 1, 1, 5)],
    )
    def test_lucas_det_examples(self, a, b, n, expected):
        assert lucas_det(SeqParams(a, b), n) == expected

    @pytest.mark.parametrize("p", SAMPLE, ids=str)
    def test_det_formula_matches_matrix(self, p):
        for n in range(-10, 31):
            assert lucas_matrix_closed(p, n).det() == lucas_det(p, n), (p, n)

    def test_cassini_examples(self):
        assert cassini_lucas(SeqParams(1, 1), 2)  # 4*1 - 9 = -5 = 5*(-1)^3
        assert cassini_lucas(SeqParams(2, 1), 1)  # 8 - 2 = 6 = 6*(+1)^2

    @pytest.mark.parametrize("p", SAMPLE, ids=str)
    def test_cassini_range(self, p):
        assert all(cassini_lucas(p, n) for n in range(1, 31))


class TestEntryConsistency:
    @pytest.mark.parametrize("p", SAMPLE, ids=str)
    def test_l_entries(self, p):
        for n in range(-12, 25):
            m = lucas_matrix_closed(p, n)
            assert m.e12 == l(p, n)
            assert m.e21 == (p.a / p.b) * l(p, n)
            assert m.e11 == (p.a / p.b) ** eps(n) * l(p, n + 1)
            assert m.e22 == (p.a / p.b) ** eps(n) * l(p, n - 1)

    @pytest.mark.parametrize("p", SAMPLE, ids=str)
    def test_q_entries(self, p):
        for n in range(-12, 25):
            m = fib_matrix_closed(p, n)
            assert m.e21 == q(p, n)
            assert m.e12 == (p.b / p.a) * q(p, n)


def test_dispatcher_sources():
    p = SeqParams(2, 3)
    term = fib_matrix(p, 5, Source.BINET)
    assert term == MatSeqTerm(5, fib_matrix_rec(p, 5), Source.BINET)
    assert lucas_matrix(p, 4).source is Source.CLOSED_FORM
    assert lucas_matrix(p, 4, Source.RECURRENCE).matrix == lucas_matrix_rec(p, 4)
