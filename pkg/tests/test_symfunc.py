"""Multi-alphabet symmetric functions and graded series: Hall pairing,
basis changes, Adams operations, and the exponential/logarithm pair."""

from __future__ import annotations

from fractions import Fraction

import pytest

from ennola.coeffs import ONE, Q, RAT_ONE, RAT_ZERO, RatQU, U
from ennola.partitions import enumerate_partitions, z_lambda
from ennola.symfunc import GradedSeries, SymFunc, mobius, schur_symfunc


def rat(n, d=1) -> RatQU:
    return RatQU.from_frac(Fraction(n, d))


class TestSymFuncBasics:
    def test_zero_and_equality(self):
        z = SymFunc.zero(2, 3)
        assert z.is_zero()
        assert z == SymFunc(2, 3, "p", {})
        f = schur_symfunc(1, ((2, 1),))
        assert not f.is_zero()
        assert f == f

    def test_add_scale(self):
        f = schur_symfunc(1, ((2,),))
        g = schur_symfunc(1, ((1, 1),))
        h = f.add(g)
        # p_(1,1) = s_2 + s_(1,1) minus... check via schur coefficients
        assert h.schur_coefficient(((2,),)) == RAT_ONE
        assert h.schur_coefficient(((1, 1),)) == RAT_ONE
        assert f.add(f.scale(-1)).is_zero()

    def test_schur_orthonormality(self):
        for n in range(1, 7):
            shapes = enumerate_partitions(n)
            fs = {lam: schur_symfunc(1, (lam,)) for lam in shapes}
            for a in shapes:
                for b in shapes:
                    expected = RAT_ONE if a == b else RAT_ZERO
                    assert fs[a].pairing(fs[b]) == expected, (a, b)

    def test_powersum_pairing_is_z(self):
        for n in range(1, 7):
            shapes = enumerate_partitions(n)
            for a in shapes:
                for b in shapes:
                    fa = SymFunc(1, n, "p", {(a,): RAT_ONE})
                    fb = SymFunc(1, n, "p", {(b,): RAT_ONE})
                    got = fa.pairing(fb)
                    expected = rat(z_lambda(a)) if a == b else RAT_ZERO
                    assert got == expected, (a, b)

    def test_two_alphabet_pairing_multiplies(self):
        a = schur_symfunc(2, ((2, 1), (1, 1, 1)))
        b = schur_symfunc(2, ((2, 1), (1, 1, 1)))
        c = schur_symfunc(2, ((2, 1), (3,)))
        assert a.pairing(b) == RAT_ONE
        assert a.pairing(c) == RAT_ZERO

    def test_schur_powersum_roundtrip(self):
        for lam in [(3,), (2, 1), (1, 1, 1), (2, 2), (3, 2)]:
            f = schur_symfunc(1, (lam,), "p")
            back = f.to_schur()
            nonzero = {k: v for k, v in back.coeffs.items() if not v.is_zero()}
            assert nonzero == {(lam,): RAT_ONE}

    def test_multiply_littlewood_richardson(self):
        # s_1 * s_1 = s_2 + s_(1,1)
        s1 = schur_symfunc(1, ((1,),))
        prod = s1.multiply(s1)
        assert prod.schur_coefficient(((2,),)) == RAT_ONE
        assert prod.schur_coefficient(((1, 1),)) == RAT_ONE
        # s_21 * s_1 = s_31 + s_22 + s_211
        s21 = schur_symfunc(1, ((2, 1),))
        prod2 = s21.multiply(s1)
        for target in [(3, 1), (2, 2), (2, 1, 1)]:
            assert prod2.schur_coefficient((target,)) == RAT_ONE
        assert prod2.schur_coefficient(((4,),)) == RAT_ZERO

    def test_adams_on_powersums(self):
        # psi_m is multiplicative: p_rho -> p_{m*rho}
        f = SymFunc(1, 3, "p", {((2, 1),): rat(5)})
        g = f.adams(2)
        assert g.n == 6
        assert g.coeffs == {((4, 2),): rat(5)}

    def test_subst_coeffs(self):
        f = SymFunc(1, 1, "p", {((1,),): RatQU.from_poly(Q + U)})
        g = f.subst_coeffs(q=-Q)
        assert g.coeffs[((1,),)] == RatQU.from_poly(U - Q)

    def test_incompatible_ops_raise(self):
        f = SymFunc.zero(1, 2)
        g = SymFunc.zero(2, 2)
        with pytest.raises(ValueError):
            f.add(g)
        with pytest.raises(ValueError):
            f.pairing(g)


class TestMobius:
    def test_values(self):
        expected = {1: 1, 2: -1, 3: -1, 4: 0, 5: -1, 6: 1, 7: -1, 8: 0, 9: 0, 10: 1, 12: 0, 30: -1}
        for n, v in expected.items():
            assert mobius(n) == v

    def test_divisor_sum(self):
        for m in range(1, 40):
            total = sum(mobius(d) for d in range(1, m + 1) if m % d == 0)
            assert total == (1 if m == 1 else 0)


def geometric_series(k: int, N: int) -> GradedSeries:
    """1 + f + f^2 + ... truncated, for f = s_1 on each alphabet."""
    one = GradedSeries.one(k, N)
    f = GradedSeries.zero(k, N)
    term = SymFunc(k, 1, "p", {((((1,),) * k)): RAT_ONE})
    coeffs = list(f.coeffs)
    coeffs[1] = term
    f = GradedSeries(k, N, coeffs)
    acc = one
    power = one
    for _ in range(N):
        power = power.mul(f)
        acc = acc.add(power)
    return acc


class TestGradedSeries:
    def test_mul_grading(self):
        s = geometric_series(1, 4)
        # (sum p_1^n) has degree-n coefficient p_1^n = p_(1^n)
        assert s.coeffs[0] == RAT_ONE
        for n in range(1, 5):
            got = s.coeffs[n]
            assert got.coeffs == {((1,) * n,): RAT_ONE}

    def test_exp_log_roundtrip(self):
        f = GradedSeries.zero(2, 5)
        coeffs = list(f.coeffs)
        coeffs[1] = SymFunc(2, 1, "p", {(((1,), (1,))): RatQU.from_poly(Q)})
        coeffs[2] = SymFunc(2, 2, "p", {(((2,), (1, 1))): rat(1, 2)})
        f = GradedSeries(2, 5, coeffs)
        assert f.plain_exp().plain_log() == f
        assert f.pleth_exp().pleth_log() == f

    def test_exp_homomorphism(self):
        # Exp(f+g) = Exp(f) Exp(g), and the same for plain exp
        fa = GradedSeries.zero(1, 5)
        ca = list(fa.coeffs)
        ca[1] = SymFunc(1, 1, "p", {(((1,),)): RAT_ONE})
        fa = GradedSeries(1, 5, ca)
        fb = GradedSeries.zero(1, 5)
        cb = list(fb.coeffs)
        cb[2] = SymFunc(1, 2, "p", {(((2,),)): RatQU.from_poly(U)})
        fb = GradedSeries(1, 5, cb)
        lhs_plain = fa.add(fb).plain_exp()
        rhs_plain = fa.plain_exp().mul(fb.plain_exp())
        assert lhs_plain == rhs_plain
        lhs = fa.add(fb).pleth_exp()
        rhs = fa.pleth_exp().mul(fb.pleth_exp())
        assert lhs == rhs

    def test_pleth_exp_of_p1_counts_partitions(self):
        # Exp(p_1) = sum over all partitions: coefficient of degree n lists
        # every p_rho / z_rho
        f = GradedSeries.zero(1, 5)
        c = list(f.coeffs)
        c[1] = SymFunc(1, 1, "p", {(((1,),)): RAT_ONE})
        f = GradedSeries(1, 5, c)
        e = f.pleth_exp()
        for n in range(1, 6):
            got = e.coeffs[n]
            expected = {
                (rho,): rat(1, z_lambda(rho)) for rho in enumerate_partitions(n)
            }
            assert got.coeffs == expected

    def test_psi_inverse(self):
        f = GradedSeries.zero(1, 6)
        c = list(f.coeffs)
        c[1] = SymFunc(1, 1, "p", {(((1,),)): RatQU.from_poly(Q)})
        c[3] = SymFunc(1, 3, "p", {(((2, 1),)): rat(7, 3)})
        f = GradedSeries(1, 6, c)
        assert f.pleth_psi().pleth_psi_inv() == f
        assert f.pleth_psi_inv().pleth_psi() == f

    def test_pow_via_log(self):
        s = geometric_series(1, 4)
        sq = s.mul(s)
        assert s.pow_via_log(2) == sq
        assert sq.pow_via_log(Fraction(1, 2)) == s

    def test_adams_composition(self):
        f = GradedSeries.zero(1, 6)
        c = list(f.coeffs)
        c[1] = SymFunc(1, 1, "p", {(((1,),)): RatQU.from_poly(Q + ONE)})
        f = GradedSeries(1, 6, c)
        assert f.adams(2).adams(3) == f.adams(6)

    def test_exp_requires_zero_constant_term(self):
        with pytest.raises(ValueError):
            GradedSeries.one(1, 3).plain_exp()
        with pytest.raises(ValueError):
            GradedSeries.zero(1, 3).plain_log()
