"""The exact coefficient field and parameter bindings."""

from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from qsphere.errors import PoleAtPoint
from qsphere.scalars import ONE, ZERO, DeformationContext, Scalar

q = DeformationContext.standard().q


def _rand_scalar(num, den):
    if not any(den):
        den = den + [1]
    return Scalar(tuple(num), tuple(den))


small_ints = st.integers(min_value=-5, max_value=5)
polys = st.lists(small_ints, min_size=0, max_size=4)
scalars = st.builds(_rand_scalar, polys, polys)
nonzero_scalars = scalars.filter(lambda s: not s.is_zero)


class TestCanonicalForm:
    def test_zero_representation(self):
        assert Scalar((0,), (3,)) == ZERO
        assert ZERO.num == () and ZERO.den == (1,)

    def test_gcd_reduced(self):
        # (v^2 - 1) / (v - 1) = v + 1
        s = Scalar((-1, 0, 1), (-1, 1))
        assert s == Scalar((1, 1))

    def test_content_reduced(self):
        assert Scalar((2, 4), (2,)) == Scalar((1, 2))

    def test_denominator_sign(self):
        s = Scalar((1,), (-1, -1))
        assert s.den[-1] > 0

    def test_equal_iff_identical(self):
        a = (q ** 2 - ONE) / (q + ONE)
        b = q - ONE
        assert a == b
        assert hash(a) == hash(b)


class TestArithmetic:
    def test_field_identities(self):
        s = (q ** 3 - q) / (q ** 2 + ONE)
        assert s + ZERO == s
        assert s * ONE == s
        assert s - s == ZERO
        assert s / s == ONE

    def test_negative_powers(self):
        assert q ** (-1) * q == ONE
        assert q ** (-3) == (q ** 3).inverse()

    def test_division_by_zero(self):
        with pytest.raises(ZeroDivisionError):
            ONE / ZERO

    @given(scalars, scalars, scalars)
    def test_ring_axioms(self, a, b, c):
        assert (a + b) + c == a + (b + c)
        assert a + b == b + a
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c

    @given(nonzero_scalars)
    def test_multiplicative_inverse(self, a):
        assert a * a.inverse() == ONE

    @given(scalars, scalars)
    def test_subtraction(self, a, b):
        assert (a - b) + b == a


class TestEvaluation:
    def test_eval_exact(self):
        s = (q ** 2 - ONE) / (q + ONE)
        assert s.eval_at(Fraction(1, 2)) == Fraction(-1, 2)

    def test_pole(self):
        s = ONE / (q - ONE)
        with pytest.raises(PoleAtPoint):
            s.eval_at(1)

    @given(scalars)
    def test_eval_is_homomorphism(self, a):
        b = q + ONE
        try:
            lhs = (a * b).eval_at(Fraction(1, 3))
        except PoleAtPoint:
            return
        assert lhs == a.eval_at(Fraction(1, 3)) * b.eval_at(Fraction(1, 3))


class TestContexts:
    def test_standard_binding(self):
        ctx = DeformationContext.standard()
        assert ctx.q == Scalar.variable()
        assert ctx.t is None

    def test_root_binding(self):
        ctx = DeformationContext.with_root(3)
        assert ctx.t == Scalar.variable()
        # t^N = q^-1
        assert ctx.t ** 3 == ctx.q.inverse()

    def test_rebase(self):
        ctx = DeformationContext.with_root(2)
        plain = DeformationContext.standard()
        s = plain.q ** 2 - ONE
        assert ctx.rebase(s) == ctx.q ** 2 - ONE

    def test_qnum(self):
        ctx = DeformationContext.standard()
        assert ctx.qnum(1) == ONE
        assert ctx.qnum(2) == q + q ** (-1)
        assert ctx.qnum(3) == q ** 2 + ONE + q ** (-2)
