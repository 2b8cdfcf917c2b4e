"""Scalar semifield operations and their axioms."""

import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

from troprate import (
    Scale,
    TropicalScalar,
    inv,
    isclose,
    leq,
    oplus,
    otimes,
    rpow,
)

MULT = Scale.MULTIPLICATIVE
ADD = Scale.ADDITIVE


def ms(v):
    return TropicalScalar(v, MULT)


def asc(v):
    return TropicalScalar(v, ADD)


mult_values = st.floats(min_value=1e-6, max_value=1e6, allow_nan=False, allow_infinity=False)
add_values = st.floats(min_value=-1e3, max_value=1e3, allow_nan=False, allow_infinity=False)


class TestExamples:
    def test_oplus_is_max(self):
        assert oplus(ms(3), ms(5)).value == 5

    def test_oplus_idempotent(self):
        for x in (0.0, 0.3, 1.0, 7.5):
            assert oplus(ms(x), ms(x)).value == x

    def test_additive_zero_neutral(self):
        assert oplus(TropicalScalar.zero(ADD), asc(7)).value == 7

    def test_otimes_multiplicative(self):
        assert otimes(ms(3), ms(5)).value == 15

    def test_otimes_additive(self):
        assert otimes(asc(3), asc(5)).value == 8

    def test_otimes_annihilates(self):
        assert otimes(ms(4), TropicalScalar.zero(MULT)).is_zero()
        assert otimes(asc(4), TropicalScalar.zero(ADD)).is_zero()

    def test_inv_multiplicative(self):
        assert inv(ms(4)).value == 0.25

    def test_inv_additive_is_negation(self):
        assert inv(asc(3)).value == -3

    def test_inv_zero_rejected(self):
        with pytest.raises(ValueError, match="no inverse for zero"):
            inv(TropicalScalar.zero(MULT))

    def test_rpow_fourth_root(self):
        assert rpow(ms(16), 1 / 4).value == 2

    def test_rpow_additive_scales(self):
        assert rpow(asc(6), 1 / 3).value == 2

    def test_rpow_zero_exponent(self):
        assert rpow(ms(7), 0).is_one()
        assert rpow(asc(-3), 0).is_one()

    def test_rpow_zero_base_negative_exponent(self):
        with pytest.raises(ValueError):
            rpow(TropicalScalar.zero(MULT), -1)

    def test_leq(self):
        assert leq(ms(3), ms(5))
        assert not leq(ms(5), ms(3))
        assert leq(ms(4), ms(4))
        assert leq(TropicalScalar.zero(ADD), asc(-123))

    def test_scale_mismatch(self):
        with pytest.raises(ValueError, match="different scales"):
            oplus(ms(1), asc(1))
        with pytest.raises(ValueError, match="different scales"):
            otimes(ms(1), asc(1))
        with pytest.raises(ValueError, match="different scales"):
            leq(ms(1), asc(1))

    def test_invalid_values_rejected(self):
        with pytest.raises(ValueError):
            TropicalScalar(float("nan"), MULT)
        with pytest.raises(ValueError):
            TropicalScalar(float("inf"), ADD)
        with pytest.raises(ValueError):
            TropicalScalar(-1.0, MULT)


class TestAxioms:
    @given(a=mult_values, b=mult_values, c=mult_values)
    def test_multiplicative_axioms(self, a, b, c):
        sa, sb, sc = ms(a), ms(b), ms(c)
        zero, one = TropicalScalar.zero(MULT), TropicalScalar.one(MULT)
        assert oplus(sa, sb).value == oplus(sb, sa).value
        assert oplus(oplus(sa, sb), sc).value == oplus(sa, oplus(sb, sc)).value
        assert oplus(sa, sa).value == a
        assert otimes(sa, sb).value == otimes(sb, sa).value
        assert isclose(otimes(otimes(sa, sb), sc), otimes(sa, otimes(sb, sc)))
        assert isclose(otimes(sa, oplus(sb, sc)), oplus(otimes(sa, sb), otimes(sa, sc)))
        assert oplus(sa, zero).value == a
        assert otimes(sa, zero).is_zero()
        assert otimes(sa, one).value == a
        assert isclose(otimes(sa, inv(sa)), one)
        assert leq(sa, sb) == (oplus(sa, sb).value == sb.value)

    @given(a=add_values, b=add_values, c=add_values)
    def test_additive_axioms(self, a, b, c):
        sa, sb, sc = asc(a), asc(b), asc(c)
        zero, one = TropicalScalar.zero(ADD), TropicalScalar.one(ADD)
        assert oplus(sa, sb).value == oplus(sb, sa).value
        assert oplus(oplus(sa, sb), sc).value == oplus(sa, oplus(sb, sc)).value
        assert otimes(sa, sb).value == otimes(sb, sa).value
        assert isclose(otimes(otimes(sa, sb), sc), otimes(sa, otimes(sb, sc)))
        assert isclose(otimes(sa, oplus(sb, sc)), oplus(otimes(sa, sb), otimes(sa, sc)))
        assert oplus(sa, zero).value == a
        assert otimes(sa, zero).is_zero()
        assert otimes(sa, one).value == a
        assert isclose(otimes(sa, inv(sa)), one)
        assert leq(sa, sb) == (oplus(sa, sb).value == sb.value)

    @given(a=mult_values, b=mult_values, p=st.floats(min_value=-3, max_value=3))
    def test_log_duality(self, a, b, p):
        la, lb = asc(math.log(a)), asc(math.log(b))
        sa, sb = ms(a), ms(b)
        assert isclose(asc(math.log(oplus(sa, sb).value)), oplus(la, lb))
        assert isclose(asc(math.log(otimes(sa, sb).value)), otimes(la, lb))
        assert isclose(asc(math.log(inv(sa).value)), inv(la))
        assert isclose(asc(math.log(rpow(sa, p).value)), rpow(la, p))
