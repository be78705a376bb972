import math
from fractions import Fraction

import mpmath
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from so5count.errors import DomainError, PoleError, RangeError
from so5count.specfun import (
    RealValue,
    constants,
    gamma,
    gen_binom,
    recip_gamma,
    sinpi,
    zeta,
    zeta_euler_maclaurin,
    zeta_reflected,
)

mpmath.mp.dps = 40


def rel(a, b):
    return abs(a - b) / abs(b)


class TestGamma:
    def test_examples(self):
        assert gamma(0.5) == pytest.approx(math.sqrt(math.pi), rel=1e-15)
        assert gamma(5) == 24
        assert gamma(0.25) == pytest.approx(3.6256099082219083119, rel=1e-14)

    def test_quarter_by_recurrence(self):
        # Gamma(1/4) = Gamma(9/4) / ((5/4)(1/4))
        assert rel(gamma(0.25), gamma(2.25) / (1.25 * 0.25)) < 1e-14

    @pytest.mark.parametrize("x", [0.1 + 0.37 * i for i in range(135)])
    def test_against_mpmath(self, x):
        assert rel(gamma(x), float(mpmath.gamma(x))) <= 1e-12

    @pytest.mark.parametrize("x", [-0.5, -1.5, -2.25, -7.7, -33.3, -150.5])
    def test_negative_reflection(self, x):
        assert rel(gamma(x), float(mpmath.gamma(x))) <= 1e-12

    @pytest.mark.parametrize("x", [0, -1, -2, -50])
    def test_poles(self, x):
        with pytest.raises(PoleError):
            gamma(x)

    def test_overflow(self):
        with pytest.raises(RangeError):
            gamma(172.0)

    def test_nan_rejected(self):
        with pytest.raises(DomainError):
            gamma(float("nan"))

    def test_recurrence_grid(self):
        for i in range(391):
            x = 0.1 + 0.1 * i
            assert abs(gamma(x + 1) - x * gamma(x)) <= 1e-11 * gamma(x + 1)

    def test_reflection_grid(self):
        for i in range(1, 100):
            x = i / 100
            assert abs(gamma(x) * gamma(1 - x) * math.sin(math.pi * x) / math.pi - 1) <= 1e-10

    def test_error_bound_carried(self):
        g = gamma(3.3)
        assert isinstance(g, RealValue)
        assert 0 <= g.abs_error_bound < 1e-12 * g
        assert abs(g - float(mpmath.gamma(3.3))) <= g.abs_error_bound


class TestRecipGamma:
    def test_examples(self):
        assert recip_gamma(-1) == 0.0
        assert recip_gamma(1) == 1.0
        assert recip_gamma(0.5) == pytest.approx(1 / math.sqrt(math.pi), rel=1e-15)

    @pytest.mark.parametrize("x", [0, -2, -3, -40])
    def test_exact_zero(self, x):
        assert recip_gamma(x) == 0.0

    @pytest.mark.parametrize("x", [-3.5, 0.01, 1.3, 1.9, 7.25, 100.5])
    def test_against_mpmath(self, x):
        assert rel(recip_gamma(x), float(mpmath.rgamma(x))) <= 1e-12

    def test_large_argument_underflows_to_zero(self):
        assert recip_gamma(200.0) == 0.0


def test_sinpi_exact_at_integers():
    assert sinpi(3.0) == 0.0
    assert sinpi(0.5) == 1.0
    assert sinpi(-2.5) == -1.0


class TestZeta:
    def test_examples(self):
        assert abs(zeta(2) - math.pi ** 2 / 6) <= 1e-12
        assert abs(zeta(-1) + 1 / 12) <= 1e-12
        assert zeta(1 / 3) == pytest.approx(-0.9733602483507827, rel=1e-13)

    def test_third_two_truncations(self):
        a = zeta_euler_maclaurin(1 / 3, 12)
        b = zeta_euler_maclaurin(1 / 3, 40)
        assert abs(a - b) <= 1e-13

    @pytest.mark.parametrize("s", [x / 4 for x in range(-40, 201) if x != 4])
    def test_against_mpmath(self, s):
        want = float(mpmath.zeta(s))
        if want == 0:
            assert zeta(s) == 0
        else:
            assert rel(zeta(s), want) <= 1e-12

    def test_trivial_zeros_exact(self):
        for s in (-2, -4, -10):
            assert zeta(s) == 0.0

    def test_pole(self):
        with pytest.raises(PoleError):
            zeta(1.0)

    def test_functional_equation_grid(self):
        for i in range(33):
            s = -0.9 + 0.025 * i
            assert abs(zeta_euler_maclaurin(s) - zeta_reflected(s)) <= 1e-10

    @settings(max_examples=60, deadline=None)
    @given(st.floats(min_value=1.05, max_value=60))
    def test_above_one_exceeds_one(self, s):
        assert zeta(s) >= 1.0


class TestGenBinom:
    def test_examples(self):
        third = Fraction(1, 3)
        assert gen_binom(third, 0) == 1
        assert gen_binom(third, 1) == Fraction(1, 3)
        assert gen_binom(third, 2) == Fraction(-1, 9)
        assert gen_binom(third, 3) == Fraction(5, 81)

    def test_float_matches_fraction(self):
        assert gen_binom(1 / 3, 4) == pytest.approx(float(gen_binom(Fraction(1, 3), 4)), rel=1e-15)

    def test_integer_alpha_is_binomial(self):
        assert [gen_binom(5, m) for m in range(7)] == [1, 5, 10, 10, 5, 1, 0]

    @given(st.fractions(min_value=-5, max_value=5, max_denominator=50), st.integers(1, 25))
    def test_pascal_exact(self, alpha, m):
        assert gen_binom(alpha, m) == gen_binom(alpha - 1, m) + gen_binom(alpha - 1, m - 1)

    def test_negative_m(self):
        with pytest.raises(DomainError):
            gen_binom(0.5, -1)


def test_constants_table():
    c = constants()
    want = {
        "pi": mpmath.pi, "euler_gamma": mpmath.euler, "sqrt_pi": mpmath.sqrt(mpmath.pi),
        "sqrt3": mpmath.sqrt(3), "cbrt2": mpmath.cbrt(2), "cbrt3": mpmath.cbrt(3), "cbrt6": mpmath.cbrt(6),
        "gamma_quarter": mpmath.gamma(0.25), "gamma_third": mpmath.gamma(mpmath.mpf(1) / 3),
        "gamma_sixth": mpmath.gamma(mpmath.mpf(1) / 6), "zeta_half": mpmath.zeta(0.5),
        "zeta_third": mpmath.zeta(mpmath.mpf(1) / 3),
    }
    assert set(want) <= set(c)
    for k, v in want.items():
        assert rel(c[k], float(v)) <= 1e-13, k
