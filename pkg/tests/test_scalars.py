from fractions import Fraction

import pytest

from qschubert.scalars import ONE, ZERO, Q, S, ScalarQ, q_power, scalar_coeff


def test_normal_form_is_unique():
    x = ScalarQ.laurent({0: 1, 2: 1}) / ScalarQ.laurent({2: 2, 4: 2})
    assert x == ScalarQ.s_power(-2) / 2
    assert hash(x) == hash(ScalarQ.s_power(-2) / 2)


def test_laurent_and_powers():
    assert S * S == Q
    assert q_power(3) == S ** 6
    assert (S ** -4) * Q * Q == ONE
    assert Q.inverse() == q_power(-1)


def test_zero_handling():
    assert (S - S).is_zero()
    assert ZERO + ONE == ONE
    with pytest.raises(ZeroDivisionError):
        ONE / ZERO


def test_scalar_coeff_values():
    assert scalar_coeff(1, 0) == ONE
    assert scalar_coeff(1, 1) == ScalarQ.laurent({-2: 1, 2: -1})
    # (q^{-1} - q)^2 / q
    assert scalar_coeff(1, 2) == ScalarQ.laurent({-6: 1, -2: -2, 2: 1})
    # negative exponent gives a genuine fraction
    c = scalar_coeff(1, -1)
    assert not c.is_laurent()
    assert c * ScalarQ.laurent({-2: 1, 2: -1}) * q_power(1) == ONE


def test_scalar_coeff_uses_symmetrizer():
    assert scalar_coeff(2, 1) == ScalarQ.laurent({-4: 1, 4: -1})


def test_evaluate():
    x = ScalarQ.laurent({-2: 1, 2: -1})
    assert x.evaluate(2) == Fraction(1, 4) - 4


def test_strings_are_canonical():
    x = ScalarQ.laurent({-2: 1, 2: -1}) ** 2 / ScalarQ.laurent({0: 1, 2: 1})
    assert x.numerator_str() == (x * 1).numerator_str()
    assert "s^" in x.numerator_str()
    assert ONE.denominator_str() == "1*s^0"


def test_monomial_parts():
    assert (S ** 3 * Fraction(2, 3)).monomial_parts() == (Fraction(2, 3), 3)
