from fractions import Fraction

import pytest

from hopfseq.cyclotomic import cyclotomic_polynomial, get_field


def test_cyclotomic_polynomials():
    assert cyclotomic_polynomial(1) == (-1, 1)
    assert cyclotomic_polynomial(2) == (1, 1)
    assert cyclotomic_polynomial(3) == (1, 1, 1)
    assert cyclotomic_polynomial(4) == (1, 0, 1)
    assert cyclotomic_polynomial(6) == (1, -1, 1)
    assert cyclotomic_polynomial(12) == (1, 0, -1, 0, 1)


def test_zeta_powers_cycle():
    for N in (1, 2, 3, 4, 5, 6, 8, 12):
        F = get_field(N)
        z = F.zeta(1)
        acc = F.one
        for k in range(2 * N + 1):
            assert acc == F.zeta(k)
            acc = acc * z
        assert F.zeta(N) == F.one


def test_root_sum_vanishes():
    for N in (2, 3, 4, 5, 6, 8, 12):
        F = get_field(N)
        total = F.zero
        for k in range(N):
            total = total + F.zeta(k)
        assert total.is_zero()


def test_field_inverse():
    F = get_field(5)
    a = F.zeta(2) + F.from_rational(Fraction(3, 7))
    assert (a * a.inverse()).is_one()
    with pytest.raises(ZeroDivisionError):
        F.zero.inverse()


def test_rational_fast_path():
    F = get_field(1)
    a = F.from_rational(Fraction(2, 3))
    b = F.from_rational(Fraction(-1, 2))
    assert (a * b).coords == (Fraction(-1, 3),)
    assert (a / b).coords == (Fraction(-4, 3),)


def test_exactness_no_drift():
    # (zeta + 1/3)^12 stays an exact vector; no float contamination
    F = get_field(4)
    x = F.zeta(1) + F.from_rational(Fraction(1, 3))
    y = F.one
    for _ in range(12):
        y = y * x
    assert all(isinstance(c, Fraction) for c in y.coords)
    z = y
    for _ in range(12):
        z = z / x
    assert z == F.one


def test_cross_field_mixing_rejected():
    with pytest.raises(ValueError):
        get_field(3).one + get_field(4).one


def test_hash_and_equality():
    F = get_field(3)
    assert F.zeta(1) == F.zeta(4)
    assert hash(F.zeta(1)) == hash(F.zeta(4))
    assert F.zeta(1) != F.zeta(2)
    # zeta^2 = -1 - zeta in the power basis modulo 1 + x + x^2
    assert F.zeta(2) == F.scalar([-1, -1])
