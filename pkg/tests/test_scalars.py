from fractions import Fraction

import pytest

from liecohom.scalars import HALF, I, ONE, Scalar, format_scalar
from liecohom.structure import parse_scalar


def test_exact_arithmetic():
    assert Scalar(Fraction(1, 3)) + Scalar(Fraction(1, 6)) == HALF
    assert I * I == Scalar(-1)
    assert (ONE + I) ** 2 == 2 * I
    assert Scalar(2, 1) * Scalar(2, -1) == Scalar(5)


def test_division_is_exact():
    z = Scalar(1, 2)
    w = Scalar(3, -1)
    assert (z / w) * w == z
    with pytest.raises(ZeroDivisionError):
        z / Scalar(0)


def test_conjugation_and_norm():
    z = Scalar(Fraction(-1, 2), Fraction(3, 4))
    assert z.conjugate() == Scalar(Fraction(-1, 2), Fraction(-3, 4))
    assert z.conjugate().conjugate() == z
    assert z.abs2() == Fraction(1, 4) + Fraction(9, 16)
    assert z.abs2() >= 0


def test_coercion_and_equality():
    assert Scalar(3) == 3
    assert Scalar(Fraction(1, 2)) == Fraction(1, 2)
    assert Scalar(0, 1) != 1
    assert hash(Scalar(2)) == hash(Scalar(2, 0))


def test_powers():
    assert Scalar(0, -1) ** 2 == Scalar(-1)
    assert Scalar(0, -1) ** 3 == I
    assert Scalar(5, 7) ** 0 == ONE


@pytest.mark.parametrize(
    "text",
    ["0", "3", "-1/2", "1i", "-1/2i", "(1/2-3i)", "(0-1i)", "(-2+1i)"],
)
def test_format_parses_back(text):
    value = parse_scalar(text)
    assert parse_scalar(format_scalar(value)) == value


def test_format_canonical():
    assert format_scalar(Scalar(0)) == "0"
    assert format_scalar(Scalar(Fraction(-1, 2))) == "-1/2"
    assert format_scalar(Scalar(0, Fraction(1, 2))) == "1/2i"
    assert format_scalar(Scalar(Fraction(1, 2), -3)) == "(1/2-3i)"


def test_immutability():
    z = Scalar(1, 1)
    with pytest.raises(AttributeError):
        z.re = Fraction(2)
