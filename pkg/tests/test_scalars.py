import math
from fractions import Fraction

import pytest

from app.exceptions import ExactArithmeticError, InputParseError
from app.fuzz.generators import random_scalar
from app.scalars import (
    ONE,
    PI,
    ZERO,
    CircleNumber,
    ExactScalar,
    circle_eq,
    circle_reduce,
    parse_rational,
    parse_scalar,
    render_circle,
    scalar_arith,
    scalar_to_json,
    to_float,
)


def test_field_operations_are_exact():
    x = (1 + PI) / PI
    assert x * PI == 1 + PI
    assert ExactScalar(Fraction(1, 2)) + 1 == Fraction(3, 2)
    assert 1 - PI == -(PI - 1)
    assert (PI**2 - 1) / (PI - 1) == PI + 1
    assert PI ** -1 == ONE / PI
    assert ZERO == 0 and not ZERO


def test_field_laws_on_random_scalars(rng):
    for _ in range(25):
        x, y, z = (random_scalar(rng) for _ in range(3))
        assert (x * y) * z == x * (y * z)
        assert x * (y + z) == x * y + x * z
        if x:
            assert x * x.inv() == ONE
        assert ExactScalar(x) == x
        n = rng.randint(-50, 50)
        assert circle_reduce(x) == circle_reduce(x + n)


def test_float_embedding_respects_products(rng):
    for _ in range(25):
        x, y = random_scalar(rng, max_pi_degree=2, bits=8), random_scalar(rng, max_pi_degree=2, bits=8)
        assert to_float(x * y) == pytest.approx(to_float(x) * to_float(y), rel=1e-12, abs=1e-10)


def test_inverse_of_zero_raises():
    with pytest.raises(ExactArithmeticError):
        ZERO.inv()
    with pytest.raises(ZeroDivisionError):
        ONE / (PI - PI)


def test_structure_accessors():
    x = (3 * PI + Fraction(1, 2)) / 2
    assert x.is_polynomial and not x.is_rational
    assert x.pi_free_part() == Fraction(1, 4)
    assert ExactScalar(Fraction(7, 3)).rational() == Fraction(7, 3)
    assert ExactScalar(4).is_integer()
    assert not PI.is_integer()
    with pytest.raises(ValueError):
        PI.rational()


@pytest.mark.parametrize(
    "value, sign",
    [
        (PI - 3, 1),
        (Fraction(22, 7) - PI, 1),
        (PI - Fraction(355, 113), -1),
        (-1 / PI, -1),
        ((PI - 3) / (PI - 4), -1),
        (ZERO, 0),
    ],
)
def test_sign_by_interval_refinement(value, sign):
    assert ExactScalar(value).sign() == sign


def test_floor():
    assert (2 * PI).floor() == 6
    assert (-PI).floor() == -4
    assert (1 / PI).floor() == 0
    assert ExactScalar(Fraction(-7, 2)).floor() == -4
    assert (PI * PI).floor() == 9


def test_float_embedding():
    assert to_float(PI) == pytest.approx(math.pi, abs=1e-15)
    assert (PI / 3).to_float() == pytest.approx(math.pi / 3, abs=1e-15)
    assert float(ExactScalar(Fraction(1, 8))) == 0.125


def test_circle_numbers_compare_mod_integers():
    assert CircleNumber(Fraction(3, 2)) == CircleNumber(Fraction(1, 2))
    assert CircleNumber(PI + 1) == CircleNumber(PI)
    assert CircleNumber(PI) != CircleNumber(PI + Fraction(1, 2))
    assert CircleNumber(Fraction(1, 4)) + CircleNumber(Fraction(3, 4)) == CircleNumber(0)
    assert -CircleNumber(Fraction(1, 3)) == CircleNumber(Fraction(2, 3))
    assert circle_eq(CircleNumber(5), CircleNumber(0))


def test_circle_rendering():
    assert render_circle(CircleNumber(Fraction(1, 2))) == "1/2 mod 1"
    assert CircleNumber(Fraction(5, 2)).render() == "1/2 mod 1"
    assert CircleNumber(-2 * PI).render() == "(-2)·π mod 1"
    assert CircleNumber(PI + Fraction(1, 3)).render() == "1/3 + π mod 1"
    assert CircleNumber(0).render() == "0 mod 1"


def test_circle_float_is_reduced():
    value = CircleNumber(-2 * PI)
    assert 0 <= value.to_float() < 1
    assert value.to_float() == pytest.approx(0.7168146928204138, abs=1e-12)


def test_parse_rational():
    assert parse_rational("3/4") == Fraction(3, 4)
    assert parse_rational(" -2 ") == -2
    assert parse_rational(5) == 5
    for bad in ("abc", "1/0", 1.5, True, None):
        with pytest.raises(InputParseError):
            parse_rational(bad)


def test_parse_scalar_forms():
    assert parse_scalar("1/3") == Fraction(1, 3)
    assert parse_scalar({"num": ["0", "1"]}) == PI
    assert parse_scalar({"num": ["1"], "den": ["0", "2"]}) == 1 / (2 * PI)
    x = (PI**2 - Fraction(1, 5)) / (PI + 7)
    assert parse_scalar(scalar_to_json(x)) == x
    with pytest.raises(InputParseError):
        parse_scalar({"den": ["1"]})
    with pytest.raises(InputParseError):
        parse_scalar({"num": ["1"], "den": ["0"]})


def test_scalar_arith_dispatch():
    assert scalar_arith("mul", 2, PI) == 2 * PI
    assert scalar_arith("inv", PI) == 1 / PI
    assert scalar_arith("eq", Fraction(1, 2), Fraction(2, 4))
    with pytest.raises(ValueError):
        scalar_arith("pow", 2, 3)
