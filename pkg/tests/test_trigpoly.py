import math
from fractions import Fraction

import numpy as np
import pytest

from app.exceptions import EvaluationError, InputParseError
from app.fuzz.generators import random_polytrig
from app.scalars import PI, to_float
from app.trigpoly import (
    COS,
    SIN,
    PolyTrig,
    TrigSeries,
    WindingFunction,
    parse_harmonics,
    parse_polytrig,
    polytrig_to_json,
    pt_antiderivative,
    pt_derivative,
    pt_eval_float,
    pt_eval_integer,
    pt_integrate_period,
    pt_mul,
    pt_shift,
)


t = PolyTrig.monomial(1)
half = Fraction(1, 2)


def sin(k, value=1, power=0):
    return PolyTrig.sin_k(k, value, power)


def cos(k, value=1, power=0):
    return PolyTrig.cos_k(k, value, power)


def test_product_to_sum():
    assert pt_mul(sin(1), sin(1)) == PolyTrig.constant(half) - cos(2, half)
    assert pt_mul(cos(1), cos(1)) == PolyTrig.constant(half) + cos(2, half)
    assert pt_mul(sin(1), cos(1)) == sin(2, half)
    assert pt_mul(sin(2), cos(1)) == sin(3, half) + sin(1, half)
    assert pt_mul(cos(1), sin(2)) == sin(3, half) + sin(1, half)
    assert pt_mul(sin(1), sin(3)) == cos(2, half) - cos(4, half)
    assert pt_mul(t, sin(1)) == sin(1, power=1)


def test_ring_laws_on_random_elements(rng):
    for _ in range(25):
        f, g, h = (random_polytrig(rng, max_power=2, max_harmonic=3) for _ in range(3))
        assert f * (g * h) == (f * g) * h
        assert f * (g + h) == f * g + f * h
        assert f * g == g * f
        assert f - f == PolyTrig.zero()


def test_derivative():
    assert pt_derivative(sin(3)) == cos(3, 6 * PI)
    assert pt_derivative(cos(2)) == sin(2, -4 * PI)
    assert pt_derivative(PolyTrig.monomial(2)) == t * 2
    assert pt_derivative(PolyTrig.constant(7)) == PolyTrig.zero()
    assert pt_derivative(sin(1, power=1)) == sin(1) + cos(1, 2 * PI, power=1)


def test_antiderivative_inverts_derivative(rng):
    for _ in range(25):
        f = random_polytrig(rng, max_power=3, max_harmonic=4)
        primitive = pt_antiderivative(f)
        assert pt_derivative(primitive) == f
        assert primitive.coefficient(0) == 0


def test_antiderivative_basis_values():
    assert pt_antiderivative(PolyTrig.constant(3)) == t * 3
    assert pt_antiderivative(cos(1)) == sin(1, 1 / (2 * PI))
    assert pt_antiderivative(sin(1, power=1)) == cos(1, -1 / (2 * PI), power=1) + sin(
        1, 1 / (4 * PI**2)
    )


def test_shift():
    assert pt_shift(PolyTrig.monomial(2), 1) == PolyTrig.monomial(2) + t * 2 + 1
    assert pt_shift(t * 3 + sin(2), -1) == t * 3 - 3 + sin(2)
    f = sin(1, 5, power=2)
    assert pt_shift(pt_shift(f, 4), -4) == f


def test_leibniz_rule(rng):
    for _ in range(25):
        f, g = (random_polytrig(rng, max_power=2, max_harmonic=3) for _ in range(2))
        assert pt_derivative(pt_mul(f, g)) == pt_mul(pt_derivative(f), g) + pt_mul(f, pt_derivative(g))


def test_shift_commutes_with_products_and_derivatives(rng):
    for _ in range(25):
        f, g = (random_polytrig(rng, max_power=3, max_harmonic=3) for _ in range(2))
        m = rng.randint(-3, 3)
        assert pt_shift(pt_mul(f, g), m) == pt_mul(pt_shift(f, m), pt_shift(g, m))
        assert pt_shift(pt_derivative(f), m) == pt_derivative(pt_shift(f, m))


def test_float_evaluation_agrees_with_exact_values_at_integers(rng):
    for _ in range(25):
        f = random_polytrig(rng, max_power=3, max_harmonic=4)
        m = rng.randint(-3, 3)
        exact = to_float(pt_eval_integer(pt_shift(f, m), 0))
        assert exact == to_float(pt_eval_integer(f, m))
        assert pt_eval_float(f, float(m)) == pytest.approx(exact, rel=1e-9, abs=1e-9)


def test_integer_evaluation():
    f = PolyTrig.constant(3) + t + sin(1) + cos(2, 2)
    assert pt_eval_integer(f, 0) == 5
    assert pt_eval_integer(f, 1) == 6
    assert pt_eval_integer(PolyTrig.monomial(3, PI), -2) == -8 * PI
    for bad in (0.5, True, Fraction(1, 2)):
        with pytest.raises(EvaluationError):
            pt_eval_integer(f, bad)


def test_float_evaluation():
    f = t * 2 + sin(1, 3) + cos(2, half, power=1)
    points = np.linspace(0, 1, 7)
    expected = 2 * points + 3 * np.sin(2 * math.pi * points) + 0.5 * points * np.cos(
        4 * math.pi * points
    )
    assert np.allclose(pt_eval_float(f, points), expected, atol=1e-14)
    assert pt_eval_float(f, 0.25) == pytest.approx(0.5 + 3.0 - 0.125)


def test_integrate_period():
    assert pt_integrate_period(cos(1)) == 0
    assert pt_integrate_period(t) == half
    assert pt_integrate_period(sin(1, power=1)) == -1 / (2 * PI)
    assert pt_integrate_period(pt_mul(sin(3), sin(3))) == half


def test_terms_and_inspection():
    f = PolyTrig.from_terms({0: TrigSeries(2, {1: (1, 3)}), 1: TrigSeries(5)})
    assert f.degree == 1
    assert not f.is_periodic()
    assert f.terms[0] == TrigSeries(2, {1: (1, 3)})
    assert f.coefficient(0, COS, 1) == 3
    assert f.coefficient(0, SIN, 2) == 0
    assert PolyTrig.constant(4).is_constant()
    assert PolyTrig.constant(4).constant_value() == 4
    with pytest.raises(ValueError):
        f.constant_value()
    with pytest.raises(ValueError):
        PolyTrig({(0, SIN, 0): 1})


def test_winding_function():
    lift = WindingFunction.from_fourier(2, Fraction(1, 3), {1: (1, 0)})
    assert lift.winding == 2
    assert lift.periodic == TrigSeries(Fraction(1, 3), {1: (1, 0)})
    assert WindingFunction.from_polytrig(t * 3 + sin(1)).winding == 3
    assert WindingFunction.from_polytrig(cos(4)).winding == 0
    with pytest.raises(ValueError):
        WindingFunction(1, PolyTrig.monomial(2))
    with pytest.raises(ValueError):
        WindingFunction.from_polytrig(PolyTrig.monomial(2))
    with pytest.raises(ValueError):
        WindingFunction.from_polytrig(t * half)


def test_parse_harmonics_merges_duplicates():
    harmonics = parse_harmonics(
        [{"k": 2, "sin": "1"}, {"k": 2, "cos": "1/2"}, {"k": 1, "sin": "-3"}]
    )
    assert harmonics == {2: (1, half), 1: (-3, 0)}
    with pytest.raises(InputParseError):
        parse_harmonics([{"k": 0, "sin": "1"}])
    with pytest.raises(InputParseError):
        parse_harmonics([{"sin": "1"}])


def test_polytrig_json():
    f = t * PI + sin(3, Fraction(-2, 7)) + cos(1, 1, power=2)
    assert parse_polytrig(polytrig_to_json(f)) == f
    with pytest.raises(InputParseError):
        parse_polytrig({"power": 0})
    with pytest.raises(InputParseError):
        parse_polytrig({"terms": [{"power": 1}, {"power": 1}]})
