import pytest

from app.bicomplex import (
    COVER,
    BiCochain,
    CircleCover,
    bicochain,
    bicochain_to_json,
    bicx_cup,
    circle_d,
    circle_delta,
    global_section,
    integer_cochain_to_bicochain,
    is_global,
    parse_bicochain,
    restrict,
    total_D,
)
from app.exceptions import DegreeError, InputParseError
from app.fuzz.generators import random_bicochain, random_integer_cochain
from app.nerve import Cochain, Nerve, Ring, triangle_nerve
from app.trigpoly import PolyTrig, pt_derivative


t = PolyTrig.monomial(1)
ZERO = PolyTrig.zero()


def test_cover_combinatorics():
    assert COVER.nerve == triangle_nerve()
    assert CircleCover.label((0, 2)) == "13"
    assert CircleCover.simplices(1) == ((0, 1), (1, 2), (0, 2))
    assert CircleCover.simplices(2) == ()


def test_only_the_seam_shifts():
    f = t * 2 + PolyTrig.sin_k(1)
    assert restrict(f, (0,), (0, 2)) == t * 2 - 2 + PolyTrig.sin_k(1)
    assert restrict(f, (2,), (0, 2)) == f
    assert restrict(f, (0,), (0, 1)) == f


def test_delta_of_a_global_lift_is_the_winding_on_the_seam():
    lift = global_section(t * 3 + PolyTrig.cos_k(2), 0)
    assert circle_delta(lift).sections(1, 0) == (ZERO, ZERO, PolyTrig.constant(3))
    periodic = global_section(PolyTrig.cos_k(2), 0)
    assert circle_delta(periodic).is_zero()
    assert is_global(periodic, 0)
    assert not is_global(lift, 0)


def test_exterior_derivative_raises_form_degree():
    c = bicochain(0, 0, (t, PolyTrig.sin_k(1), ZERO))
    assert circle_d(c) == bicochain(0, 1, (PolyTrig.constant(1), pt_derivative(PolyTrig.sin_k(1)), ZERO))
    assert circle_d(bicochain(0, 1, (t, t, t))).is_zero()


def test_total_differential_signs():
    c = bicochain(1, 0, (t, ZERO, ZERO))
    assert total_D(c) == bicochain(1, 1, (PolyTrig.constant(-1), ZERO, ZERO))


def test_D_squares_to_zero(rng):
    for _ in range(100):
        c = random_bicochain(rng)
        assert total_D(total_D(c)).is_zero()


def test_leibniz_rule(rng):
    for _ in range(100):
        degree = rng.randint(0, 2)
        a, b = random_bicochain(rng, degree), random_bicochain(rng)
        sign = -1 if degree % 2 else 1
        expected = bicx_cup(total_D(a), b) + bicx_cup(a, total_D(b)).scale(sign)
        assert total_D(bicx_cup(a, b)) == expected


@pytest.mark.slow
def test_leibniz_rule_full_run(rng):
    for _ in range(500):
        degree = rng.randint(0, 2)
        a, b = random_bicochain(rng, degree), random_bicochain(rng)
        sign = -1 if degree % 2 else 1
        expected = bicx_cup(total_D(a), b) + bicx_cup(a, total_D(b)).scale(sign)
        assert total_D(bicx_cup(a, b)) == expected


def test_cup_is_associative(rng):
    for _ in range(100):
        a, b, c = (random_bicochain(rng) for _ in range(3))
        assert bicx_cup(bicx_cup(a, b), c) == bicx_cup(a, bicx_cup(b, c))


@pytest.mark.slow
def test_cup_is_associative_full_run(rng):
    for _ in range(300):
        a, b, c = (random_bicochain(rng) for _ in range(3))
        assert bicx_cup(bicx_cup(a, b), c) == bicx_cup(a, bicx_cup(b, c))


def test_cup_restricts_the_front_face_across_the_seam():
    a = bicochain(0, 0, (t, ZERO, ZERO))
    b = bicochain(1, 0, (ZERO, ZERO, PolyTrig.constant(1)))
    assert bicx_cup(a, b).sections(1, 0) == (ZERO, ZERO, t - 1)


def test_top_forms_wedge_to_zero():
    one_forms = bicochain(0, 1, (t, t, t))
    assert bicx_cup(one_forms, one_forms).is_zero()


def test_invalid_bidegrees():
    with pytest.raises(DegreeError):
        BiCochain({(0, 2): {"1": PolyTrig.constant(1)}})
    # zero data in a missing bidegree is dropped
    assert BiCochain({(2, 0): {}}).is_zero()
    with pytest.raises(TypeError):
        BiCochain({(0, 0): {"1": 3}})
    mixed = bicochain(0, 0, (t, t, t)) + bicochain(1, 1, (t, t, t))
    with pytest.raises(DegreeError):
        mixed.total_degree()


def test_sections_by_label():
    c = BiCochain({(1, 0): {"13": t, "12": PolyTrig.constant(2)}})
    assert c.section(1, 0, "13").coefficient == t
    assert c.section(1, 0, (1, 2)).coefficient == ZERO
    assert c.sections(1, 0) == (PolyTrig.constant(2), ZERO, t)
    assert c.total_degree() == 1


def test_integer_cochains_embed_as_constants(rng):
    n = random_integer_cochain(rng, 1)
    embedded = integer_cochain_to_bicochain(n)
    assert embedded.sections(1, 0) == tuple(PolyTrig.constant(n[s] or 0) for s in COVER.OVERLAPS)
    assert total_D(embedded).is_zero()
    with pytest.raises(DegreeError):
        integer_cochain_to_bicochain(Cochain(Nerve(4, [(0, 3)]), 0, {}, Ring.Z))


def test_json_round_trip(rng):
    c = random_bicochain(rng, 1)
    assert parse_bicochain(bicochain_to_json(c)) == c
    with pytest.raises(InputParseError):
        parse_bicochain({"components": [{"cech": 1, "form": 0, "sections": {"1": {"terms": []}}}]})
    with pytest.raises(InputParseError):
        parse_bicochain({})
