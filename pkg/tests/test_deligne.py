from fractions import Fraction

import pytest

from app.bicomplex import COVER, bicochain, total_D
from app.deligne import (
    DeligneClass,
    DeligneCochain,
    beilinson_product,
    deligne_cochain_cup,
    deligne_cup,
    deligne_D,
    deligne_leibniz_check,
    deligne_product_value,
    deligne_to_spark,
    is_closed,
    ring_agreement_check,
    spark_to_deligne,
    structural_checks,
)
from app.exceptions import DegreeError, NonCocycleError
from app.fuzz.generators import random_bicochain, random_deligne_cochain, random_spark0
from app.nerve import Cochain, Ring
from app.scalars import PI, CircleNumber
from app.spark import (
    CircleSpark0,
    Spark1Cocycle,
    product_closed_form,
    product_engine,
    reduce_to_circle,
    spark1_from_global_form,
)
from app.trigpoly import PolyTrig, pt_derivative


t = PolyTrig.monomial(1)


def test_level_one_image_layout(mixed_spark):
    image = spark_to_deligne(mixed_spark)
    assert image.level == 1
    assert image.total_degree() == 1
    assert image.z_part[1].values == {(0, 2): 2}
    assert image.form_parts.sections(0, 0) == (mixed_spark.body,) * 3
    assert is_closed(image)


def test_level_two_image_has_no_integer_part():
    cocycle = product_engine(CircleSpark0(winding=1), CircleSpark0(harmonics={1: (1, 0)}))
    image = spark_to_deligne(cocycle)
    assert image.level == 2
    assert image.z_part == {}
    assert image.form_parts == cocycle.cochain
    assert is_closed(image)


def test_round_trip_at_level_one(rng):
    for _ in range(200):
        x = random_spark0(rng)
        assert deligne_to_spark(spark_to_deligne(x)) == x


def test_round_trip_at_level_two(rng):
    for _ in range(100):
        cocycle = product_engine(random_spark0(rng), random_spark0(rng))
        back = deligne_to_spark(spark_to_deligne(cocycle))
        assert back == cocycle
        assert reduce_to_circle(back) == reduce_to_circle(cocycle)


def test_seam_jump_in_the_integer_part_gives_the_winding():
    # closed cochain whose U1 section is t + 1/5; z carries the jump across the seam
    lift = t + Fraction(1, 5)
    z = Cochain(COVER.nerve, 1, {(0, 2): 1}, Ring.Z)
    c = DeligneCochain.from_parts(1, z, bicochain(0, 0, (lift, lift, lift)))
    assert is_closed(c)
    assert deligne_to_spark(c) == CircleSpark0(winding=1, constant=Fraction(1, 5))


def test_D_squares_to_zero(rng):
    for _ in range(300):
        level = rng.choice((1, 2))
        c = random_deligne_cochain(rng, level)
        assert deligne_D(deligne_D(c)).is_zero()


def test_truncation_at_the_top_column():
    top = DeligneCochain(1, {(0, 1): Cochain(COVER.nerve, 0, {(0,): t})})
    assert deligne_D(top).components.keys() == {(1, 1)}
    lower = DeligneCochain(2, {(0, 1): Cochain(COVER.nerve, 0, {(0,): t})})
    assert deligne_D(lower).component(0, 2).values == {(0,): PolyTrig.constant(1)}


def test_integer_column_maps_in_as_constants():
    c = DeligneCochain(1, {(0, 0): Cochain(COVER.nerve, 0, {(1,): 3}, Ring.Z)})
    image = deligne_D(c)
    assert image.component(0, 1).values == {(1,): PolyTrig.constant(3)}
    assert image.component(1, 0).values == {(0, 1): 3, (1, 2): -3}


def test_cochain_validation():
    with pytest.raises(DegreeError):
        DeligneCochain(3)
    with pytest.raises(DegreeError):
        DeligneCochain(1, {(0, 2): Cochain(COVER.nerve, 0, {(0,): t})})
    with pytest.raises(TypeError):
        DeligneCochain(1, {(0, 0): Cochain(COVER.nerve, 0, {(0,): t})})
    with pytest.raises(TypeError):
        DeligneCochain(2, {(1, 1): Cochain(COVER.nerve, 1, {(0, 1): 4}, Ring.Z)})
    with pytest.raises(DegreeError):
        DeligneCochain(1) + DeligneCochain(2)


def test_deligne_to_spark_needs_a_closed_cochain():
    c = DeligneCochain(1, {(0, 1): Cochain(COVER.nerve, 0, {(0,): t})})
    with pytest.raises(NonCocycleError):
        deligne_to_spark(c)


def test_beilinson_product_rule():
    f, g = t, PolyTrig.sin_k(1)
    assert beilinson_product(2, 0, 3, 0) == (0, 6)
    assert beilinson_product(2, 0, g, 1) == (1, g.scale(2))
    assert beilinson_product(f, 1, g, 1) == (2, f * pt_derivative(g))
    assert beilinson_product(f, 1, 3, 0) is None
    assert beilinson_product(f, 1, g, 1, level_y=2) is None


def test_cup_of_images_is_the_engine_cocycle(rng):
    for _ in range(20):
        x, y = random_spark0(rng), random_spark0(rng)
        cup = deligne_cochain_cup(spark_to_deligne(x), spark_to_deligne(y))
        assert cup == spark_to_deligne(product_engine(x, y))


def test_cup_levels():
    one = DeligneClass(spark_to_deligne(CircleSpark0(winding=1)))
    two = DeligneClass(spark_to_deligne(spark1_from_global_form(Fraction(1, 3))))
    with pytest.raises(DegreeError):
        deligne_cup(one, two)
    with pytest.raises(DegreeError):
        deligne_cochain_cup(two.representative, one.representative)
    assert deligne_cup(one, one).level == 2


def test_leibniz_on_cochains(rng):
    for _ in range(100):
        x = random_deligne_cochain(rng, 1)
        y = random_deligne_cochain(rng, 1)
        assert deligne_leibniz_check(x, y)


def test_ring_agreement(rng):
    for _ in range(200):
        x, y = random_spark0(rng), random_spark0(rng)
        assert deligne_product_value(x, y) == product_closed_form(x, y), (x, y)


def test_ring_agreement_check_examples():
    x = CircleSpark0(harmonics={2: (1, 0)})
    y = CircleSpark0(harmonics={2: (0, 1)})
    assert ring_agreement_check(x, y)
    assert deligne_product_value(x, y) == CircleNumber(-2 * PI)


def test_classes_ignore_representative_choice(rng):
    for _ in range(30):
        cocycle = product_engine(random_spark0(rng), random_spark0(rng))
        b = random_bicochain(rng, 0)
        perturbed = Spark1Cocycle(cocycle.cochain + total_D(b))
        assert DeligneClass(spark_to_deligne(perturbed)) == DeligneClass(spark_to_deligne(cocycle))
    one = DeligneClass(spark_to_deligne(spark1_from_global_form(Fraction(1, 3))))
    other = DeligneClass(spark_to_deligne(spark1_from_global_form(Fraction(4, 3))))
    assert one == other
    assert hash(one) == hash(other)


def test_spark_to_deligne_level_mismatch():
    with pytest.raises(DegreeError):
        spark_to_deligne(CircleSpark0(winding=1), level=2)


@pytest.mark.parametrize("level", [1, 2])
def test_structural_checks(level):
    report = structural_checks(level)
    assert report.passed, [c for c in report.checks if not c.passed]
    assert report.checks


def test_structural_checks_reject_other_levels():
    with pytest.raises(DegreeError):
        structural_checks(3)
