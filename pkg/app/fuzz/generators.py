"""Seeded random generators for the property suites and tests.

Every generator takes a ``random.Random`` so that a seed fixes the whole case
sequence.
"""

import random
from fractions import Fraction
from itertools import combinations
from typing import Optional, Sequence, Tuple

from app.bicomplex import COVER, BiCochain, bicochain
from app.config import config
from app.deligne import DeligneCochain
from app.nerve import Cochain, Nerve, Ring
from app.scalars import ExactScalar
from app.spark import CircleSpark0
from app.trigpoly import COS, ONE_KIND, SIN, PolyTrig


def random_rational(rng: random.Random, bits: Optional[int] = None) -> Fraction:
    bound = 2 ** (bits or config.fuzz.coefficient_bits)
    return Fraction(rng.randint(-bound, bound), rng.randint(1, bound))


def random_scalar(rng: random.Random, max_pi_degree: int = 4, bits: int = 32) -> ExactScalar:
    """A random element of Q(pi) with numerator and denominator of pi-degree <= max_pi_degree."""
    num = [random_rational(rng, bits) for _ in range(rng.randint(1, max_pi_degree + 1))]
    den = [random_rational(rng, bits) for _ in range(rng.randint(1, max_pi_degree + 1))]
    if not any(den):
        den = [Fraction(1)]
    return ExactScalar.from_coefficients(num, den)


def random_polytrig(
    rng: random.Random,
    max_power: Optional[int] = None,
    max_harmonic: Optional[int] = None,
    terms: int = 4,
    bits: int = 8,
) -> PolyTrig:
    max_power = config.fuzz.max_power if max_power is None else max_power
    max_harmonic = max_harmonic or config.fuzz.max_harmonic
    coeffs = {}
    for _ in range(rng.randint(1, terms)):
        kind = rng.choice((ONE_KIND, SIN, COS))
        k = 0 if kind == ONE_KIND else rng.randint(1, max_harmonic)
        coeffs[(rng.randint(0, max_power), kind, k)] = random_rational(rng, bits)
    return PolyTrig(coeffs)


def random_spark0(
    rng: random.Random,
    max_harmonic: Optional[int] = None,
    bits: Optional[int] = None,
    max_winding: int = 5,
    harmonic_count: int = 3,
) -> CircleSpark0:
    max_harmonic = max_harmonic or config.fuzz.max_harmonic
    ks = rng.sample(range(1, max_harmonic + 1), rng.randint(0, min(harmonic_count, max_harmonic)))
    return CircleSpark0(
        rng.randint(-max_winding, max_winding),
        random_rational(rng, bits),
        {k: (random_rational(rng, bits), random_rational(rng, bits)) for k in ks},
    )


def random_nerve(rng: random.Random, max_vertices: int = 6, max_dimension: int = 3) -> Nerve:
    n = rng.randint(3, max_vertices)
    simplices = []
    for _ in range(rng.randint(2, n + 3)):
        size = rng.randint(2, min(max_dimension + 1, n))
        simplices.append(tuple(sorted(rng.sample(range(n), size))))
    return Nerve(n, simplices)


def random_cochain(
    rng: random.Random, nerve: Nerve, degree: int, bits: int = 6, density: float = 0.7
) -> Cochain:
    values = {
        simplex: random_rational(rng, bits)
        for simplex in nerve.of_degree(degree)
        if rng.random() < density
    }
    return Cochain(nerve, degree, values, Ring.Q)


def random_integer_cochain(rng: random.Random, degree: int = 1, bound: int = 5) -> Cochain:
    """Integer cochain on the circle nerve."""
    values = {s: rng.randint(-bound, bound) for s in COVER.nerve.of_degree(degree)}
    return Cochain(COVER.nerve, degree, values, Ring.Z)


_BIDEGREES_BY_TOTAL = {0: ((0, 0),), 1: ((0, 1), (1, 0)), 2: ((1, 1),)}


def random_bicochain(
    rng: random.Random,
    total_degree: Optional[int] = None,
    bidegrees: Optional[Sequence[Tuple[int, int]]] = None,
    max_power: int = 2,
    max_harmonic: int = 3,
    terms: int = 2,
) -> BiCochain:
    """A BiCochain of one total degree (random unless given) with small sections."""
    if bidegrees is None:
        if total_degree is None:
            total_degree = rng.randint(0, 2)
        bidegrees = _BIDEGREES_BY_TOTAL[total_degree]
    result = BiCochain()
    for p, q in bidegrees:
        sections = tuple(
            random_polytrig(rng, max_power, max_harmonic, terms) for _ in range(3)
        )
        result = result + bicochain(p, q, sections)
    return result


def random_deligne_cochain(
    rng: random.Random,
    level: int,
    total_degree: Optional[int] = None,
    max_power: int = 2,
    max_harmonic: int = 3,
    terms: int = 2,
) -> DeligneCochain:
    if total_degree is None:
        total_degree = rng.randint(0, level + 1)
    components = {}
    for r in (0, 1):
        column = total_degree - r
        if not 0 <= column <= level:
            continue
        simplices = COVER.simplices(r)
        if column == 0:
            values = {s: rng.randint(-5, 5) for s in simplices}
        else:
            values = {
                s: random_polytrig(rng, max_power, max_harmonic, terms) for s in simplices
            }
        components[(r, column)] = Cochain(COVER.nerve, r, values, Ring.Z if column == 0 else Ring.Q)
    return DeligneCochain(level, components)


def torus_nerve() -> Nerve:
    """Seven-vertex triangulation of the torus."""
    triangles = []
    for i in range(7):
        triangles.append(tuple(sorted((i, (i + 1) % 7, (i + 3) % 7))))
        triangles.append(tuple(sorted((i, (i + 2) % 7, (i + 3) % 7))))
    return Nerve(7, triangles)


def sphere_nerve(dimension: int) -> Tuple[Nerve, dict]:
    """Boundary of the (dimension+1)-simplex with its oriented fundamental cycle."""
    vertices = tuple(range(dimension + 2))
    facets = list(combinations(vertices, dimension + 1))
    cycle = {}
    for m in range(dimension + 2):
        face = vertices[:m] + vertices[m + 1 :]
        cycle[face] = -1 if m % 2 else 1
    return Nerve(dimension + 2, facets), cycle
