"""Seeded property suites.

Each case function draws its inputs from the shared generator and returns
``(passed, description)``; the description is only built for reporting the
first counterexample.
"""

import random
import time
from typing import Callable, Dict, Tuple

from app.bicomplex import bicx_cup, integer_cochain_to_bicochain, total_D
from app.deligne import (
    DeligneClass,
    deligne_D,
    deligne_leibniz_check,
    deligne_product_value,
    deligne_to_spark,
    spark_to_deligne,
)
from app.fuzz.generators import (
    random_bicochain,
    random_cochain,
    random_deligne_cochain,
    random_integer_cochain,
    random_nerve,
    random_spark0,
)
from app.logger import logger
from app.nerve import cech_cup, cech_delta, cocycle_basis, cohomology_graded_commutator
from app.schema import FuzzSuite, SuiteResult
from app.scalars import CircleNumber
from app.spark import (
    CircleSpark0,
    Spark1Cocycle,
    product_closed_form,
    product_engine,
    reduce_to_circle,
)


CaseResult = Tuple[bool, str]


def _sign(degree: int) -> int:
    return -1 if degree % 2 else 1


def leibniz_case(rng: random.Random) -> CaseResult:
    """D(a∪b) = Da∪b + (-1)^|a| a∪Db on the circle bicomplex, and the Čech analogue."""
    degree = rng.randint(0, 2)
    a = random_bicochain(rng, degree)
    b = random_bicochain(rng)
    lhs = total_D(bicx_cup(a, b))
    rhs = bicx_cup(total_D(a), b) + bicx_cup(a, total_D(b)).scale(_sign(degree))
    if lhs != rhs:
        return False, f"bicomplex a={a!r} b={b!r}"
    nerve = random_nerve(rng)
    r, s = rng.randint(0, 2), rng.randint(0, 2)
    x, y = random_cochain(rng, nerve, r), random_cochain(rng, nerve, s)
    lhs = cech_delta(cech_cup(x, y))
    rhs = cech_cup(cech_delta(x), y) + cech_cup(x, cech_delta(y)).scale(_sign(r))
    if lhs != rhs:
        return False, f"nerve={nerve!r} x={x!r} y={y!r}"
    return True, ""


def assoc_case(rng: random.Random) -> CaseResult:
    a, b, c = (random_bicochain(rng) for _ in range(3))
    if bicx_cup(bicx_cup(a, b), c) != bicx_cup(a, bicx_cup(b, c)):
        return False, f"bicomplex a={a!r} b={b!r} c={c!r}"
    nerve = random_nerve(rng)
    x, y, z = (random_cochain(rng, nerve, rng.randint(0, 1)) for _ in range(3))
    if cech_cup(cech_cup(x, y), z) != cech_cup(x, cech_cup(y, z)):
        return False, f"nerve={nerve!r} x={x!r} y={y!r} z={z!r}"
    return True, ""


def commut_case(rng: random.Random) -> CaseResult:
    """Class-level antisymmetry of the degree-0 product, and graded commutativity in Čech cohomology."""
    x, y = random_spark0(rng), random_spark0(rng)
    forward = reduce_to_circle(product_engine(x, y))
    backward = reduce_to_circle(product_engine(y, x))
    if forward != -backward:
        return False, f"x={x!r} y={y!r}: {forward} vs -({backward})"
    nerve = random_nerve(rng)
    r, s = rng.randint(0, 2), rng.randint(0, 2)
    basis_r, basis_s = cocycle_basis(nerve, r), cocycle_basis(nerve, s)
    if basis_r and basis_s:
        a, b = rng.choice(basis_r), rng.choice(basis_s)
        _, witness = cohomology_graded_commutator(a, b)
        if witness is None:
            return False, f"nerve={nerve!r} a={a!r} b={b!r}: commutator is not a coboundary"
    return True, ""


def roundtrip_case(rng: random.Random) -> CaseResult:
    x = random_spark0(rng)
    if deligne_to_spark(spark_to_deligne(x)) != x:
        return False, f"level 1 spark {x!r}"
    cocycle = product_engine(random_spark0(rng), random_spark0(rng))
    back = deligne_to_spark(spark_to_deligne(cocycle))
    if reduce_to_circle(back) != reduce_to_circle(cocycle):
        return False, f"level 2 cocycle {cocycle!r}"
    return True, ""


def agreement_case(rng: random.Random) -> CaseResult:
    x, y = random_spark0(rng), random_spark0(rng)
    closed = product_closed_form(x, y)
    engine = reduce_to_circle(product_engine(x, y))
    deligne = deligne_product_value(x, y)
    if not (closed == engine == deligne):
        return False, f"x={x!r} y={y!r}: closed {closed}, engine {engine}, deligne {deligne}"
    return True, ""


def d2_case(rng: random.Random) -> CaseResult:
    a = random_bicochain(rng)
    if not total_D(total_D(a)).is_zero():
        return False, f"bicomplex {a!r}"
    level = rng.choice((1, 2))
    c = random_deligne_cochain(rng, level)
    if not deligne_D(deligne_D(c)).is_zero():
        return False, f"deligne {c!r}"
    if not deligne_leibniz_check(random_deligne_cochain(rng, 1), random_deligne_cochain(rng, 1)):
        return False, "deligne cup Leibniz"
    nerve = random_nerve(rng)
    x = random_cochain(rng, nerve, rng.randint(0, 2))
    if not cech_delta(cech_delta(x)).is_zero():
        return False, f"nerve={nerve!r} x={x!r}"
    return True, ""


def vanishing_case(rng: random.Random) -> CaseResult:
    x = random_spark0(rng)
    x = CircleSpark0(0, x.constant, x.harmonics)
    y = CircleSpark0(constant=random_spark0(rng).constant)
    engine = reduce_to_circle(product_engine(x, y))
    if engine != CircleNumber(0) or product_closed_form(x, y) != CircleNumber(0):
        return False, f"x={x!r} y={y!r}: {engine}"
    return True, ""


def represent_case(rng: random.Random) -> CaseResult:
    cocycle = product_engine(random_spark0(rng), random_spark0(rng))
    b = random_bicochain(rng, 0)
    n = random_integer_cochain(rng, 1)
    perturbed = Spark1Cocycle(cocycle.cochain + total_D(b) + integer_cochain_to_bicochain(n))
    if reduce_to_circle(perturbed) != reduce_to_circle(cocycle):
        return False, f"cocycle={cocycle!r} b={b!r} n={n!r}"
    if DeligneClass(spark_to_deligne(perturbed)) != DeligneClass(spark_to_deligne(cocycle)):
        return False, f"deligne classes differ for b={b!r} n={n!r}"
    return True, ""


SUITES: Dict[FuzzSuite, Callable[[random.Random], CaseResult]] = {
    FuzzSuite.LEIBNIZ: leibniz_case,
    FuzzSuite.ASSOC: assoc_case,
    FuzzSuite.COMMUT: commut_case,
    FuzzSuite.ROUNDTRIP: roundtrip_case,
    FuzzSuite.AGREEMENT: agreement_case,
    FuzzSuite.D2: d2_case,
    FuzzSuite.VANISHING: vanishing_case,
    FuzzSuite.REPRESENT: represent_case,
}


def run_suite(suite: FuzzSuite, cases: int, seed: int) -> SuiteResult:
    suite = FuzzSuite(suite)
    case = SUITES[suite]
    rng = random.Random(seed)
    result = SuiteResult(suite=suite, cases=cases, seed=seed)
    start = time.time()
    logger.info(f"running suite {suite.value}: {cases} cases, seed {seed}")
    for index in range(cases):
        passed, description = case(rng)
        result.completed = index + 1
        if not passed:
            result.passed = False
            result.counterexample = f"case {index}: {description}"
            logger.warning(f"suite {suite.value} failed at case {index}")
            break
    result.elapsed = time.time() - start
    logger.info(
        f"suite {suite.value} {'passed' if result.passed else 'failed'} "
        f"after {result.completed} cases in {result.elapsed:.2f}s"
    )
    return result
