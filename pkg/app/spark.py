"""Smooth hypersparks on the circle.

Degree-0 classes are circle-valued functions, recorded by the Fourier data of
a lift f(t) = N t + C + Σ (A_k sin 2πkt + B_k cos 2πkt) normalised so that
f(0) lies in [0, 1).  Degree-1 classes are R/Z, reached from a cocycle in
C^0(U, E^1) ⊕ C^1(U, E^0) by integrating over the fundamental cycle of the
nerve.
"""

from typing import Dict, Mapping, Optional, Tuple, Union

import numpy as np

from app.bicomplex import (
    COVER,
    BiCochain,
    bicochain,
    bicx_cup,
    circle_d,
    circle_delta,
    global_section,
    integer_cochain_to_bicochain,
    is_global,
    total_D,
)
from app.exceptions import DegreeError, InputParseError, NonCocycleError
from app.logger import logger
from app.nerve import Cochain, Ring, pair_cycle, zero_cochain
from app.schema import ValidationReport
from app.scalars import (
    PI,
    ZERO,
    CircleNumber,
    ExactScalar,
    ScalarLike,
    circle_reduce,
    parse_rational,
    parse_scalar,
    scalar_to_json,
)
from app.trigpoly import (
    PolyTrig,
    WindingFunction,
    parse_harmonics,
    pt_antiderivative,
    pt_derivative,
    pt_eval_float,
    pt_eval_integer,
)


# oriented fundamental cycle of the triangle nerve: U12 + U23 - U13
FUNDAMENTAL_CYCLE = {(0, 1): 1, (1, 2): 1, (0, 2): -1}


class CircleSpark0:
    """Canonical degree-0 spark: winding N, constant C, harmonics k -> (A_k, B_k)."""

    __slots__ = ("winding", "constant", "harmonics")

    def __init__(
        self,
        winding: int = 0,
        constant: ScalarLike = 0,
        harmonics: Optional[Mapping[int, Tuple[ScalarLike, ScalarLike]]] = None,
    ):
        lift = WindingFunction.from_fourier(winding, constant, harmonics)
        periodic = lift.periodic
        value_at_zero = pt_eval_integer(lift.body, 0)
        shift = value_at_zero.floor()
        if shift:
            logger.debug(f"canonical shift of spark constant by {-shift}")
        object.__setattr__(self, "winding", int(winding))
        object.__setattr__(self, "constant", periodic.constant - shift)
        object.__setattr__(self, "harmonics", periodic.harmonics)

    def __setattr__(self, name, value):
        raise AttributeError("CircleSpark0 is immutable")

    @classmethod
    def zero(cls) -> "CircleSpark0":
        return cls()

    @property
    def lift(self) -> WindingFunction:
        return WindingFunction.from_fourier(self.winding, self.constant, self.harmonics)

    @property
    def body(self) -> PolyTrig:
        return self.lift.body

    def value_at_zero(self) -> ExactScalar:
        return pt_eval_integer(self.body, 0)

    def is_constant(self) -> bool:
        return not self.winding and not self.harmonics

    def __eq__(self, other):
        if not isinstance(other, CircleSpark0):
            return NotImplemented
        return spark0_eq(self, other)

    def __hash__(self):
        return hash((self.winding, self.constant, tuple(self.harmonics.items())))

    def __repr__(self):
        return (
            f"CircleSpark0(N={self.winding}, C={self.constant}, "
            f"harmonics={ {k: (str(a), str(b)) for k, (a, b) in self.harmonics.items()} })"
        )


class SparkTriple:
    """A spark (a, e, r) with D a = e - r on the circle cover."""

    __slots__ = ("a", "e", "r")

    def __init__(self, a: BiCochain, e: BiCochain, r: Cochain):
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "e", e)
        object.__setattr__(self, "r", r)

    def __setattr__(self, name, value):
        raise AttributeError("SparkTriple is immutable")

    @property
    def degree(self) -> int:
        return self.r.degree - 1

    def __repr__(self):
        return f"SparkTriple(a={self.a}, e={self.e}, r={self.r})"


class Spark1Cocycle:
    """Degree-1 spark a01 + a10 with δ(a01) = d(a10)."""

    __slots__ = ("cochain",)

    def __init__(self, cochain: BiCochain):
        extra = set(cochain.components) - {(0, 1), (1, 0)}
        if extra:
            raise NonCocycleError(f"degree-1 spark has stray components {sorted(extra)}")
        mismatch = circle_delta(_only(cochain, 0, 1)) - circle_d(_only(cochain, 1, 0))
        if not mismatch.is_zero():
            raise NonCocycleError(f"δ(s01) ≠ d(s10): difference {mismatch}")
        object.__setattr__(self, "cochain", cochain)

    def __setattr__(self, name, value):
        raise AttributeError("Spark1Cocycle is immutable")

    @classmethod
    def from_sections(cls, s01, s10) -> "Spark1Cocycle":
        return cls(bicochain(0, 1, s01) + bicochain(1, 0, s10))

    @classmethod
    def zero(cls) -> "Spark1Cocycle":
        return cls(BiCochain())

    @property
    def s01(self) -> Tuple[PolyTrig, ...]:
        return self.cochain.sections(0, 1)

    @property
    def s10(self) -> Tuple[PolyTrig, ...]:
        return self.cochain.sections(1, 0)

    def to_triple(self) -> SparkTriple:
        return SparkTriple(self.cochain, BiCochain(), zero_cochain(COVER.nerve, 2, Ring.Z))

    def __add__(self, other: "Spark1Cocycle") -> "Spark1Cocycle":
        return Spark1Cocycle(self.cochain + other.cochain)

    def __eq__(self, other):
        if not isinstance(other, Spark1Cocycle):
            return NotImplemented
        return self.cochain == other.cochain

    def __hash__(self):
        return hash(self.cochain)

    def __repr__(self):
        return f"Spark1Cocycle(s01={self.s01}, s10={self.s10})"


def _only(c: BiCochain, p: int, q: int) -> BiCochain:
    return BiCochain({(p, q): c.component(p, q)})


def canonicalize0(f: WindingFunction) -> CircleSpark0:
    periodic = f.periodic
    return CircleSpark0(f.winding, periodic.constant, periodic.harmonics)


def spark0_eq(x: CircleSpark0, y: CircleSpark0) -> bool:
    return (
        x.winding == y.winding
        and x.constant == y.constant
        and x.harmonics == y.harmonics
    )


def spark_from_data(s: CircleSpark0) -> SparkTriple:
    """a = the lift on every arc, e = f' dt, r = -δa = (0, 0, -N)."""
    body = s.body
    a = global_section(body, 0)
    e = global_section(pt_derivative(body), 1)
    r = Cochain(COVER.nerve, 1, {COVER.SEAM: -s.winding}, Ring.Z)
    return SparkTriple(a, e, r)


def validate_spark(t: SparkTriple) -> ValidationReport:
    report = ValidationReport()
    k = t.degree
    try:
        degree = t.a.total_degree()
    except DegreeError as e:
        return report.fail(str(e))
    if degree is not None and degree != k:
        report.fail(f"a has total degree {degree}, r has Čech degree {t.r.degree}")
    stray = set(t.e.components) - {(0, k + 1)}
    if stray:
        report.fail(f"e has components outside bidegree (0, {k + 1}): {sorted(stray)}")
    elif not is_global(t.e, k + 1):
        report.fail("e is not a global form")
    if t.r.ring is not Ring.Z or not all(isinstance(v, int) for v in t.r.values.values()):
        report.fail("r is not integer valued")
        return report
    if not circle_d(t.e).is_zero():
        report.fail("de ≠ 0")
    discrepancy = total_D(t.a) - (t.e - integer_cochain_to_bicochain(t.r))
    if not discrepancy.is_zero():
        report.fail(f"spark equation D a = e - r fails by {discrepancy}")
    return report


def delta1(t: Union[SparkTriple, Spark1Cocycle]) -> BiCochain:
    """Curvature; zero for top-degree sparks."""
    if isinstance(t, Spark1Cocycle):
        return BiCochain()
    return t.e


def delta2(t: Union[SparkTriple, Spark1Cocycle]) -> int:
    """Characteristic class in H^1(S^1, Z) = Z, normalised so that the spark of N t gives N."""
    if isinstance(t, Spark1Cocycle) or t.r.degree != 1:
        return 0
    return int(pair_cycle(t.r, FUNDAMENTAL_CYCLE))


def product_engine(x: CircleSpark0, y: CircleSpark0) -> Spark1Cocycle:
    """Representative a∪f + (-1)^(k+1) r∪b of the product, k = 0."""
    tx, ty = spark_from_data(x), spark_from_data(y)
    representative = bicx_cup(tx.a, ty.e) - bicx_cup(integer_cochain_to_bicochain(tx.r), ty.a)
    return Spark1Cocycle(representative)


def _seam_constants(c: Spark1Cocycle) -> Tuple[ExactScalar, ...]:
    primitives = bicochain(0, 0, tuple(pt_antiderivative(f) for f in c.s01))
    w = c.cochain.component(1, 0) - circle_delta(primitives).component(1, 0)
    constants = []
    for simplex in COVER.OVERLAPS:
        section = w[simplex] or PolyTrig()
        if pt_derivative(section):
            raise NonCocycleError(
                f"s10 - δF is not constant on overlap {COVER.label(simplex)}: {section}"
            )
        constants.append(section.coefficient(0))
    return tuple(constants)


def reduce_to_circle(c: Spark1Cocycle) -> CircleNumber:
    """Integrate a degree-1 spark over the circle, mod Z."""
    w12, w23, w13 = _seam_constants(c)
    return circle_reduce(w12 + w23 - w13)


def product_closed_form(x: CircleSpark0, y: CircleSpark0) -> CircleNumber:
    """NN'/2 + CN' - C'N + Σ (A'_k B_k - A_k B'_k) π k mod Z."""
    n, n_ = x.winding, y.winding
    value = ExactScalar(n * n_) / 2 + x.constant * n_ - y.constant * n
    for k in sorted(set(x.harmonics) | set(y.harmonics)):
        a, b = x.harmonics.get(k, (ZERO, ZERO))
        a_, b_ = y.harmonics.get(k, (ZERO, ZERO))
        value = value + (a_ * b - a * b_) * PI * k
    return circle_reduce(value)


def product_distributes(x: CircleSpark0, y: CircleSpark0) -> Dict[str, CircleNumber]:
    """Bilinear expansion of the product into products of basis sparks.

    Each entry is the product of one basis piece of x with one of y; their sum
    is the full product.  Pieces that pair to zero are omitted.
    """
    terms: Dict[str, CircleNumber] = {}
    pieces_x = _basis_pieces(x)
    pieces_y = _basis_pieces(y)
    for name_x, piece_x in pieces_x.items():
        for name_y, piece_y in pieces_y.items():
            value = product_closed_form(piece_x, piece_y)
            if value != CircleNumber(0):
                terms[f"{name_x}*{name_y}"] = value
    return terms


def _basis_pieces(x: CircleSpark0) -> Dict[str, CircleSpark0]:
    pieces: Dict[str, CircleSpark0] = {}
    if x.winding:
        pieces["winding"] = CircleSpark0(winding=x.winding)
    if x.constant:
        pieces["constant"] = CircleSpark0(constant=x.constant)
    for k, (a, b) in x.harmonics.items():
        if a:
            pieces[f"sin{k}"] = CircleSpark0(harmonics={k: (a, ZERO)})
        if b:
            pieces[f"cos{k}"] = CircleSpark0(harmonics={k: (ZERO, b)})
    return pieces


def spark1_from_global_form(value: Union[CircleNumber, ScalarLike]) -> Spark1Cocycle:
    """The representative c dt of a top-degree class."""
    if isinstance(value, CircleNumber):
        value = value.value
    form = PolyTrig.constant(value)
    return Spark1Cocycle(global_section(form, 1))


def global_form_witness(c: Spark1Cocycle) -> Tuple[ExactScalar, BiCochain]:
    """(v, b) with c - v dt = D b exactly; v is the unreduced integral of c."""
    w12, w23, w13 = _seam_constants(c)
    v = w12 + w23 - w13
    t = PolyTrig.monomial(1)
    shifted = tuple(pt_antiderivative(f) - t * v for f in c.s01)
    # the residual seam constants (w12, w23, w13 + v) are δ of (0, w12, w12 + w23)
    kappa = (PolyTrig(), PolyTrig.constant(w12), PolyTrig.constant(w12 + w23))
    b = bicochain(0, 0, tuple(f + k for f, k in zip(shifted, kappa)))
    return v, b


def circle_map(x: CircleSpark0, t: Union[float, np.ndarray]):
    """The circle-valued function exp(2πi f(t)) of a degree-0 class."""
    return np.exp(2j * np.pi * pt_eval_float(x.body, t))


# serialisation


def parse_spark0(data: dict) -> CircleSpark0:
    if not isinstance(data, dict):
        raise InputParseError(f"spark data must be an object, got {data!r}")
    winding = parse_rational(data.get("winding", "0"))
    if winding.denominator != 1:
        raise InputParseError(f"winding must be an integer, got {winding}")
    return CircleSpark0(
        int(winding),
        parse_scalar(data.get("constant", "0")),
        parse_harmonics(data.get("harmonics", [])),
    )


def spark0_to_json(s: CircleSpark0) -> dict:
    return {
        "winding": str(s.winding),
        "constant": scalar_to_json(s.constant),
        "harmonics": [
            {"k": k, "sin": scalar_to_json(a), "cos": scalar_to_json(b)}
            for k, (a, b) in s.harmonics.items()
        ],
    }
