"""Smooth Deligne cohomology of the circle through the Čech total complex.

A level-p cochain has columns indexed by complex degree c: column 0 holds
integers, column c >= 1 holds (c-1)-forms, so the column index is the degree
in the truncated complex Z -> E^0 -> ... -> E^(p-1).  Components are keyed by
(Čech degree r, column c) and the total degree is r + c.
"""

from fractions import Fraction
from typing import Dict, Mapping, Optional, Tuple, Union

from app.bicomplex import COVER, BiCochain, restrict as restrict_section, total_D
from app.exceptions import DegreeError, NonCocycleError
from app.logger import logger
from app.nerve import BigradedCochain, Cochain, Ring, bigraded_D, graded_cup
from app.schema import StructuralReport
from app.scalars import CircleNumber, circle_reduce
from app.spark import (
    CircleSpark0,
    Spark1Cocycle,
    SparkTriple,
    canonicalize0,
    delta1,
    delta2,
    global_form_witness,
    product_closed_form,
    product_engine,
    reduce_to_circle,
    spark1_from_global_form,
    spark_from_data,
)
from app.trigpoly import PolyTrig, WindingFunction, pt_derivative, pt_integrate_period, pt_mul


LEVELS = (1, 2)

SparkClass = Union[CircleSpark0, Spark1Cocycle]


def _restrict(value, face, simplex):
    if isinstance(value, PolyTrig):
        return restrict_section(value, face, simplex)
    return value


class DeligneCochain(BigradedCochain):
    """Element of M*_p = Tot(C*(U, Z_D(p))), keyed by (Čech degree, column)."""

    __slots__ = ("level",)

    def __init__(self, level: int, components: Optional[Mapping[Tuple[int, int], Cochain]] = None):
        if level not in LEVELS:
            raise DegreeError(f"Deligne level must be 1 or 2 on the circle, got {level}")
        cleaned = {}
        for (r, c), cochain in (components or {}).items():
            if cochain.is_zero():
                continue
            if not 0 <= c <= level:
                raise DegreeError(f"column {c} does not exist at level {level}")
            for value in cochain.values.values():
                expected = int if c == 0 else PolyTrig
                if not isinstance(value, expected):
                    raise TypeError(
                        f"column {c} holds {expected.__name__} values, got {type(value).__name__}"
                    )
            cleaned[(r, c)] = cochain
        super().__init__(COVER.nerve, cleaned)
        object.__setattr__(self, "level", level)

    @classmethod
    def of(cls, level: int, cochain: BigradedCochain) -> "DeligneCochain":
        return cls(level, cochain.components)

    @classmethod
    def from_parts(
        cls, level: int, z_part: Optional[Cochain] = None, form_parts: Optional[BiCochain] = None
    ) -> "DeligneCochain":
        """Assemble from an integer cochain and a BiCochain; form degree q goes to column q + 1."""
        components: Dict[Tuple[int, int], Cochain] = {}
        if z_part is not None and not z_part.is_zero():
            components[(z_part.degree, 0)] = z_part.map(int, Ring.Z)
        for (p, q), cochain in (form_parts.components if form_parts else {}).items():
            components[(p, q + 1)] = cochain
        return cls(level, components)

    @property
    def z_part(self) -> Dict[int, Cochain]:
        return {r: c for (r, col), c in self.components.items() if col == 0}

    @property
    def form_parts(self) -> BiCochain:
        return BiCochain({(r, c - 1): cochain for (r, c), cochain in self.components.items() if c})

    def total_degree(self) -> Optional[int]:
        degrees = self.degrees()
        if len(degrees) > 1:
            raise DegreeError(f"Deligne cochain mixes total degrees {sorted(degrees)}")
        return next(iter(degrees), None)

    def _check_level(self, other: "DeligneCochain"):
        if self.level != other.level:
            raise DegreeError(f"cannot combine levels {self.level} and {other.level}")

    def __add__(self, other):
        self._check_level(other)
        return DeligneCochain.of(self.level, super().__add__(other))

    def __neg__(self):
        return DeligneCochain.of(self.level, super().__neg__())

    def __sub__(self, other):
        return self + (-other)

    def __eq__(self, other):
        if not isinstance(other, DeligneCochain):
            return NotImplemented
        return self.level == other.level and self.components == other.components

    def __hash__(self):
        return hash((self.level, tuple(self.components.items())))

    def __repr__(self):
        return f"DeligneCochain(level={self.level}, components={self.components})"


def _column_differential(level: int):
    def differential(value, column: int):
        if column == 0:
            return 1, PolyTrig.constant(value)
        if column < level:
            return column + 1, pt_derivative(value)
        return None

    return differential


def deligne_D(c: DeligneCochain) -> DeligneCochain:
    """δ + (-1)^r i on Z, δ + (-1)^r d on E^j (j < p-1), δ alone on E^(p-1)."""
    return DeligneCochain.of(c.level, bigraded_D(c, _column_differential(c.level), _restrict))


def is_closed(c: DeligneCochain) -> bool:
    return deligne_D(c).is_zero()


class DeligneClass:
    """A D_p-closed cochain of total degree p with its spark image as canonical form."""

    __slots__ = ("level", "representative", "spark")

    def __init__(self, representative: DeligneCochain):
        degree = representative.total_degree()
        if degree not in (None, representative.level):
            raise DegreeError(
                f"level-{representative.level} classes have total degree {representative.level}, got {degree}"
            )
        object.__setattr__(self, "level", representative.level)
        object.__setattr__(self, "representative", representative)
        object.__setattr__(self, "spark", deligne_to_spark(representative))

    def __setattr__(self, name, value):
        raise AttributeError("DeligneClass is immutable")

    def __eq__(self, other):
        if not isinstance(other, DeligneClass):
            return NotImplemented
        if self.level != other.level:
            return False
        if self.level == 1:
            return self.spark == other.spark
        return reduce_to_circle(self.spark) == reduce_to_circle(other.spark)

    def __hash__(self):
        if self.level == 1:
            return hash((1, self.spark))
        return hash((2, reduce_to_circle(self.spark)))

    def __repr__(self):
        return f"DeligneClass(level={self.level}, spark={self.spark})"


def spark_to_deligne(s: Union[SparkClass, SparkTriple], level: Optional[int] = None) -> DeligneCochain:
    """ã = (-1)^p r + a for a spark with D a = e - r."""
    if isinstance(s, CircleSpark0):
        s = spark_from_data(s)
    elif isinstance(s, Spark1Cocycle):
        s = s.to_triple()
    p = s.degree + 1
    if level is not None and level != p:
        raise DegreeError(f"a degree-{s.degree} spark lives at level {p}, not {level}")
    z_part = s.r if p % 2 == 0 else -s.r
    return DeligneCochain.from_parts(p, z_part, s.a)


def deligne_to_spark(c: DeligneCochain) -> SparkClass:
    """Strip the integer part of a closed cochain and return the spark class of the form part."""
    if not is_closed(c):
        raise NonCocycleError("deligne_to_spark needs a D_p-closed cochain")
    degree = c.total_degree()
    if degree not in (None, c.level):
        raise DegreeError(f"expected total degree {c.level}, got {degree}")
    a = c.form_parts
    if c.level == 1:
        sections = a.sections(0, 0)
        # closedness makes the U1 section a global lift with winding z13 - z12 - z23
        lift = WindingFunction.from_polytrig(sections[0])
        return canonicalize0(lift)
    return Spark1Cocycle(a)


def _beilinson(level_y: int):
    def product(x, cx: int, y, cy: int):
        if cx == 0:
            if cy == 0:
                return 0, x * y
            return cy, y.scale(x)
        if cy == level_y:
            return cx + level_y, pt_mul(x, pt_derivative(y))
        return None

    return product


def beilinson_product(x, cx: int, y, cy: int, level_y: int = 1):
    """Sheaf-level product: x·y if deg x = 0; x ∧ dy if deg x > 0 and y is top; else 0."""
    return _beilinson(level_y)(x, cx, y, cy)


def deligne_cochain_cup(x: DeligneCochain, y: DeligneCochain) -> DeligneCochain:
    """Čech-level cup with the sign (-1)^(c·s), c the column of x and s the Čech degree of y."""
    target = x.level + y.level
    if target not in LEVELS:
        raise DegreeError(
            f"levels {x.level} and {y.level} multiply into level {target}, "
            "which vanishes identically on the circle"
        )
    product = graded_cup(x, y, _beilinson(y.level), _restrict)
    return DeligneCochain.of(target, product)


def deligne_cup(x: DeligneClass, y: DeligneClass) -> DeligneClass:
    if (x.level, y.level) != (1, 1):
        raise DegreeError(
            f"levels {x.level} and {y.level}: only level 1 × level 1 products are nonzero on the circle"
        )
    product = deligne_cochain_cup(x.representative, y.representative)
    if not is_closed(product):
        raise NonCocycleError("Deligne cup of closed cochains is not closed")
    return DeligneClass(product)


def deligne_leibniz_check(x: DeligneCochain, y: DeligneCochain) -> bool:
    """D(x∪y) = Dx∪y + (-1)^|x| x∪Dy on cochains of pure total degree."""
    degree = x.total_degree() or 0
    lhs = deligne_D(deligne_cochain_cup(x, y))
    right = deligne_cochain_cup(x, deligne_D(y))
    rhs = deligne_cochain_cup(deligne_D(x), y) + (right if degree % 2 == 0 else -right)
    return lhs == rhs


def deligne_product_value(x: CircleSpark0, y: CircleSpark0) -> CircleNumber:
    """The Deligne pipeline: cup the images, map back and integrate."""
    cup = deligne_cup(DeligneClass(spark_to_deligne(x)), DeligneClass(spark_to_deligne(y)))
    return reduce_to_circle(cup.spark)


def ring_agreement_check(x: CircleSpark0, y: CircleSpark0) -> bool:
    deligne_value = deligne_product_value(x, y)
    closed_value = product_closed_form(x, y)
    agree = deligne_value == closed_value
    if not agree:
        logger.warning(f"ring disagreement: deligne {deligne_value}, closed form {closed_value}")
    return agree


def _curvature(x: CircleSpark0) -> PolyTrig:
    return delta1(spark_from_data(x)).sections(0, 1)[0]


def structural_checks(level: int, samples=None) -> StructuralReport:
    """Structure-theorem consequences on the circle, checked on sample classes.

    ``samples`` is a list of CircleSpark0 for level 1 and of pairs of
    CircleSpark0 (whose products give level-2 classes) for level 2.
    """
    if level not in LEVELS:
        raise DegreeError(f"structural checks exist for levels 1 and 2, got {level}")
    report = StructuralReport(level=level)
    if level == 1:
        samples = samples if samples is not None else _default_level1_samples()
        flat_ok, value_ok, period_ok, kernel_ok = True, True, True, True
        for x in samples:
            curvature = _curvature(x)
            flat = not curvature
            flat_ok &= flat == x.is_constant()
            if flat:
                value_ok &= CircleNumber(x.constant) == CircleNumber(x.value_at_zero())
            period = pt_integrate_period(curvature)
            characteristic = delta2(spark_from_data(x))
            period_ok &= period.is_integer() and period == characteristic
            kernel_ok &= (characteristic == 0) == (x.winding == 0)
        report.add("flat classes are the constants", flat_ok)
        report.add("flat class value is its constant mod Z", value_ok)
        report.add("curvature has integral period equal to the characteristic class", period_ok)
        report.add("kernel of the characteristic class is the periodic classes", kernel_ok)
        surjective = all(
            delta2(spark_from_data(CircleSpark0(winding=n))) == n
            and _curvature(CircleSpark0(winding=n)) == PolyTrig.constant(n)
            for n in range(-5, 6)
        )
        report.add("curvature onto integral-period forms via winding sparks", surjective)
        return report

    samples = samples if samples is not None else _default_level2_samples()
    collapse_ok, global_ok, determined_ok = True, True, True
    for x, y in samples:
        cocycle = product_engine(x, y)
        collapse_ok &= delta1(cocycle).is_zero() and delta2(cocycle) == 0
        v, b = global_form_witness(cocycle)
        global_ok &= (cocycle.cochain - spark1_from_global_form(v).cochain) == total_D(b)
        determined_ok &= (
            DeligneClass(spark_to_deligne(cocycle))
            == DeligneClass(spark_to_deligne(spark1_from_global_form(circle_reduce(v))))
        )
    report.add("curvature and characteristic class vanish in top degree", collapse_ok)
    report.add("every class is the class of a global 1-form", global_ok)
    report.add("a class is determined by its value in R/Z", determined_ok)
    return report


def _default_level1_samples():
    return [
        CircleSpark0(),
        CircleSpark0(constant=Fraction(1, 3)),
        CircleSpark0(constant=Fraction(7, 2)),
        CircleSpark0(winding=2, constant=Fraction(1, 4)),
        CircleSpark0(harmonics={1: (1, 0)}),
        CircleSpark0(winding=-1, harmonics={3: (Fraction(1, 2), Fraction(-2, 5))}),
    ]


def _default_level2_samples():
    return [
        (CircleSpark0(winding=1), CircleSpark0(winding=1)),
        (CircleSpark0(constant=Fraction(1, 3)), CircleSpark0(winding=2)),
        (CircleSpark0(harmonics={1: (1, 0)}), CircleSpark0(harmonics={1: (0, 1)})),
        (
            CircleSpark0(winding=-2, constant=Fraction(2, 7), harmonics={2: (1, Fraction(1, 3))}),
            CircleSpark0(winding=3, harmonics={1: (Fraction(-1, 2), 2), 2: (0, 1)}),
        ),
    ]
