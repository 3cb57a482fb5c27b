"""Generic Čech cochains on an abstract nerve.

A nerve is a finite simplicial complex given as data.  Cochains are sparse:
a missing simplex means the value zero, so the module never needs to know the
zero element of the coefficient ring.  Coefficients only need ``+``, unary
``-`` and ``*``; that covers ``int``, ``Fraction``, ``ExactScalar``, floats and
``PolyTrig``.
"""

from enum import Enum
from fractions import Fraction
from itertools import combinations
from typing import Any, Callable, Dict, Iterable, List, Mapping, Optional, Tuple

import sympy

from app.exceptions import DegreeError, InputParseError, NonCocycleError
from app.scalars import CircleNumber, ExactScalar, parse_rational, parse_scalar, scalar_to_json


Simplex = Tuple[int, ...]


class Ring(str, Enum):
    """Coefficient rings understood by the file formats"""

    Z = "Z"
    Q = "Q"
    QPI = "QPi"
    FLOAT = "float"


def _add(x, y):
    if x is None:
        return y
    if y is None:
        return x
    return x + y


def _faces(simplex: Simplex) -> List[Simplex]:
    return [simplex[:m] + simplex[m + 1 :] for m in range(len(simplex))]


class Nerve:
    """An abstract simplicial complex on vertices 0..vertex_count-1."""

    __slots__ = ("vertex_count", "simplices", "_by_degree")

    def __init__(self, vertex_count: int, simplices: Iterable[Iterable[int]]):
        if vertex_count < 1:
            raise ValueError("a nerve needs at least one vertex")
        closed = {(v,) for v in range(vertex_count)}
        for simplex in simplices:
            simplex = tuple(simplex)
            if list(simplex) != sorted(set(simplex)):
                raise ValueError(f"simplex {simplex} is not strictly increasing")
            if simplex and (simplex[0] < 0 or simplex[-1] >= vertex_count):
                raise ValueError(f"simplex {simplex} uses a vertex outside the nerve")
            for size in range(1, len(simplex) + 1):
                closed.update(combinations(simplex, size))
        by_degree: Dict[int, List[Simplex]] = {}
        for simplex in closed:
            by_degree.setdefault(len(simplex) - 1, []).append(simplex)
        object.__setattr__(self, "vertex_count", vertex_count)
        object.__setattr__(self, "simplices", frozenset(closed))
        object.__setattr__(
            self, "_by_degree", {r: tuple(sorted(s)) for r, s in by_degree.items()}
        )

    def __setattr__(self, name, value):
        raise AttributeError("Nerve is immutable")

    @property
    def dimension(self) -> int:
        return max(self._by_degree)

    def of_degree(self, degree: int) -> Tuple[Simplex, ...]:
        return self._by_degree.get(degree, ())

    def __contains__(self, simplex) -> bool:
        return tuple(simplex) in self.simplices

    def __eq__(self, other):
        if not isinstance(other, Nerve):
            return NotImplemented
        return self.vertex_count == other.vertex_count and self.simplices == other.simplices

    def __hash__(self):
        return hash((self.vertex_count, self.simplices))

    def __repr__(self):
        return f"Nerve(vertices={self.vertex_count}, dimension={self.dimension})"


def triangle_nerve() -> Nerve:
    """Nerve of the three-arc cover of the circle: a hollow triangle."""
    return Nerve(3, [(0, 1), (1, 2), (0, 2)])


class Cochain:
    """A sparse Čech r-cochain; absent simplices carry zero."""

    __slots__ = ("nerve", "degree", "values", "ring")

    def __init__(
        self,
        nerve: Nerve,
        degree: int,
        values: Optional[Mapping[Simplex, Any]] = None,
        ring: Ring = Ring.Q,
    ):
        if degree < 0:
            raise DegreeError(f"cochain degree must be >= 0, got {degree}")
        cleaned = {}
        for simplex, value in (values or {}).items():
            simplex = tuple(simplex)
            if len(simplex) != degree + 1 or simplex not in nerve:
                raise DegreeError(f"{simplex} is not a {degree}-simplex of the nerve")
            if value:
                cleaned[simplex] = value
        object.__setattr__(self, "nerve", nerve)
        object.__setattr__(self, "degree", degree)
        object.__setattr__(self, "values", dict(sorted(cleaned.items())))
        object.__setattr__(self, "ring", Ring(ring))

    def __setattr__(self, name, value):
        raise AttributeError("Cochain is immutable")

    def __getitem__(self, simplex) -> Any:
        return self.values.get(tuple(simplex))

    def _check_compatible(self, other: "Cochain"):
        if self.nerve != other.nerve:
            raise DegreeError("cochains live on different nerves")
        if self.degree != other.degree:
            raise DegreeError(f"cannot add cochains of degrees {self.degree} and {other.degree}")

    def __add__(self, other: "Cochain") -> "Cochain":
        self._check_compatible(other)
        values = dict(self.values)
        for simplex, value in other.values.items():
            values[simplex] = _add(values.get(simplex), value)
        return Cochain(self.nerve, self.degree, values, self.ring)

    def __neg__(self) -> "Cochain":
        return Cochain(
            self.nerve, self.degree, {s: -v for s, v in self.values.items()}, self.ring
        )

    def __sub__(self, other: "Cochain") -> "Cochain":
        return self + (-other)

    def scale(self, factor) -> "Cochain":
        return Cochain(
            self.nerve, self.degree, {s: v * factor for s, v in self.values.items()}, self.ring
        )

    def map(self, function: Callable[[Any], Any], ring: Optional[Ring] = None) -> "Cochain":
        return Cochain(
            self.nerve,
            self.degree,
            {s: function(v) for s, v in self.values.items()},
            ring or self.ring,
        )

    def is_zero(self) -> bool:
        return not self.values

    def __eq__(self, other):
        if not isinstance(other, Cochain):
            return NotImplemented
        return (
            self.nerve == other.nerve
            and self.degree == other.degree
            and self.values == other.values
        )

    def __hash__(self):
        return hash((self.degree, tuple(self.values.items())))

    def __repr__(self):
        return f"Cochain(degree={self.degree}, values={self.values})"


def zero_cochain(nerve: Nerve, degree: int, ring: Ring = Ring.Q) -> Cochain:
    return Cochain(nerve, degree, {}, ring)


def cech_delta(c: Cochain) -> Cochain:
    """(δc)(i0..i_{r+1}) = Σ_m (-1)^m c(i0..î_m..i_{r+1})."""
    values = {}
    for simplex in c.nerve.of_degree(c.degree + 1):
        total = None
        for m, face in enumerate(_faces(simplex)):
            value = c[face]
            if value is None:
                continue
            total = _add(total, value if m % 2 == 0 else -value)
        if total is not None:
            values[simplex] = total
    return Cochain(c.nerve, c.degree + 1, values, c.ring)


def cech_cup(a: Cochain, b: Cochain) -> Cochain:
    """Front-face / back-face product (a∪b)(i0..i_{r+s}) = a(i0..i_r)·b(i_r..i_{r+s})."""
    if a.nerve != b.nerve:
        raise DegreeError("cochains live on different nerves")
    if a.ring != b.ring:
        raise DegreeError(f"coefficient rings differ: {a.ring.value} and {b.ring.value}")
    r, s = a.degree, b.degree
    values = {}
    for simplex in a.nerve.of_degree(r + s):
        front, back = a[simplex[: r + 1]], b[simplex[r:]]
        if front is not None and back is not None:
            values[simplex] = front * back
    return Cochain(a.nerve, r + s, values, a.ring)


def is_cocycle(c: Cochain) -> bool:
    return cech_delta(c).is_zero()


# bigraded cochains

Product = Callable[[Any, int, Any, int], Optional[Tuple[int, Any]]]
Restrict = Callable[[Any, Simplex, Simplex], Any]
Differential = Callable[[Any, int], Optional[Tuple[int, Any]]]


def _identity_restrict(value, face: Simplex, simplex: Simplex):
    return value


class BigradedCochain:
    """Cochains indexed by (Čech degree r, grading j); the grading is a form or column degree."""

    __slots__ = ("nerve", "components")

    def __init__(self, nerve: Nerve, components: Optional[Mapping[Tuple[int, int], Cochain]] = None):
        cleaned = {}
        for (r, j), cochain in (components or {}).items():
            if cochain.degree != r:
                raise DegreeError(
                    f"component ({r}, {j}) holds a cochain of Čech degree {cochain.degree}"
                )
            if cochain.nerve != nerve:
                raise DegreeError("component lives on a different nerve")
            if not cochain.is_zero():
                cleaned[(r, j)] = cochain
        object.__setattr__(self, "nerve", nerve)
        object.__setattr__(self, "components", dict(sorted(cleaned.items())))

    def __setattr__(self, name, value):
        raise AttributeError("BigradedCochain is immutable")

    def component(self, r: int, j: int) -> Cochain:
        return self.components.get((r, j)) or zero_cochain(self.nerve, r)

    def degrees(self) -> set:
        return {r + j for r, j in self.components}

    def __add__(self, other: "BigradedCochain") -> "BigradedCochain":
        components = dict(self.components)
        for key, cochain in other.components.items():
            components[key] = components[key] + cochain if key in components else cochain
        return BigradedCochain(self.nerve, components)

    def __neg__(self) -> "BigradedCochain":
        return BigradedCochain(self.nerve, {k: -c for k, c in self.components.items()})

    def __sub__(self, other: "BigradedCochain") -> "BigradedCochain":
        return self + (-other)

    def is_zero(self) -> bool:
        return not self.components

    def __eq__(self, other):
        if not isinstance(other, BigradedCochain):
            return NotImplemented
        return self.nerve == other.nerve and self.components == other.components

    def __hash__(self):
        return hash(tuple(self.components.items()))

    def __repr__(self):
        return f"BigradedCochain({self.components})"


def graded_cup(
    a: BigradedCochain,
    b: BigradedCochain,
    product: Product,
    restrict: Restrict = _identity_restrict,
) -> BigradedCochain:
    """Signed front/back cup of bigraded cochains.

    ``product(x, j, y, k)`` resolves the coefficient product of a grading-j
    value against a grading-k value, returning ``(grading, value)`` or ``None``
    when it vanishes.  Each term carries the sign (-1)**(j*s) where s is the
    Čech degree of the right factor.  Front and back values are moved onto the
    full simplex by ``restrict(value, face, simplex)`` before multiplying.
    """
    if a.nerve != b.nerve:
        raise DegreeError("cochains live on different nerves")
    nerve = a.nerve
    accumulated: Dict[Tuple[int, int], Dict[Simplex, Any]] = {}
    for (r, j), left in a.components.items():
        for (s, k), right in b.components.items():
            sign = -1 if (j * s) % 2 else 1
            for simplex in nerve.of_degree(r + s):
                front_face, back_face = simplex[: r + 1], simplex[r:]
                front, back = left[front_face], right[back_face]
                if front is None or back is None:
                    continue
                result = product(
                    restrict(front, front_face, simplex), j,
                    restrict(back, back_face, simplex), k,
                )
                if result is None:
                    continue
                grading, value = result
                if sign < 0:
                    value = -value
                bucket = accumulated.setdefault((r + s, grading), {})
                bucket[simplex] = _add(bucket.get(simplex), value)
    return BigradedCochain(
        nerve,
        {(r, g): Cochain(nerve, r, values) for (r, g), values in accumulated.items()},
    )


def bigraded_delta(c: BigradedCochain, restrict: Restrict = _identity_restrict) -> BigradedCochain:
    """Čech differential applied to every component, with face restriction."""
    nerve = c.nerve
    components = {}
    for (r, j), cochain in c.components.items():
        values = {}
        for simplex in nerve.of_degree(r + 1):
            total = None
            for m, face in enumerate(_faces(simplex)):
                value = cochain[face]
                if value is None:
                    continue
                value = restrict(value, face, simplex)
                total = _add(total, value if m % 2 == 0 else -value)
            if total is not None:
                values[simplex] = total
        components[(r + 1, j)] = Cochain(nerve, r + 1, values)
    return BigradedCochain(nerve, components)


def bigraded_D(
    c: BigradedCochain,
    differential: Differential,
    restrict: Restrict = _identity_restrict,
) -> BigradedCochain:
    """Total differential δ + (-1)^r d, where ``differential(x, j)`` returns (j', dx) or None."""
    result = bigraded_delta(c, restrict)
    vertical = {}
    for (r, j), cochain in c.components.items():
        for simplex, value in cochain.values.items():
            image = differential(value, j)
            if image is None:
                continue
            grading, value = image
            if r % 2:
                value = -value
            bucket = vertical.setdefault((r, grading), {})
            bucket[simplex] = _add(bucket.get(simplex), value)
    return result + BigradedCochain(
        c.nerve, {(r, g): Cochain(c.nerve, r, v) for (r, g), v in vertical.items()}
    )


# chains and pairing

Chain = Mapping[Simplex, int]


def chain_boundary(chain: Chain) -> Dict[Simplex, int]:
    boundary: Dict[Simplex, int] = {}
    for simplex, coefficient in chain.items():
        for m, face in enumerate(_faces(tuple(simplex))):
            boundary[face] = boundary.get(face, 0) + (-coefficient if m % 2 else coefficient)
    return {face: c for face, c in boundary.items() if c}


def is_cycle(chain: Chain) -> bool:
    return not chain_boundary(chain)


def pair_cycle(c: Cochain, chain: Chain):
    """Evaluate a cochain on a formal integer chain of simplices of the same degree."""
    total = 0
    for simplex, coefficient in chain.items():
        simplex = tuple(simplex)
        if len(simplex) != c.degree + 1:
            raise DegreeError(
                f"cannot pair a {c.degree}-cochain with the simplex {simplex}"
            )
        value = c[simplex]
        if value is not None:
            total = total + value * coefficient
    return total


def _is_integral(value) -> bool:
    if isinstance(value, int):
        return True
    if isinstance(value, Fraction):
        return value.denominator == 1
    return hasattr(value, "is_integer") and value.is_integer()


def _rational_cochain(c: Cochain, name: str) -> Cochain:
    values = {}
    for simplex, value in c.values.items():
        if isinstance(value, ExactScalar) and value.is_rational:
            value = value.rational()
        elif isinstance(value, bool) or not isinstance(value, (int, Fraction)):
            raise DegreeError(f"{name} must take rational values, got {value} on {simplex}")
        values[simplex] = Fraction(value)
    return Cochain(c.nerve, c.degree, values, Ring.Q)


def flat_bundle_product(r: Cochain, b10: Cochain, cycle: Chain) -> CircleNumber:
    """Pair r ∪ b10 with a fundamental cycle, mod Z.

    r is an integer cocycle of degree n-1 and b10 the constant transition data
    of a flat bundle, i.e. a rational 1-cochain whose coboundary is integral.
    The cycle is a formal integer combination of n-simplices.
    """
    if b10.degree != 1:
        raise DegreeError(f"flat bundle data must be a 1-cochain, got degree {b10.degree}")
    if r.degree < 0 or any(len(s) != r.degree + 2 for s in cycle):
        raise DegreeError(
            f"a degree-{r.degree} class pairs with {r.degree + 1}-simplices"
        )
    r = _rational_cochain(r, "r")
    b10 = _rational_cochain(b10, "b10")
    if not all(_is_integral(v) for v in r.values.values()):
        raise NonCocycleError("r must be integer valued")
    if not is_cocycle(r):
        raise NonCocycleError("r is not a cocycle")
    if not all(_is_integral(v) for v in cech_delta(b10).values.values()):
        raise NonCocycleError("δb10 is not integer valued; b10 is not flat bundle data")
    if not is_cycle(cycle):
        raise NonCocycleError("the evaluation chain is not a cycle")
    missing = [s for s in cycle if tuple(s) not in r.nerve]
    if missing:
        raise NonCocycleError(f"cycle uses simplices outside the nerve: {missing}")
    cup = cech_cup(r, b10)
    return CircleNumber(Fraction(pair_cycle(cup, cycle)))


# linear algebra over Q


def _delta_matrix(nerve: Nerve, degree: int) -> sympy.Matrix:
    """Matrix of δ: C^degree -> C^(degree+1), rows indexed by (degree+1)-simplices."""
    columns = {s: i for i, s in enumerate(nerve.of_degree(degree))}
    rows = nerve.of_degree(degree + 1)
    matrix = sympy.zeros(len(rows), len(columns))
    for i, simplex in enumerate(rows):
        for m, face in enumerate(_faces(simplex)):
            matrix[i, columns[face]] += -1 if m % 2 else 1
    return matrix


def _to_sympy(value) -> sympy.Rational:
    value = Fraction(value)
    return sympy.Rational(value.numerator, value.denominator)


def _from_sympy(value) -> Fraction:
    value = sympy.Rational(value)
    return Fraction(int(value.p), int(value.q))


def solve_coboundary(target: Cochain) -> Optional[Cochain]:
    """Some x with δx = target over Q, or None when target is not a coboundary."""
    nerve, degree = target.nerve, target.degree
    if target.is_zero():
        return zero_cochain(nerve, max(degree - 1, 0))
    if degree == 0:
        return None
    sources = nerve.of_degree(degree - 1)
    rows = nerve.of_degree(degree)
    matrix = _delta_matrix(nerve, degree - 1)
    rhs = sympy.Matrix([_to_sympy(target[s] or 0) for s in rows])
    try:
        solution, parameters = matrix.gauss_jordan_solve(rhs)
    except ValueError:
        return None
    solution = solution.subs({p: 0 for p in parameters})
    return Cochain(
        nerve,
        degree - 1,
        {s: _from_sympy(solution[i]) for i, s in enumerate(sources)},
        Ring.Q,
    )


def cocycle_basis(nerve: Nerve, degree: int) -> List[Cochain]:
    """A Q-basis of the degree-r cocycles."""
    sources = nerve.of_degree(degree)
    if not sources:
        return []
    matrix = _delta_matrix(nerve, degree)
    if matrix.rows == 0:
        vectors = [sympy.eye(len(sources))[:, i] for i in range(len(sources))]
    else:
        vectors = matrix.nullspace()
    return [
        Cochain(nerve, degree, {s: _from_sympy(v[i]) for i, s in enumerate(sources)}, Ring.Q)
        for v in vectors
    ]


def cohomology_graded_commutator(
    a: Cochain, b: Cochain
) -> Tuple[Cochain, Optional[Cochain]]:
    """a∪b - (-1)^(rs) b∪a together with a coboundary witness x (δx equals it) if one exists."""
    if not (is_cocycle(a) and is_cocycle(b)):
        raise NonCocycleError("graded commutativity is a statement about cocycles")
    a_q, b_q = a.map(Fraction, Ring.Q), b.map(Fraction, Ring.Q)
    commutator = cech_cup(a_q, b_q)
    swapped = cech_cup(b_q, a_q)
    commutator = commutator - swapped if (a.degree * b.degree) % 2 == 0 else commutator + swapped
    return commutator, solve_coboundary(commutator)


# serialisation

_RING_PARSERS = {
    Ring.Z: lambda v: int(parse_rational(v)),
    Ring.Q: parse_rational,
    Ring.QPI: parse_scalar,
    Ring.FLOAT: float,
}


def parse_nerve(data: dict) -> Nerve:
    try:
        return Nerve(int(data["vertices"]), [tuple(s) for s in data.get("simplices", [])])
    except (KeyError, TypeError, ValueError) as e:
        raise InputParseError(f"invalid nerve description: {e}") from e


def parse_cochain(data: dict, nerve: Nerve) -> Cochain:
    try:
        degree = int(data["degree"])
        ring = Ring(data.get("ring", "Q"))
    except (KeyError, TypeError, ValueError) as e:
        raise InputParseError(f"invalid cochain header: {e}") from e
    parse_value = _RING_PARSERS[ring]
    values = {}
    for entry in data.get("values", []):
        try:
            simplex = tuple(int(v) for v in entry["simplex"])
            value = parse_value(entry["value"])
        except (KeyError, TypeError, ValueError) as e:
            raise InputParseError(f"invalid cochain entry {entry!r}") from e
        if ring is Ring.Z and parse_rational(entry["value"]).denominator != 1:
            raise InputParseError(f"non-integer value in a Z cochain: {entry!r}")
        values[simplex] = _add(values.get(simplex), value)
    return Cochain(nerve, degree, values, ring)


def parse_cycle(data: list) -> Dict[Simplex, int]:
    chain: Dict[Simplex, int] = {}
    for entry in data:
        try:
            simplex = tuple(int(v) for v in entry["simplex"])
            coefficient = int(entry.get("coefficient", 1))
        except (KeyError, TypeError, ValueError) as e:
            raise InputParseError(f"invalid cycle entry {entry!r}") from e
        chain[simplex] = chain.get(simplex, 0) + coefficient
    return chain


def _value_to_json(value, ring: Ring):
    if ring is Ring.QPI:
        return scalar_to_json(value)
    if ring is Ring.FLOAT:
        return float(value)
    value = Fraction(value)
    return str(value.numerator) if value.denominator == 1 else f"{value.numerator}/{value.denominator}"


def cochain_to_json(c: Cochain) -> dict:
    return {
        "degree": c.degree,
        "ring": c.ring.value,
        "values": [
            {"simplex": list(s), "value": _value_to_json(v, c.ring)}
            for s, v in c.values.items()
        ],
    }
