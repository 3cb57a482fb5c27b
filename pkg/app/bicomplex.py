"""The Čech–de Rham bicomplex on the three-arc cover of the circle.

Arcs U1, U2, U3 are the vertices 0, 1, 2 of the triangle nerve.  Every section
is stored as a function of the lifted coordinate t.  U1 is parametrised near
t = 0 and U3 near t = 1, so on the seam overlap U13 a section coming from U1
is re-expressed as f(t - 1).  No other restriction changes the function.
"""

from typing import Dict, Mapping, NamedTuple, Optional, Tuple, Union

from app.exceptions import DegreeError, InputParseError
from app.nerve import (
    BigradedCochain,
    Cochain,
    Nerve,
    Simplex,
    bigraded_D,
    bigraded_delta,
    graded_cup,
    triangle_nerve,
)
from app.trigpoly import PolyTrig, parse_polytrig, polytrig_to_json, pt_derivative, pt_mul, pt_shift


class CircleCover:
    """Fixed combinatorics of the three-arc cover."""

    ARCS: Tuple[Simplex, ...] = ((0,), (1,), (2,))
    OVERLAPS: Tuple[Simplex, ...] = ((0, 1), (1, 2), (0, 2))
    SEAM: Simplex = (0, 2)
    LABELS: Dict[str, Simplex] = {
        "1": (0,),
        "2": (1,),
        "3": (2,),
        "12": (0, 1),
        "23": (1, 2),
        "13": (0, 2),
    }

    def __init__(self):
        self.nerve: Nerve = triangle_nerve()
        if self.nerve.of_degree(2):
            raise DegreeError("the circle cover must have no triple overlaps")

    @classmethod
    def label(cls, simplex: Simplex) -> str:
        return next(name for name, s in cls.LABELS.items() if s == tuple(simplex))

    @classmethod
    def simplices(cls, cech_degree: int) -> Tuple[Simplex, ...]:
        if cech_degree == 0:
            return cls.ARCS
        if cech_degree == 1:
            return cls.OVERLAPS
        return ()


COVER = CircleCover()


def restrict(section: PolyTrig, face: Simplex, simplex: Simplex) -> PolyTrig:
    """Re-express a section given on ``face`` in the coordinate of ``simplex``."""
    if tuple(face) == (0,) and tuple(simplex) == CircleCover.SEAM:
        return pt_shift(section, -1)
    return section


class LocalSection(NamedTuple):
    form_degree: int
    coefficient: PolyTrig


SectionData = Mapping[Union[str, Simplex], PolyTrig]


class BiCochain(BigradedCochain):
    """Element of ⊕ C^p(U, E^q), p, q ∈ {0, 1}, keyed by bidegree (p, q)."""

    __slots__ = ()

    def __init__(self, components: Optional[Mapping[Tuple[int, int], Union[Cochain, SectionData]]] = None):
        cochains = {}
        for (p, q), data in (components or {}).items():
            if isinstance(data, Cochain) and data.is_zero():
                continue
            if not isinstance(data, Cochain) and not any(data.values()):
                continue
            if p not in (0, 1) or q not in (0, 1):
                raise DegreeError(f"bidegree ({p}, {q}) does not exist on the circle cover")
            if not isinstance(data, Cochain):
                data = Cochain(
                    COVER.nerve,
                    p,
                    {
                        CircleCover.LABELS[key] if isinstance(key, str) else tuple(key): value
                        for key, value in data.items()
                    },
                )
            for value in data.values.values():
                if not isinstance(value, PolyTrig):
                    raise TypeError(f"sections must be PolyTrig, got {type(value).__name__}")
            cochains[(p, q)] = data
        super().__init__(COVER.nerve, cochains)

    @classmethod
    def of(cls, cochain: BigradedCochain) -> "BiCochain":
        return cls(cochain.components)

    def section(self, p: int, q: int, where: Union[str, Simplex]) -> LocalSection:
        simplex = CircleCover.LABELS[where] if isinstance(where, str) else tuple(where)
        return LocalSection(q, self.component(p, q)[simplex] or PolyTrig())

    def sections(self, p: int, q: int) -> Tuple[PolyTrig, ...]:
        """The three sections of a component, in cover order (arcs or 12, 23, 13)."""
        component = self.component(p, q)
        return tuple(component[s] or PolyTrig() for s in CircleCover.simplices(p))

    def total_degree(self) -> Optional[int]:
        degrees = self.degrees()
        if len(degrees) > 1:
            raise DegreeError(f"BiCochain mixes total degrees {sorted(degrees)}")
        return next(iter(degrees), None)

    def __add__(self, other):
        return BiCochain.of(super().__add__(other))

    def __neg__(self):
        return BiCochain.of(super().__neg__())

    def __sub__(self, other):
        return self + (-other)

    def scale(self, factor) -> "BiCochain":
        return BiCochain({key: c.scale(factor) for key, c in self.components.items()})


def bicochain(p: int, q: int, sections) -> BiCochain:
    """Single-component BiCochain from three sections (arcs, or overlaps 12, 23, 13)."""
    return BiCochain({(p, q): dict(zip(CircleCover.simplices(p), sections))})


def global_section(f: PolyTrig, form_degree: int = 0) -> BiCochain:
    """The same lifted function on all three arcs."""
    return bicochain(0, form_degree, (f, f, f))


def integer_cochain_to_bicochain(r: Cochain) -> BiCochain:
    """The inclusion of integer constants as locally constant functions."""
    if r.nerve != COVER.nerve:
        raise DegreeError("integer cochain does not live on the circle cover")
    return BiCochain({(r.degree, 0): r.map(PolyTrig.constant)})


def _differential(value: PolyTrig, form_degree: int):
    if form_degree == 0:
        return 1, pt_derivative(value)
    return None


def _wedge(x: PolyTrig, j: int, y: PolyTrig, k: int):
    if j + k > 1:
        return None
    return j + k, pt_mul(x, y)


def circle_delta(c: BiCochain) -> BiCochain:
    """Čech differential with the seam shift; (1, q) components map to zero."""
    return BiCochain.of(bigraded_delta(c, restrict))


def circle_d(c: BiCochain) -> BiCochain:
    """Exterior derivative on each section, raising the form degree."""
    return BiCochain(
        {
            (p, 1): component.map(pt_derivative)
            for (p, q), component in c.components.items()
            if q == 0
        }
    )


def total_D(c: BiCochain) -> BiCochain:
    """D = δ + (-1)^p d."""
    return BiCochain.of(bigraded_D(c, _differential, restrict))


def bicx_cup(a: BiCochain, b: BiCochain) -> BiCochain:
    """(a∪b)(i0..i_{r+s}) = (-1)^(js) a(i0..i_r) ∧ b(i_r..i_{r+s}) on the seam-aware cover."""
    return BiCochain.of(graded_cup(a, b, _wedge, restrict))


def is_global(c: BiCochain, form_degree: int) -> bool:
    """True when the (0, q) sections patch to a single function on the circle."""
    component = BiCochain({(0, form_degree): c.component(0, form_degree)})
    return circle_delta(component).is_zero()


# serialisation


def parse_bicochain(data: dict) -> BiCochain:
    if not isinstance(data, dict) or "components" not in data:
        raise InputParseError(f"BiCochain needs a 'components' list: {data!r}")
    components: Dict[Tuple[int, int], Dict[Simplex, PolyTrig]] = {}
    for entry in data["components"]:
        try:
            key = (int(entry["cech"]), int(entry["form"]))
            sections = entry.get("sections", {})
            parsed = {CircleCover.LABELS[label]: parse_polytrig(f) for label, f in sections.items()}
        except (KeyError, TypeError, ValueError) as e:
            raise InputParseError(f"invalid BiCochain component {entry!r}") from e
        if any(len(s) != key[0] + 1 for s in parsed):
            raise InputParseError(f"sections do not match Čech degree {key[0]}: {entry!r}")
        bucket = components.setdefault(key, {})
        for simplex, f in parsed.items():
            bucket[simplex] = bucket[simplex] + f if simplex in bucket else f
    try:
        return BiCochain(components)
    except DegreeError as e:
        raise InputParseError(str(e)) from e


def bicochain_to_json(c: BiCochain) -> dict:
    return {
        "components": [
            {
                "cech": p,
                "form": q,
                "sections": {
                    CircleCover.label(s): polytrig_to_json(f) for s, f in component.values.items()
                },
            }
            for (p, q), component in c.components.items()
        ]
    }
