"""Exact calculus on sums of t**j times trigonometric series in sin/cos(2*pi*k*t).

A ``PolyTrig`` is stored sparsely over the basis ``t**j * b`` where ``b`` is
``1``, ``sin(2*pi*k*t)`` or ``cos(2*pi*k*t)``.  The basis is linearly
independent, so the sparse map is a unique representation and equality is
structural.
"""

from functools import lru_cache
from math import comb
from typing import Dict, Iterable, Iterator, List, Mapping, Optional, Tuple, Union

import numpy as np

from app.exceptions import EvaluationError, InputParseError
from app.scalars import PI, ZERO, ExactScalar, ScalarLike, parse_scalar, scalar_to_json


ONE_KIND = "1"
SIN = "sin"
COS = "cos"

BasisKey = Tuple[int, str, int]  # (power j, kind, harmonic k); k = 0 for kind "1"


def _trig_term(kind: str, k: int) -> List[Tuple[int, str, int]]:
    """Normalise sin/cos at a possibly non-positive harmonic to (sign, kind, k >= 0)."""
    if kind == SIN:
        if k == 0:
            return []
        return [(1, SIN, k)] if k > 0 else [(-1, SIN, -k)]
    if k == 0:
        return [(1, ONE_KIND, 0)]
    return [(1, COS, abs(k))]


@lru_cache(maxsize=None)
def _basis_product(a: Tuple[str, int], b: Tuple[str, int]) -> Tuple[Tuple[int, int, str, int], ...]:
    """Product of two trig basis functions as (numerator, denominator, kind, k) terms."""
    (kind_a, k_a), (kind_b, k_b) = a, b
    if kind_a == ONE_KIND:
        return ((1, 1, kind_b, k_b),)
    if kind_b == ONE_KIND:
        return ((1, 1, kind_a, k_a),)
    if kind_a == SIN and kind_b == SIN:
        raw = [(1, COS, k_a - k_b), (-1, COS, k_a + k_b)]
    elif kind_a == COS and kind_b == COS:
        raw = [(1, COS, k_a - k_b), (1, COS, k_a + k_b)]
    elif kind_a == SIN:
        raw = [(1, SIN, k_a + k_b), (1, SIN, k_a - k_b)]
    else:
        raw = [(1, SIN, k_a + k_b), (1, SIN, k_b - k_a)]
    terms = []
    for sign, kind, k in raw:
        for inner_sign, inner_kind, inner_k in _trig_term(kind, k):
            terms.append((sign * inner_sign, 2, inner_kind, inner_k))
    return tuple(terms)


class TrigSeries:
    """constant + sum_k (sin_k sin(2 pi k t) + cos_k cos(2 pi k t))"""

    __slots__ = ("constant", "harmonics")

    def __init__(
        self,
        constant: ScalarLike = 0,
        harmonics: Optional[Mapping[int, Tuple[ScalarLike, ScalarLike]]] = None,
    ):
        cleaned = {}
        for k, (sin_coeff, cos_coeff) in (harmonics or {}).items():
            if k < 1:
                raise ValueError(f"harmonic index must be >= 1, got {k}")
            sin_coeff, cos_coeff = ExactScalar(sin_coeff), ExactScalar(cos_coeff)
            if sin_coeff or cos_coeff:
                cleaned[k] = (sin_coeff, cos_coeff)
        object.__setattr__(self, "constant", ExactScalar(constant))
        object.__setattr__(self, "harmonics", dict(sorted(cleaned.items())))

    def __setattr__(self, name, value):
        raise AttributeError("TrigSeries is immutable")

    def __bool__(self):
        return bool(self.constant) or bool(self.harmonics)

    def __eq__(self, other):
        if not isinstance(other, TrigSeries):
            return NotImplemented
        return self.constant == other.constant and self.harmonics == other.harmonics

    def __hash__(self):
        return hash((self.constant, tuple(self.harmonics.items())))

    def __repr__(self):
        return f"TrigSeries(constant={self.constant}, harmonics={self.harmonics})"


class PolyTrig:
    """Sum_j t**j * TrigSeries_j with exact Q(pi) coefficients."""

    __slots__ = ("_coeffs", "_hash")

    def __init__(self, coeffs: Optional[Mapping[BasisKey, ScalarLike]] = None):
        cleaned: Dict[BasisKey, ExactScalar] = {}
        for (power, kind, k), value in (coeffs or {}).items():
            if power < 0:
                raise ValueError(f"t-power must be >= 0, got {power}")
            if kind == ONE_KIND:
                k = 0
            elif kind not in (SIN, COS) or k < 1:
                raise ValueError(f"invalid basis function {kind}({k})")
            value = ExactScalar(value)
            if value:
                cleaned[(power, kind, k)] = value
        object.__setattr__(self, "_coeffs", dict(sorted(cleaned.items(), key=_key_order)))
        object.__setattr__(self, "_hash", None)

    def __setattr__(self, name, value):
        raise AttributeError("PolyTrig is immutable")

    # constructors

    @classmethod
    def zero(cls) -> "PolyTrig":
        return cls()

    @classmethod
    def constant(cls, value: ScalarLike) -> "PolyTrig":
        return cls({(0, ONE_KIND, 0): value})

    @classmethod
    def monomial(cls, power: int, value: ScalarLike = 1) -> "PolyTrig":
        return cls({(power, ONE_KIND, 0): value})

    @classmethod
    def sin_k(cls, k: int, value: ScalarLike = 1, power: int = 0) -> "PolyTrig":
        return cls({(power, SIN, k): value})

    @classmethod
    def cos_k(cls, k: int, value: ScalarLike = 1, power: int = 0) -> "PolyTrig":
        return cls({(power, COS, k): value})

    @classmethod
    def from_terms(cls, terms: Mapping[int, TrigSeries]) -> "PolyTrig":
        coeffs: Dict[BasisKey, ExactScalar] = {}
        for power, series in terms.items():
            coeffs[(power, ONE_KIND, 0)] = series.constant
            for k, (sin_coeff, cos_coeff) in series.harmonics.items():
                coeffs[(power, SIN, k)] = sin_coeff
                coeffs[(power, COS, k)] = cos_coeff
        return cls(coeffs)

    # structure

    @property
    def coeffs(self) -> Dict[BasisKey, ExactScalar]:
        return dict(self._coeffs)

    def items(self) -> Iterator[Tuple[BasisKey, ExactScalar]]:
        return iter(self._coeffs.items())

    def coefficient(self, power: int, kind: str = ONE_KIND, k: int = 0) -> ExactScalar:
        return self._coeffs.get((power, kind, 0 if kind == ONE_KIND else k), ZERO)

    @property
    def terms(self) -> Dict[int, TrigSeries]:
        grouped: Dict[int, Dict] = {}
        for (power, kind, k), value in self._coeffs.items():
            entry = grouped.setdefault(power, {"constant": ZERO, "harmonics": {}})
            if kind == ONE_KIND:
                entry["constant"] = value
            else:
                sin_coeff, cos_coeff = entry["harmonics"].get(k, (ZERO, ZERO))
                entry["harmonics"][k] = (value, cos_coeff) if kind == SIN else (sin_coeff, value)
        return {
            power: TrigSeries(entry["constant"], entry["harmonics"])
            for power, entry in sorted(grouped.items())
        }

    @property
    def degree(self) -> int:
        """Highest t-power present, -1 for the zero function."""
        return max((power for power, _, _ in self._coeffs), default=-1)

    def is_periodic(self) -> bool:
        return self.degree <= 0

    def is_constant(self) -> bool:
        return all(key == (0, ONE_KIND, 0) for key in self._coeffs)

    def constant_value(self) -> ExactScalar:
        if not self.is_constant():
            raise ValueError("PolyTrig is not constant")
        return self.coefficient(0)

    # ring structure

    def __add__(self, other):
        if not isinstance(other, PolyTrig):
            try:
                other = PolyTrig.constant(other)
            except TypeError:
                return NotImplemented
        coeffs = dict(self._coeffs)
        for key, value in other._coeffs.items():
            coeffs[key] = coeffs.get(key, ZERO) + value
        return PolyTrig(coeffs)

    __radd__ = __add__

    def __neg__(self):
        return PolyTrig({key: -value for key, value in self._coeffs.items()})

    def __sub__(self, other):
        if not isinstance(other, PolyTrig):
            try:
                other = PolyTrig.constant(other)
            except TypeError:
                return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, factor: ScalarLike) -> "PolyTrig":
        factor = ExactScalar(factor)
        if not factor:
            return PolyTrig()
        return PolyTrig({key: value * factor for key, value in self._coeffs.items()})

    def __mul__(self, other):
        if isinstance(other, PolyTrig):
            return pt_mul(self, other)
        try:
            return self.scale(other)
        except TypeError:
            return NotImplemented

    __rmul__ = __mul__

    def __eq__(self, other):
        if isinstance(other, PolyTrig):
            return self._coeffs == other._coeffs
        try:
            return self == PolyTrig.constant(other)
        except TypeError:
            return NotImplemented

    def __hash__(self):
        if self._hash is None:
            object.__setattr__(self, "_hash", hash(tuple(self._coeffs.items())))
        return self._hash

    def __bool__(self):
        return bool(self._coeffs)

    def __repr__(self):
        return f"PolyTrig({self})"

    def __str__(self):
        if not self._coeffs:
            return "0"
        parts = []
        for (power, kind, k), value in self._coeffs.items():
            factors = [f"({value})"]
            if power == 1:
                factors.append("t")
            elif power > 1:
                factors.append(f"t^{power}")
            if kind != ONE_KIND:
                factors.append(f"{kind}(2π·{k}t)")
            parts.append("·".join(factors))
        return " + ".join(parts)


def _key_order(item):
    (power, kind, k), _ = item
    return (power, {ONE_KIND: 0, SIN: 1, COS: 2}[kind], k)


def pt_mul(f: PolyTrig, g: PolyTrig) -> PolyTrig:
    coeffs: Dict[BasisKey, ExactScalar] = {}
    for (power_f, kind_f, k_f), value_f in f.items():
        for (power_g, kind_g, k_g), value_g in g.items():
            product = value_f * value_g
            for num, den, kind, k in _basis_product((kind_f, k_f), (kind_g, k_g)):
                key = (power_f + power_g, kind, k)
                term = product * num if den == 1 else product * num / den
                coeffs[key] = coeffs.get(key, ZERO) + term
    return PolyTrig(coeffs)


def pt_derivative(f: PolyTrig) -> PolyTrig:
    coeffs: Dict[BasisKey, ExactScalar] = {}

    def accumulate(key: BasisKey, value: ExactScalar):
        coeffs[key] = coeffs.get(key, ZERO) + value

    for (power, kind, k), value in f.items():
        if power > 0:
            accumulate((power - 1, kind, k), value * power)
        if kind == SIN:
            accumulate((power, COS, k), value * 2 * k * PI)
        elif kind == COS:
            accumulate((power, SIN, k), -value * 2 * k * PI)
    return PolyTrig(coeffs)


@lru_cache(maxsize=4096)
def _primitive_basis(power: int, kind: str, k: int) -> PolyTrig:
    """Primitive of t**power * b with no added constant, by integration by parts."""
    if kind == ONE_KIND:
        return PolyTrig.monomial(power + 1, ExactScalar(1) / (power + 1))
    omega = 2 * k * PI
    if kind == SIN:
        # ∫ t^j sin = -t^j cos / ω + (j/ω) ∫ t^(j-1) cos
        result = PolyTrig.cos_k(k, -omega.inv(), power)
        if power:
            result = result + _primitive_basis(power - 1, COS, k).scale(power / omega)
        return result
    # ∫ t^j cos = t^j sin / ω - (j/ω) ∫ t^(j-1) sin
    result = PolyTrig.sin_k(k, omega.inv(), power)
    if power:
        result = result - _primitive_basis(power - 1, SIN, k).scale(power / omega)
    return result


def pt_antiderivative(f: PolyTrig) -> PolyTrig:
    """Primitive F with F' = f and zero constant term (the (0, "1", 0) coefficient)."""
    result = PolyTrig()
    for (power, kind, k), value in f.items():
        result = result + _primitive_basis(power, kind, k).scale(value)
    # primitives of basis functions never carry a t**0 constant
    return result


def pt_shift(f: PolyTrig, m: int) -> PolyTrig:
    """t -> f(t + m) for an integer m; trig factors are invariant."""
    if m == 0:
        return f
    coeffs: Dict[BasisKey, ExactScalar] = {}
    for (power, kind, k), value in f.items():
        for i in range(power + 1):
            key = (i, kind, k)
            coeffs[key] = coeffs.get(key, ZERO) + value * (comb(power, i) * m ** (power - i))
    return PolyTrig(coeffs)


def pt_eval_integer(f: PolyTrig, t: int) -> ExactScalar:
    """Exact value at an integer point, where sin vanishes and cos is 1."""
    if isinstance(t, bool) or not isinstance(t, int):
        raise EvaluationError(
            f"exact evaluation is only available at integers, got {t!r}"
        )
    total = ZERO
    for (power, kind, _), value in f.items():
        if kind == SIN:
            continue
        total = total + value * t**power
    return total


def pt_eval_float(f: PolyTrig, t: Union[float, np.ndarray]) -> Union[float, np.ndarray]:
    """Floating evaluation; accepts scalars or numpy arrays of points."""
    points = np.asarray(t, dtype=float)
    total = np.zeros_like(points)
    for (power, kind, k), value in f.items():
        term = value.to_float() * points**power
        if kind == SIN:
            term = term * np.sin(2 * np.pi * k * points)
        elif kind == COS:
            term = term * np.cos(2 * np.pi * k * points)
        total = total + term
    if total.ndim == 0:
        return float(total)
    return total


def pt_integrate_period(f: PolyTrig) -> ExactScalar:
    """Exact integral over [0, 1]."""
    primitive = pt_antiderivative(f)
    return pt_eval_integer(primitive, 1) - pt_eval_integer(primitive, 0)


class WindingFunction:
    """A lift N*t + periodic of a circle-valued function; body(t+1) - body(t) = N."""

    __slots__ = ("winding", "body")

    def __init__(self, winding: int, body: PolyTrig):
        if pt_shift(body, 1) - body != PolyTrig.constant(winding):
            raise ValueError(
                f"body does not have winding {winding}: f(t+1) - f(t) = {pt_shift(body, 1) - body}"
            )
        for power, kind, _ in body.coeffs:
            if power > 1 or (power == 1 and kind != ONE_KIND):
                raise ValueError("winding function must be N*t plus a periodic part")
        object.__setattr__(self, "winding", int(winding))
        object.__setattr__(self, "body", body)

    def __setattr__(self, name, value):
        raise AttributeError("WindingFunction is immutable")

    @classmethod
    def from_fourier(
        cls,
        winding: int,
        constant: ScalarLike = 0,
        harmonics: Optional[Mapping[int, Tuple[ScalarLike, ScalarLike]]] = None,
    ) -> "WindingFunction":
        terms = {0: TrigSeries(constant, harmonics)}
        if winding:
            terms[1] = TrigSeries(winding)
        return cls(winding, PolyTrig.from_terms(terms))

    @classmethod
    def from_polytrig(cls, body: PolyTrig) -> "WindingFunction":
        """Infer the winding from body(t+1) - body(t), which must be an integer constant."""
        difference = pt_shift(body, 1) - body
        if not difference.is_constant() or not difference.constant_value().is_integer():
            raise ValueError(f"not a lift of a circle-valued function: {body}")
        return cls(int(difference.constant_value().rational()), body)

    @property
    def periodic(self) -> TrigSeries:
        return self.body.terms.get(0, TrigSeries())

    def __eq__(self, other):
        if not isinstance(other, WindingFunction):
            return NotImplemented
        return self.winding == other.winding and self.body == other.body

    def __hash__(self):
        return hash((self.winding, self.body))

    def __repr__(self):
        return f"WindingFunction(N={self.winding}, body={self.body})"


# serialisation


def polytrig_to_json(f: PolyTrig) -> dict:
    return {
        "terms": [
            {
                "power": power,
                "constant": scalar_to_json(series.constant),
                "harmonics": [
                    {"k": k, "sin": scalar_to_json(s), "cos": scalar_to_json(c)}
                    for k, (s, c) in series.harmonics.items()
                ],
            }
            for power, series in f.terms.items()
        ]
    }


def parse_harmonics(entries: Iterable[dict]) -> Dict[int, Tuple[ExactScalar, ExactScalar]]:
    harmonics: Dict[int, Tuple[ExactScalar, ExactScalar]] = {}
    for entry in entries:
        try:
            k = int(entry["k"])
        except (KeyError, TypeError, ValueError) as e:
            raise InputParseError(f"harmonic entry needs an integer 'k': {entry!r}") from e
        if k < 1:
            raise InputParseError(f"harmonic index must be >= 1: {entry!r}")
        sin_coeff = parse_scalar(entry.get("sin", "0"))
        cos_coeff = parse_scalar(entry.get("cos", "0"))
        previous = harmonics.get(k, (ZERO, ZERO))
        harmonics[k] = (previous[0] + sin_coeff, previous[1] + cos_coeff)
    return harmonics


def parse_polytrig(data: dict) -> PolyTrig:
    if not isinstance(data, dict) or "terms" not in data:
        raise InputParseError(f"PolyTrig needs a 'terms' list: {data!r}")
    terms: Dict[int, TrigSeries] = {}
    for term in data["terms"]:
        power = int(term.get("power", 0))
        if power < 0 or power in terms:
            raise InputParseError(f"invalid or repeated power in {term!r}")
        terms[power] = TrigSeries(
            parse_scalar(term.get("constant", "0")),
            parse_harmonics(term.get("harmonics", [])),
        )
    return PolyTrig.from_terms(terms)
