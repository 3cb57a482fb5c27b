"""Exact scalars in the field Q(pi).

Values are rational functions of a formal transcendental ``pi`` with rational
coefficients, backed by sympy's ``FracField`` so every value is kept in reduced
canonical form and equality is structural.  Signs are decided by refining an
mpmath interval enclosure of pi.
"""

from fractions import Fraction
from numbers import Rational as _RationalABC
from typing import Iterable, Sequence, Tuple, Union

import mpmath
from sympy import QQ
from sympy.polys.fields import FracElement, field

from app.config import config
from app.exceptions import ExactArithmeticError, InputParseError
from app.logger import logger


PI_FIELD, _PI = field("pi", QQ)

ScalarLike = Union["ExactScalar", int, Fraction, FracElement]


def _to_qq(value: Fraction):
    return QQ(int(value.numerator), int(value.denominator))


def _from_qq(value) -> Fraction:
    return Fraction(int(value.numerator), int(value.denominator))


def _poly_coefficients(poly) -> Tuple[Fraction, ...]:
    """Dense coefficient tuple of a PolyElement, index i = coefficient of pi**i."""
    if not poly:
        return ()
    coefficients = [Fraction(0)] * (poly.degree() + 1)
    for (exponent,), coefficient in poly.terms():
        coefficients[exponent] = _from_qq(coefficient)
    return tuple(coefficients)


def _interval_sign(coefficients: Sequence[Fraction]) -> int:
    """Sign of a nonzero polynomial in pi, by interval refinement."""
    iv = mpmath.iv
    bits = config.engine.interval_start_bits
    saved = iv.prec
    try:
        while bits <= config.engine.interval_max_bits:
            iv.prec = bits
            pi = +iv.pi
            acc = iv.mpf(0)
            for coefficient in reversed(coefficients):
                acc = acc * pi + iv.mpf(coefficient.numerator) / coefficient.denominator
            if (acc > 0) is True:
                return 1
            if (acc < 0) is True:
                return -1
            logger.debug(f"sign undecided at {bits} bits, refining")
            bits *= 2
    finally:
        iv.prec = saved
    raise ExactArithmeticError("sign refinement exceeded the configured precision")


class ExactScalar:
    """An element of Q(pi) in canonical reduced form."""

    __slots__ = ("_value",)

    def __init__(self, value: ScalarLike = 0):
        if isinstance(value, ExactScalar):
            value = value._value
        elif isinstance(value, FracElement):
            pass
        elif isinstance(value, int):
            value = PI_FIELD.ground_new(QQ(value))
        elif isinstance(value, _RationalABC):
            value = PI_FIELD.ground_new(_to_qq(Fraction(value)))
        else:
            raise TypeError(f"cannot build an exact scalar from {type(value).__name__}")
        object.__setattr__(self, "_value", value)

    def __setattr__(self, name, value):
        raise AttributeError("ExactScalar is immutable")

    # constructors

    @classmethod
    def pi(cls) -> "ExactScalar":
        return cls(_PI)

    @classmethod
    def from_coefficients(
        cls, num: Iterable[Fraction], den: Iterable[Fraction] = (Fraction(1),)
    ) -> "ExactScalar":
        numerator = PI_FIELD.zero
        for power, coefficient in enumerate(num):
            if coefficient:
                numerator += _PI**power * _to_qq(Fraction(coefficient))
        denominator = PI_FIELD.zero
        for power, coefficient in enumerate(den):
            if coefficient:
                denominator += _PI**power * _to_qq(Fraction(coefficient))
        if not denominator:
            raise ExactArithmeticError("zero denominator")
        return cls(numerator / denominator)

    # structure

    @property
    def num(self) -> Tuple[Fraction, ...]:
        return _poly_coefficients(self._value.numer)

    @property
    def den(self) -> Tuple[Fraction, ...]:
        return _poly_coefficients(self._value.denom)

    @property
    def is_rational(self) -> bool:
        return self._value.numer.degree() <= 0 and self._value.denom.degree() <= 0

    @property
    def is_polynomial(self) -> bool:
        return self._value.denom.degree() <= 0

    def rational(self) -> Fraction:
        """The value as a Fraction; only defined for pi-free scalars."""
        if not self.is_rational:
            raise ValueError(f"{self} is not a rational number")
        num = self.num
        return (num[0] if num else Fraction(0)) / self.den[0]

    def is_integer(self) -> bool:
        return self.is_rational and self.rational().denominator == 1

    def polynomial_part(self) -> "ExactScalar":
        """Quotient of numerator by denominator as polynomials in pi."""
        quotient, _ = divmod(self._value.numer, self._value.denom)
        return ExactScalar(PI_FIELD.new(quotient))

    def pi_free_part(self) -> Fraction:
        """Constant coefficient of the polynomial part; integer shifts move it by the shift."""
        coefficients = _poly_coefficients(
            divmod(self._value.numer, self._value.denom)[0]
        )
        return coefficients[0] if coefficients else Fraction(0)

    # arithmetic

    @staticmethod
    def _coerce(other) -> "ExactScalar":
        if isinstance(other, ExactScalar):
            return other
        return ExactScalar(other)

    def __add__(self, other):
        try:
            other = self._coerce(other)
        except TypeError:
            return NotImplemented
        return ExactScalar(self._value + other._value)

    __radd__ = __add__

    def __sub__(self, other):
        try:
            other = self._coerce(other)
        except TypeError:
            return NotImplemented
        return ExactScalar(self._value - other._value)

    def __rsub__(self, other):
        try:
            other = self._coerce(other)
        except TypeError:
            return NotImplemented
        return ExactScalar(other._value - self._value)

    def __mul__(self, other):
        try:
            other = self._coerce(other)
        except TypeError:
            return NotImplemented
        return ExactScalar(self._value * other._value)

    __rmul__ = __mul__

    def __neg__(self):
        return ExactScalar(-self._value)

    def __pos__(self):
        return self

    def inv(self) -> "ExactScalar":
        if not self._value:
            raise ExactArithmeticError("inverse of exact zero")
        return ExactScalar(PI_FIELD.one / self._value)

    def __truediv__(self, other):
        try:
            other = self._coerce(other)
        except TypeError:
            return NotImplemented
        return self * other.inv()

    def __rtruediv__(self, other):
        try:
            other = self._coerce(other)
        except TypeError:
            return NotImplemented
        return other * self.inv()

    def __pow__(self, exponent: int):
        if not isinstance(exponent, int):
            return NotImplemented
        if exponent < 0:
            return self.inv() ** -exponent
        return ExactScalar(self._value**exponent)

    def __eq__(self, other):
        try:
            other = self._coerce(other)
        except TypeError:
            return NotImplemented
        return self._value == other._value

    def __hash__(self):
        return hash(self._value)

    def __bool__(self):
        return bool(self._value)

    # order

    def sign(self) -> int:
        if not self._value:
            return 0
        if self.is_rational:
            value = self.rational()
            return 1 if value > 0 else -1
        num_sign = _interval_sign(self.num) if len(self.num) > 1 else _rational_sign(self.num[0])
        den_sign = _interval_sign(self.den) if len(self.den) > 1 else _rational_sign(self.den[0])
        return num_sign * den_sign

    def floor(self) -> int:
        """Largest integer n with n <= self."""
        if self.is_rational:
            value = self.rational()
            return value.numerator // value.denominator
        # the estimate is exact unless the value sits within float noise of an integer
        estimate = int(mpmath.floor(self.to_mpf(config.engine.float_precision)))
        while (self - estimate).sign() < 0:
            estimate -= 1
        while (self - (estimate + 1)).sign() >= 0:
            estimate += 1
        return estimate

    # float embedding

    def to_mpf(self, precision: int) -> mpmath.mpf:
        with mpmath.workdps(precision + 5):
            pi = +mpmath.pi
            return _horner_mpf(self.num, pi) / _horner_mpf(self.den, pi)

    def to_float(self, precision: int = None) -> float:
        return float(self.to_mpf(precision or config.engine.float_precision))

    def __float__(self):
        return self.to_float()

    def __repr__(self):
        return f"ExactScalar({self})"

    def __str__(self):
        return str(self._value.as_expr())


def _rational_sign(value: Fraction) -> int:
    return (value > 0) - (value < 0)


def _horner_mpf(coefficients: Sequence[Fraction], pi) -> mpmath.mpf:
    acc = mpmath.mpf(0)
    for coefficient in reversed(coefficients):
        acc = acc * pi + mpmath.mpf(coefficient.numerator) / coefficient.denominator
    return acc


ZERO = ExactScalar(0)
ONE = ExactScalar(1)
PI = ExactScalar.pi()


def scalar_arith(op: str, x: ScalarLike, y: ScalarLike = None):
    """Dispatch one field operation by name: add, sub, mul, neg, inv or eq."""
    x = ExactScalar(x)
    if op == "neg":
        return -x
    if op == "inv":
        return x.inv()
    if y is None:
        raise ValueError(f"operation {op!r} needs two operands")
    y = ExactScalar(y)
    operations = {
        "add": lambda: x + y,
        "sub": lambda: x - y,
        "mul": lambda: x * y,
        "eq": lambda: x == y,
    }
    if op not in operations:
        raise ValueError(f"unknown scalar operation {op!r}")
    return operations[op]()


def to_float(x: ScalarLike, precision: int = None) -> float:
    return ExactScalar(x).to_float(precision)


class CircleNumber:
    """A class in R/Z represented by an exact scalar.

    The representative is normalised so that the pi-free part (the constant
    coefficient of the polynomial part) lies in [0, 1).
    """

    __slots__ = ("value",)

    def __init__(self, value: Union["CircleNumber", ScalarLike]):
        if isinstance(value, CircleNumber):
            value = value.value
        value = ExactScalar(value)
        shift = value.pi_free_part()
        object.__setattr__(
            self, "value", value - (shift.numerator // shift.denominator)
        )

    def __setattr__(self, name, value):
        raise AttributeError("CircleNumber is immutable")

    def __eq__(self, other):
        if not isinstance(other, CircleNumber):
            try:
                other = CircleNumber(other)
            except TypeError:
                return NotImplemented
        return (self.value - other.value).is_integer()

    def __hash__(self):
        return hash(self.value)

    def __add__(self, other: "CircleNumber") -> "CircleNumber":
        return CircleNumber(self.value + CircleNumber(other).value)

    def __neg__(self) -> "CircleNumber":
        return CircleNumber(-self.value)

    def __sub__(self, other: "CircleNumber") -> "CircleNumber":
        return self + (-CircleNumber(other))

    def to_float(self, precision: int = None) -> float:
        """Representative in [0, 1) as a float."""
        with mpmath.workdps((precision or config.engine.float_precision) + 5):
            value = self.value.to_mpf(precision or config.engine.float_precision)
            return float(value - mpmath.floor(value))

    def render(self) -> str:
        return render_circle(self)

    def __repr__(self):
        return f"CircleNumber({self.render()})"

    __str__ = render


def circle_reduce(x: ScalarLike) -> CircleNumber:
    return CircleNumber(x)


def circle_eq(x: CircleNumber, y: CircleNumber) -> bool:
    return CircleNumber(x) == CircleNumber(y)


def _format_rational(value: Fraction) -> str:
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def render_circle(x: CircleNumber) -> str:
    """Render as "a/b + (c/d)·π mod 1" for polynomials of degree <= 1 in pi."""
    value = CircleNumber(x).value
    num, den = value.num, value.den
    if value.is_polynomial and len(num) <= 2:
        scale = den[0]
        constant = num[0] / scale if num else Fraction(0)
        linear = num[1] / scale if len(num) > 1 else Fraction(0)
        if not linear:
            return f"{_format_rational(constant)} mod 1"
        pi_term = "π" if linear == 1 else "−π" if linear == -1 else f"({_format_rational(linear)})·π"
        if not constant:
            return f"{pi_term} mod 1"
        return f"{_format_rational(constant)} + {pi_term} mod 1"
    return f"{value} mod 1"


# serialisation


def parse_rational(text: Union[str, int]) -> Fraction:
    if isinstance(text, bool):
        raise InputParseError(f"not a rational literal: {text!r}")
    if isinstance(text, int):
        return Fraction(text)
    if not isinstance(text, str):
        raise InputParseError(f"rationals are written as strings, got {text!r}")
    try:
        value = Fraction(text.strip())
    except (ValueError, ZeroDivisionError) as e:
        raise InputParseError(f"not a rational literal: {text!r}") from e
    return value


def scalar_to_json(x: ScalarLike) -> dict:
    x = ExactScalar(x)
    return {
        "num": [_format_rational(c) for c in x.num],
        "den": [_format_rational(c) for c in x.den],
    }


def parse_scalar(data) -> ExactScalar:
    """Accept "p/q" strings, integers or the {"num": [...], "den": [...]} form."""
    if isinstance(data, dict):
        if "num" not in data:
            raise InputParseError(f"exact scalar is missing 'num': {data!r}")
        num = [parse_rational(c) for c in data["num"]]
        den = [parse_rational(c) for c in data.get("den", ["1"])]
        if not any(den):
            raise InputParseError(f"exact scalar has a zero denominator: {data!r}")
        return ExactScalar.from_coefficients(num, den)
    return ExactScalar(parse_rational(data))
