"""Floating-point quadrature oracle for the degree-0 spark product."""

from typing import Callable, Dict, Optional, Tuple

import numpy as np

from app.config import config
from app.spark import CircleSpark0


class FloatSpark:
    """Fourier data N, C, {k: (A_k, B_k)} with float coefficients."""

    __slots__ = ("winding", "constant", "harmonics")

    def __init__(self, winding: int, constant: float = 0.0, harmonics: Optional[Dict[int, Tuple[float, float]]] = None):
        self.winding = int(winding)
        self.constant = float(constant)
        self.harmonics = {int(k): (float(a), float(b)) for k, (a, b) in (harmonics or {}).items()}

    def value(self, t):
        t = np.asarray(t, dtype=float)
        total = self.winding * t + self.constant
        for k, (a, b) in self.harmonics.items():
            total = total + a * np.sin(2 * np.pi * k * t) + b * np.cos(2 * np.pi * k * t)
        return total

    def derivative(self, t):
        t = np.asarray(t, dtype=float)
        total = np.full_like(t, float(self.winding))
        for k, (a, b) in self.harmonics.items():
            omega = 2 * np.pi * k
            total = total + omega * (a * np.cos(omega * t) - b * np.sin(omega * t))
        return total

    def __repr__(self):
        return f"FloatSpark(N={self.winding}, C={self.constant}, harmonics={self.harmonics})"


def float_spark(s: CircleSpark0, precision: Optional[int] = None) -> FloatSpark:
    return FloatSpark(
        s.winding,
        s.constant.to_float(precision),
        {k: (a.to_float(precision), b.to_float(precision)) for k, (a, b) in s.harmonics.items()},
    )


def circle_distance(u: float, v: float) -> float:
    """Distance between u and v on R/Z."""
    return abs((u - v + 0.5) % 1.0 - 0.5)


class QuadratureOracle:
    """Composite Gauss-Legendre quadrature on [0, 1]."""

    def __init__(self, nodes: Optional[int] = None, panels: Optional[int] = None):
        self.nodes = nodes or config.oracle.nodes
        self.panels = panels or config.oracle.panels
        self.xg, self.wg = np.polynomial.legendre.leggauss(self.nodes)

    def integrate(self, fun: Callable[[np.ndarray], np.ndarray]) -> float:
        edges = np.linspace(0.0, 1.0, self.panels + 1)
        total = 0.0
        for lo, hi in zip(edges[:-1], edges[1:]):
            mid, half = 0.5 * (hi + lo), 0.5 * (hi - lo)
            total += half * float(np.sum(self.wg * fun(mid + half * self.xg)))
        return total

    def product(self, x: FloatSpark, y: FloatSpark) -> float:
        """∫_0^1 f g' dt - N g(1), reduced into [0, 1)."""
        integral = self.integrate(lambda t: x.value(t) * y.derivative(t))
        value = integral - x.winding * float(y.value(1.0))
        return value % 1.0


def quadrature_product(
    x: CircleSpark0, y: CircleSpark0, nodes: Optional[int] = None, panels: Optional[int] = None
) -> float:
    return QuadratureOracle(nodes, panels).product(float_spark(x), float_spark(y))


def float_closed_form(x: FloatSpark, y: FloatSpark) -> float:
    """The closed-form product evaluated in floating point, reduced into [0, 1)."""
    value = x.winding * y.winding / 2 + x.constant * y.winding - y.constant * x.winding
    for k in set(x.harmonics) | set(y.harmonics):
        a, b = x.harmonics.get(k, (0.0, 0.0))
        a_, b_ = y.harmonics.get(k, (0.0, 0.0))
        value += (a_ * b - a * b_) * np.pi * k
    return value % 1.0
