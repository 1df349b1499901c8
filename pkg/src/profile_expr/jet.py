"""
Second-order forward-mode dual numbers.

A Jet2 carries (f, f', f'') of some quantity with respect to one seed variable.
Arithmetic follows the product/quotient rules to second order and every
elementary function is lifted through

    h = g(a),  h' = g'(a) a',  h'' = g''(a) a'^2 + g'(a) a''
"""

import math
from typing import Callable, Dict, Tuple, Union

from src.errors import DomainError

Real = Union[int, float]


class Jet2:
    __slots__ = ("value", "d1", "d2")

    def __init__(self, value: float, d1: float = 0.0, d2: float = 0.0):
        self.value = float(value)
        self.d1 = float(d1)
        self.d2 = float(d2)

    @classmethod
    def variable(cls, value: float) -> "Jet2":
        return cls(value, 1.0, 0.0)

    @classmethod
    def constant(cls, value: float) -> "Jet2":
        return cls(value, 0.0, 0.0)

    def as_tuple(self) -> Tuple[float, float, float]:
        return self.value, self.d1, self.d2

    def is_finite(self) -> bool:
        return math.isfinite(self.value) and math.isfinite(self.d1) and math.isfinite(self.d2)

    def __repr__(self) -> str:
        return f"Jet2({self.value!r}, {self.d1!r}, {self.d2!r})"

    def __eq__(self, other) -> bool:
        if not isinstance(other, Jet2):
            return NotImplemented
        return self.as_tuple() == other.as_tuple()

    def __hash__(self) -> int:
        return hash(self.as_tuple())

    def __neg__(self) -> "Jet2":
        return Jet2(-self.value, -self.d1, -self.d2)

    def __add__(self, other) -> "Jet2":
        if isinstance(other, Jet2):
            return Jet2(self.value + other.value, self.d1 + other.d1, self.d2 + other.d2)
        return Jet2(self.value + other, self.d1, self.d2)

    def __radd__(self, other) -> "Jet2":
        return Jet2(other + self.value, self.d1, self.d2)

    def __sub__(self, other) -> "Jet2":
        if isinstance(other, Jet2):
            return Jet2(self.value - other.value, self.d1 - other.d1, self.d2 - other.d2)
        return Jet2(self.value - other, self.d1, self.d2)

    def __rsub__(self, other) -> "Jet2":
        return Jet2(other - self.value, -self.d1, -self.d2)

    def __mul__(self, other) -> "Jet2":
        if isinstance(other, Jet2):
            return Jet2(
                self.value * other.value,
                self.d1 * other.value + self.value * other.d1,
                self.d2 * other.value + 2.0 * self.d1 * other.d1 + self.value * other.d2,
            )
        return Jet2(self.value * other, self.d1 * other, self.d2 * other)

    def __rmul__(self, other) -> "Jet2":
        return Jet2(other * self.value, other * self.d1, other * self.d2)

    def __truediv__(self, other) -> "Jet2":
        if isinstance(other, Jet2):
            return self * reciprocal(other)
        if other == 0:
            raise DomainError("division by zero", value=float(other))
        return Jet2(self.value / other, self.d1 / other, self.d2 / other)

    def __rtruediv__(self, other) -> "Jet2":
        return other * reciprocal(self)

    def __pow__(self, exponent) -> "Jet2":
        if isinstance(exponent, Jet2):
            return power(self, exponent)
        return power_const(self, float(exponent))


def _lift(a: Jet2, g0: float, g1: float, g2: float) -> Jet2:
    return Jet2(g0, g1 * a.d1, g2 * a.d1 * a.d1 + g1 * a.d2)


def _as_jet(a) -> Jet2:
    return a if isinstance(a, Jet2) else Jet2.constant(a)


def reciprocal(a: Jet2) -> Jet2:
    x = a.value
    if x == 0.0:
        raise DomainError("division by zero", value=x)
    inv = 1.0 / x
    return _lift(a, inv, -inv * inv, 2.0 * inv * inv * inv)


def sin(a) -> Jet2:
    a = _as_jet(a)
    s, c = math.sin(a.value), math.cos(a.value)
    return _lift(a, s, c, -s)


def cos(a) -> Jet2:
    a = _as_jet(a)
    s, c = math.sin(a.value), math.cos(a.value)
    return _lift(a, c, -s, -c)


def exp(a) -> Jet2:
    a = _as_jet(a)
    try:
        e = math.exp(a.value)
    except OverflowError:
        raise DomainError("exp overflow", value=a.value) from None
    return _lift(a, e, e, e)


def ln(a) -> Jet2:
    a = _as_jet(a)
    x = a.value
    if x <= 0.0:
        raise DomainError("ln requires a positive argument", value=x)
    inv = 1.0 / x
    return _lift(a, math.log(x), inv, -inv * inv)


def sinh(a) -> Jet2:
    a = _as_jet(a)
    try:
        s, c = math.sinh(a.value), math.cosh(a.value)
    except OverflowError:
        raise DomainError("sinh overflow", value=a.value) from None
    return _lift(a, s, c, s)


def cosh(a) -> Jet2:
    a = _as_jet(a)
    try:
        s, c = math.sinh(a.value), math.cosh(a.value)
    except OverflowError:
        raise DomainError("cosh overflow", value=a.value) from None
    return _lift(a, c, s, c)


def tanh(a) -> Jet2:
    a = _as_jet(a)
    th = math.tanh(a.value)
    sech2 = 1.0 - th * th
    return _lift(a, th, sech2, -2.0 * th * sech2)


def sqrt(a) -> Jet2:
    a = _as_jet(a)
    x = a.value
    # derivative blows up at 0, so the jet domain is the open half-line
    if x <= 0.0:
        raise DomainError("sqrt requires a positive argument", value=x)
    r = math.sqrt(x)
    return _lift(a, r, 0.5 / r, -0.25 / (r * x))


def absolute(a) -> Jet2:
    a = _as_jet(a)
    x = a.value
    if x == 0.0:
        raise DomainError("abs is not differentiable at 0", value=x)
    sign = 1.0 if x > 0.0 else -1.0
    return Jet2(abs(x), sign * a.d1, sign * a.d2)


def power_const(a, n: float) -> Jet2:
    a = _as_jet(a)
    x = a.value
    if n == 0.0:
        return Jet2.constant(1.0)
    if n == 1.0:
        return Jet2(a.value, a.d1, a.d2)
    integral = float(n).is_integer()
    if x < 0.0 and not integral:
        raise DomainError("non-integer power of a negative base", value=x)
    if x == 0.0 and n < 2.0 and not integral:
        raise DomainError("power not differentiable at 0", value=x)
    if x == 0.0 and n < 0.0:
        raise DomainError("negative power of zero", value=x)
    try:
        g0 = x ** n
        g1 = n * x ** (n - 1.0)
        g2 = n * (n - 1.0) * x ** (n - 2.0) if n != 2.0 else 2.0
    except (OverflowError, ZeroDivisionError):
        raise DomainError("power overflow", value=x) from None
    return _lift(a, g0, g1, g2)


def power(base, exponent) -> Jet2:
    """base^exponent with a variable exponent, evaluated as exp(exponent * ln(base))."""
    base = _as_jet(base)
    if base.value <= 0.0:
        raise DomainError("variable exponent requires a positive base", value=base.value)
    return exp(_as_jet(exponent) * ln(base))


FUNCTIONS: Dict[str, Callable[[Jet2], Jet2]] = {
    "sin": sin,
    "cos": cos,
    "exp": exp,
    "ln": ln,
    "sinh": sinh,
    "cosh": cosh,
    "tanh": tanh,
    "sqrt": sqrt,
    "abs": absolute,
}
