"""
Rational functions in the torsion variables.

Simplification is best effort (monomial content, exact-division probe, monic
leading coefficient). Equality never relies on it: it is decided by
cross-multiplication.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Mapping, Optional

from sympy import Rational

from torsionlab.exceptions import NonDivisible, NotInvertible, SubstitutionError
from torsionlab.ring.expressions import as_fraction, parse_expression
from torsionlab.ring.laurent import LaurentPoly, LaurentRing, divide_exact, laurent_substitute
from torsionlab.ring.tower import FieldScalar


@dataclass(frozen=True)
class RatFuncField:
    ring: LaurentRing

    is_field = True

    def __str__(self) -> str:
        return f"Frac({self.ring})"

    @property
    def tower(self):
        return self.ring.tower

    @property
    def vars(self) -> tuple[str, ...]:
        return self.ring.vars

    @property
    def fraction_field(self) -> "RatFuncField":
        return self

    @cached_property
    def zero(self) -> "RatFunc":
        return RatFunc(self, self.ring.zero, self.ring.one)

    @cached_property
    def one(self) -> "RatFunc":
        return RatFunc(self, self.ring.one, self.ring.one)

    def new(self, num, den=None) -> "RatFunc":
        num = self.ring.convert(num)
        den = self.ring.one if den is None else self.ring.convert(den)
        return _simplified(self, num, den)

    def convert(self, value) -> "RatFunc":
        if isinstance(value, RatFunc):
            if value.field == self:
                return value
            return self.new(value.num, value.den)
        if isinstance(value, str):
            return self.parse(value)
        return self.new(value)

    def exquo(self, a: "RatFunc", b: "RatFunc") -> "RatFunc":
        return a / b

    def gen(self, var) -> "RatFunc":
        return self.new(self.ring.gen(var))

    def parse(self, text: str) -> "RatFunc":
        """Parse a quotient of Laurent polynomials, e.g. ``(t^2 - 1)/(t - 1)``."""
        expr = parse_expression(text, self.tower.names + self.vars)
        numerator, denominator = as_fraction(expr)
        return self.new(self.ring.from_expr(numerator), self.ring.from_expr(denominator))


def _simplified(field: RatFuncField, num: LaurentPoly, den: LaurentPoly) -> "RatFunc":
    if den.is_zero:
        raise NotInvertible("rational function with zero denominator")
    if num.is_zero:
        return field.zero
    if den.is_monomial:
        ((exponents, coefficient),) = den.terms.items()
        num = num.shift(tuple(-e for e in exponents)).scale(coefficient.inverse())
        return RatFunc(field, num, field.ring.one)
    den, lowest = den.normalized()
    num = num.shift(tuple(-e for e in lowest))
    try:
        return RatFunc(field, divide_exact(num, den), field.ring.one)
    except NonDivisible:
        pass
    lead_inverse = den.leading_coefficient().inverse()
    return RatFunc(field, num.scale(lead_inverse), den.scale(lead_inverse))


class RatFunc:
    __slots__ = ("field", "num", "den")

    def __init__(self, field: RatFuncField, num: LaurentPoly, den: LaurentPoly):
        self.field = field
        self.num = num
        self.den = den

    def _coerce(self, other):
        if isinstance(other, RatFunc):
            if other.field is self.field or other.field == self.field:
                return other
            raise TypeError(f"cannot combine elements of {self.field} and {other.field}")
        if isinstance(other, LaurentPoly):
            return self.field.convert(other)
        if isinstance(other, (FieldScalar, int, Fraction, Rational)) and not isinstance(other, bool):
            return self.field.new(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if other.is_zero:
            return self
        if self.den == other.den:
            return _simplified(self.field, self.num + other.num, self.den)
        return _simplified(self.field, self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self) -> "RatFunc":
        return RatFunc(self.field, -self.num, self.den)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if self.is_zero or other.is_zero:
            return self.field.zero
        return _simplified(self.field, self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def inverse(self) -> "RatFunc":
        if self.is_zero:
            raise NotInvertible("zero rational function has no inverse")
        return _simplified(self.field, self.den, self.num)

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if other.is_zero:
            raise NotInvertible("division by the zero rational function")
        return _simplified(self.field, self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other / self

    def __pow__(self, exponent: int) -> "RatFunc":
        if not isinstance(exponent, int):
            return NotImplemented
        if exponent < 0:
            return self.inverse() ** (-exponent)
        return _simplified(self.field, self.num**exponent, self.den**exponent)

    def __eq__(self, other) -> bool:
        try:
            other = self._coerce(other)
        except TypeError:
            return False
        if other is NotImplemented:
            return NotImplemented
        return ratfunc_eq(self, other)

    __hash__ = None  # type: ignore[assignment]

    def __bool__(self) -> bool:
        return not self.num.is_zero

    @property
    def is_zero(self) -> bool:
        return self.num.is_zero

    def is_polynomial(self) -> tuple[bool, Optional[LaurentPoly]]:
        """Return ``(True, p)`` when this function equals the Laurent polynomial ``p``."""
        if self.den == self.field.ring.one:
            return True, self.num
        try:
            return True, divide_exact(self.num, self.den)
        except NonDivisible:
            return False, None

    def substitute(self, mapping: Mapping, ring: Optional[LaurentRing] = None) -> "RatFunc":
        num = laurent_substitute(self.num, mapping, ring)
        den = laurent_substitute(self.den, mapping, ring)
        if den.is_zero:
            raise SubstitutionError(f"denominator {self.den} vanishes under the substitution")
        return _simplified(num.ring.fraction_field, num, den)

    def __str__(self) -> str:
        if self.den == self.field.ring.one:
            return str(self.num)
        return f"({self.num})/({self.den})"

    def __repr__(self) -> str:
        return f"RatFunc({self})"


def ratfunc_eq(a: RatFunc, b: RatFunc) -> bool:
    return a.num * b.den == b.num * a.den
