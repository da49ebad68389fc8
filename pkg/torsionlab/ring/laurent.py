"""
Multivariate Laurent polynomials over a :class:`~torsionlab.ring.tower.FieldTower`.

Terms are iterated in graded lexicographic order with ``t1 < t2 < ... < tn``.
Arithmetic keeps exponents as they are; the shifted normal form (minimum
exponent 0 in every variable) is only used for exact division, unit
comparison and reports.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import TYPE_CHECKING, Iterator, Mapping, Optional, Sequence, Union

from sympy import Expr, Mul, Poly, Rational, Symbol, sympify

from torsionlab.exceptions import ExpressionError, NonDivisible, NotInvertible, SubstitutionError
from torsionlab.ring.expressions import as_fraction, parse_expression
from torsionlab.ring.tower import FieldScalar, FieldTower

if TYPE_CHECKING:
    from torsionlab.ring.ratfunc import RatFuncField

logger = logging.getLogger(__name__)

Exponents = tuple[int, ...]


def order_key(exponents: Exponents) -> tuple:
    return sum(exponents), tuple(reversed(exponents))


@dataclass(frozen=True)
class LaurentRing:
    vars: tuple[str, ...]
    tower: FieldTower

    def __post_init__(self):
        if len(set(self.vars)) != len(self.vars):
            raise ExpressionError(f"repeated torsion variable in {self.vars}")
        clash = set(self.vars) & set(self.tower.names)
        if clash:
            raise ExpressionError(
                f"torsion variable(s) {', '.join(sorted(clash))} clash with field symbols"
            )

    def __str__(self) -> str:
        return f"{self.tower}[{', '.join(v + '^±1' for v in self.vars)}]"

    @property
    def nvars(self) -> int:
        return len(self.vars)

    is_field = False

    @cached_property
    def zero(self) -> "LaurentPoly":
        return LaurentPoly(self, {})

    @cached_property
    def one(self) -> "LaurentPoly":
        return self.constant(self.tower.one)

    @cached_property
    def origin(self) -> Exponents:
        return (0,) * self.nvars

    @cached_property
    def fraction_field(self) -> "RatFuncField":
        from torsionlab.ring.ratfunc import RatFuncField

        return RatFuncField(self)

    def index(self, var: str) -> int:
        try:
            return self.vars.index(var)
        except ValueError:
            raise ExpressionError(f"{var!r} is not a torsion variable of {self}") from None

    def gen(self, var: Union[str, int]) -> "LaurentPoly":
        i = var if isinstance(var, int) else self.index(var)
        exponents = [0] * self.nvars
        exponents[i] = 1
        return LaurentPoly(self, {tuple(exponents): self.tower.one})

    def gens(self) -> tuple["LaurentPoly", ...]:
        return tuple(self.gen(i) for i in range(self.nvars))

    def monomial(self, exponents, coefficient=1) -> "LaurentPoly":
        exponents = tuple(int(e) for e in exponents)
        if len(exponents) != self.nvars:
            raise ValueError(f"expected {self.nvars} exponents, got {exponents}")
        coefficient = self.tower.scalar(coefficient)
        if coefficient.is_zero:
            return self.zero
        return LaurentPoly(self, {exponents: coefficient})

    def constant(self, value) -> "LaurentPoly":
        return self.monomial(self.origin, value)

    def from_terms(self, terms) -> "LaurentPoly":
        """Build a polynomial from ``(exponents, coefficient)`` pairs, adding repeated exponents."""
        collected: dict[Exponents, FieldScalar] = {}
        zero = self.tower.zero
        for exponents, coefficient in terms:
            exponents = tuple(int(e) for e in exponents)
            collected[exponents] = collected.get(exponents, zero) + self.tower.scalar(coefficient)
        return LaurentPoly(self, {e: c for e, c in collected.items() if not c.is_zero})

    def convert(self, value) -> "LaurentPoly":
        if isinstance(value, LaurentPoly):
            if value.ring == self:
                return value
            if value.ring.vars != self.vars:
                raise TypeError(f"cannot convert {value} from {value.ring} to {self}")
            return value.map_coefficients(self.tower.scalar, self)
        if isinstance(value, str):
            return self.parse(value)
        if isinstance(value, Expr):
            return self.from_expr(value)
        return self.constant(value)

    def exquo(self, a: "LaurentPoly", b: "LaurentPoly") -> "LaurentPoly":
        return divide_exact(a, b)

    def parse(self, text: str) -> "LaurentPoly":
        return self.from_expr(parse_expression(text, self.tower.names + self.vars))

    def from_expr(self, expr: Expr) -> "LaurentPoly":
        expr = sympify(expr)
        if not self.vars:
            return self.constant(self.tower.from_expr(expr))
        symbols = [Symbol(v) for v in self.vars]
        numerator, denominator = as_fraction(expr)
        den = Poly(denominator, *symbols)
        if len(den.terms()) != 1:
            raise ExpressionError(f"{expr} is not a Laurent polynomial in {', '.join(self.vars)}")
        ((shift, den_coefficient),) = den.terms()
        scale = self.tower.from_expr(den_coefficient)
        terms = []
        for exponents, coefficient in Poly(numerator, *symbols).terms():
            terms.append(
                (
                    tuple(e - s for e, s in zip(exponents, shift)),
                    self.tower.from_expr(coefficient) / scale,
                )
            )
        return self.from_terms(terms)

    def with_tower(self, tower: FieldTower) -> "LaurentRing":
        return LaurentRing(self.vars, tower)


class LaurentPoly:
    __slots__ = ("ring", "terms")

    def __init__(self, ring: LaurentRing, terms: Mapping[Exponents, FieldScalar]):
        self.ring = ring
        self.terms = dict(terms)

    # coercion
    def _coerce(self, other):
        if isinstance(other, LaurentPoly):
            if other.ring is self.ring or other.ring == self.ring:
                return other
            raise TypeError(f"cannot combine elements of {self.ring} and {other.ring}")
        if isinstance(other, (FieldScalar, int, Fraction, Rational)) and not isinstance(other, bool):
            return self.ring.constant(other)
        return NotImplemented

    # arithmetic
    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        terms = dict(self.terms)
        for exponents, coefficient in other.terms.items():
            if exponents in terms:
                total = terms[exponents] + coefficient
                if total.is_zero:
                    del terms[exponents]
                else:
                    terms[exponents] = total
            else:
                terms[exponents] = coefficient
        return LaurentPoly(self.ring, terms)

    __radd__ = __add__

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly(self.ring, {e: -c for e, c in self.terms.items()})

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
        if not self.terms or not other.terms:
            return self.ring.zero
        zero = self.ring.tower.zero
        terms: dict[Exponents, FieldScalar] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                exponents = tuple(a + b for a, b in zip(e1, e2))
                terms[exponents] = terms.get(exponents, zero) + c1 * c2
        return LaurentPoly(self.ring, {e: c for e, c in terms.items() if not c.is_zero})

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, LaurentPoly):
            field = self.ring.fraction_field
            return field.new(self, other)
        if isinstance(other, (FieldScalar, int, Fraction, Rational)) and not isinstance(other, bool):
            inverse = self.ring.tower.scalar(other).inverse()
            return self * inverse
        return NotImplemented

    def __pow__(self, exponent: int) -> "LaurentPoly":
        if not isinstance(exponent, int):
            return NotImplemented
        if exponent < 0:
            if not self.is_monomial:
                raise NotInvertible(f"{self} is not a unit of {self.ring}")
            ((exponents, coefficient),) = self.terms.items()
            return LaurentPoly(
                self.ring,
                {tuple(e * exponent for e in exponents): coefficient**exponent},
            )
        result = self.ring.one
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            exponent >>= 1
            if exponent:
                base = base * base
        return result

    def shift(self, exponents) -> "LaurentPoly":
        """Multiply by the monomial ``t^exponents``."""
        return LaurentPoly(
            self.ring,
            {tuple(a + b for a, b in zip(e, exponents)): c for e, c in self.terms.items()},
        )

    def scale(self, scalar) -> "LaurentPoly":
        scalar = self.ring.tower.scalar(scalar)
        if scalar.is_zero:
            return self.ring.zero
        return LaurentPoly(self.ring, {e: c * scalar for e, c in self.terms.items()})

    def map_coefficients(self, function, ring: Optional[LaurentRing] = None) -> "LaurentPoly":
        ring = ring or self.ring
        terms = {e: function(c) for e, c in self.terms.items()}
        return LaurentPoly(ring, {e: c for e, c in terms.items() if not c.is_zero})

    # comparison
    def __eq__(self, other) -> bool:
        try:
            other = self._coerce(other)
        except TypeError:
            return False
        if other is NotImplemented:
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self) -> int:
        return hash(frozenset(self.terms.items()))

    def __bool__(self) -> bool:
        return bool(self.terms)

    # inspection
    @property
    def is_zero(self) -> bool:
        return not self.terms

    @property
    def is_monomial(self) -> bool:
        return len(self.terms) == 1

    @property
    def is_constant(self) -> bool:
        return not self.terms or set(self.terms) == {self.ring.origin}

    def coefficient(self, exponents) -> FieldScalar:
        return self.terms.get(tuple(exponents), self.ring.tower.zero)

    def constant_coefficient(self) -> FieldScalar:
        return self.coefficient(self.ring.origin)

    def sorted_terms(self, descending: bool = True) -> list[tuple[Exponents, FieldScalar]]:
        return sorted(self.terms.items(), key=lambda item: order_key(item[0]), reverse=descending)

    def __iter__(self) -> Iterator[tuple[Exponents, FieldScalar]]:
        return iter(self.sorted_terms())

    def __len__(self) -> int:
        return len(self.terms)

    def leading_term(self) -> tuple[Exponents, FieldScalar]:
        if not self.terms:
            raise ValueError("the zero polynomial has no leading term")
        exponents = max(self.terms, key=order_key)
        return exponents, self.terms[exponents]

    def leading_coefficient(self) -> FieldScalar:
        return self.leading_term()[1]

    def min_exponents(self) -> Exponents:
        if not self.terms:
            return self.ring.origin
        return tuple(min(column) for column in zip(*self.terms))

    def max_exponents(self) -> Exponents:
        if not self.terms:
            return self.ring.origin
        return tuple(max(column) for column in zip(*self.terms))

    def degree(self, var: Union[str, int] = 0) -> int:
        """Width of the exponent range in one variable (the span of a Laurent polynomial)."""
        i = var if isinstance(var, int) else self.ring.index(var)
        return self.max_exponents()[i] - self.min_exponents()[i]

    def normalized(self) -> tuple["LaurentPoly", Exponents]:
        """Return ``(p0, s)`` with ``self = t^s * p0`` and every minimum exponent of ``p0`` zero."""
        lowest = self.min_exponents()
        return self.shift(tuple(-e for e in lowest)), lowest

    def as_expr(self) -> Expr:
        symbols = [Symbol(v) for v in self.ring.vars]
        return sum(
            (c.as_expr() * Mul(*(s**e for s, e in zip(symbols, exponents))) for exponents, c in self),
            sympify(0),
        )

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        pieces: list[str] = []
        for exponents, coefficient in self:
            monomial = "*".join(
                var if e == 1 else f"{var}^{e}"
                for var, e in zip(self.ring.vars, exponents)
                if e
            )
            text = str(coefficient)
            negative = text.startswith("-") and (coefficient.is_rational or _is_atomic(text[1:]))
            if negative:
                text = text[1:]
            elif not coefficient.is_rational and not _is_atomic(text) and (monomial or pieces):
                text = f"({text})"
            if monomial:
                text = monomial if text == "1" else f"{text}*{monomial}"
            if not pieces:
                pieces.append(f"-{text}" if negative else text)
            else:
                pieces.append(f"- {text}" if negative else f"+ {text}")
        return " ".join(pieces)

    def __repr__(self) -> str:
        return f"LaurentPoly({self})"


def _is_atomic(text: str) -> bool:
    return not any(symbol in text for symbol in "+-/ ")


@dataclass(frozen=True)
class UnitClass:
    """A unit ``sign * t^shift``; ``sign`` is ``None`` when only the monomial part is known."""

    sign: Optional[int]
    shift: Exponents

    @property
    def sign_known(self) -> bool:
        return self.sign is not None

    def compose(self, other: "UnitClass") -> "UnitClass":
        sign = None if self.sign is None or other.sign is None else self.sign * other.sign
        return UnitClass(sign, tuple(a + b for a, b in zip(self.shift, other.shift)))

    def inverse(self) -> "UnitClass":
        return UnitClass(self.sign, tuple(-e for e in self.shift))

    def as_poly(self, ring: LaurentRing) -> LaurentPoly:
        return ring.monomial(self.shift, self.sign if self.sign is not None else 1)

    def format(self, names: Sequence[str]) -> str:
        """Render against variable names, e.g. ``-1``, ``t1^-3`` or ``±t1 t2^2``."""
        powers = " ".join(name if e == 1 else f"{name}^{e}" for name, e in zip(names, self.shift) if e)
        sign = "±" if self.sign is None else ("" if self.sign > 0 else "-")
        return f"{sign}{powers or '1'}"

    def __str__(self) -> str:
        if len(self.shift) == 1:
            return self.format(("t",))
        return self.format([f"t{i + 1}" for i in range(len(self.shift))])


def divide_exact(p: LaurentPoly, q: LaurentPoly) -> LaurentPoly:
    """Return ``r`` with ``p = q * r``.

    Both operands are shifted to ordinary polynomials first; division by a single
    polynomial leaves remainder zero exactly when it divides.
    """
    q = p._coerce(q)
    if q.is_zero:
        raise NotInvertible(f"division by zero in {p.ring}")
    if p.is_zero:
        return p.ring.zero
    dividend, p_shift = p.normalized()
    divisor, q_shift = q.normalized()
    lead_exponents, lead_coefficient = divisor.leading_term()
    lead_inverse = lead_coefficient.inverse()
    quotient: dict[Exponents, FieldScalar] = {}
    remainder: dict[Exponents, FieldScalar] = {}
    current = dividend
    while current.terms:
        exponents, coefficient = current.leading_term()
        gap = tuple(a - b for a, b in zip(exponents, lead_exponents))
        if all(g >= 0 for g in gap):
            factor = coefficient * lead_inverse
            quotient[gap] = quotient.get(gap, p.ring.tower.zero) + factor
            current = current - divisor.shift(gap).scale(factor)
        else:
            remainder[exponents] = coefficient
            current = LaurentPoly(current.ring, {e: c for e, c in current.terms.items() if e != exponents})
    if remainder:
        raise NonDivisible(p, q, LaurentPoly(p.ring, remainder))
    result = LaurentPoly(p.ring, {e: c for e, c in quotient.items() if not c.is_zero})
    return result.shift(tuple(a - b for a, b in zip(p_shift, q_shift)))


def unit_equivalent(p: LaurentPoly, q: LaurentPoly) -> Optional[UnitClass]:
    """Return the unit ``u = ±t^m`` with ``p = u * q``, or ``None``."""
    q = p._coerce(q)
    if p.is_zero and q.is_zero:
        return UnitClass(1, p.ring.origin)
    if p.is_zero or q.is_zero:
        return None
    p0, p_shift = p.normalized()
    q0, q_shift = q.normalized()
    shift = tuple(a - b for a, b in zip(p_shift, q_shift))
    if p0 == q0:
        return UnitClass(1, shift)
    if p0 == -q0:
        return UnitClass(-1, shift)
    return None


SubstitutionTarget = Union[LaurentPoly, FieldScalar, int, Fraction, Rational]


def laurent_substitute(
    p: LaurentPoly,
    mapping: Mapping[str, SubstitutionTarget],
    ring: Optional[LaurentRing] = None,
) -> LaurentPoly:
    """Substitute each variable named in ``mapping`` by a nonzero monomial or a nonzero constant.

    Variables not in ``mapping`` are kept and must exist in the target ring, which
    defaults to the ring of the monomial targets, or to ``p.ring``.
    """
    unknown = set(mapping) - set(p.ring.vars)
    if unknown:
        raise SubstitutionError(f"{', '.join(sorted(unknown))} not variables of {p.ring}")
    if ring is None:
        rings = {target.ring for target in mapping.values() if isinstance(target, LaurentPoly)}
        if len(rings) > 1:
            raise SubstitutionError("substitution targets live in different rings")
        ring = rings.pop() if rings else p.ring
    tower = ring.tower
    images: list[tuple[FieldScalar, Exponents]] = []
    for var in p.ring.vars:
        target = mapping.get(var)
        if target is None:
            if var not in ring.vars:
                raise SubstitutionError(f"no substitution given for {var} and {ring} lacks it")
            exponents = [0] * ring.nvars
            exponents[ring.index(var)] = 1
            images.append((tower.one, tuple(exponents)))
            continue
        if isinstance(target, LaurentPoly):
            target = ring.convert(target)
            if target.is_zero:
                raise SubstitutionError(f"{var} cannot be sent to zero")
            if not target.is_monomial:
                raise SubstitutionError(f"{var} -> {target} is not a monomial")
            ((exponents, coefficient),) = target.terms.items()
            images.append((coefficient, exponents))
        else:
            coefficient = tower.scalar(target)
            if coefficient.is_zero:
                raise SubstitutionError(f"{var} cannot be sent to zero")
            images.append((coefficient, ring.origin))
    terms = []
    for exponents, coefficient in p.terms.items():
        value = tower.scalar(coefficient)
        total = [0] * ring.nvars
        for e, (image_coefficient, image_exponents) in zip(exponents, images):
            if e:
                if not image_coefficient.is_one:
                    value = value * image_coefficient**e
                for k, ie in enumerate(image_exponents):
                    total[k] += e * ie
        terms.append((tuple(total), value))
    return ring.from_terms(terms)
