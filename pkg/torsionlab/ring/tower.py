"""
Coefficient fields: towers of algebraic extensions of Q with free parameters.

A tower with parameters ``p_1..p_r`` and generators ``g_1..g_k`` (each a root of a
monic polynomial with coefficients in the earlier generators) is represented
inside one sympy ``PolyRing`` over QQ whose symbols are ordered
``p_1..p_r, g_k..g_1`` with the lex order. In that order the leading monomial of
the j-th minimal polynomial is ``g_j^d_j``, so the minimal polynomials form a
Groebner basis and ``rem`` against them is a normal form.

A :class:`FieldScalar` is kept as ``num/den`` with

* ``num`` reduced modulo the minimal polynomials,
* ``den`` free of generators (denominators are rationalised with the norm),
* ``gcd(num, den) = 1`` and ``den`` monic,

which makes the pair canonical.
"""
from __future__ import annotations

import itertools
import logging
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Union

from sympy import Basic, Expr, Poly, Rational, Symbol, sstr, sympify
from sympy.polys.domains import QQ, PolynomialRing
from sympy.polys.matrices import DomainMatrix
from sympy.polys.orderings import lex
from sympy.polys.polyerrors import GeneratorsError
from sympy.polys.rings import PolyElement, PolyRing
from sympy.polys.specialpolys import cyclotomic_poly

from torsionlab.exceptions import ExpressionError, ExtensionError, NotInvertible
from torsionlab.ring.expressions import (
    as_fraction,
    check_name,
    identifiers,
    parse_expression,
)

logger = logging.getLogger(__name__)

# Symbol used when a tower has no parameters, so that the parameter ring is never empty.
PLACEHOLDER = "_u"

ScalarLike = Union["FieldScalar", int, Fraction, Rational, str, Expr]


def cyclotomic_polynomial(m: int, variable: str = "x") -> Poly:
    """Return the m-th cyclotomic polynomial over Q as a sympy ``Poly``."""
    if isinstance(m, bool) or not isinstance(m, int) or m < 1:
        raise ExtensionError(f"cyclotomic polynomial needs a positive integer, got {m!r}")
    return cyclotomic_poly(m, Symbol(variable), polys=True)


@dataclass(frozen=True)
class Extension:
    name: str
    minpoly: Expr

    @property
    def degree(self) -> int:
        return Poly(self.minpoly, Symbol(self.name)).degree()

    def __str__(self) -> str:
        return f"{self.name} : {sstr(self.minpoly)}"


@dataclass(frozen=True)
class FieldTower:
    params: tuple[str, ...] = ()
    levels: tuple[Extension, ...] = ()

    def __post_init__(self):
        seen: set[str] = set()
        for name in self.names:
            check_name(name)
            if name in seen:
                raise ExtensionError(f"symbol {name!r} declared twice")
            seen.add(name)

    def __str__(self) -> str:
        pieces = ["Q"]
        pieces.extend(f"({level})" for level in self.levels)
        if self.params:
            pieces.append("(" + ", ".join(self.params) + ")")
        return "".join(pieces)

    # construction
    # --------------------------------------------------------------------------
    def adjoin(self, name: str, minpoly: Union[str, Expr, Poly]) -> "FieldTower":
        """Return the tower with one more level whose generator ``name`` is a root of ``minpoly``.

        ``minpoly`` is a polynomial in one free variable (any name, or ``name`` itself);
        its coefficients may only involve the generators already in the tower.
        Irreducibility is not checked.
        """
        check_name(name)
        if name in self.names:
            raise ExtensionError(f"symbol {name!r} is already declared")
        earlier = set(self.generator_names)
        if isinstance(minpoly, str):
            free_names = identifiers(minpoly) - earlier
            try:
                minpoly = parse_expression(minpoly, earlier, extra=free_names)
            except ExpressionError as exc:
                raise ExtensionError(str(exc)) from exc
        elif isinstance(minpoly, Poly):
            minpoly = minpoly.as_expr()
        expr = sympify(minpoly)
        free = {symbol for symbol in expr.free_symbols if symbol.name not in earlier}
        if not free:
            raise ExtensionError(f"{sstr(expr)} is constant in the new generator")
        if len(free) > 1:
            names = ", ".join(sorted(symbol.name for symbol in free))
            raise ExtensionError(
                f"coefficients of {sstr(expr)} are not in the current field (free symbols {names})"
            )
        generator = Symbol(name)
        expr = expr.subs(free.pop(), generator)
        poly = Poly(expr, generator)
        if poly.degree() < 2:
            raise ExtensionError(f"minimal polynomial {sstr(expr)} has degree < 2")
        if poly.LC() != 1:
            raise ExtensionError(f"minimal polynomial {sstr(expr)} is not monic")
        earlier_symbols = [Symbol(n) for n in self.generator_names]
        for coefficient in poly.coeffs():
            if not coefficient.is_polynomial(*earlier_symbols):
                raise ExtensionError(
                    f"coefficient {sstr(coefficient)} is not in the current field"
                )
        logger.debug("adjoining %s with minimal polynomial %s", name, expr)
        return FieldTower(self.params, self.levels + (Extension(name, poly.as_expr()),))

    def adjoin_cyclotomic(self, name: str, m: int) -> "FieldTower":
        return self.adjoin(name, cyclotomic_polynomial(m, name))

    def with_params(self, *names: str) -> "FieldTower":
        return FieldTower(self.params + tuple(names), self.levels)

    def root_of_unity(self, m: int) -> tuple["FieldTower", "FieldScalar"]:
        """Return a tower containing a primitive m-th root of unity, and that root."""
        if m < 1:
            raise ExtensionError(f"no primitive root of unity of order {m}")
        if m == 1:
            return self, self.one
        if m == 2:
            return self, -self.one
        name = f"zeta{m}"
        while name in self.names:
            name += "_"
        tower = self.adjoin_cyclotomic(name, m)
        return tower, tower.generator(name)

    # names and rings
    # --------------------------------------------------------------------------
    @property
    def generator_names(self) -> tuple[str, ...]:
        return tuple(level.name for level in self.levels)

    @property
    def names(self) -> tuple[str, ...]:
        return self.params + self.generator_names

    @property
    def degree(self) -> int:
        return len(self.basis)

    @cached_property
    def param_ring(self) -> PolyRing:
        return PolyRing(self.params or (PLACEHOLDER,), QQ, lex)

    @cached_property
    def ring(self) -> PolyRing:
        symbols = tuple(self.param_ring.symbols) + tuple(
            Symbol(name) for name in reversed(self.generator_names)
        )
        return PolyRing(symbols, QQ, lex)

    @cached_property
    def _nparams(self) -> int:
        return self.param_ring.ngens

    @cached_property
    def minpolys(self) -> tuple[PolyElement, ...]:
        reduced: list[PolyElement] = []
        for level in self.levels:
            minpoly = self.ring.from_expr(level.minpoly)
            if reduced:
                minpoly = minpoly.rem(reduced)
            reduced.append(minpoly)
        return tuple(reduced)

    @cached_property
    def basis(self) -> tuple[tuple[int, ...], ...]:
        """Generator exponents of the power basis, in ring symbol order."""
        degrees = [level.degree for level in reversed(self.levels)]
        return tuple(itertools.product(*(range(d) for d in degrees)))

    # element construction
    # --------------------------------------------------------------------------
    @cached_property
    def zero(self) -> "FieldScalar":
        return FieldScalar(self, self.ring.zero, self.ring.one)

    @cached_property
    def one(self) -> "FieldScalar":
        return FieldScalar(self, self.ring.one, self.ring.one)

    is_field = True

    @property
    def fraction_field(self) -> "FieldTower":
        return self

    def generator(self, name: str) -> "FieldScalar":
        if name not in self.names:
            raise ExpressionError(f"{name!r} is not a generator or parameter of {self}")
        return self.make(self.ring.from_expr(Symbol(name)), self.ring.one)

    def scalar(self, value: ScalarLike) -> "FieldScalar":
        if isinstance(value, FieldScalar):
            if value.tower is self or value.tower == self:
                return value
            return self.embed(value)
        if isinstance(value, bool):
            raise TypeError("booleans are not field elements")
        if isinstance(value, int):
            return self.make(self.ring(value), self.ring.one, reduced=True)
        if isinstance(value, Fraction):
            return self.make(self.ring(value.numerator), self.ring(value.denominator), reduced=True)
        if isinstance(value, str):
            return self.from_expr(parse_expression(value, self.names))
        if isinstance(value, Basic):
            return self.from_expr(sympify(value))
        raise TypeError(f"cannot convert {value!r} to an element of {self}")

    convert = scalar

    def exquo(self, a: "FieldScalar", b: "FieldScalar") -> "FieldScalar":
        return a / b

    def from_expr(self, expr: Expr) -> "FieldScalar":
        numerator, denominator = as_fraction(expr)
        try:
            num = self.ring.from_expr(numerator)
            den = self.ring.from_expr(denominator)
        except ValueError as exc:
            raise ExpressionError(f"{sstr(expr)} is not an element of {self}") from exc
        return self.make(num, den)

    def embed(self, value: "FieldScalar") -> "FieldScalar":
        """Map a scalar of a subtower (fewer levels or parameters) into this tower."""
        source = value.tower
        if source.levels != self.levels[: len(source.levels)] or not set(source.params) <= set(
            self.params
        ):
            raise TypeError(f"{source} is not a subfield of {self}")
        return self.make(value.num.set_ring(self.ring), value.den.set_ring(self.ring))

    def restrict(self, value: "FieldScalar") -> "FieldScalar":
        """Map ``value`` into this subtower; raises ``GeneratorsError`` when it does not lie in it."""
        return FieldScalar(self, value.num.set_ring(self.ring), value.den.set_ring(self.ring))

    # normal form
    # --------------------------------------------------------------------------
    def make(self, num: PolyElement, den: PolyElement, reduced: bool = False) -> "FieldScalar":
        minpolys = list(self.minpolys)
        if minpolys and not reduced:
            num = num.rem(minpolys)
            den = den.rem(minpolys)
        if not den:
            raise NotInvertible(f"division by zero in {self}")
        if not num:
            return self.zero
        if minpolys and not self._free_of_generators(den):
            cofactor, norm = self._rationalise(den)
            num = (num * cofactor).rem(minpolys)
            den = norm
            if not num:
                return self.zero
        if den.is_ground:
            lead = den.LC
            if lead != 1:
                num = num.quo_ground(lead)
            return FieldScalar(self, num, self.ring.one)
        common = num.gcd(den)
        if not common.is_ground:
            num = num.exquo(common)
            den = den.exquo(common)
        lead = den.LC
        return FieldScalar(self, num.quo_ground(lead), den.quo_ground(lead))

    def _free_of_generators(self, p: PolyElement) -> bool:
        k = self._nparams
        return all(not any(monom[k:]) for monom in p.itermonoms())

    def _rationalise(self, den: PolyElement) -> tuple[PolyElement, PolyElement]:
        """Return ``(cofactor, norm)`` with ``den * cofactor = norm`` and ``norm`` generator free.

        Uses Cayley-Hamilton on the matrix of multiplication by ``den`` over the
        parameter ring: ``chi(den) = 0`` gives the cofactor directly.
        """
        ring, params = self.ring, self.param_ring
        k = self._nparams
        minpolys = list(self.minpolys)
        index = {exponents: i for i, exponents in enumerate(self.basis)}
        rows = []
        for exponents in self.basis:
            image = (den * ring.from_dict({(0,) * k + exponents: QQ.one})).rem(minpolys)
            entries: list[dict] = [{} for _ in self.basis]
            for monom, coeff in image.iterterms():
                entries[index[monom[k:]]][monom[:k]] = coeff
            rows.append([params.from_dict(entry) for entry in entries])
        size = len(rows)
        charpoly = DomainMatrix(rows, (size, size), PolynomialRing(params)).charpoly()
        cofactor = ring.one
        for coefficient in charpoly[1:-1]:
            cofactor = (cofactor * den + coefficient.set_ring(ring)).rem(minpolys)
        norm = -charpoly[-1].set_ring(ring)
        if not norm:
            raise NotInvertible(
                f"{sstr(den.as_expr())} is a zero divisor in {self} "
                "(is one of the adjoined polynomials reducible?)"
            )
        return cofactor, norm


def adjoin_extension(tower: FieldTower, name: str, minpoly: Union[str, Expr, Poly]) -> FieldTower:
    return tower.adjoin(name, minpoly)


class FieldScalar:
    """An element of a :class:`FieldTower`; immutable, canonical ``num/den`` form."""

    __slots__ = ("tower", "num", "den")

    def __init__(self, tower: FieldTower, num: PolyElement, den: PolyElement):
        self.tower = tower
        self.num = num
        self.den = den

    # coercion
    def _coerce(self, other):
        if isinstance(other, FieldScalar):
            if other.tower is self.tower or other.tower == self.tower:
                return other
            raise TypeError(f"cannot combine elements of {self.tower} and {other.tower}")
        if isinstance(other, (int, Fraction, Rational)) and not isinstance(other, bool):
            return self.tower.scalar(other)
        return NotImplemented

    # arithmetic
    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if not other.num:
            return self
        if not self.num:
            return other
        if self.den == other.den:
            return self.tower.make(self.num + other.num, self.den, reduced=True)
        return self.tower.make(
            self.num * other.den + other.num * self.den, self.den * other.den, reduced=True
        )

    __radd__ = __add__

    def __neg__(self) -> "FieldScalar":
        return FieldScalar(self.tower, -self.num, self.den)

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
        if not self.num or not other.num:
            return self.tower.zero
        return self.tower.make(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def inverse(self) -> "FieldScalar":
        if not self.num:
            raise NotInvertible(f"zero has no inverse in {self.tower}")
        return self.tower.make(self.den, self.num, reduced=True)

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if not other.num:
            raise NotInvertible(f"division by zero in {self.tower}")
        return self.tower.make(self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other / self

    def __pow__(self, exponent: int) -> "FieldScalar":
        if not isinstance(exponent, int):
            return NotImplemented
        if exponent < 0:
            return self.inverse() ** (-exponent)
        result = self.tower.one
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            exponent >>= 1
            if exponent:
                base = base * base
        return result

    # comparison
    def __eq__(self, other) -> bool:
        try:
            other = self._coerce(other)
        except TypeError:
            return False
        if other is NotImplemented:
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self) -> int:
        return hash((self.num, self.den))

    def __bool__(self) -> bool:
        return bool(self.num)

    @property
    def is_zero(self) -> bool:
        return not self.num

    @property
    def is_one(self) -> bool:
        return self.num == 1 and self.den == 1

    # inspection
    def as_rational(self) -> Rational | None:
        if self.num.is_ground and self.den.is_ground:
            return QQ.to_sympy(self.num.LC) / QQ.to_sympy(self.den.LC) if self.num else Rational(0)
        return None

    @property
    def is_rational(self) -> bool:
        return self.as_rational() is not None

    def involves(self, name: str) -> bool:
        index = self.tower.ring.symbols.index(Symbol(name))
        return any(monom[index] for monom in self.num.itermonoms()) or any(
            monom[index] for monom in self.den.itermonoms()
        )

    def as_expr(self) -> Expr:
        return self.num.as_expr() / self.den.as_expr()

    def __str__(self) -> str:
        return sstr(self.as_expr())

    def __repr__(self) -> str:
        return f"FieldScalar({self})"


def product(values: Iterable, one):
    result = one
    for value in values:
        result = result * value
    return result
