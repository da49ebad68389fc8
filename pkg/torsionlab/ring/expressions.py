"""
Parsing of field expressions.

Expressions use integers, declared names, ``+ - * /``, ``^`` (or ``**``) with
integer exponents and parentheses. Every identifier must be declared; sympy
built-in names such as ``I``, ``E``, ``beta`` or ``gamma`` are never picked up.
"""
from __future__ import annotations

import keyword
import re
from tokenize import TokenError
from typing import Iterable

from sympy import Expr, Symbol, fraction, together
from sympy.parsing.sympy_parser import (
    convert_xor,
    parse_expr,
    standard_transformations,
)

from torsionlab.exceptions import ExpressionError

IDENTIFIER = re.compile(r"[A-Za-z_][A-Za-z0-9_]*")
NAME = re.compile(r"^[A-Za-z][A-Za-z0-9_]*$")
TRANSFORMATIONS = standard_transformations + (convert_xor,)


def check_name(name: str) -> str:
    if not NAME.match(name) or keyword.iskeyword(name):
        raise ExpressionError(f"invalid symbol name {name!r}")
    return name


def identifiers(text: str) -> set[str]:
    return set(IDENTIFIER.findall(text))


def parse_expression(
    text: str, declared: Iterable[str], extra: Iterable[str] = ()
) -> Expr:
    """Parse ``text`` into a sympy expression over the ``declared`` symbols.

    ``extra`` names are accepted as well; they are used for the free variable of a
    minimal polynomial.
    """
    allowed = set(declared) | set(extra)
    unknown = identifiers(text) - allowed
    if unknown:
        raise ExpressionError(
            f"undeclared symbol(s) {', '.join(sorted(unknown))} in {text!r}"
        )
    local_dict = {name: Symbol(name) for name in allowed}
    try:
        expr = parse_expr(text, local_dict=local_dict, transformations=TRANSFORMATIONS)
    except (SyntaxError, TypeError, ValueError, NameError, TokenError) as exc:
        raise ExpressionError(f"cannot parse {text!r}: {exc}") from exc
    if not isinstance(expr, Expr):
        raise ExpressionError(f"{text!r} is not an arithmetic expression")
    return expr


def as_fraction(expr: Expr) -> tuple[Expr, Expr]:
    numerator, denominator = fraction(together(expr))
    return numerator.expand(), denominator.expand()
