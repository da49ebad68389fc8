"""
Non-abelian torsion as a derivative of the polynomial torsion::

    T = (-1)^b * lim_{t -> 1} Delta(t) / prod_l (t^(a_l) - 1)

The limit is taken by exact division followed by evaluation at ``t = 1``; a
multivariable torsion is first reduced to one variable by ``t_i -> t^(c_i)``.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Optional, Sequence, Union

from torsionlab.exceptions import TorsionlabError
from torsionlab.ring.laurent import LaurentPoly, divide_exact, laurent_substitute
from torsionlab.ring.ratfunc import RatFunc
from torsionlab.ring.tower import FieldScalar
from torsionlab.torsion.checks import naturality_substitute

logger = logging.getLogger(__name__)


def evaluate_at_one(p: LaurentPoly) -> FieldScalar:
    ones = {var: 1 for var in p.ring.vars}
    return laurent_substitute(p, ones).constant_coefficient()


def derivative_formula(
    delta: Union[LaurentPoly, RatFunc],
    a_exponents: Sequence[int],
    reduce: Optional[Sequence[int]] = None,
) -> FieldScalar:
    if isinstance(delta, RatFunc):
        delta = divide_exact(delta.num, delta.den)
    if not a_exponents:
        raise TorsionlabError("the derivative formula needs at least one boundary component")
    if any(a < 1 for a in a_exponents):
        raise TorsionlabError(f"boundary exponents must be positive, got {tuple(a_exponents)}")
    reduce = tuple(reduce) if reduce is not None else (1,) * delta.ring.nvars
    reduced = naturality_substitute(delta, reduce)
    t = reduced.ring.gen(0)
    divisor = reduced.ring.one
    for a in a_exponents:
        divisor = divisor * (t**a - 1)
    quotient = divide_exact(reduced, divisor)
    value = evaluate_at_one(quotient)
    b = len(a_exponents)
    logger.debug("derivative formula: quotient %s, b = %d", quotient, b)
    return value if b % 2 == 0 else -value


@dataclass
class DerivativeCrossCheck:
    first: FieldScalar
    second: FieldScalar

    @property
    def holds(self) -> bool:
        return self.first == self.second or self.first == -self.second

    def as_dict(self) -> dict:
        return {"first": str(self.first), "second": str(self.second), "holds": self.holds}


def derivative_cross_check(
    delta: LaurentPoly,
    a_first: Sequence[int],
    c_first: Sequence[int],
    a_second: Sequence[int],
    c_second: Sequence[int],
) -> DerivativeCrossCheck:
    """The same torsion under two reductions to one variable; the values agree up to sign."""
    report = DerivativeCrossCheck(
        derivative_formula(delta, a_first, c_first),
        derivative_formula(delta, a_second, c_second),
    )
    if not report.holds:
        logger.warning("derivative values %s and %s differ", report.first, report.second)
    return report
