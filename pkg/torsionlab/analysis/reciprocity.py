from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Optional

from torsionlab.analysis.signs import SignContext, sign_helpers
from torsionlab.exceptions import NotUnitEquivalent, TorsionlabError
from torsionlab.ring.laurent import LaurentPoly, UnitClass, laurent_substitute, unit_equivalent

logger = logging.getLogger(__name__)


@dataclass
class ReciprocityReport:
    inverted: LaurentPoly
    unit: UnitClass
    expected_sign: Optional[int] = None
    involution: Optional[bool] = None

    @property
    def observed_sign(self) -> int:
        return self.unit.sign

    @property
    def sign_matches(self) -> Optional[bool]:
        if self.expected_sign is None:
            return None
        return self.observed_sign == self.expected_sign

    def as_dict(self) -> dict:
        return {
            "inverted": str(self.inverted),
            "unit": self.unit.format(self.inverted.ring.vars),
            "observed_sign": self.observed_sign,
            "expected_sign": self.expected_sign,
            "sign_matches": self.sign_matches,
            "involution": self.involution,
        }


def invert_variables(p: LaurentPoly) -> LaurentPoly:
    """``p(t_1^-1, ..., t_n^-1)``."""
    ring = p.ring
    return laurent_substitute(p, {var: ring.gen(var) ** -1 for var in ring.vars}, ring)


def reciprocity(delta: LaurentPoly, ctx: SignContext, check_involution: bool = False) -> ReciprocityReport:
    """Find ``u`` with ``delta(t^-1) = u delta(t)``.

    The observed sign is compared with ``(-1)^(b(b+1)/2)`` for knot, link and
    fibered exteriors; a mismatch is reported, not raised.
    """
    if delta.is_zero:
        raise TorsionlabError("reciprocity of the zero polynomial")
    inverted = invert_variables(delta)
    unit = unit_equivalent(inverted, delta)
    if unit is None:
        raise NotUnitEquivalent(delta, inverted)
    expected = None
    if ctx.has_duality_sign and ctx.b > 0:
        expected = sign_helpers(ctx).symmetry_sign
    report = ReciprocityReport(inverted, unit, expected)
    if report.sign_matches is False:
        logger.warning("observed duality sign %+d, expected %+d", report.observed_sign, expected)
    if check_involution:
        back = unit_equivalent(invert_variables(inverted), inverted)
        report.involution = back == unit.inverse()
    return report
