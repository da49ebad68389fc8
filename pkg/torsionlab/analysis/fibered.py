"""
Torsion of a mapping torus: the characteristic polynomial of the twisted
monodromy, with the sign ``sgn det(1 - phi_1)`` of the action on the first
homology of the fiber.
"""
from __future__ import annotations

import logging
from typing import Sequence, Union

from torsionlab.complex.chain import Ambiguity, TorsionResult
from torsionlab.exceptions import TorsionlabError
from torsionlab.ring.laurent import LaurentPoly, LaurentRing
from torsionlab.ring.linalg import determinant
from torsionlab.ring.matrices import Matrix
from torsionlab.ring.tower import FieldTower

logger = logging.getLogger(__name__)

QQ = FieldTower()


def charpoly(A: Matrix, variable: str = "t") -> LaurentPoly:
    """``det(t I - A)``."""
    if not A.is_square:
        raise TorsionlabError(f"the monodromy must be square, got {A.shape}")
    ring = LaurentRing((variable,), A.domain)
    t = ring.gen(0)
    M = Matrix.identity(ring, A.nrows).scale(t) - A.map(ring.constant, ring)
    value = determinant(M)
    return value.num if value.den == ring.one else ring.exquo(value.num, value.den)


def homology_sign(phi1: Union[Matrix, Sequence[Sequence[int]]]) -> int:
    """``sgn det(1 - phi_1)``, or 0 when the determinant vanishes."""
    if not isinstance(phi1, Matrix):
        phi1 = Matrix(QQ, phi1)
    if not phi1.is_square:
        raise TorsionlabError(f"phi_1 must be square, got {phi1.shape}")
    det = determinant(Matrix.identity(phi1.domain, phi1.nrows) - phi1)
    value = det.as_rational()
    if value is None:
        raise TorsionlabError(f"det(1 - phi_1) = {det} is not rational")
    return (value > 0) - (value < 0)


def fibered_torsion(
    A: Matrix, phi1: Union[Matrix, Sequence[Sequence[int]]], variable: str = "t"
) -> TorsionResult:
    polynomial = charpoly(A, variable)
    sign = homology_sign(phi1)
    if not sign:
        logger.warning("det(1 - phi_1) = 0: the sign of the fibered torsion is undefined")
        return TorsionResult(polynomial, Ambiguity(False, True), ("det(1 - phi_1) = 0, sign undefined",))
    value = polynomial if sign > 0 else -polynomial
    return TorsionResult(value, Ambiguity.exact(), (f"sgn det(1 - phi_1) = {sign:+d}",))
