"""
The twisted chain complex of the presentation 2-complex::

    C_2 = V^#relators  --d_2-->  C_1 = V^#generators  --d_1-->  C_0 = V

with row-vector blocks ``d_2[j][i] = Phi(dr_j/dx_i)`` and ``d_1[i] = Phi(x_i - 1)``.
"""
from __future__ import annotations

import logging

from torsionlab.complex.chain import BasedChainComplex
from torsionlab.exceptions import InvalidComplex, InvalidRepresentation
from torsionlab.group.words import Word
from torsionlab.rep.twisted import TwistedMap
from torsionlab.ring.matrices import Matrix

logger = logging.getLogger(__name__)


def fox_block(Phi: TwistedMap, relator: Word, generator: int) -> Matrix:
    """``Phi(d relator / d generator)`` from running prefix products.

    A letter ``g`` adds the image of its prefix; a letter ``g^-1`` subtracts the
    image of its prefix including ``g^-1``.
    """
    prefix = Matrix.identity(Phi.ring, Phi.size)
    total = Matrix.zeros(Phi.ring, Phi.size, Phi.size)
    for index, exponent in relator:
        if exponent > 0:
            if index == generator:
                total = total + prefix
            prefix = prefix @ Phi.letter(index, exponent)
        else:
            prefix = prefix @ Phi.letter(index, exponent)
            if index == generator:
                total = total - prefix
    return total


def fox_jacobian_image(Phi: TwistedMap) -> list[list[Matrix]]:
    """Rows are relators, columns are generators."""
    presentation = Phi.presentation
    return [
        [fox_block(Phi, relator, i) for i in range(presentation.rank)]
        for relator in presentation.relators
    ]


def generator_block(Phi: TwistedMap, generator: int) -> Matrix:
    """``Phi(x - 1)`` for the generator with index ``generator``."""
    return Phi.letter(generator, 1) - Matrix.identity(Phi.ring, Phi.size)


def build_complex_from_presentation(
    Phi: TwistedMap, jacobian: list[list[Matrix]] | None = None
) -> BasedChainComplex:
    presentation = Phi.presentation
    size, rank, nrelators = Phi.size, presentation.rank, len(presentation.relators)
    jacobian = fox_jacobian_image(Phi) if jacobian is None else jacobian
    if nrelators:
        d2 = Matrix.block(Phi.ring, jacobian)
    else:
        d2 = Matrix.zeros(Phi.ring, 0, size * rank)
    d1 = Matrix.vstack(Phi.ring, size, *(generator_block(Phi, i) for i in range(rank)))
    try:
        complex_ = BasedChainComplex(Phi.field, (size, size * rank, size * nrelators), (d1, d2))
    except InvalidComplex as exc:
        raise InvalidRepresentation(Phi.validate()) from exc
    logger.debug("presentation complex with dimensions %s", complex_.dims)
    return complex_
