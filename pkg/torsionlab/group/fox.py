"""
Fox free differential calculus (left derivatives).

``d(uv)/dg = du/dg + u dv/dg``, ``dg/dg = 1`` and ``d(g^-1)/dg = -g^-1``.
"""
from __future__ import annotations

from torsionlab.group.presentation import Presentation
from torsionlab.group.ring import GroupRingElement
from torsionlab.group.words import Word, free_reduce


def fox_derivative(word: Word, generator: int) -> GroupRingElement:
    """Fox derivative of ``word`` with respect to the generator with index ``generator``.

    An occurrence ``g`` contributes its prefix, an occurrence ``g^-1`` contributes
    minus its prefix followed by ``g^-1``.
    """
    word = free_reduce(word)
    terms: dict[Word, int] = {}
    for position, (index, exponent) in enumerate(word.letters):
        if index != generator:
            continue
        if exponent > 0:
            prefix = Word(word.letters[:position])
            terms[prefix] = terms.get(prefix, 0) + 1
        else:
            prefix = Word(word.letters[: position + 1])
            terms[prefix] = terms.get(prefix, 0) - 1
    return GroupRingElement(terms)


def fox_jacobian(presentation: Presentation) -> list[list[GroupRingElement]]:
    """Rows are relators, columns are generators."""
    return [
        [fox_derivative(relator, i) for i in range(presentation.rank)]
        for relator in presentation.relators
    ]
