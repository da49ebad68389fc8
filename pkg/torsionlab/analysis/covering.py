"""
Torsion of a finite abelian cover as a product over characters::

    prod_{chi} Delta(chi(t_1) t_1, ..., chi(t_n) t_n)

A character is an exponent tuple ``(e_1, ..., e_n)`` over a common modulus ``N``
and stands for ``t_i -> zeta_N^(e_i) t_i``. The product is invariant under the
Galois action on ``zeta_N``, so its coefficients collapse back to the field of
``Delta``. The overall sign of the cover's torsion is left unresolved.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import Optional, Sequence

from torsionlab.exceptions import CoefficientsDoNotCollapse, InvalidCharacterGroup, TorsionlabError
from torsionlab.ring.laurent import LaurentPoly, LaurentRing, laurent_substitute

logger = logging.getLogger(__name__)

Character = tuple[int, ...]


@dataclass
class CoveringReport:
    value: LaurentPoly
    order: int
    modulus: int
    characters: tuple[Character, ...]
    notes: tuple[str, ...] = field(default=("sign of the cover's torsion unresolved",))

    def as_dict(self) -> dict:
        return {
            "value": str(self.value),
            "order": self.order,
            "modulus": self.modulus,
            "characters": [list(c) for c in self.characters],
            "notes": list(self.notes),
        }


def cyclic_characters(m: int) -> tuple[Character, ...]:
    if m < 1:
        raise InvalidCharacterGroup(f"the order of a cyclic cover must be positive, got {m}")
    return tuple((k,) for k in range(m))


def check_character_group(characters: Sequence[Sequence[int]], modulus: int, nvars: int) -> tuple[Character, ...]:
    """Reduce mod ``modulus`` and check that the characters form a subgroup of ``(Z/N)^n``."""
    if modulus < 1:
        raise InvalidCharacterGroup(f"modulus must be positive, got {modulus}")
    reduced = []
    for character in characters:
        if len(character) != nvars:
            raise InvalidCharacterGroup(f"character {tuple(character)} needs {nvars} exponents")
        reduced.append(tuple(e % modulus for e in character))
    group = set(reduced)
    if len(group) != len(reduced):
        raise InvalidCharacterGroup("repeated character")
    if (0,) * nvars not in group:
        raise InvalidCharacterGroup("the trivial character is missing")
    for first in group:
        for second in group:
            total = tuple((a + b) % modulus for a, b in zip(first, second))
            if total not in group:
                raise InvalidCharacterGroup(f"{first} + {second} = {total} is missing")
    return tuple(reduced)


def covering_formula(
    delta: LaurentPoly,
    m: Optional[int] = None,
    characters: Optional[Sequence[Sequence[int]]] = None,
    modulus: Optional[int] = None,
    variable: str = "s",
) -> CoveringReport:
    """Cyclic mode (``m``) returns a polynomial in ``s = t^m``; general mode keeps ``t_1 ... t_n``."""
    ring = delta.ring
    base = ring.tower
    if characters is None:
        if m is None:
            raise TorsionlabError("give either the order m or a list of characters")
        if ring.nvars != 1:
            raise TorsionlabError("the cyclic covering formula needs a single variable")
        characters, modulus = cyclic_characters(m), m
    elif modulus is None:
        raise TorsionlabError("characters need a modulus")
    group = check_character_group(characters, modulus, ring.nvars)
    tower, zeta = base.root_of_unity(modulus)
    extended = LaurentRing(ring.vars, tower)
    lifted = extended.convert(delta)
    product = extended.one
    for character in group:
        mapping = {
            var: extended.monomial(tuple(int(i == j) for j in range(ring.nvars)), zeta**e)
            for i, (var, e) in enumerate(zip(ring.vars, character))
        }
        product = product * laurent_substitute(lifted, mapping, extended)
    collapsed = _collapse(product, ring)
    for exponents in collapsed.terms:
        for character in group:
            if sum(e * c for e, c in zip(exponents, character)) % modulus:
                raise TorsionlabError(f"exponent {exponents} is not invariant under {character}")
    logger.debug("covering product over %d characters: %s", len(group), collapsed)
    if m is None:
        return CoveringReport(collapsed, len(group), modulus, group)
    while variable in base.names:
        variable += "_"
    target = LaurentRing((variable,), base)
    value = target.from_terms(((exponents[0] // m,), coefficient) for exponents, coefficient in collapsed)
    return CoveringReport(value, m, m, group)


def _collapse(product: LaurentPoly, ring: LaurentRing) -> LaurentPoly:
    """Bring ``product`` back to ``ring``; every coefficient must be free of the adjoined root."""
    base = ring.tower
    extended = product.ring.tower
    if extended == base:
        return ring.convert(product)
    root = extended.generator_names[-1]
    terms = []
    for exponents, coefficient in product:
        if coefficient.involves(root):
            raise CoefficientsDoNotCollapse(coefficient)
        terms.append((exponents, base.restrict(coefficient)))
    return ring.from_terms(terms)
