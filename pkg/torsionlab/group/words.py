"""
Words in a free group.

Reduction, inversion and powers are computed by ``sympy.combinatorics`` on the
free group of the word's rank; ``Word.letters`` is the flat ``(index, +1 or -1)``
view used by Fox calculus and the representations.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Sequence

from sympy.combinatorics.free_groups import FreeGroup, FreeGroupElement, free_group

Letter = tuple[int, int]


@lru_cache(maxsize=None)
def free_group_of_rank(rank: int) -> FreeGroup:
    group, *_ = free_group(tuple(f"x{i}" for i in range(rank)))
    return group


def free_reduce(word: "Word") -> "Word":
    """Cancel adjacent ``g g^-1`` pairs until none are left."""
    return Word.from_element(word.element())


@dataclass(frozen=True)
class Word:
    """A word in the free group: letters are ``(generator index, +1 or -1)``."""

    letters: tuple[Letter, ...] = ()

    def __post_init__(self):
        for generator, exponent in self.letters:
            if exponent not in (1, -1) or generator < 0:
                raise ValueError(f"invalid letter {(generator, exponent)}")

    @classmethod
    def identity(cls) -> "Word":
        return cls(())

    @classmethod
    def generator(cls, index: int, exponent: int = 1) -> "Word":
        sign = 1 if exponent > 0 else -1
        return cls(((index, sign),) * abs(exponent))

    @classmethod
    def from_pairs(cls, pairs: Iterable[tuple[int, int]]) -> "Word":
        """Build a reduced word from ``(index, k)`` pairs meaning ``g_index^k``."""
        pairs = list(pairs)
        group = free_group_of_rank(max((index + 1 for index, _ in pairs), default=0))
        element = group.identity
        for index, k in pairs:
            element = element * group.generators[index] ** k
        return cls.from_element(element)

    @classmethod
    def from_element(cls, element: FreeGroupElement) -> "Word":
        symbols = element.group.symbols
        letters: list[Letter] = []
        for symbol, k in element.array_form:
            letters.extend(cls.generator(symbols.index(symbol), k).letters)
        return cls(tuple(letters))

    @property
    def rank(self) -> int:
        """Smallest free-group rank containing the word."""
        return max((generator + 1 for generator, _ in self.letters), default=0)

    def element(self, rank: int | None = None) -> FreeGroupElement:
        """The reduced element of the free group on ``rank`` generators (default: ``self.rank``)."""
        group = free_group_of_rank(self.rank if rank is None else max(rank, self.rank))
        element = group.identity
        for generator, exponent in self.letters:
            element = element * group.generators[generator] ** exponent
        return element

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def __mul__(self, other: "Word") -> "Word":
        if not isinstance(other, Word):
            return NotImplemented
        rank = max(self.rank, other.rank)
        return Word.from_element(self.element(rank) * other.element(rank))

    def inverse(self) -> "Word":
        return Word(tuple((g, -e) for g, e in reversed(self.letters)))

    def __pow__(self, k: int) -> "Word":
        return Word.from_element(self.element() ** k)

    @property
    def is_identity(self) -> bool:
        return not self.letters

    @property
    def is_reduced(self) -> bool:
        return len(self.element().letter_form) == len(self.letters)

    def exponent_sums(self, rank: int) -> tuple[int, ...]:
        element = self.element(rank)
        return tuple(element.exponent_sum(g) for g in element.group.generators[:rank])

    def generators(self) -> set[int]:
        return {generator for generator, _ in self.letters}

    def format(self, names: Sequence[str]) -> str:
        """Render with syllables collapsed, e.g. ``a^2 b^-1``; the identity prints as ``1``."""
        if not self.letters:
            return "1"
        pieces = []
        index = 0
        while index < len(self.letters):
            generator, exponent = self.letters[index]
            run = 1
            while index + run < len(self.letters) and self.letters[index + run] == (generator, exponent):
                run += 1
            power = run * exponent
            pieces.append(names[generator] if power == 1 else f"{names[generator]}^{power}")
            index += run
        return " ".join(pieces)
