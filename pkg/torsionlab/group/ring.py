"""Integral group ring of a free group."""
from __future__ import annotations

from typing import Iterator, Mapping, Sequence

from torsionlab.group.words import Word


class GroupRingElement:
    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[Word, int] = None):
        self.terms = {word: int(c) for word, c in (terms or {}).items() if c}

    @classmethod
    def from_word(cls, word: Word, coefficient: int = 1) -> "GroupRingElement":
        return cls({word: coefficient})

    @classmethod
    def one(cls) -> "GroupRingElement":
        return cls({Word(): 1})

    @classmethod
    def zero(cls) -> "GroupRingElement":
        return cls()

    def _coerce(self, other):
        if isinstance(other, GroupRingElement):
            return other
        if isinstance(other, Word):
            return GroupRingElement.from_word(other)
        if isinstance(other, int) and not isinstance(other, bool):
            return GroupRingElement({Word(): other})
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        terms = dict(self.terms)
        for word, c in other.terms.items():
            terms[word] = terms.get(word, 0) + c
        return GroupRingElement(terms)

    __radd__ = __add__

    def __neg__(self) -> "GroupRingElement":
        return GroupRingElement({word: -c for word, c in self.terms.items()})

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
        terms: dict[Word, int] = {}
        for w1, c1 in self.terms.items():
            for w2, c2 in other.terms.items():
                word = w1 * w2
                terms[word] = terms.get(word, 0) + c1 * c2
        return GroupRingElement(terms)

    def __rmul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other * self

    def __eq__(self, other) -> bool:
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self) -> int:
        return hash(frozenset(self.terms.items()))

    def __iter__(self) -> Iterator[tuple[Word, int]]:
        return iter(sorted(self.terms.items(), key=lambda item: (len(item[0]), item[0].letters)))

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def augmentation(self) -> int:
        return sum(self.terms.values())

    def format(self, names: Sequence[str]) -> str:
        if not self.terms:
            return "0"
        pieces = []
        for word, c in self:
            text = word.format(names)
            magnitude = abs(c)
            if word.is_identity:
                body = str(magnitude)
            else:
                body = text if magnitude == 1 else f"{magnitude}*{text}"
            if not pieces:
                pieces.append(f"-{body}" if c < 0 else body)
            else:
                pieces.append(f"- {body}" if c < 0 else f"+ {body}")
        return " ".join(pieces)


def group_ring_mul(x: GroupRingElement, y: GroupRingElement) -> GroupRingElement:
    return x * y
