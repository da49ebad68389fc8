"""
Finite group presentations and their text format::

    gens a b;
    let w = b a b^-1 a^-1 b^-1 a b;   # abbreviation, usable in later words
    rel a w a^-1 w^-1;
"""
from __future__ import annotations

import logging
import re
from dataclasses import dataclass
from typing import Optional

from torsionlab.exceptions import PresentationError
from torsionlab.group.words import Word, free_reduce
from torsionlab.utils.statements import Statement, split_statements

logger = logging.getLogger(__name__)

NAME = re.compile(r"^[A-Za-z][A-Za-z0-9_]*$")
TOKEN = re.compile(r"^([A-Za-z][A-Za-z0-9_]*)(?:\^\(?([+-]?\d+)\)?)?$")
LET = re.compile(r"^([A-Za-z][A-Za-z0-9_]*)\s*=\s*(.*)$", re.S)


@dataclass(frozen=True)
class Presentation:
    generators: tuple[str, ...]
    relators: tuple[Word, ...] = ()
    abbreviations: tuple[tuple[str, Word], ...] = ()

    def __post_init__(self):
        if len(set(self.generators)) != len(self.generators):
            raise PresentationError(f"repeated generator in {self.generators}")
        for word in self.relators + tuple(word for _, word in self.abbreviations):
            if any(index >= self.rank for index in word.generators()):
                raise PresentationError("word uses an undeclared generator")
        object.__setattr__(self, "relators", tuple(free_reduce(r) for r in self.relators))

    @property
    def rank(self) -> int:
        return len(self.generators)

    @property
    def deficiency(self) -> int:
        return self.rank - len(self.relators)

    def index(self, name: str) -> int:
        try:
            return self.generators.index(name)
        except ValueError:
            raise PresentationError(f"undeclared generator {name!r}") from None

    def word(self, text: str) -> Word:
        """Parse a word over the generators and abbreviations of this presentation."""
        return parse_word(text, self.generators, dict(self.abbreviations))

    def format_word(self, word: Word) -> str:
        return word.format(self.generators)

    def format(self) -> str:
        lines = [f"gens {' '.join(self.generators)};"]
        lines.extend(f"let {name} = {self.format_word(word)};" for name, word in self.abbreviations)
        lines.extend(f"rel {self.format_word(relator)};" for relator in self.relators)
        return "\n".join(lines) + "\n"

    __str__ = format


def parse_word(
    text: str,
    generators: tuple[str, ...],
    abbreviations: dict[str, Word],
    line: Optional[int] = None,
    column: Optional[int] = None,
    defining: Optional[str] = None,
) -> Word:
    pairs: list[Word] = []
    tokens = text.split()
    if not tokens:
        raise PresentationError("empty word", line, column)
    for token in tokens:
        if token == "1":
            continue
        match = TOKEN.match(token)
        if not match:
            raise PresentationError(f"cannot read {token!r} as a generator power", line, column)
        name, power = match.group(1), int(match.group(2) or 1)
        if name == defining:
            raise PresentationError(f"abbreviation {name!r} refers to itself", line, column)
        if name in generators:
            pairs.append(Word.generator(generators.index(name), power))
        elif name in abbreviations:
            pairs.append(abbreviations[name] ** power)
        else:
            raise PresentationError(f"undeclared generator {name!r}", line, column)
    word = Word()
    for piece in pairs:
        word = word * piece
    return word


class PresentationBuilder:
    """Consumes ``gens``, ``let`` and ``rel`` statements one at a time."""

    keywords = ("gens", "let", "rel")

    def __init__(self):
        self.generators: Optional[tuple[str, ...]] = None
        self.abbreviations: dict[str, Word] = {}
        self.relators: list[Word] = []

    def accepts(self, statement: Statement) -> bool:
        return statement.keyword in self.keywords

    def feed(self, statement: Statement):
        line, column = statement.line, statement.column
        if statement.keyword == "gens":
            if self.generators is not None:
                raise PresentationError("generators declared twice", line, column)
            names = statement.body.split()
            for name in names:
                if not NAME.match(name):
                    raise PresentationError(f"invalid generator name {name!r}", line, column)
            if len(set(names)) != len(names):
                raise PresentationError("repeated generator name", line, column)
            self.generators = tuple(names)
            return
        if self.generators is None:
            raise PresentationError(f"'{statement.keyword}' before 'gens'", line, column)
        if statement.keyword == "let":
            match = LET.match(statement.body)
            if not match:
                raise PresentationError("expected 'let NAME = WORD'", line, column)
            name, body = match.groups()
            if name in self.generators or name in self.abbreviations:
                raise PresentationError(f"{name!r} is already declared", line, column)
            self.abbreviations[name] = parse_word(
                body, self.generators, self.abbreviations, line, column, defining=name
            )
        elif statement.keyword == "rel":
            self.relators.append(
                parse_word(statement.body, self.generators, self.abbreviations, line, column)
            )
        else:
            raise PresentationError(f"unknown statement {statement.keyword!r}", line, column)

    def build(self) -> Presentation:
        if self.generators is None:
            raise PresentationError("no 'gens' statement")
        presentation = Presentation(
            self.generators, tuple(self.relators), tuple(self.abbreviations.items())
        )
        logger.debug(
            "presentation with %d generators and %d relators",
            presentation.rank,
            len(presentation.relators),
        )
        return presentation


def parse_presentation(text: str) -> Presentation:
    builder = PresentationBuilder()
    for statement in split_statements(text, PresentationError):
        builder.feed(statement)
    return builder.build()
