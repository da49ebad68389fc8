"""
Splitting of ``;``-terminated statement files.

Shared by the presentation parser and the job-file parser. ``#`` starts a comment
that runs to the end of the line. A statement ends at a ``;`` outside brackets,
or at a ``}`` that closes the outermost bracket (so ``task x { ... }`` needs no
trailing ``;``).
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

OPENING = {"(": ")", "[": "]", "{": "}"}
CLOSING = {value: key for key, value in OPENING.items()}

ErrorFactory = Callable[[str, int, int], Exception]


@dataclass(frozen=True)
class Statement:
    text: str
    line: int
    column: int

    @property
    def keyword(self) -> str:
        return self.text.split(None, 1)[0] if self.text else ""

    @property
    def body(self) -> str:
        parts = self.text.split(None, 1)
        return parts[1] if len(parts) > 1 else ""


def split_statements(text: str, error: ErrorFactory) -> list[Statement]:
    statements: list[Statement] = []
    buffer: list[str] = []
    stack: list[tuple[str, int, int]] = []
    start: tuple[int, int] | None = None
    in_comment = False
    line, column = 1, 0

    def flush(keep: str = ""):
        nonlocal start
        if keep:
            buffer.append(keep)
        content = "".join(buffer).strip()
        if content:
            statements.append(Statement(content, *start))
        buffer.clear()
        start = None

    for char in text:
        if char == "\n":
            line, column = line + 1, 0
            in_comment = False
            buffer.append(" ")
            continue
        column += 1
        if in_comment:
            continue
        if char == "#":
            in_comment = True
            continue
        if start is None and not char.isspace():
            if char == ";":
                continue
            start = (line, column)
        if char in OPENING:
            stack.append((char, line, column))
        elif char in CLOSING:
            if not stack or stack[-1][0] != CLOSING[char]:
                raise error(f"unbalanced {char!r}", line, column)
            stack.pop()
            if char == "}" and not stack:
                flush(char)
                continue
        elif char == ";" and not stack:
            flush()
            continue
        buffer.append(char)
    if stack:
        char, open_line, open_column = stack[-1]
        raise error(f"{char!r} is never closed", open_line, open_column)
    if "".join(buffer).strip():
        raise error("missing ';' at end of statement", *start)
    return statements
