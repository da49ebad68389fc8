"""
Errors raised by the torsionlab library.

Every error derives from :class:`TorsionlabError`, so the ``compute`` command can
turn any of them into a ``CommandError`` with a readable message.
"""
from __future__ import annotations

from typing import Any, Sequence


class TorsionlabError(Exception):
    pass


# ring
# ------------------------------------------------------------------------------
class ExtensionError(TorsionlabError, ValueError):
    pass


class ExpressionError(TorsionlabError, ValueError):
    pass


class NotInvertible(TorsionlabError, ZeroDivisionError):
    pass


class SubstitutionError(TorsionlabError, ValueError):
    pass


class NonDivisible(TorsionlabError):
    def __init__(self, dividend: Any, divisor: Any, remainder: Any):
        self.dividend = dividend
        self.divisor = divisor
        self.remainder = remainder
        super().__init__(f"{divisor} does not divide {dividend} (remainder {remainder})")


class LinearAlgebraError(TorsionlabError):
    pass


class NotInRowSpace(LinearAlgebraError):
    pass


# complex
# ------------------------------------------------------------------------------
class InvalidComplex(TorsionlabError):
    pass


class NotAcyclicWithoutBases(TorsionlabError):
    def __init__(self, ranks: Sequence[int]):
        self.ranks = tuple(ranks)
        super().__init__(
            f"complex has homology of ranks {self.ranks} and no homology bases were given"
        )


class InvalidHomologyBasis(TorsionlabError):
    def __init__(self, degree: int, reason: str):
        self.degree = degree
        self.reason = reason
        super().__init__(f"homology basis in degree {degree}: {reason}")


class NotExact(TorsionlabError):
    def __init__(self, degree: int, reason: str, **witnesses: int):
        self.degree = degree
        self.reason = reason
        self.witnesses = witnesses
        detail = ", ".join(f"{key}={value}" for key, value in sorted(witnesses.items()))
        super().__init__(f"sequence is not exact in degree {degree}: {reason} ({detail})")


class IncompatibleBases(TorsionlabError):
    def __init__(self, degree: int, determinant: Any):
        self.degree = degree
        self.determinant = determinant
        super().__init__(
            f"bases are not compatible in degree {degree}: [c'c''/c] = {determinant}"
        )


# group
# ------------------------------------------------------------------------------
class PresentationError(TorsionlabError):
    def __init__(self, message: str, line: int | None = None, column: int | None = None):
        self.line = line
        self.column = column
        if line is not None:
            message = f"line {line}, column {column}: {message}"
        super().__init__(message)


# rep / torsion
# ------------------------------------------------------------------------------
class RepresentationError(TorsionlabError, ValueError):
    pass


class InvalidRepresentation(TorsionlabError):
    def __init__(self, report: Any):
        self.report = report
        super().__init__("; ".join(report.failures) or "invalid representation")


class WrongDeficiency(TorsionlabError):
    pass


class DegenerateDenominator(TorsionlabError):
    def __init__(self, tried: Sequence[str]):
        self.tried = tuple(tried)
        super().__init__(
            "det Phi(x_k - 1) vanishes for every removable generator tried: "
            + ", ".join(self.tried)
        )


# analysis
# ------------------------------------------------------------------------------
class NotUnitEquivalent(TorsionlabError):
    def __init__(self, first: Any, second: Any):
        self.first = first
        self.second = second
        super().__init__(f"{first} and {second} do not differ by a unit")


class CoefficientsDoNotCollapse(TorsionlabError):
    def __init__(self, coefficient: Any):
        self.coefficient = coefficient
        super().__init__(f"coefficient {coefficient} does not lie in the base field")


class InvalidCharacterGroup(TorsionlabError):
    pass


class SignUndefined(TorsionlabError):
    pass


# jobs
# ------------------------------------------------------------------------------
class JobError(TorsionlabError):
    pass


class JobParseError(JobError):
    def __init__(self, message: str, line: int | None = None, column: int | None = None):
        self.line = line
        self.column = column
        if line is not None:
            message = f"line {line}, column {column}: {message}"
        super().__init__(message)
