"""Closed-form signs for boundary components and duality."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from torsionlab.exceptions import SignUndefined, TorsionlabError

MANIFOLD_KINDS = ("knot", "link", "fibered", "generic")


@dataclass(frozen=True)
class SignContext:
    """``b`` boundary tori, the kind of manifold and, for fibrations, ``sgn det(1 - phi_1)``."""

    b: int
    kind: str = "generic"
    det_sign: Optional[int] = None

    def __post_init__(self):
        if self.b < 0:
            raise TorsionlabError(f"the number of boundary components must be >= 0, got {self.b}")
        if self.kind not in MANIFOLD_KINDS:
            raise TorsionlabError(f"unknown manifold kind {self.kind!r}, expected one of {', '.join(MANIFOLD_KINDS)}")
        if self.det_sign not in (None, 1, -1):
            raise TorsionlabError(f"det_sign must be +1 or -1, got {self.det_sign!r}")

    @property
    def has_duality_sign(self) -> bool:
        return self.kind != "generic"


@dataclass(frozen=True)
class SignHelpers:
    pair_sign: int
    symmetry_sign: int


def sign_helpers(ctx: SignContext) -> SignHelpers:
    """``(-1)^(b(b-1)/2)`` and ``(-1)^(b(b+1)/2)``."""
    b = ctx.b
    if b == 0:
        raise SignUndefined("the boundary signs need at least one boundary component")
    return SignHelpers((-1) ** (b * (b - 1) // 2), (-1) ** (b * (b + 1) // 2))
