from __future__ import annotations

from dataclasses import dataclass, replace
from typing import Optional

from torsionlab.exceptions import TorsionlabError
from torsionlab.group.presentation import Presentation
from torsionlab.rep.abelian import AbelianizationMap
from torsionlab.rep.sl2 import SL2Rep
from torsionlab.rep.twisted import TwistedMap
from torsionlab.ring.laurent import LaurentRing


@dataclass(frozen=True)
class TorsionJobInput:
    """Everything one torsion computation needs.

    ``removed`` is the index of the generator whose column the Wada ratio drops;
    ``None`` means the last generator, with the others tried in turn when its
    denominator vanishes. ``tau0`` is an optional sign ``+1`` or ``-1``.
    """

    presentation: Presentation
    rep: SL2Rep
    phi: AbelianizationMap
    removed: Optional[int] = None
    tau0: Optional[int] = None
    validate: bool = True

    def __post_init__(self):
        if self.tau0 not in (None, 1, -1):
            raise TorsionlabError(f"tau0 must be +1 or -1, got {self.tau0!r}")
        if self.removed is not None and not 0 <= self.removed < self.presentation.rank:
            raise TorsionlabError(f"no generator with index {self.removed}")

    __hash__ = None  # type: ignore[assignment]

    @property
    def ring(self) -> LaurentRing:
        return LaurentRing(self.phi.variables, self.rep.tower)

    def twisted_map(self) -> TwistedMap:
        Phi = TwistedMap(self.presentation, self.rep, self.phi)
        if self.validate:
            Phi.ensure_valid()
        return Phi

    def with_rep(self, rep: SL2Rep) -> "TorsionJobInput":
        return replace(self, rep=rep)

    def with_phi(self, phi: AbelianizationMap) -> "TorsionJobInput":
        return replace(self, phi=phi)

    def with_removed(self, removed: Optional[int]) -> "TorsionJobInput":
        return replace(self, removed=removed)

    def with_tau0(self, tau0: Optional[int]) -> "TorsionJobInput":
        return replace(self, tau0=tau0)
