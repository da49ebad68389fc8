from torsionlab.rep.abelian import AbelianizationMap, abelian_rep_build  # noqa: F401
from torsionlab.rep.sl2 import SL2Rep, adjoint, det2, inverse2, random_sl2  # noqa: F401
from torsionlab.rep.twisted import (  # noqa: F401
    AbelianTwist,
    TwistedMap,
    ValidationReport,
    twisted_map_apply,
    validate_representation,
)
