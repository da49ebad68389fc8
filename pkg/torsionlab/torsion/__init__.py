from torsionlab.torsion.checks import (  # noqa: F401
    CheckReport,
    abelian_factorization,
    column_independence,
    complex_agreement,
    conjugation_check,
    naturality_cross_check,
    naturality_substitute,
)
from torsionlab.torsion.inputs import TorsionJobInput  # noqa: F401
from torsionlab.torsion.presentation_complex import build_complex_from_presentation  # noqa: F401
from torsionlab.torsion.wada import (  # noqa: F401
    classical_alexander,
    is_polynomial,
    sign_determined_torsion,
    unit_between,
    wada_torsion,
)
