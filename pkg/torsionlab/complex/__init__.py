from torsionlab.complex.chain import (  # noqa: F401
    Ambiguity,
    BasedChainComplex,
    TorsionResult,
    homology_rank,
    sign_exponent,
    torsion_of_complex,
    validate_homology_bases,
)
from torsionlab.complex.exact import (  # noqa: F401
    MultiplicativityReport,
    ShortExactSequence,
    direct_sum_sequence,
    multiplicativity_check,
)
from torsionlab.complex.randomized import random_acyclic_complex, random_exact_sequence  # noqa: F401
