from torsionlab.ring.laurent import (  # noqa: F401
    LaurentPoly,
    LaurentRing,
    UnitClass,
    divide_exact,
    laurent_substitute,
    unit_equivalent,
)
from torsionlab.ring.linalg import (  # noqa: F401
    clear_denominators,
    determinant,
    independent_rows,
    pivot_columns,
    rank,
    solve_left,
)
from torsionlab.ring.matrices import Matrix  # noqa: F401
from torsionlab.ring.ratfunc import RatFunc, RatFuncField, ratfunc_eq  # noqa: F401
from torsionlab.ring.tower import (  # noqa: F401
    Extension,
    FieldScalar,
    FieldTower,
    adjoin_extension,
    cyclotomic_polynomial,
)
