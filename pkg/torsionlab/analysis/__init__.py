from torsionlab.analysis.covering import CoveringReport, covering_formula  # noqa: F401
from torsionlab.analysis.derivative import derivative_cross_check, derivative_formula  # noqa: F401
from torsionlab.analysis.fibered import charpoly, fibered_torsion, homology_sign  # noqa: F401
from torsionlab.analysis.reciprocity import ReciprocityReport, reciprocity  # noqa: F401
from torsionlab.analysis.signs import SignContext, SignHelpers, sign_helpers  # noqa: F401
