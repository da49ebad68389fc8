from torsionlab.group.fox import fox_derivative, fox_jacobian  # noqa: F401
from torsionlab.group.presentation import Presentation, parse_presentation, parse_word  # noqa: F401
from torsionlab.group.ring import GroupRingElement, group_ring_mul  # noqa: F401
from torsionlab.group.words import Word, free_reduce  # noqa: F401
