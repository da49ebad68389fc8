import factory

from torsionlab.rep.sl2 import SL2Rep
from torsionlab.ring.matrices import Matrix
from torsionlab.ring.tests.factories import GAUSSIAN, FieldScalarFactory


def nonzero_scalar(tower):
    while True:
        value = FieldScalarFactory(tower=tower)
        if value:
            return value


def random_sl2(tower=GAUSSIAN) -> Matrix:
    """Upper unipotent times lower unipotent times diagonal, so the determinant is 1."""
    x, y, u = FieldScalarFactory(tower=tower), FieldScalarFactory(tower=tower), nonzero_scalar(tower)
    upper = Matrix(tower, [[1, x], [0, 1]])
    lower = Matrix(tower, [[1, 0], [y, 1]])
    return upper @ lower @ Matrix.diag(tower, [u, u.inverse()])


class SL2RepFactory(factory.Factory):
    class Meta:
        model = SL2Rep

    class Params:
        rank = 2

    tower = GAUSSIAN
    matrices = factory.LazyAttribute(lambda o: tuple(random_sl2(o.tower) for _ in range(o.rank)))
