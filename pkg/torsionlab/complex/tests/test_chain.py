import pytest
from factory.random import randgen

from torsionlab.complex.chain import (
    Ambiguity,
    BasedChainComplex,
    homology_rank,
    sign_exponent,
    torsion_of_complex,
)
from torsionlab.complex.randomized import random_unit
from torsionlab.complex.tests.factories import AcyclicComplexFactory
from torsionlab.exceptions import InvalidComplex, InvalidHomologyBasis, NotAcyclicWithoutBases
from torsionlab.ring.laurent import LaurentRing
from torsionlab.ring.matrices import Matrix
from torsionlab.ring.tower import FieldTower

QQ = FieldTower()
FIELD = LaurentRing(("t",), QQ).fraction_field


def two_term(value) -> BasedChainComplex:
    return BasedChainComplex(FIELD, (1, 1), [Matrix(FIELD, [[value]])])


def point(generator) -> BasedChainComplex:
    return BasedChainComplex(FIELD, (1,), [], [Matrix(FIELD, [[generator]])])


def torus() -> BasedChainComplex:
    return BasedChainComplex(QQ, (1, 2, 1), [Matrix(QQ, [[0], [0]]), Matrix(QQ, [[0, 0]])])


class TestBasedChainComplex:
    def test_rejects_non_complex(self):
        with pytest.raises(InvalidComplex):
            BasedChainComplex(QQ, (1, 1, 1), [Matrix(QQ, [[1]]), Matrix(QQ, [[1]])])

    def test_rejects_wrong_shape(self):
        with pytest.raises(InvalidComplex):
            BasedChainComplex(QQ, (1, 2), [Matrix(QQ, [[1]])])

    def test_rejects_missing_boundary(self):
        with pytest.raises(InvalidComplex):
            BasedChainComplex(QQ, (1, 1), [])

    def test_boundaries_outside_the_range_are_zero(self):
        C = two_term(2)

        assert C.d(0).shape == (1, 0)
        assert C.d(2).shape == (0, 1)
        assert C.d(3).shape == (0, 0)

    def test_padded(self):
        C = two_term(2).padded(3)

        assert C.dims == (1, 1, 0, 0)
        assert C.length == 3

    def test_cannot_shorten(self):
        with pytest.raises(InvalidComplex):
            two_term(2).padded(0)

    def test_euler_characteristic(self):
        assert torus().euler_characteristic() == 0


class TestHomologyRank:
    def test_torus(self):
        assert homology_rank(torus()) == (1, 2, 1)

    def test_identity(self):
        assert homology_rank(two_term(1)) == (0, 0)

    def test_point(self):
        assert homology_rank(point(1)) == (1,)

    def test_random_acyclic(self):
        for _ in range(10):
            C = AcyclicComplexFactory()
            assert not any(homology_rank(C))


class TestSignExponent:
    def test_acyclic(self):
        assert sign_exponent((3, 5, 2), (0, 0, 0)) == 0

    def test_point(self):
        assert sign_exponent((1,), (1,)) == 1

    def test_torus(self):
        # partial sums (1, 3, 4) and (1, 3, 4)
        assert sign_exponent((1, 2, 1), (1, 2, 1)) == (1 + 9 + 16) % 2


class TestTorsionOfComplex:
    def test_two_term(self):
        result = torsion_of_complex(two_term(2))

        assert result.value * 2 == 1
        assert result.ambiguity == Ambiguity.exact()

    def test_point_with_homology(self):
        assert torsion_of_complex(point(2)).value * 2 == -1

    def test_needs_homology_bases(self):
        with pytest.raises(NotAcyclicWithoutBases) as excinfo:
            torsion_of_complex(torus())

        assert excinfo.value.ranks == (1, 2, 1)

    def test_torus_with_homology_bases(self):
        bases = [Matrix(QQ, [[1]]), Matrix(QQ, [[1, 0], [0, 1]]), Matrix(QQ, [[1]])]
        C = torus().with_homology_bases(bases)

        # every transition matrix is the identity and |C| = 26 is even
        assert torsion_of_complex(C).value == 1

    def test_wrong_number_of_classes(self):
        C = torus().with_homology_bases([Matrix(QQ, [[1]]), Matrix(QQ, [[1, 0]]), Matrix(QQ, [[1]])])

        with pytest.raises(InvalidHomologyBasis) as excinfo:
            torsion_of_complex(C)

        assert excinfo.value.degree == 1

    def test_classes_must_be_cycles(self):
        C = BasedChainComplex(FIELD, (1, 1), [Matrix(FIELD, [[0]])])
        C = C.with_homology_bases([Matrix(FIELD, [[1]]), Matrix(FIELD, [[1]])])
        assert torsion_of_complex(C).value == -1

        D = BasedChainComplex(FIELD, (1, 2), [Matrix(FIELD, [[1], [0]])])
        D = D.with_homology_bases([None, Matrix(FIELD, [[1, 0]])])
        with pytest.raises(InvalidHomologyBasis, match="cycle"):
            torsion_of_complex(D)

    def test_dependent_classes(self):
        C = BasedChainComplex(FIELD, (2, 1), [Matrix(FIELD, [[1, 1]])])
        C = C.with_homology_bases([Matrix(FIELD, [[1, 1]]), None])

        with pytest.raises(InvalidHomologyBasis, match="dependent"):
            torsion_of_complex(C)

    def test_bases_are_checked_on_acyclic_complexes(self):
        C = two_term(2).with_homology_bases([Matrix(FIELD, [[1]]), None])

        with pytest.raises(InvalidHomologyBasis):
            torsion_of_complex(C)

    def test_lift_independence(self):
        C = BasedChainComplex(FIELD, (2, 1), [Matrix(FIELD, [[1, 1]])])
        first = C.with_homology_bases([Matrix(FIELD, [[1, 0]]), None])
        second = C.with_homology_bases([Matrix(FIELD, [[2, 1]]), None])

        assert torsion_of_complex(first).value == 1
        assert torsion_of_complex(second).value == 1

    def test_pivot_strategy_independence(self):
        for _ in range(100):
            C = AcyclicComplexFactory()
            leftmost = torsion_of_complex(C, "leftmost")
            rightmost = torsion_of_complex(C, "rightmost")
            assert leftmost.value == rightmost.value
            assert leftmost.notes == ("pivot strategy leftmost",)

    def test_base_change(self):
        for _ in range(20):
            C = AcyclicComplexFactory()
            degree = randgen.randint(0, C.length)
            if not C.dims[degree]:
                continue
            index = randgen.randrange(C.dims[degree])
            factor = random_unit(randgen, FIELD) * (FIELD.ring.gen("t") + 2)
            scale = [FIELD.one] * C.dims[degree]
            scale[index] = factor
            D = Matrix.diag(FIELD, scale)
            D_inv = Matrix.diag(FIELD, [s.inverse() for s in scale])
            boundaries = list(C.boundaries)
            if degree >= 1:
                boundaries[degree - 1] = D @ boundaries[degree - 1]
            if degree < C.length:
                boundaries[degree] = boundaries[degree] @ D_inv
            rescaled = BasedChainComplex(FIELD, C.dims, boundaries)

            expected = torsion_of_complex(C).value * factor ** ((-1) ** degree)
            assert torsion_of_complex(rescaled).value == expected
