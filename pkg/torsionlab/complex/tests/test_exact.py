import pytest

from torsionlab.complex.chain import BasedChainComplex
from torsionlab.complex.exact import (
    ShortExactSequence,
    alpha_sign,
    check_exactness,
    direct_sum_sequence,
    epsilon_sign,
    homology_sequence,
    multiplicativity_check,
)
from torsionlab.complex.tests.factories import ExactSequenceFactory
from torsionlab.exceptions import IncompatibleBases, NotExact
from torsionlab.ring.laurent import LaurentRing
from torsionlab.ring.matrices import Matrix
from torsionlab.ring.tower import FieldTower

FIELD = LaurentRing(("t",), FieldTower()).fraction_field


def two_term(value) -> BasedChainComplex:
    return BasedChainComplex(FIELD, (1, 1), [Matrix(FIELD, [[value]])])


def point(generator) -> BasedChainComplex:
    return BasedChainComplex(FIELD, (1,), [], [Matrix(FIELD, [[generator]])])


class TestSigns:
    def test_alpha(self):
        # partial sums (1, 2) and (1, 2): alpha_0(C') alpha_1(C'') = 2
        assert alpha_sign((1, 1), (1, 1)) == 0
        assert alpha_sign((1, 0), (0, 1)) == 1

    def test_epsilon(self):
        assert epsilon_sign((0, 0), (0, 0), (0, 0)) == 0
        assert epsilon_sign((1, 0), (0, 0), (0, 1)) == 0
        assert epsilon_sign((1,), (1,), (0,)) == 0


class TestMultiplicativity:
    def test_direct_sum(self):
        report = multiplicativity_check(direct_sum_sequence(two_term(2), two_term(3)))

        assert report.holds
        assert report.lhs * 6 == 1
        assert report.sub_torsion * 2 == 1
        assert report.quotient_torsion * 3 == 1
        assert report.homology_torsion == 1
        assert (report.alpha + report.epsilon) % 2 == 0

    def test_quotient_is_zero(self):
        C = point(2)
        zero = BasedChainComplex(FIELD, (0,), [])
        sequence = ShortExactSequence(
            C, C, zero, (Matrix.identity(FIELD, 1),), (Matrix.zeros(FIELD, 1, 0),)
        )

        report = multiplicativity_check(sequence)

        assert report.holds
        assert report.lhs * 2 == -1
        assert report.homology_torsion == 1

    def test_connecting_map(self):
        sub = BasedChainComplex(FIELD, (1, 0), [Matrix.zeros(FIELD, 0, 1)], [Matrix(FIELD, [["t"]]), None])
        quotient = BasedChainComplex(FIELD, (0, 1), [Matrix.zeros(FIELD, 1, 0)], [None, Matrix(FIELD, [[5]])])
        total = BasedChainComplex(FIELD, (1, 1), [Matrix(FIELD, [[1]])])
        sequence = ShortExactSequence(
            sub,
            total,
            quotient,
            (Matrix(FIELD, [[1]]), Matrix.zeros(FIELD, 0, 1)),
            (Matrix.zeros(FIELD, 1, 0), Matrix(FIELD, [[1]])),
        )

        H = homology_sequence(check_exactness(sequence))
        report = multiplicativity_check(sequence)

        assert H.dims == (0, 0, 1, 1, 0, 0)
        assert H.d(3) == Matrix(FIELD, [[FIELD.convert(5) / FIELD.ring.gen("t")]])
        assert report.holds
        assert report.lhs == 1
        assert (report.alpha + report.epsilon) % 2 == 1

    def test_random_sequences(self):
        for _ in range(100):
            report = multiplicativity_check(ExactSequenceFactory())
            assert report.holds, report.as_dict()

    def test_incompatible_bases(self):
        sequence = direct_sum_sequence(two_term(2), two_term(3))
        doubled = tuple(i.scale(2) for i in sequence.inclusions)

        with pytest.raises(IncompatibleBases) as excinfo:
            multiplicativity_check(
                ShortExactSequence(sequence.sub, sequence.total, sequence.quotient, doubled, sequence.projections)
            )

        assert excinfo.value.determinant == 2

    def test_not_exact(self):
        sequence = direct_sum_sequence(two_term(2), two_term(3))
        wrong = tuple(Matrix(FIELD, [[1], [0]]) for _ in sequence.projections)

        with pytest.raises(NotExact) as excinfo:
            multiplicativity_check(
                ShortExactSequence(sequence.sub, sequence.total, sequence.quotient, sequence.inclusions, wrong)
            )

        assert excinfo.value.degree == 0

    def test_inclusion_must_be_injective(self):
        sequence = direct_sum_sequence(two_term(2), two_term(3))
        collapsed = tuple(Matrix(FIELD, [[0, 0]]) for _ in sequence.inclusions)

        with pytest.raises(NotExact) as excinfo:
            multiplicativity_check(
                ShortExactSequence(sequence.sub, sequence.total, sequence.quotient, collapsed, sequence.projections)
            )

        assert excinfo.value.witnesses == {"rank": 0, "expected": 1}
