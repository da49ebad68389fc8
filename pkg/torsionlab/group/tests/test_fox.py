from torsionlab.group.fox import fox_derivative, fox_jacobian
from torsionlab.group.presentation import parse_presentation
from torsionlab.group.ring import GroupRingElement
from torsionlab.group.tests.factories import WordFactory
from torsionlab.group.words import Word, free_reduce

A, B = Word.generator(0), Word.generator(1)


def element(word: Word) -> GroupRingElement:
    return GroupRingElement.from_word(word)


class TestFoxDerivative:
    def test_product_rule_on_letters(self):
        assert fox_derivative(A * B, 0) == 1
        assert fox_derivative(A * B, 1) == element(A)

    def test_inverse(self):
        assert fox_derivative(A.inverse(), 0) == -element(A.inverse())

    def test_commutator(self):
        commutator = A * B * A.inverse() * B.inverse()

        assert fox_derivative(commutator, 0) == 1 - element(A * B * A.inverse())

    def test_other_generator(self):
        assert fox_derivative(B**3, 0).is_zero

    def test_fundamental_identity(self):
        for _ in range(200):
            word = free_reduce(WordFactory())
            total = GroupRingElement.zero()
            for g in range(3):
                total = total + fox_derivative(word, g) * (element(Word.generator(g)) - 1)
            assert total == element(word) - 1

    def test_derivation(self):
        for _ in range(100):
            u, v = free_reduce(WordFactory()), free_reduce(WordFactory())
            for g in range(3):
                assert fox_derivative(u * v, g) == fox_derivative(u, g) + element(u) * fox_derivative(v, g)

    def test_jacobian_shape(self):
        presentation = parse_presentation("gens x y; rel x y x^-1 y^-1;")

        jacobian = fox_jacobian(presentation)

        assert len(jacobian) == 1
        assert len(jacobian[0]) == 2
        assert jacobian[0][1] == element(A) - element(A * B * A.inverse() * B.inverse())
