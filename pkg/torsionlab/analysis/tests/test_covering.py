import pytest

from torsionlab.analysis.covering import _collapse, check_character_group, covering_formula
from torsionlab.analysis.fibered import charpoly
from torsionlab.exceptions import CoefficientsDoNotCollapse, InvalidCharacterGroup, TorsionlabError
from torsionlab.ring.laurent import LaurentRing, unit_equivalent
from torsionlab.ring.matrices import Matrix
from torsionlab.torsion.tests.factories import QQ, figure_eight_input
from torsionlab.torsion.wada import wada_torsion

QT = LaurentRing(("t",), QQ)
QS = LaurentRing(("s",), QQ)
FIGURE_EIGHT_MONODROMY = Matrix(QQ, [[1, 0, 0], [0, 0, -1], [0, 1, 5]])


def test_trivial_cover():
    t = QT.gen("t")
    s = QS.gen("s")

    assert covering_formula(t**2 - 3 * t + 1, m=1).value == s**2 - 3 * s + 1


def test_double_cover_of_figure_eight():
    t = QT.gen("t")
    s = QS.gen("s")

    report = covering_formula(-(t - 1) * (t**2 - 5 * t + 1), m=2)

    assert report.value == -(s - 1) * (s**2 - 23 * s + 1)
    assert report.order == 2
    assert report.notes == ("sign of the cover's torsion unresolved",)


def test_triple_cover_collapses_to_the_base_field():
    value = wada_torsion(figure_eight_input()).value

    report = covering_formula(value, m=3)

    expected = charpoly(FIGURE_EIGHT_MONODROMY @ FIGURE_EIGHT_MONODROMY @ FIGURE_EIGHT_MONODROMY, "s")
    assert report.value.ring.tower == value.ring.tower
    assert unit_equivalent(report.value, report.value.ring.convert(expected)) is not None


def test_characters_of_a_link():
    t1, t2 = LaurentRing(("t1", "t2"), QQ).gens()
    delta = (t1 - 1) * (t2 - 1) + t1

    report = covering_formula(delta, characters=[(0, 0), (1, 1)], modulus=2)

    assert report.value.ring == delta.ring
    assert report.order == 2
    assert all((e1 + e2) % 2 == 0 for e1, e2 in report.value.terms)


def test_variable_clash_with_the_field():
    tower = QQ.adjoin("s", "x^2 - 2")
    t = LaurentRing(("t",), tower).gen("t")

    report = covering_formula(t - 1, m=2)

    assert report.value.ring.vars == ("s_",)


@pytest.mark.parametrize(
    "characters, modulus",
    [
        ([(0,), (1,)], 3),
        ([(1,), (2,)], 3),
        ([(0,), (3,)], 3),
        ([(0, 0)], 3),
    ],
)
def test_invalid_character_group(characters, modulus):
    with pytest.raises(InvalidCharacterGroup):
        check_character_group(characters, modulus, 1)


def test_characters_need_a_modulus():
    with pytest.raises(TorsionlabError):
        covering_formula(QT.gen("t") - 1, characters=[(0,)])


def test_cyclic_mode_needs_one_variable():
    t1, t2 = LaurentRing(("t1", "t2"), QQ).gens()

    with pytest.raises(TorsionlabError):
        covering_formula(t1 - t2, m=2)


def test_root_must_drop_out():
    tower, zeta = QQ.root_of_unity(3)

    with pytest.raises(CoefficientsDoNotCollapse):
        _collapse(LaurentRing(("t",), tower).constant(zeta), QT)
