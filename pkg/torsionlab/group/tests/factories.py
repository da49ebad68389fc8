import factory
from factory.random import randgen

from torsionlab.group.words import Word


def random_letters(rank: int, length: int):
    return tuple((randgen.randrange(rank), randgen.choice((1, -1))) for _ in range(length))


class WordFactory(factory.Factory):
    """Random, not necessarily reduced, words."""

    class Meta:
        model = Word

    class Params:
        rank = 3
        max_length = 12

    letters = factory.LazyAttribute(lambda o: random_letters(o.rank, randgen.randint(0, o.max_length)))
