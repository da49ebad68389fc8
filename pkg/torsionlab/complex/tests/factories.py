import factory
from factory.random import randgen

from torsionlab.complex.randomized import random_acyclic_complex, random_exact_sequence


class AcyclicComplexFactory(factory.Factory):
    class Meta:
        model = random_acyclic_complex

    rng = factory.LazyFunction(lambda: randgen)
    max_dim = 4


class ExactSequenceFactory(factory.Factory):
    class Meta:
        model = random_exact_sequence

    rng = factory.LazyFunction(lambda: randgen)
    max_dim = 4
