import pytest
from factory.random import reseed_random


@pytest.fixture(autouse=True)
def seeded_factories():
    """Random matrices and polynomials from the factories repeat from test to test."""
    reseed_random("torsionlab")
