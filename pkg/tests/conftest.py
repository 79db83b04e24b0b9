import random
from fractions import Fraction

import pytest

from dunkl_harmonics import make_context


@pytest.fixture(scope="session")
def z2_2():
    return make_context("z2", 2, [Fraction(1, 2), Fraction(1, 2)])


@pytest.fixture(scope="session")
def z2_2_zero():
    return make_context("z2", 2, [0, 0])


@pytest.fixture(scope="session")
def z2_3():
    return make_context("z2", 3, [1, Fraction(1, 2), 0])


@pytest.fixture(scope="session")
def a2():
    return make_context("a", 3, [1])


@pytest.fixture(scope="session")
def b2():
    return make_context("b", 2, [Fraction(1, 2), Fraction(3, 2)])


@pytest.fixture(scope="session")
def d3():
    return make_context("d", 3, [Fraction(2, 3)])


@pytest.fixture(scope="session")
def nonzero_corpus(z2_2, z2_3, a2, b2):
    return [z2_2, z2_3, a2, b2]


@pytest.fixture
def rng():
    return random.Random("dunkl-harmonics-tests")
