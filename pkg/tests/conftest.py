import random

import pytest

from latknot import Order, enumerate_knots, generators
from latknot import fixtures as fx


@pytest.fixture(scope="session")
def basis01():
    return enumerate_knots(Order(0, 1))


@pytest.fixture(scope="session")
def gens01():
    return generators(Order(0, 1))


@pytest.fixture(scope="session")
def gens01_inext():
    return generators(Order(0, 1), inextensible=True)


@pytest.fixture()
def rng():
    return random.Random(0xC0FFEE)


@pytest.fixture(scope="session")
def square():
    return fx.square((0, 1))


@pytest.fixture(scope="session")
def hopf():
    return fx.hopf_link()
