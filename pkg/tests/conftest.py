import pytest

from negacyclic.fieldpoly import PrimeField
from negacyclic.ring import ModulusKind


@pytest.fixture
def f5():
    return PrimeField(5)


@pytest.fixture
def f3():
    return PrimeField(3)


@pytest.fixture
def neg5():
    return ModulusKind.negacyclic(5)
