from pathlib import Path

import pytest

import effectalg as E
from effectalg.enumeration import eas_upto, geas_upto

DATA = Path(__file__).parent / "data"
GOLDEN = Path(__file__).parent / "golden"


@pytest.fixture(scope="session")
def fig1():
    return E.builtin("fig1")


@pytest.fixture(scope="session")
def two_squared():
    return E.builtin("two_squared")


@pytest.fixture(scope="session")
def two_chain():
    return E.builtin("two_chain_gea")


@pytest.fixture(scope="session")
def trivial():
    return E.builtin("trivial")


@pytest.fixture(scope="session")
def two_ea():
    return E.builtin("chain(1)")


@pytest.fixture(scope="session")
def geas3():
    return geas_upto(3)


@pytest.fixture(scope="session")
def geas4():
    return geas_upto(4)


@pytest.fixture(scope="session")
def eas4():
    return eas_upto(4)
