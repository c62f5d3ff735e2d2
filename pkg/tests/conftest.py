import pytest

from gxinduce.catalog import get_entry


@pytest.fixture(scope="session")
def toric():
    return get_entry("toric_z2")


@pytest.fixture(scope="session")
def ising():
    return get_entry("ising_crossed")


@pytest.fixture(scope="session")
def vec():
    return get_entry("vec_z2")


@pytest.fixture(scope="session")
def toric_S(toric):
    return toric.instance.setting("condensed").induction


@pytest.fixture(scope="session")
def ising_S(ising):
    return ising.instance.setting("trivial").induction
