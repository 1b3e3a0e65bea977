import pytest

import thomae as th


@pytest.fixture(scope="session")
def golden200():
    return th.make_constant("golden_conj", 200)


@pytest.fixture(scope="session")
def sqrt200():
    return th.make_constant("sqrt2m1", 200)


@pytest.fixture(scope="session")
def e200():
    return th.make_constant("e_frac", 200)
