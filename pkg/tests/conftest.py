import pytest

from deltak.dmat import DeltaMatroid, enumerate_all


@pytest.fixture(scope="session")
def ex51():
    return DeltaMatroid(3, [{1, 2, 3}, {1}, {2}, {3}])


@pytest.fixture(scope="session")
def ex52():
    return DeltaMatroid(4, [set(), {1}, {2}, {3}, {4},
                            {2, 3, 4}, {1, 3, 4}, {1, 2, 4}, {1, 2, 3}])


@pytest.fixture(scope="session")
def segment():
    return DeltaMatroid(1, [set(), {1}])


@pytest.fixture(scope="session")
def corpus2():
    return list(enumerate_all(2))


@pytest.fixture(scope="session")
def corpus3():
    return list(enumerate_all(3))
