import pytest

from qformff import ConstField


@pytest.fixture(scope="session")
def F3():
    return ConstField(3)


@pytest.fixture(scope="session")
def F5():
    return ConstField(5)


@pytest.fixture(scope="session")
def F7():
    return ConstField(7)


@pytest.fixture(scope="session")
def F9():
    return ConstField(3, 2, [1, 0, 1])  # t^2 + 1


@pytest.fixture(scope="session")
def F25():
    return ConstField(5, 2, [2, 0, 1])  # t^2 + 2


@pytest.fixture(scope="session")
def F27():
    return ConstField(3, 3, [1, 2, 0, 1])  # t^3 + 2t + 1
