import pytest

from cardeal import Parameters, binary_design, parse_announcement

FIVE_HAND_TEXT = "012 034 056 135 246"
SEVEN_HAND_TEXT = "012 034 056 135 146 236 245"


@pytest.fixture(scope="session")
def p331():
    return Parameters(3, 3, 1)


@pytest.fixture(scope="session")
def p431():
    return Parameters(4, 3, 1)


@pytest.fixture(scope="session")
def five_hand(p331):
    return parse_announcement(FIVE_HAND_TEXT, p331)


@pytest.fixture(scope="session")
def seven_hand(p331):
    return parse_announcement(SEVEN_HAND_TEXT, p331)


@pytest.fixture(scope="session")
def binary3():
    return binary_design(3)
