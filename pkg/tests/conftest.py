import pytest

from sct.extract import Mode, extract_description
from sct.fixtures import ackermann_graph_set, ackermann_program, swap_graph_set


@pytest.fixture(scope="session")
def ackermann():
    return ackermann_program()


@pytest.fixture(scope="session")
def ack_graphs():
    return ackermann_graph_set()


@pytest.fixture(scope="session")
def ack_description(ackermann):
    return extract_description(ackermann, Mode.GUARDED)


@pytest.fixture(scope="session")
def swap_graphs():
    return swap_graph_set()
