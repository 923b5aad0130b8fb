import pytest

from fintop import golden
from fintop.core import validate_space
from fintop.lab import enumerate_topologies


def pytest_addoption(parser):
    parser.addoption("--runslow", action="store_true", default=False, help="run slow exhaustive checks")


def pytest_collection_modifyitems(config, items):
    if config.getoption("--runslow"):
        return
    skip = pytest.mark.skip(reason="needs --runslow")
    for item in items:
        if "slow" in item.keywords:
            item.add_marker(skip)


@pytest.fixture(scope="session")
def ex37():
    return golden.load("ex37")


@pytest.fixture(scope="session")
def ex38():
    return golden.load("ex38")


@pytest.fixture(scope="session")
def ex39():
    return golden.load("ex39")


@pytest.fixture(scope="session")
def aspace():
    return golden.load("aspace")


@pytest.fixture(scope="session")
def sierpinski():
    return validate_space(["a", "b"], [["a"]])


@pytest.fixture(scope="session")
def small_spaces():
    """Every labeled topology on at most four points (389 spaces)."""
    return [s for n in range(1, 5) for s in enumerate_topologies(n)]


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for label in sorted(RESULTS):
            terminalreporter.write_line(RESULTS[label])
