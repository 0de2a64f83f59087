import pytest

from catpre import fixtures
from catpre.core import functor, identity_functor, inclusion


@pytest.fixture
def one():
    return fixtures.ONE


@pytest.fixture
def two():
    return fixtures.TWO


@pytest.fixture
def iso():
    return fixtures.ISO


@pytest.fixture
def mon():
    return fixtures.MON


@pytest.fixture
def disc2():
    return fixtures.DISC2


@pytest.fixture
def span():
    return fixtures.SPAN


@pytest.fixture
def all_fixtures():
    return list(fixtures.FIXTURES.values())


@pytest.fixture
def iso_to_mon(iso, mon):
    return functor("P", iso, mon, {"a": "m", "b": "m"}, {"u": "s", "v": "s"})


@pytest.fixture
def two_to_one(two, one):
    return functor("T", two, one, {"a": "star", "b": "star"}, {"u": "id_star"})


@pytest.fixture
def disc_in_two(disc2, two):
    return inclusion(disc2, two, "J")


@pytest.fixture
def id_two(two):
    return identity_functor(two)


@pytest.fixture
def id_iso(iso):
    return identity_functor(iso)


@pytest.fixture
def id_mon(mon):
    return identity_functor(mon)


def pytest_terminal_summary(terminalreporter):
    from test_acceptance import RESULTS

    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in RESULTS:
            terminalreporter.write_line(line)
