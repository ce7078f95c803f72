import functools

import pytest

from ordtrees import counting, oracle

ACCEPTANCE_LINES = []


@functools.lru_cache(maxsize=None)
def oracle_words(n, delta):
    return tuple(oracle.sorted_codewords(n, delta))


@functools.lru_cache(maxsize=None)
def table_for(n_max, delta):
    return counting.build_tables(n_max, delta)


@pytest.fixture
def words():
    return oracle_words


@pytest.fixture
def tables():
    return table_for


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
