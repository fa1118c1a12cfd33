import itertools

import pytest

from mrank.graph import Graph


def path(n):
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n):
    return Graph(n, [(i, i + 1) for i in range(n - 1)] + [(0, n - 1)])


def complete(n):
    return Graph(n, itertools.combinations(range(n), 2))


def star(k):
    return Graph(k + 1, [(0, i) for i in range(1, k + 1)])


K3_PENDANT = Graph(4, [(0, 1), (0, 2), (1, 2), (0, 3)])
C5_PENDANT = Graph(6, [(0, 1), (1, 2), (2, 3), (3, 4), (0, 4), (0, 5)])
PETERSEN = Graph(10, [(i, (i + 1) % 5) for i in range(5)]
                 + [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
                 + [(i, i + 5) for i in range(5)])


@pytest.fixture
def k3_pendant():
    return K3_PENDANT


@pytest.fixture
def c5_pendant():
    return C5_PENDANT


# one line per acceptance criterion, printed after the run
ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split("criterion ")[1].split(":")[0])):
            terminalreporter.write_line(line)
