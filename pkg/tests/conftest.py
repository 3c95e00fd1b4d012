import warnings

import pytest

from burst2d import BitGrid, build_code

EX1_ZEROS = [(0, 0), (1, 1), (1, 4), (2, 2), (2, 3)]
EX2_ZEROS = [(0, 0), (1, 0), (0, 1), (1, 1), (2, 3)]
TRIPLE = [(0, 0), (1, 0), (0, 1)]

EX1_GRID = "11100\n01000\n00000\n"
R1 = "11100\n00100\n00000\n"
R2 = "00000\n00110\n00000\n"
R3 = "00011\n00000\n11000\n"


@pytest.fixture(scope="session")
def ex1_code():
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        return build_code(3, 5, EX1_ZEROS, [(0, 0)])


@pytest.fixture(scope="session")
def ex2_code():
    return build_code(3, 5, EX2_ZEROS, TRIPLE)


@pytest.fixture
def ex1_grid():
    return BitGrid.from_text(EX1_GRID)


@pytest.fixture
def r1():
    return BitGrid.from_text(R1)


@pytest.fixture
def r2():
    return BitGrid.from_text(R2)


@pytest.fixture
def r3():
    return BitGrid.from_text(R3)


_acceptance = []


def pytest_runtest_makereport(item, call):
    if call.when == "call" and item.get_closest_marker("acceptance"):
        doc = (item.function.__doc__ or item.name).strip().splitlines()[0]
        _acceptance.append((item.name, "PASS" if call.excinfo is None else "FAIL", doc))


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    terminalreporter.section("acceptance criteria")
    for name, verdict, doc in sorted(_acceptance):
        terminalreporter.write_line(f"[{verdict}] {doc}")
