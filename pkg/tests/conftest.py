import pytest

from petersen_cover import Cover, PetersenGraph

# a worked 21-vertex cover of P(16,5) with inner strips of sizes 1, 2, 3 and 5
FIG1_U = [2, 3, 5, 6, 7, 9, 11, 13, 15, 16]
FIG1_V = [1, 2, 3, 4, 7, 8, 10, 11, 12, 14, 16]

ACCEPTANCE_LINES = []


@pytest.fixture
def p16_5():
    return PetersenGraph(16, 5)


@pytest.fixture
def fig1_cover():
    return Cover.from_indices(16, 5, FIG1_U, FIG1_V)


@pytest.fixture
def acceptance_log():
    return ACCEPTANCE_LINES


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
