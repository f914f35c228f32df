import pytest

from blockconn import kernels

# adjacency matrix of the five-vertex worked example
PAPER_A = [
    [0, 1, 0, 1, 0],
    [1, 0, 0, 1, 0],
    [0, 0, 0, 0, 1],
    [1, 1, 0, 0, 0],
    [0, 0, 1, 0, 0],
]
# the matrix printed after interchanging rows/columns 3 and 4
PAPER_A_PRIME_TEXT = "0 1 1 0 0\n1 0 1 0 0\n1 1 0 0 0\n0 0 0 0 1\n0 0 0 1 0"

CRITERIA_RESULTS = []


@pytest.fixture
def paper_matrix():
    from blockconn import validate_adjacency

    return validate_adjacency(PAPER_A)


@pytest.fixture(params=sorted(kernels.BACKENDS))
def backend(request):
    return kernels.BACKENDS[request.param]


def pytest_terminal_summary(terminalreporter):
    if CRITERIA_RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in CRITERIA_RESULTS:
            terminalreporter.write_line(line)
