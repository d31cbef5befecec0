import pytest

from rdnum import enumerate_connected_graphs, rd_exact
from rdnum.survey import canonical_form

ACCEPTANCE_LINES = []


def record_acceptance(line: str) -> None:
    """Collect one pass line per acceptance criterion for the summary."""
    ACCEPTANCE_LINES.append(line)
    print(line)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.line(line)


@pytest.fixture(scope="session")
def census6():
    """All connected graphs with 2..6 vertices, one per isomorphism class."""
    out = []
    for n in range(2, 7):
        out.extend(enumerate_connected_graphs(n))
    return out


@pytest.fixture(scope="session")
def pure_rd_census(census6):
    """Canonical form -> (graph, value) with the value found by search
    alone: no bound rules beyond the 1..n-1 window, so nothing under test
    feeds its own verification."""
    table = {}
    for g in census6:
        value = rd_exact(g, rules=(), max_search_edges=15).value
        table[canonical_form(g)] = (g, value)
    return table
