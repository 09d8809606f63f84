import itertools

import pytest
from hypothesis import strategies as st

from posetexp.catalog import Catalog
from posetexp.core import from_covers


@pytest.fixture(scope="session")
def catalog():
    return Catalog(7, use_cache=False)


@st.composite
def posets(draw, max_n=7, min_n=0):
    """Random posets: a random DAG on a natural labeling, then shuffled."""
    n = draw(st.integers(min_n, max_n))
    pairs = [(i, j) for i, j in itertools.combinations(range(n), 2)]
    chosen = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    perm = draw(st.permutations(range(n)))
    covers = [(perm[i], perm[j]) for (i, j), keep in zip(pairs, chosen) if keep]
    return from_covers(n, covers)


# one line per acceptance criterion, echoed at the end of the run
ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(line)
