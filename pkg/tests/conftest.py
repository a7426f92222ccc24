from __future__ import annotations

from functools import lru_cache

import pytest

from medialchoose.embed import prune_low_degree
from medialchoose.fixtures import fixture
from medialchoose.medial import medial, orient_black_left


@lru_cache(maxsize=None)
def oriented(name: str):
    """Black-left medial of the pruned fixture ``name``."""
    return orient_black_left(medial(prune_low_degree(fixture(name)).graph))


@pytest.fixture
def om_of():
    return oriented


# Filled by test_acceptance.report(); printed after the run so the lines
# survive output capture.
ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split()[1].rstrip(":"))):
            terminalreporter.write_line(line)
