import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from cyclesmith.poset import NLPoset  # noqa: E402


@pytest.fixture
def six_poset():
    """The six-element poset with code 10455."""
    return NLPoset.from_covers(6, [(1, 2), (1, 4), (2, 5), (4, 5), (3, 6), (5, 6)])


@pytest.fixture
def size3():
    """Size-3 posets labelled by their edge letter in the two-vertex arc digraph."""
    c = NLPoset.from_covers
    return {
        "a": c(3, [(1, 2), (2, 3)]),
        "b": c(3, [(1, 2), (1, 3)]),
        "c": c(3, [(1, 2)]),
        "d": c(3, [(1, 3), (2, 3)]),
        "e": c(3, [(2, 3)]),
        "f": c(3, []),
        "g": c(3, [(1, 3)]),
    }


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for line in mod.summary_lines():
        terminalreporter.write_line(line)
