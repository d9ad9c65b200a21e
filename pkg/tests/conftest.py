import sys
from pathlib import Path

import pytest
from hypothesis import strategies as st

from lincount.partitions import BoxShape, Partition

sys.path.insert(0, str(Path(__file__).parent))

# lines collected by the acceptance tests, printed once at the end of the run
ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


@st.composite
def boxes(draw, max_rows=3, max_cols=5):
    return BoxShape(draw(st.integers(1, max_rows)), draw(st.integers(1, max_cols)))


@st.composite
def partitions_in(draw, box):
    parts = []
    bound = box.cols
    for _ in range(box.rows):
        part = draw(st.integers(0, bound))
        parts.append(part)
        bound = part
    return Partition(parts)


@pytest.fixture
def acceptance_lines():
    return ACCEPTANCE_LINES
