import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from matkls.analysis import Analysis  # noqa: E402
from matkls.corpus import builtin_corpus  # noqa: E402
from matkls.named import build_named  # noqa: E402


@pytest.fixture(scope="session")
def corpus():
    return builtin_corpus()


@pytest.fixture(scope="session")
def analyses(corpus):
    """One shared ``Analysis`` per corpus matroid, so lattices and memos are built once."""
    return [Analysis(m) for m in corpus]


@pytest.fixture
def named():
    return build_named


ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split()[1])):
            terminalreporter.write_line(line)
