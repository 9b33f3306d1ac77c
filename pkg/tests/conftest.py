import random
import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from colorcomp.seqcore import Coloration  # noqa: E402

ACCEPTANCE_LINES = []


def random_coloration(rng: random.Random, max_prefix: int = 5, max_entry: int = 3) -> Coloration:
    prefix = tuple(rng.randint(0, max_entry) for _ in range(rng.randint(0, max_prefix)))
    return Coloration(prefix, (rng.choice((0, 1)),))


@pytest.fixture
def rng():
    return random.Random(20261015)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
