import random

import pytest

from ascent_lab.groups import build_group

GAMMA2 = "hnn-free:a1 a2 A1 A2;a1"
AMALGAM = "matrix:2:[[1,2],[0,1]],[[1,0],[2,1]]"

SHIPPED = [
    "bs:2",
    "bs:3",
    "bs:5",
    "wreath",
    "heis",
    "zd:1",
    "zd:2",
    "hnn-abelian:[[2]]",
    "hnn-abelian:[[2,0],[0,3]]",
    "hnn-abelian:[[1,1],[0,2]]",
    "hnn-abelian:[[0,1],[1,1]]",
    GAMMA2,
    AMALGAM,
]


def random_word(group, rng, max_len=8):
    symbols = group.symmetric_symbols()
    return tuple(
        (s.lower(), 1 if s == s.lower() else -1)
        for s in (rng.choice(symbols) for _ in range(rng.randint(0, max_len)))
    )


@pytest.fixture(params=SHIPPED)
def shipped_group(request):
    return build_group(request.param)


@pytest.fixture
def rng():
    return random.Random(20261014)


# one line per acceptance criterion, printed after the run
ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(line)
