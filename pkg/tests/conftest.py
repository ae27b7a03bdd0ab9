import sys
import random

import pytest

from tropcyclic.patterns import SignPattern


@pytest.fixture
def fig2():
    return SignPattern.from_string("+-+/+-+")


@pytest.fixture
def fig2_tall():
    return SignPattern.from_function(5, 3, lambda i, j: j == 2)


def random_patterns(n, max_cells, seed, max_p=None, max_d=None):
    rng = random.Random(seed)
    out = []
    while len(out) < n:
        p = rng.randint(1, max_p or max_cells)
        d = rng.randint(1, max_d or max_cells)
        if p * d <= max_cells:
            out.append(SignPattern.from_code(rng.getrandbits(p * d), p, d))
    return out


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance") or sys.modules.get("tests.test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for line in mod.RESULTS:
        terminalreporter.write_line(line)
