from __future__ import annotations

import random
import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from garside import make_braid, make_cyclic_amalgam, normalize, parse_group_spec, parse_word  # noqa: E402


def random_element(structure, rng: random.Random, max_len: int = 3, max_inf: int = 1):
    """Random element with len ≤ max_len and |inf| ≤ max_inf, by rejection."""
    proper = [a for a in structure.enumerate_simples() if a not in (structure.identity, structure.delta)]
    while True:
        r = rng.randint(-max_inf, max_inf)
        k = rng.randint(0, max_len + 1)
        g = normalize(structure, r, [rng.choice(proper) for _ in range(k)])
        if g.len <= max_len and abs(g.inf) <= max_inf:
            return g


def random_word_element(structure, rng: random.Random, max_letters: int = 8):
    """Random product of atoms and their inverses."""
    g = structure.one()
    atoms = [structure.element(a) for a in structure.atoms]
    for _ in range(rng.randint(0, max_letters)):
        a = rng.choice(atoms)
        g = g * (a if rng.random() < 0.5 else a.inverse())
    return g


@pytest.fixture
def rng():
    return random.Random(20061)


@pytest.fixture(scope="session")
def B3():
    return make_braid(3)


@pytest.fixture(scope="session")
def B4():
    return make_braid(4)


@pytest.fixture(scope="session")
def C3():
    return make_cyclic_amalgam(3)


@pytest.fixture(scope="session")
def P22():
    return parse_group_spec("product(cyclic:2,cyclic:2)")


@pytest.fixture
def w():
    """w(structure, text) parses a word."""
    return parse_word


def pytest_terminal_summary(terminalreporter):
    acceptance = sys.modules.get("test_acceptance")
    if acceptance is None or not acceptance.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for line in acceptance.RESULTS:
        terminalreporter.write_line(line)
