import random

import pytest

from idealdb.polyring import LEX, Ring
from idealdb.relalg import StoredRelation

FOUR_TUPLES = [(1, 1, 1), (2, 1, 1), (3, 2, 1), (3, 2, 2)]


def random_rows(rng, arity, max_rows=5, lo=-2, hi=3):
    return [tuple(rng.randint(lo, hi) for _ in range(arity)) for _ in range(rng.randint(1, max_rows))]


@pytest.fixture
def rng():
    return random.Random(20260101)


@pytest.fixture(scope="session")
def four_tuple():
    """The four-tuple relation over (x, y, z), degrevlex."""
    return StoredRelation.from_points(FOUR_TUPLES, ("x", "y", "z"))


@pytest.fixture(scope="session")
def four_tuple_lex():
    """The same relation over (z, y, x) with lex, where y is linear in the basis."""
    return StoredRelation.from_points([t[::-1] for t in FOUR_TUPLES], ("z", "y", "x"), LEX)


@pytest.fixture
def xyz():
    return Ring(("x", "y", "z"))


# Acceptance criteria record their outcome here; the summary hook prints one line each.
ACCEPTANCE_RESULTS: dict = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(ACCEPTANCE_RESULTS):
        ok, title = ACCEPTANCE_RESULTS[number]
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  criterion {number:2d}: {title}")
