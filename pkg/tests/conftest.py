import itertools
import random

import pytest

from stonework.algebra import FiniteAlgebra, PowerSetAlgebra, relabel, two_element_algebra
from stonework.lindenbaum import build_lt_algebra
from stonework.logic import Theory


def powerset(*ground):
    return PowerSetAlgebra(tuple(str(g) for g in ground)).materialize()


def powerset_n(k):
    return powerset(*"abcdefghijkl"[:k])


def permuted_copies(count=20, seed=7):
    """Isomorphic copies of P(X), |X| <= 3, with shuffled carrier order."""
    rng = random.Random(seed)
    out = []
    for i in range(count):
        A = powerset_n(1 + i % 3)
        order = list(A.carrier)
        rng.shuffle(order)
        out.append(relabel(A, order))
    return out


def small_test_algebras():
    """Power sets |X| <= 4, permuted copies and small LT algebras; all carriers <= 16."""
    algebras = [powerset_n(k) for k in range(5)] + permuted_copies()
    for formulas, universe in ([[], "P"], [[], "PQ"], [["P"], "PQ"], [["P | Q"], "PQ"], [["P -> Q"], "PQR"]):
        algebras.append(build_lt_algebra(Theory.of(formulas, list(universe))).algebra)
    return [A for A in algebras if A.size <= 16]


def medium_test_algebras():
    """Adds carriers of 32..256 elements."""
    extra = [powerset_n(5), powerset_n(8), build_lt_algebra(Theory.of([], list("PQR"))).algebra]
    extra.append(build_lt_algebra(Theory.of(["P | Q | R"], list("PQR"))).algebra)
    return small_test_algebras() + extra


def brute_axioms(A):
    """Pure-Python scan of B1-B5; returns {label: first witness or None}."""
    J, M, C = A.join_table.tolist(), A.meet_table.tolist(), A.complement_table.tolist()
    n = A.size
    checks = {
        "B1": (3, lambda x, y, z: J[x][J[y][z]] == J[J[x][y]][z] and M[x][M[y][z]] == M[M[x][y]][z]),
        "B2": (2, lambda x, y: J[x][y] == J[y][x] and M[x][y] == M[y][x]),
        "B3": (2, lambda x, y: J[x][M[x][y]] == x and M[x][J[x][y]] == x),
        "B4": (3, lambda x, y, z: M[x][J[y][z]] == J[M[x][y]][M[x][z]] and J[x][M[y][z]] == M[J[x][y]][J[x][z]]),
        "B5": (1, lambda x: J[x][C[x]] == A.one and M[x][C[x]] == A.zero),
    }
    out = {}
    for label, (arity, holds) in checks.items():
        out[label] = next((t for t in itertools.product(range(n), repeat=arity) if not holds(*t)), None)
    return out


@pytest.fixture
def two():
    return two_element_algebra()


@pytest.fixture
def trivial():
    return powerset()


@pytest.fixture
def p12():
    return powerset(1, 2)


@pytest.fixture
def p123():
    return powerset(1, 2, 3)


@pytest.fixture
def broken_two():
    """Two elements with −0 = 0 and −1 = 1."""
    return FiniteAlgebra(["0", "1"], [[0, 1], [1, 1]], [[0, 0], [0, 1]], [0, 1], zero=0, one=1)


ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split("criterion")[1].split(":")[0])):
            terminalreporter.write_line(line)
