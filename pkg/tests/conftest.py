import itertools

import numpy as np
import pytest
from hypothesis import strategies as st

from b2semiring import Polynomial, decide, parse_polynomial
from b2semiring.oracle import all_polynomials

P = parse_polynomial

# B2 elements as 0/1 matrices, in the order ZERO, e11, e12, e21, e22. Matrix
# product is the semiring product; the elementwise (Hadamard) product is the
# meet, i.e. the semiring sum.
MATRICES = [
    np.array([[0, 0], [0, 0]]),
    np.array([[1, 0], [0, 0]]),
    np.array([[0, 1], [0, 0]]),
    np.array([[0, 0], [1, 0]]),
    np.array([[0, 0], [0, 1]]),
]


def matrix_index(m) -> int:
    for i, a in enumerate(MATRICES):
        if np.array_equal(a, m):
            return i
    raise AssertionError(f"not an element of B2: {m}")


def matrix_eval(p: Polynomial, valuation: dict) -> int:
    """Evaluate by literal 2x2 matrix arithmetic (independent of the tables)."""
    total = None
    for w in p:
        m = MATRICES[int(valuation[w[0]])]
        for a in w[1:]:
            m = m @ MATRICES[int(valuation[a])]
        total = m if total is None else total * m
    return matrix_index(total)


def matrix_holds_everywhere(p: Polynomial, q: Polynomial) -> bool:
    letters = sorted(p.content | q.content)
    for values in itertools.product(range(5), repeat=len(letters)):
        v = dict(zip(letters, values))
        if matrix_eval(p, v) != matrix_eval(q, v):
            return False
    return True


letters_st = st.sampled_from(["x", "y", "z", "t"])
words_st = st.lists(letters_st, min_size=1, max_size=5).map(tuple)
polys_st = st.lists(words_st, min_size=1, max_size=4).map(Polynomial)


def small_polys(alphabet="xy"):
    return st.lists(
        st.lists(st.sampled_from(list(alphabet)), min_size=1, max_size=4).map(tuple),
        min_size=1,
        max_size=3,
    ).map(Polynomial)


@pytest.fixture(scope="session")
def family():
    return all_polynomials(2, 2, 3)


@pytest.fixture(scope="session")
def family_verdicts(family):
    return {(p, q): decide(p, q) for p in family for q in family}


def pytest_terminal_summary(terminalreporter):
    from . import test_acceptance

    if test_acceptance.RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in test_acceptance.RESULTS:
            terminalreporter.write_line(line)
