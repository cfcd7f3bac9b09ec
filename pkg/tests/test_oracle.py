from math import comb

import pytest

from b2semiring.algebra import B2, eval_poly
from b2semiring.oracle import (
    TooManyLetters,
    all_polynomials,
    enumerate_identities,
    find_counterexample,
    oracle_check,
    valuation_at,
)
from b2semiring.terms import Polynomial, parse_polynomial as P

from .conftest import matrix_holds_everywhere


def test_examples():
    assert oracle_check(P("xx"), P("xxx"))
    assert not oracle_check(P("xy"), P("yx"))
    p = P("xy + yz + zx")
    assert oracle_check(p, p)


def test_counterexample_is_first_in_counter_order():
    cex = find_counterexample(P("xy"), P("yx"))
    assert dict(cex) == {"x": B2.E11, "y": B2.E12}
    # nothing earlier in base-5 order separates the sides
    for i in range(7):  # (e11, e12) is index 1*5 + 2
        v = valuation_at(["x", "y"], i)
        assert eval_poly(P("xy"), v) == eval_poly(P("yx"), v)


def test_chunking_and_workers_do_not_change_the_answer():
    p, q = P("xyzt + tzyx"), P("xyzt")
    base = find_counterexample(p, q)
    assert find_counterexample(p, q, chunk_size=7) == base
    assert find_counterexample(p, q, chunk_size=11, workers=4) == base


def test_letter_limit():
    p = P("abcdefghi")
    with pytest.raises(TooManyLetters):
        oracle_check(p, p)
    assert oracle_check(p, p, max_letters=9)


def test_symmetric(family):
    for p in family[:40]:
        for q in family[:40]:
            assert oracle_check(p, q) == oracle_check(q, p)


def test_agrees_with_matrix_semantics(family):
    for p in family[::7]:
        for q in family[::5]:
            assert oracle_check(p, q) == matrix_holds_everywhere(p, q)


def test_extra_letters_do_not_matter():
    p, q = P("xx"), P("xxx")
    for i in range(25):
        v = dict(valuation_at(["x", "w"], i))
        assert eval_poly(p, v) == eval_poly(q, v)


def test_enumeration_counts():
    assert list(enumerate_identities(1, 1, 1)) == [(P("x"), P("x"))]
    assert len(list(enumerate_identities(1, 1, 2))) == 4
    n_words = 2 + 4 + 8
    n_polys = n_words + comb(n_words, 2)
    polys = all_polynomials(2, 2, 3)
    assert len(polys) == n_polys == 105
    assert len(set(polys)) == 105
    assert sum(1 for _ in enumerate_identities(2, 2, 3)) == 11025


def test_enumeration_is_deterministic():
    assert list(enumerate_identities(2, 1, 2)) == list(enumerate_identities(2, 1, 2))
