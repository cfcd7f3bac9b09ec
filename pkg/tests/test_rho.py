import itertools

import pytest
from hypothesis import given, settings

from b2semiring.rho import (
    LEFT,
    RHO1,
    RHO2,
    RHO3,
    RHO3_INV,
    RIGHT,
    Position,
    UnionFind,
    build_rho,
    connection_path,
    edge_kind,
    generating_pairs,
    partitions_equal,
)
from b2semiring.terms import Polynomial, parse_polynomial as P

from .conftest import polys_st


def pos(text):
    return Position.parse(text)


def warshall_classes(p):
    """rho(p) by Warshall closure of the symmetrized generator relation."""
    positions = sorted(Position(a, e) for a in p.content for e in (LEFT, RIGHT))
    idx = {q: i for i, q in enumerate(positions)}
    n = len(positions)
    r = [[i == j for j in range(n)] for i in range(n)]
    for a, b, _ in generating_pairs(p):
        r[idx[a]][idx[b]] = r[idx[b]][idx[a]] = True
    for k in range(n):
        for i in range(n):
            if r[i][k]:
                for j in range(n):
                    if r[k][j]:
                        r[i][j] = True
    return {
        frozenset(positions[j] for j in range(n) if r[i][j]) for i in range(n)
    }


def test_union_find():
    uf = UnionFind(5)
    uf.union(0, 1)
    uf.union(3, 4)
    assert uf.same(0, 1) and uf.same(3, 4) and not uf.same(1, 3)
    uf.union(1, 4)
    assert uf.same(0, 3)


def test_generating_pairs_examples():
    g = set(generating_pairs(P("xy")))
    assert (pos("x:2"), pos("y:1"), RHO3) in g
    assert (pos("x:1"), pos("x:1"), RHO1) in g
    assert (pos("y:2"), pos("y:2"), RHO2) in g
    g = set(generating_pairs(P("x + y")))
    assert (pos("x:1"), pos("y:1"), RHO1) in g
    assert (pos("x:2"), pos("y:2"), RHO2) in g
    assert (pos("x:2"), pos("x:1"), RHO3) in set(generating_pairs(P("xx")))


def classes(r):
    return {frozenset(c) for c in r.classes}


def test_build_rho_single_word():
    r = build_rho(P("xy"))
    assert classes(r) == {
        frozenset({pos("x:1")}),
        frozenset({pos("x:2"), pos("y:1")}),
        frozenset({pos("y:2")}),
    }
    assert r.init == pos("x:1") and r.term == pos("y:2")


def test_build_rho_one_class():
    r = build_rho(P("xxyy + yyxx"))
    assert classes(r) == {frozenset(map(pos, ["x:1", "x:2", "y:1", "y:2"]))}
    assert r.init == r.term


def test_build_rho_letter():
    r = build_rho(P("x"))
    assert classes(r) == {frozenset({pos("x:1")}), frozenset({pos("x:2")})}
    assert r.init == pos("x:1") and r.term == pos("x:2")


@pytest.mark.parametrize(
    "p, q, equal",
    [("xy", "xy", True), ("xy", "yx", False), ("xxyy", "yyxx", True)],
)
def test_partitions_equal(p, q, equal):
    assert partitions_equal(build_rho(P(p)), build_rho(P(q))) is equal


def test_partitions_equal_needs_same_positions():
    with pytest.raises(ValueError):
        partitions_equal(build_rho(P("x")), build_rho(P("y")))


def test_rho_json():
    data = build_rho(P("xy")).to_json()
    assert data == {"classes": [["x:1"], ["x:2", "y:1"], ["y:2"]], "init": 0, "term": 2}


@given(polys_st)
def test_union_find_matches_warshall(p):
    assert classes(build_rho(p)) == warshall_classes(p)


@given(polys_st)
def test_adjacent_letters_related(p):
    r = build_rho(p)
    for w in p:
        for a, b in zip(w, w[1:]):
            assert r.same(Position(a, RIGHT), Position(b, LEFT))


@given(polys_st)
def test_ends_in_init_and_term(p):
    r = build_rho(p)
    for w in p:
        assert r.same(Position(w[0], LEFT), r.init)
        assert r.same(Position(w[-1], RIGHT), r.term)


def test_connection_path_examples():
    assert connection_path(P("xy"), pos("x:2"), pos("y:1")) == [pos("x:2"), pos("y:1")]
    assert connection_path(P("xy + xz"), pos("y:1"), pos("z:1")) == [
        pos("y:1"),
        pos("x:2"),
        pos("z:1"),
    ]
    assert connection_path(P("xy"), pos("x:1"), pos("x:1")) == [pos("x:1")]
    with pytest.raises(ValueError):
        connection_path(P("xy"), pos("x:1"), pos("y:2"))


@settings(max_examples=60)
@given(polys_st)
def test_connection_paths_follow_generators(p):
    r = build_rho(p)
    gens = {(a, b): tag for a, b, tag in generating_pairs(p)}
    positions = r.positions
    for a, b in itertools.combinations(positions, 2):
        if not r.same(a, b):
            continue
        path = connection_path(p, a, b)
        assert path[0] == a and path[-1] == b
        assert len(set(path)) == len(path)
        for s, t in zip(path, path[1:]):
            kind = edge_kind(s, t)
            if kind == RHO3_INV:
                assert gens.get((t, s)) == RHO3
            else:
                assert gens.get((s, t)) == kind
