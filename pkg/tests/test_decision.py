import random

import pytest
from hypothesis import given, settings

from b2semiring.decision import Condition, decide, decide_inequality
from b2semiring.oracle import oracle_check
from b2semiring.terms import Polynomial, parse_polynomial as P

from .conftest import matrix_holds_everywhere, small_polys


@pytest.mark.parametrize(
    "p, q",
    [("xx", "xxx"), ("xyxyx", "xyx"), ("xxyy", "yyxx"), ("xy + yx", "yx + xy")],
)
def test_valid_identities(p, q):
    v = decide(P(p), P(q))
    assert v.valid and v.failed_condition is None
    assert bool(v)


@pytest.mark.parametrize(
    "p, q, cond",
    [
        ("xy", "yx", Condition.RHO),
        ("x", "y", Condition.CONTENT),
        ("x", "xx", Condition.RHO),
        ("xy + yy", "yy", Condition.CONTENT),
    ],
)
def test_invalid_identities(p, q, cond):
    v = decide(P(p), P(q))
    assert not v.valid and v.failed_condition is cond
    assert not matrix_holds_everywhere(P(p), P(q))


@pytest.mark.parametrize(
    "p, q, cond",
    [("xyx", "yxy", Condition.INIT), ("xyx", "xyxy", Condition.TERM)],
)
def test_init_and_term_failures(p, q, cond):
    # same rho-partition on both sides; only the distinguished classes differ
    v = decide(P(p), P(q))
    assert v.failed_condition is cond
    assert not matrix_holds_everywhere(P(p), P(q))


def test_condition_order_is_content_rho_init_term():
    # differs in every respect; content must be reported first
    assert decide(P("xy"), P("z")).failed_condition is Condition.CONTENT


def test_rho_failure_records_a_separating_pair():
    v = decide(P("xy"), P("yx"))
    a, b, tag = v.pair
    assert v.side == "lhs"
    assert (str(a), str(b), tag) == ("x:2", "y:1", "rho3")
    data = v.to_json()
    assert data["failed_condition"] == "Rho" and data["pair"] == ["x:2", "y:1", "rho3"]


@pytest.mark.parametrize(
    "u, v",
    [("x2z2", "x1z1 + x1z2 + x2z1"), ("x1yz2", "x1yz1 + x2yz2")],
)
def test_axioms_as_inequalities(u, v):
    assert decide_inequality(P(u), P(v)).valid


def test_inequality_content_failure():
    assert decide_inequality(P("x"), P("y")).failed_condition is Condition.CONTENT


def test_verdict_invariant():
    from b2semiring.decision import Verdict

    with pytest.raises(ValueError):
        Verdict(True, Condition.RHO)
    with pytest.raises(ValueError):
        Verdict(False)


@settings(max_examples=300)
@given(small_polys(), small_polys())
def test_agrees_with_oracle(p, q):
    assert decide(p, q).valid == oracle_check(p, q)


def test_equivalence_relation_on_samples():
    rng = random.Random(5)
    polys = [
        Polynomial(
            tuple(rng.choice("xy") for _ in range(rng.randint(1, 4)))
            for _ in range(rng.randint(1, 3))
        )
        for _ in range(60)
    ]
    for p in polys:
        assert decide(p, p).valid
    for p in polys:
        for q in polys:
            assert decide(p, q).valid == decide(q, p).valid
    classes = {}
    for p in polys:
        for rep in classes:
            if decide(p, rep).valid:
                classes[rep].append(p)
                break
        else:
            classes[p] = [p]
    for members in classes.values():
        for a in members:
            for b in members:
                assert decide(a, b).valid
    reps = list(classes)
    for a in reps:
        for b in reps:
            if a != b:
                assert not decide(a, b).valid


def test_congruence_on_samples():
    rng = random.Random(11)
    pairs = []
    for _ in range(3000):
        p = Polynomial(
            tuple(rng.choice("xy") for _ in range(rng.randint(1, 3)))
            for _ in range(rng.randint(1, 2))
        )
        q = Polynomial(
            tuple(rng.choice("xy") for _ in range(rng.randint(1, 3)))
            for _ in range(rng.randint(1, 2))
        )
        if p != q and decide(p, q).valid:
            pairs.append((p, q))
    assert len(pairs) > 20
    for (p, q), (p2, q2) in zip(pairs, pairs[1:]):
        assert decide(p * p2, q * q2).valid
        assert decide(p + p2, q + q2).valid
