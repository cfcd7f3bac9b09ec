"""Deciding semiring identities of B2.

``p = q`` holds in B2 exactly when the two sides have the same letters, the
same rho-partition, the same initial class and the same terminal class. The
conditions are checked in that order and the first failure is reported,
because the counterexample for each condition assumes the earlier ones hold.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Optional

from .rho import (
    RhoPartition,
    build_rho,
    first_uncovered_generator,
    partitions_equal,
)
from .terms import Polynomial, content


class Condition(str, enum.Enum):
    CONTENT = "Content"
    RHO = "Rho"
    INIT = "Init"
    TERM = "Term"

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True)
class Verdict:
    valid: bool
    failed_condition: Optional[Condition] = None
    detail: str = ""
    # Rho failures: a generating pair of one side that the other side's
    # partition separates, and which side ("lhs"/"rhs") it came from
    pair: Optional[tuple] = None
    side: Optional[str] = None

    def __post_init__(self):
        if self.valid != (self.failed_condition is None):
            raise ValueError("a verdict is valid iff no condition failed")

    def __bool__(self) -> bool:
        return self.valid

    def to_json(self) -> dict:
        out = {
            "valid": self.valid,
            "failed_condition": None if self.failed_condition is None else self.failed_condition.value,
            "detail": self.detail,
        }
        if self.pair is not None:
            out["pair"] = [str(self.pair[0]), str(self.pair[1]), self.pair[2]]
            out["side"] = self.side
        return out


VALID = Verdict(True)


def _fmt(letters) -> str:
    return "{" + ", ".join(sorted(letters)) + "}"


def decide(p: Polynomial, q: Polynomial) -> Verdict:
    cp, cq = content(p), content(q)
    if cp != cq:
        return Verdict(
            False,
            Condition.CONTENT,
            f"letters {_fmt(cp - cq)} only on the left, {_fmt(cq - cp)} only on the right",
            side="lhs" if cp - cq else "rhs",
        )
    if p == q:
        return VALID
    rp, rq = build_rho(p), build_rho(q)
    if not partitions_equal(rp, rq):
        return _rho_failure(p, q, rp, rq)
    if rp.init != rq.init:
        return Verdict(
            False,
            Condition.INIT,
            f"initial classes differ: {rp.init} vs {rq.init}",
        )
    if rp.term != rq.term:
        return Verdict(
            False,
            Condition.TERM,
            f"terminal classes differ: {rp.term} vs {rq.term}",
        )
    return VALID


def _rho_failure(p, q, rp: RhoPartition, rq: RhoPartition) -> Verdict:
    side = "lhs"
    pair = first_uncovered_generator(p, rq)
    if pair is None:
        side = "rhs"
        pair = first_uncovered_generator(q, rp)
    if pair is None:
        raise AssertionError("partitions differ but every generator is covered")
    a, b, tag = pair
    other = "right" if side == "lhs" else "left"
    return Verdict(
        False,
        Condition.RHO,
        f"{tag} pair ({a}, {b}) of the {'left' if side == 'lhs' else 'right'} side "
        f"is not related by rho of the {other} side",
        pair=pair,
        side=side,
    )


def decide_inequality(u: Polynomial, v: Polynomial) -> Verdict:
    """Decide ``u <= v``, i.e. the identity ``u + v = v``."""
    return decide(u + v, v)

