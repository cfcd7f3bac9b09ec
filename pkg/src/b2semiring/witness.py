"""Counterexample valuations for identities that fail in B2."""

from __future__ import annotations

from typing import Mapping

from .algebra import B2, Valuation
from .decision import Condition, Verdict, decide
from .rho import LEFT, RIGHT, Position, RhoPartition, build_rho
from .terms import Polynomial, content


class ValidIdentityError(ValueError):
    """Raised when a witness is requested for an identity that holds."""


def valuation_from_coloring(coloring: Mapping[Position, int], r: RhoPartition) -> Valuation:
    """Send each letter ``z`` to ``e_ij`` with ``i, j`` the colours of its two ends.

    ``coloring`` maps class representatives (see :attr:`RhoPartition.rep`) to
    1 or 2.
    """
    out = {}
    for z in r.letters:
        i = coloring[r.find(Position(z, LEFT))]
        j = coloring[r.find(Position(z, RIGHT))]
        out[z] = B2.unit(i, j)
    return Valuation(out)


def indicator_coloring(r: RhoPartition, target: Position) -> dict[Position, int]:
    """Colour the class of ``target`` with 1 and every other class with 2."""
    t = r.find(target)
    return {rep: 1 if rep == t else 2 for rep in set(r.rep.values())}


def build_witness(p: Polynomial, q: Polynomial, verdict: Verdict | None = None) -> Valuation:
    """A valuation under which ``p`` and ``q`` take different values.

    The construction depends on the first violated condition:

    * content: letters of the side with fewer letters go to ``e11`` and the
      surplus letters go to zero, so one side is ``e11`` and the other zero;
    * rho: take a generating pair of one side that the other side's partition
      separates; colour the class of its first end 1 and everything else 2.
      The side owning the pair evaluates to zero, the other to a nonzero unit;
    * init / term: colour the initial (terminal) class of ``p`` with 1 and the
      rest with 2; both sides become distinct nonzero units.
    """
    if verdict is None:
        verdict = decide(p, q)
    if verdict.valid:
        raise ValidIdentityError("the identity holds in B2; there is no witness")
    cond = verdict.failed_condition
    if cond is Condition.CONTENT:
        cp, cq = content(p), content(q)
        if cp - cq:
            small, extra = cq, cp - cq
        else:
            small, extra = cp, cq - cp
        v = {a: B2.E11 for a in small}
        v.update({a: B2.ZERO for a in extra})
        return Valuation(v)
    if cond is Condition.RHO:
        a, _, _ = verdict.pair
        # colour the partition of the side that does not own the pair
        other = q if verdict.side == "lhs" else p
        r = build_rho(other)
        return valuation_from_coloring(indicator_coloring(r, a), r)
    r = build_rho(p)
    if cond is Condition.INIT:
        return valuation_from_coloring(indicator_coloring(r, r.init), r)
    if cond is Condition.TERM:
        return valuation_from_coloring(indicator_coloring(r, r.term), r)
    raise ValueError(f"unknown condition {cond!r}")
