"""Proof objects: derivation DAGs of inequalities ``c <= goal`` and their JSON form.

A derivation proves ``counterpart <= goal``. Every node concludes some
polynomial ``c`` together with the implicit judgment ``c <= goal``, using one
of three rules:

``summand``
    ``c`` is a single word occurring in ``goal``.
``sum``
    ``c`` is the union of the premises' conclusions.
``axiom``
    one premise concluding exactly the right side of an instance of the rook
    or crossing axiom; ``c`` is the instance's left side.

The rook axiom is ``x2 z2 <= x1 z1 + x1 z2 + x2 z1`` and the crossing axiom is
``x1 y z2 <= x1 y z1 + x2 y z2``; the flank variables ``x1, x2, z1, z2`` may
be empty, ``y`` may not, and no instantiated word may be empty.

This module only holds data. Construction lives in :mod:`.derivation` and
verification in :mod:`.checker`.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Optional

from .terms import Polynomial, Word, parse_polynomial, parse_word

ROOK = "rook"
CROSSING = "crossing"
AXIOM_VARIABLES = {
    ROOK: ("x1", "x2", "z1", "z2"),
    CROSSING: ("x1", "x2", "y", "z1", "z2"),
}

SUMMAND = "summand"
SUM = "sum"
AXIOM = "axiom"
RULES = (SUMMAND, SUM, AXIOM)


@dataclass(frozen=True)
class AxiomInstance:
    """A claimed instance ``lhs <= rhs`` of one of the two axioms.

    ``lhs`` and ``rhs`` are claims; :func:`b2semiring.checker.check_instance`
    recomputes them from ``subst``.
    """

    axiom: str
    subst: tuple  # sorted (variable, word) pairs; words may be ()
    lhs: Optional[Word]
    rhs: Optional[Polynomial]

    @property
    def substitution(self) -> dict:
        return dict(self.subst)

    def subst_json(self) -> dict:
        return {k: "".join(w) for k, w in self.subst}


@dataclass(frozen=True)
class DerivationNode:
    id: int
    conclusion: Polynomial
    rule: str
    premises: tuple = ()
    instance: Optional[AxiomInstance] = None

    def to_json(self) -> dict:
        out = {
            "id": self.id,
            "conclusion": str(self.conclusion),
            "rule": self.rule,
            "premises": list(self.premises),
        }
        if self.instance is not None:
            out["axiom"] = self.instance.axiom
            out["subst"] = self.instance.subst_json()
        return out


@dataclass
class Derivation:
    goal: Polynomial
    nodes: list = field(default_factory=list)
    roots: list = field(default_factory=list)
    direction: str = "lhs<=rhs"

    def node(self, i: int) -> DerivationNode:
        return self.nodes[i]

    def __len__(self) -> int:
        return len(self.nodes)

    @property
    def axiom_count(self) -> int:
        return sum(1 for n in self.nodes if n.rule == AXIOM)

    def to_json(self) -> dict:
        return {
            "goal": str(self.goal),
            "direction": self.direction,
            "nodes": [n.to_json() for n in self.nodes],
            "roots": list(self.roots),
        }

    def dumps(self, **kw) -> str:
        return json.dumps(self.to_json(), **kw)

    @classmethod
    def from_json(cls, data: dict) -> "Derivation":
        """Rebuild a derivation from its JSON form.

        Axiom instances take their claimed ``lhs`` from the node's own
        conclusion and their claimed ``rhs`` from the single premise. Nothing
        is validated beyond parsing.
        """
        goal = parse_polynomial(data["goal"])
        raw = data["nodes"]
        conclusions = {}
        for item in raw:
            conclusions[item["id"]] = parse_polynomial(item["conclusion"])
        nodes = []
        for item in raw:
            nid = item["id"]
            concl = conclusions[nid]
            premises = tuple(item.get("premises", ()))
            inst = None
            if item["rule"] == AXIOM:
                subst = tuple(
                    sorted((k, parse_word(v) if v else ()) for k, v in item.get("subst", {}).items())
                )
                lhs = concl.words[0] if len(concl) == 1 else None
                rhs = conclusions.get(premises[0]) if len(premises) == 1 else None
                inst = AxiomInstance(item.get("axiom", ""), subst, lhs, rhs)
            nodes.append(DerivationNode(nid, concl, item["rule"], premises, inst))
        return cls(goal, nodes, list(data.get("roots", [])), data.get("direction", "lhs<=rhs"))

    @classmethod
    def loads(cls, text: str) -> "Derivation":
        return cls.from_json(json.loads(text))


def load_proofs(text: str) -> list[Derivation]:
    """Parse a proof file holding one derivation or a list of them."""
    data = json.loads(text)
    if isinstance(data, dict):
        data = [data]
    return [Derivation.from_json(d) for d in data]
