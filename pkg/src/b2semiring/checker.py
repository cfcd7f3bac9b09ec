"""Independent verification of derivations.

Nothing here calls the derivation engine or the decision procedure: axiom
instances are re-instantiated from their substitutions and every node is
checked against its rule locally.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .proof import AXIOM, AXIOM_VARIABLES, CROSSING, ROOK, SUM, SUMMAND, AxiomInstance, Derivation
from .terms import Polynomial, is_letter


@dataclass
class CheckReport:
    ok: bool = True
    errors: list = field(default_factory=list)  # (node id or None, reason)

    def fail(self, node, reason: str) -> None:
        self.ok = False
        self.errors.append((node, reason))

    def __bool__(self) -> bool:
        return self.ok

    def lines(self) -> list[str]:
        return [f"node {n}: {r}" if n is not None else r for n, r in self.errors]


def instantiate(axiom: str, subst: dict):
    """Left side and the list of right-side words of an axiom under ``subst``."""
    s = {k: tuple(v) for k, v in subst.items()}
    if axiom == ROOK:
        x1, x2, z1, z2 = s["x1"], s["x2"], s["z1"], s["z2"]
        return x2 + z2, [x1 + z1, x1 + z2, x2 + z1]
    if axiom == CROSSING:
        x1, x2, y, z1, z2 = s["x1"], s["x2"], s["y"], s["z1"], s["z2"]
        return x1 + y + z2, [x1 + y + z1, x2 + y + z2]
    raise ValueError(f"unknown axiom {axiom!r}")


def instance_problem(inst: AxiomInstance) -> str | None:
    """Why ``inst`` is not an exact axiom instance, or None if it is."""
    names = AXIOM_VARIABLES.get(inst.axiom)
    if names is None:
        return f"unknown axiom {inst.axiom!r}"
    subst = dict(inst.subst)
    if set(subst) != set(names):
        return f"{inst.axiom} substitution must bind exactly {', '.join(names)}"
    for k, w in subst.items():
        if not all(is_letter(a) for a in w):
            return f"substitution for {k} is not a word"
    if inst.axiom == CROSSING and not subst["y"]:
        return "crossing variable y must be nonempty"
    lhs, rhs = instantiate(inst.axiom, subst)
    if not lhs or not all(rhs):
        return "an instantiated word is empty"
    if inst.lhs is None or tuple(inst.lhs) != lhs:
        return f"left side is not the instance {''.join(lhs)}"
    if inst.rhs is None or inst.rhs != Polynomial(rhs):
        return f"right side is not the instance {Polynomial(rhs)}"
    return None


def check_instance(inst: AxiomInstance) -> bool:
    return instance_problem(inst) is None


def _acyclic(d: Derivation) -> bool:
    ids = {n.id: n for n in d.nodes}
    state = {}

    for start in ids:
        if start in state:
            continue
        stack = [(start, iter(ids[start].premises))]
        state[start] = 1
        while stack:
            nid, it = stack[-1]
            nxt = next(it, None)
            if nxt is None:
                state[nid] = 2
                stack.pop()
                continue
            if nxt not in ids:
                continue  # reported elsewhere
            if state.get(nxt) == 1:
                return False
            if nxt not in state:
                state[nxt] = 1
                stack.append((nxt, iter(ids[nxt].premises)))
    return True


def verify(d: Derivation, counterpart: Polynomial | None = None) -> CheckReport:
    """Check every node of ``d`` and, if given, that the roots cover ``counterpart``."""
    report = CheckReport()
    nodes = {}
    for n in d.nodes:
        if n.id in nodes:
            report.fail(n.id, "duplicate node id")
        nodes[n.id] = n
    goal_words = set(d.goal.words)
    for n in d.nodes:
        missing = [i for i in n.premises if i not in nodes]
        if missing:
            report.fail(n.id, f"unknown premises {missing}")
            continue
        if n.rule == SUMMAND:
            if n.premises:
                report.fail(n.id, "summand nodes take no premises")
            if len(n.conclusion) != 1 or n.conclusion.words[0] not in goal_words:
                report.fail(n.id, f"{n.conclusion} is not a summand of the goal")
        elif n.rule == SUM:
            if not n.premises:
                report.fail(n.id, "sum node without premises")
                continue
            union = set()
            for i in n.premises:
                union.update(nodes[i].conclusion.words)
            if set(n.conclusion.words) != union:
                report.fail(n.id, "conclusion is not the union of the premises")
        elif n.rule == AXIOM:
            if len(n.premises) != 1:
                report.fail(n.id, "axiom nodes take exactly one premise")
                continue
            inst = n.instance
            if inst is None:
                report.fail(n.id, "axiom node without an instance")
                continue
            premise = nodes[n.premises[0]].conclusion
            # judge against the node's actual conclusion and premise, not the
            # claims carried by the instance
            claimed = AxiomInstance(
                inst.axiom,
                inst.subst,
                n.conclusion.words[0] if len(n.conclusion) == 1 else None,
                premise,
            )
            problem = instance_problem(claimed)
            if problem:
                report.fail(n.id, problem)
        else:
            report.fail(n.id, f"unknown rule {n.rule!r}")
    if not _acyclic(d):
        report.fail(None, "premise graph has a cycle")
    bad_roots = [r for r in d.roots if r not in nodes]
    if bad_roots:
        report.fail(None, f"unknown roots {bad_roots}")
    if counterpart is not None:
        covered = set()
        for r in d.roots:
            if r in nodes:
                covered.update(nodes[r].conclusion.words)
        uncovered = [w for w in counterpart.words if w not in covered]
        if uncovered:
            report.fail(None, "roots do not cover " + " + ".join("".join(w) for w in uncovered))
    return report


def check_derivation(d: Derivation, counterpart: Polynomial | None = None) -> bool:
    return verify(d, counterpart).ok


def check_identity_proof(proofs, p: Polynomial, q: Polynomial) -> CheckReport:
    """Check derivations of ``p <= q`` (direction ``lhs<=rhs``) and ``q <= p``."""
    expected = {"lhs<=rhs": (q, p), "rhs<=lhs": (p, q)}
    report = CheckReport()
    seen = set()
    for d in proofs:
        if d.direction not in expected:
            report.fail(None, f"unknown direction {d.direction!r}")
            continue
        goal, counterpart = expected[d.direction]
        if d.goal != goal:
            report.fail(None, f"[{d.direction}] goal {d.goal} should be {goal}")
            continue
        seen.add(d.direction)
        for node, reason in verify(d, counterpart).errors:
            report.fail(node, f"[{d.direction}] {reason}")
    for direction in expected:
        if direction not in seen:
            report.fail(None, f"missing derivation for {direction}")
    return report
