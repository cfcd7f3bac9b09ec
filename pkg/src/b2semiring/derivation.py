"""Constructing derivations of valid identities from the rook and crossing axioms.

Given a polynomial ``q`` (the goal), :class:`Deriver` produces nodes proving
``w <= q`` for words ``w``. It works up from three kinds of facts:

* first letters: if ``(x, 1)`` lies in the initial class of ``q``, some word
  beginning with ``x`` is below ``q``;
* last letters: the mirror image, obtained by running the first-letter
  construction on the reversed polynomial and reversing the result;
* inner pairs: if ``(x, 2)`` and ``(y, 1)`` are rho-related, some word
  containing the factor ``xy`` is below ``q``.

Each fact is proved by induction along a shortest chain of generating pairs
(see :func:`b2semiring.rho.connection_path`), and every induction step is a
short fixed chain of crossing and rook instances. A word is then assembled
one letter at a time from these facts.

Whenever a construction needs "some word of q" with a given shape, the
lexicographically least word is used, at its first matching position, so
proofs are reproducible.
"""

from __future__ import annotations

from collections import Counter
from typing import Iterable

from .decision import decide
from .proof import (
    AXIOM,
    CROSSING,
    ROOK,
    SUM,
    SUMMAND,
    AxiomInstance,
    Derivation,
    DerivationNode,
)
from .rho import LEFT, RIGHT, GeneratorGraph, Position, build_rho
from .terms import Polynomial, Word


class NotDerivable(ValueError):
    """The requested inequality does not hold in B2, so no derivation exists."""


def _rook(x1: Word, x2: Word, z1: Word, z2: Word) -> AxiomInstance:
    lhs = x2 + z2
    rhs = Polynomial((x1 + z1, x1 + z2, x2 + z1))
    subst = (("x1", x1), ("x2", x2), ("z1", z1), ("z2", z2))
    return AxiomInstance(ROOK, subst, lhs, rhs)


def _crossing(x1: Word, y: Word, z1: Word, x2: Word, z2: Word) -> AxiomInstance:
    lhs = x1 + y + z2
    rhs = Polynomial((x1 + y + z1, x2 + y + z2))
    subst = (("x1", x1), ("x2", x2), ("y", y), ("z1", z1), ("z2", z2))
    return AxiomInstance(CROSSING, subst, lhs, rhs)


def reverse_instance(inst: AxiomInstance) -> AxiomInstance:
    """Mirror an instance; rook and crossing are both closed under reversal."""
    s = {k: w[::-1] for k, w in inst.subst}
    if inst.axiom == ROOK:
        return _rook(x1=s["z1"], x2=s["z2"], z1=s["x1"], z2=s["x2"])
    return _crossing(x1=s["z2"], y=s["y"], z1=s["x2"], x2=s["z1"], z2=s["x1"])


def _split(word: Word, factor: Word) -> tuple[Word, Word]:
    """``(u1, u2)`` with ``word == u1 + factor + u2`` at the first occurrence."""
    n = len(factor)
    for i in range(len(word) - n + 1):
        if word[i:i + n] == factor:
            return word[:i], word[i + n:]
    raise AssertionError(f"{factor} does not occur in {word}")


class _Builder:
    """Append-only DAG of nodes for one goal, deduplicated by content."""

    def __init__(self, goal: Polynomial):
        self.goal = goal
        self.nodes: list[DerivationNode] = []
        self._index: dict = {}

    def _add(self, key, conclusion, rule, premises=(), instance=None) -> int:
        nid = self._index.get(key)
        if nid is None:
            nid = len(self.nodes)
            self.nodes.append(DerivationNode(nid, conclusion, rule, tuple(premises), instance))
            self._index[key] = nid
        return nid

    def conclusion(self, nid: int) -> Polynomial:
        return self.nodes[nid].conclusion

    def word(self, nid: int) -> Word:
        c = self.nodes[nid].conclusion
        assert len(c) == 1, c
        return c.words[0]

    def summand(self, word: Word) -> int:
        assert word in self.goal, (word, self.goal)
        p = Polynomial((word,))
        return self._add((SUMMAND, p), p, SUMMAND)

    def join(self, ids: Iterable[int]) -> int:
        ids = sorted(set(ids))
        if len(ids) == 1:
            return ids[0]
        words = [w for i in ids for w in self.nodes[i].conclusion]
        p = Polynomial(words)
        return self._add((SUM, p), p, SUM, ids)

    def axiom(self, inst: AxiomInstance, premises: Iterable[int]) -> int:
        premise = self.join(premises)
        if self.conclusion(premise) != inst.rhs:
            raise AssertionError(
                f"premise {self.conclusion(premise)} does not match {inst.axiom} rhs {inst.rhs}"
            )
        if inst.lhs in self.goal:
            return self.summand(inst.lhs)  # the step would be a detour
        p = Polynomial((inst.lhs,))
        return self._add((AXIOM, p, inst.axiom, inst.subst), p, AXIOM, (premise,), inst)

    def export(self, roots: list[int], direction: str) -> Derivation:
        """Keep only nodes reachable from ``roots`` and renumber them."""
        keep = set()
        stack = list(roots)
        while stack:
            i = stack.pop()
            if i in keep:
                continue
            keep.add(i)
            stack.extend(self.nodes[i].premises)
        order = sorted(keep)  # creation order is topological
        new_id = {old: new for new, old in enumerate(order)}
        nodes = [
            DerivationNode(
                new_id[i],
                self.nodes[i].conclusion,
                self.nodes[i].rule,
                tuple(new_id[j] for j in self.nodes[i].premises),
                self.nodes[i].instance,
            )
            for i in order
        ]
        return Derivation(self.goal, nodes, [new_id[r] for r in roots], direction)


class Deriver:
    """Derivations of inequalities ``w <= goal`` for a fixed goal polynomial."""

    def __init__(self, goal: Polynomial, builder: _Builder | None = None):
        self.goal = goal
        self.builder = builder or _Builder(goal)
        self.rho = build_rho(goal)
        self.graph = GeneratorGraph(goal)
        self._first_word: dict[str, Word] = {}
        self._last_word: dict[str, Word] = {}
        self._factor_word: dict[tuple[str, str], Word] = {}
        for w in goal.words:  # sorted, so the first hit is the least word
            self._first_word.setdefault(w[0], w)
            self._last_word.setdefault(w[-1], w)
            for a, b in zip(w, w[1:]):
                self._factor_word.setdefault((a, b), w)
        self._trees: dict[Position, dict] = {}
        self._first_cache: dict[str, int] = {}
        self._inner_cache: dict[tuple[str, str], int] = {}
        self._mirror: Deriver | None = None
        self._imported: dict[int, int] = {}
        self._last_cache: dict[str, int] = {}
        # how often each induction case fired, e.g. ("first", 2)
        self.cases: Counter = Counter()

    # -- search helpers -------------------------------------------------

    def _path(self, source: Position, target: Position) -> list[Position]:
        prev = self._trees.get(source)
        if prev is None:
            prev = self.graph.bfs_tree(source)
            self._trees[source] = prev
        if target not in prev:
            raise NotDerivable(f"{source} and {target} are not rho-related")
        out = [target]
        while prev[out[-1]] is not None:
            out.append(prev[out[-1]])
        return out[::-1]

    def _factor(self, a: str, b: str) -> tuple[int, Word, Word]:
        w = self._factor_word[(a, b)]
        u1, u2 = _split(w, (a, b))
        return self.builder.summand(w), u1, u2

    def _root_first(self) -> Position:
        return Position(min(self._first_word), LEFT)

    # -- first letters ---------------------------------------------------

    def first_letter(self, x: str) -> int:
        """Node concluding a single word that begins with ``x``."""
        if x in self._first_cache:
            return self._first_cache[x]
        b = self.builder
        if x in self._first_word:
            nid = b.summand(self._first_word[x])
            self._first_cache[x] = nid
            return nid
        target = Position(x, LEFT)
        if target not in self.graph.adj or not self.rho.same(target, self.rho.init):
            raise NotDerivable(f"({x}, 1) is not in the initial class of {self.goal}")
        path = self._path(self._root_first(), target)
        k = len(path)
        # the last step into (x, 1) is a rho3 step from (z, 2); find the
        # last left end before it
        t = max(i for i in range(k - 1) if path[i].end == LEFT)
        zt = path[t].letter
        c_id = self.first_letter(zt)
        w3 = b.word(c_id)[1:]
        if t == k - 3:
            self.cases["first", 2] += 1
            zp = path[k - 2].letter
            a_id, u1, u2 = self._factor(zp, zt)
            b_id, v1, v2 = self._factor(zp, x)
            b2 = b.axiom(_crossing(x1=u1, y=(zp,), z1=(zt,) + u2, x2=v1, z2=(x,) + v2), [a_id, b_id])
            c2 = b.axiom(_crossing(x1=(), y=(zt,), z1=w3, x2=u1 + (zp,), z2=u2), [c_id, a_id])
            nid = b.axiom(_rook(x1=u1 + (zp,), x2=(), z1=(zt,) + u2, z2=(x,) + v2), [a_id, b2, c2])
        else:
            self.cases["first", 3] += 1
            zt1 = path[t + 1].letter
            zk1 = path[k - 2].letter
            w1_word = self._last_word[zt1]
            w2_word = self._last_word[zk1]
            w1_id, w1 = b.summand(w1_word), w1_word[:-1]
            w2_id, w2 = b.summand(w2_word), w2_word[:-1]
            a_id, u1, u2 = self._factor(zt1, zt)
            b_id, v1, v2 = self._factor(zk1, x)
            d_id = b.axiom(_crossing(x1=u1, y=(zt1,), z1=(zt,) + u2, x2=w1, z2=()), [w1_id, a_id])
            e_id = b.axiom(_rook(x1=u1 + (zt1,), x2=w2 + (zk1,), z1=(), z2=(zt,) + u2), [d_id, a_id, w2_id])
            f_id = b.axiom(_crossing(x1=v1, y=(zk1,), z1=(x,) + v2, x2=w2, z2=(zt,) + u2), [e_id, b_id])
            g_id = b.axiom(_crossing(x1=(), y=(zt,), z1=w3, x2=v1 + (zk1,), z2=u2), [f_id, c_id])
            nid = b.axiom(_rook(x1=v1 + (zk1,), x2=(), z1=(zt,) + u2, z2=(x,) + v2), [f_id, b_id, g_id])
        self._first_cache[x] = nid
        return nid

    # -- last letters ----------------------------------------------------

    def last_letter(self, x: str) -> int:
        """Node concluding a single word that ends with ``x``."""
        if x in self._last_cache:
            return self._last_cache[x]
        if x in self._last_word:
            nid = self.builder.summand(self._last_word[x])
        else:
            if self._mirror is None:
                self._mirror = Deriver(self.goal.reversed())
            nid = self._import_reversed(self._mirror.first_letter(x))
            self.cases["last", "mirror"] += 1
        self._last_cache[x] = nid
        return nid

    def _import_reversed(self, mid: int) -> int:
        if mid in self._imported:
            return self._imported[mid]
        node = self._mirror.builder.nodes[mid]
        b = self.builder
        if node.rule == SUMMAND:
            nid = b.summand(node.conclusion.words[0][::-1])
        elif node.rule == SUM:
            nid = b.join(self._import_reversed(i) for i in node.premises)
        else:
            premise = self._import_reversed(node.premises[0])
            nid = b.axiom(reverse_instance(node.instance), [premise])
        self._imported[mid] = nid
        return nid

    # -- inner pairs -----------------------------------------------------

    def inner_pair(self, x: str, y: str) -> int:
        """Node concluding a single word containing the factor ``xy``."""
        key = (x, y)
        if key in self._inner_cache:
            return self._inner_cache[key]
        b = self.builder
        if key in self._factor_word:
            nid = b.summand(self._factor_word[key])
            self._inner_cache[key] = nid
            return nid
        src, dst = Position(x, RIGHT), Position(y, LEFT)
        if src not in self.graph.adj or dst not in self.graph.adj or not self.rho.same(src, dst):
            raise NotDerivable(f"({x}, 2) and ({y}, 1) are not rho-related in {self.goal}")
        path = self._path(src, dst)
        zk1 = path[-2]
        if zk1.end == LEFT:
            # the last step is rho1: both zk1 and y start words of q
            self.cases["inner", 1] += 1
            z = zk1.letter
            c_id = self.inner_pair(x, z)
            u1, u2 = _split(b.word(c_id), (x, z))
            wz = self._first_word[z]
            wy = self._first_word[y]
            wz_id, v1 = b.summand(wz), wz[1:]
            wy_id, v2 = b.summand(wy), wy[1:]
            d_id = b.axiom(_crossing(x1=(), y=(z,), z1=v1, x2=u1 + (x,), z2=u2), [wz_id, c_id])
            nid = b.axiom(_rook(x1=(), x2=u1 + (x,), z1=(z,) + u2, z2=(y,) + v2), [d_id, wy_id, c_id])
        elif path[-3].end == RIGHT:
            # ... rho2 step, then rho3 into (y, 1): x and zk1 end words
            self.cases["inner", 2] += 1
            z = zk1.letter
            ux_id = self.last_letter(x)
            vz_id = self.last_letter(z)
            u = b.word(ux_id)[:-1]
            v = b.word(vz_id)[:-1]
            bw_id, w1, w2 = self._factor(z, y)
            d_id = b.axiom(_crossing(x1=v, y=(z,), z1=(), x2=w1, z2=(y,) + w2), [vz_id, bw_id])
            nid = b.axiom(_rook(x1=v + (z,), x2=u + (x,), z1=(), z2=(y,) + w2), [vz_id, d_id, ux_id])
        else:
            # ... rho3^-1 step from (zk2, 1) to (zk1, 2), then rho3 into (y, 1)
            self.cases["inner", 3] += 1
            z = zk1.letter
            zk2 = path[-3].letter
            c_id = self.inner_pair(x, zk2)
            u1, u2 = _split(b.word(c_id), (x, zk2))
            a_id, v1, v2 = self._factor(z, zk2)
            bw_id, w1, w2 = self._factor(z, y)
            a2 = b.axiom(_crossing(x1=v1 + (z,), y=(zk2,), z1=v2, x2=u1 + (x,), z2=u2), [a_id, c_id])
            b2 = b.axiom(_crossing(x1=v1, y=(z,), z1=(zk2,) + u2, x2=w1, z2=(y,) + w2), [a2, bw_id])
            nid = b.axiom(_rook(x1=v1 + (z,), x2=u1 + (x,), z1=(zk2,) + u2, z2=(y,) + w2), [a2, b2, c_id])
        self._inner_cache[key] = nid
        return nid

    # -- whole words -----------------------------------------------------

    def check_word(self, w: Word) -> None:
        """Raise :class:`NotDerivable` unless ``w <= goal`` holds in B2."""
        r = self.rho
        letters = set(r.letters)
        missing = set(w) - letters
        if missing:
            raise NotDerivable(f"letters {sorted(missing)} do not occur in {self.goal}")
        if not r.same(Position(w[0], LEFT), r.init):
            raise NotDerivable(f"({w[0]}, 1) is not in the initial class of {self.goal}")
        if not r.same(Position(w[-1], RIGHT), r.term):
            raise NotDerivable(f"({w[-1]}, 2) is not in the terminal class of {self.goal}")
        for a, c in zip(w, w[1:]):
            if not r.same(Position(a, RIGHT), Position(c, LEFT)):
                raise NotDerivable(f"({a}, 2) and ({c}, 1) are not rho-related in {self.goal}")

    def word(self, w: Word) -> int:
        """Node concluding exactly ``{w}``."""
        w = tuple(w)
        self.check_word(w)
        b = self.builder
        if w in self.goal:
            return b.summand(w)
        node = self.first_letter(w[0])
        running = b.word(node)
        for m in range(1, len(w)):
            y, x = w[m - 1], w[m]
            # running word agrees with w on its first m letters
            inner = self.inner_pair(y, x)
            u1, u2 = _split(b.word(inner), (y, x))
            node = b.axiom(
                _crossing(x1=w[:m - 1], y=(y,), z1=running[m:], x2=u1, z2=(x,) + u2),
                [node, inner],
            )
            running = b.word(node)
        if running != w:
            last = self.last_letter(w[-1])
            u = b.word(last)[:-1]
            node = b.axiom(
                _crossing(x1=w[:-1], y=(w[-1],), z1=running[len(w):], x2=u, z2=()),
                [node, last],
            )
        assert b.word(node) == w
        return node


def derive_first_letter(q: Polynomial, x: str) -> Derivation:
    d = Deriver(q)
    return d.builder.export([d.first_letter(x)], "first-letter")


def derive_last_letter(q: Polynomial, x: str) -> Derivation:
    d = Deriver(q)
    return d.builder.export([d.last_letter(x)], "last-letter")


def derive_inner_pair(q: Polynomial, x: str, y: str) -> Derivation:
    d = Deriver(q)
    return d.builder.export([d.inner_pair(x, y)], "inner-pair")


def derive_word(q: Polynomial, w: Word) -> Derivation:
    d = Deriver(q)
    return d.builder.export([d.word(w)], "word")


def derive_inequality(p: Polynomial, q: Polynomial, direction: str = "lhs<=rhs") -> Derivation:
    """Derivation of ``p <= q``: one root per word of ``p``, then their sum."""
    d = Deriver(q)
    roots = [d.word(w) for w in p]
    if len(roots) > 1:
        roots.append(d.builder.join(roots))
    return d.builder.export(roots, direction)


def derive_identity(p: Polynomial, q: Polynomial) -> tuple[Derivation, Derivation]:
    """Derivations of ``p <= q`` and ``q <= p`` for a valid identity."""
    verdict = decide(p, q)
    if not verdict.valid:
        raise NotDerivable(f"identity fails in B2: {verdict.detail}")
    return derive_inequality(p, q, "lhs<=rhs"), derive_inequality(q, p, "rhs<=lhs")
