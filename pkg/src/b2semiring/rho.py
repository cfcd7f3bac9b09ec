"""The equivalence rho(p) on letter ends and its initial/terminal classes.

Every letter ``x`` of a polynomial has two ends, ``(x, 1)`` (left) and
``(x, 2)`` (right). rho(p) is the equivalence generated by

* ``rho1``: left ends of first letters of words, pairwise;
* ``rho2``: right ends of last letters of words, pairwise;
* ``rho3``: ``(x, 2) ~ (y, 1)`` whenever ``xy`` occurs as a factor.

The closure is computed with a union-find over interned positions, so
building it is near-linear in the total length of the polynomial.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Iterator, NamedTuple

from .terms import Polynomial, content

LEFT = 1
RIGHT = 2

RHO1 = "rho1"
RHO2 = "rho2"
RHO3 = "rho3"
RHO3_INV = "rho3^-1"


class Position(NamedTuple):
    letter: str
    end: int

    def __str__(self) -> str:
        return f"{self.letter}:{self.end}"

    @classmethod
    def parse(cls, text: str) -> "Position":
        letter, _, end = text.rpartition(":")
        if end not in ("1", "2") or not letter:
            raise ValueError(f"bad position {text!r}")
        return cls(letter, int(end))


class UnionFind:
    """Disjoint sets over ``0..n-1`` with path halving and union by size."""

    def __init__(self, n: int):
        self.parent = list(range(n))
        self.size = [1] * n

    def find(self, a: int) -> int:
        parent = self.parent
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    def union(self, a: int, b: int) -> int:
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return ra
        if self.size[ra] < self.size[rb]:
            ra, rb = rb, ra
        self.parent[rb] = ra
        self.size[ra] += self.size[rb]
        return ra

    def same(self, a: int, b: int) -> bool:
        return self.find(a) == self.find(b)


def edge_kind(a: Position, b: Position) -> str:
    """Which generating relation a step from ``a`` to ``b`` must use.

    The ends alone determine it: 1-1 is rho1, 2-2 is rho2, 2-1 is rho3 and
    1-2 is the inverse of rho3.
    """
    return {
        (LEFT, LEFT): RHO1,
        (RIGHT, RIGHT): RHO2,
        (RIGHT, LEFT): RHO3,
        (LEFT, RIGHT): RHO3_INV,
    }[(a.end, b.end)]


def generating_pairs(p: Polynomial) -> list[tuple[Position, Position, str]]:
    """All pairs of rho1, rho2 and rho3, without duplicates.

    rho1 and rho2 are listed in full (quadratic in the number of distinct
    first/last letters), including the reflexive pairs.
    """
    firsts = sorted({w[0] for w in p})
    lasts = sorted({w[-1] for w in p})
    out = []
    for x in firsts:
        for y in firsts:
            out.append((Position(x, LEFT), Position(y, LEFT), RHO1))
    for x in lasts:
        for y in lasts:
            out.append((Position(x, RIGHT), Position(y, RIGHT), RHO2))
    seen = set()
    for w in p:
        for x, y in zip(w, w[1:]):
            if (x, y) not in seen:
                seen.add((x, y))
                out.append((Position(x, RIGHT), Position(y, LEFT), RHO3))
    return out


def _spanning_generators(p: Polynomial) -> Iterator[tuple[Position, Position, str]]:
    # rho1/rho2 as stars around one word's ends: same closure, linear size
    f0 = Position(p.words[0][0], LEFT)
    l0 = Position(p.words[0][-1], RIGHT)
    yield f0, f0, RHO1
    yield l0, l0, RHO2
    for w in p.words:
        yield f0, Position(w[0], LEFT), RHO1
        yield l0, Position(w[-1], RIGHT), RHO2
        for i in range(len(w) - 1):
            yield Position(w[i], RIGHT), Position(w[i + 1], LEFT), RHO3


@dataclass(frozen=True)
class RhoPartition:
    """rho(p) as a canonical labelling of positions.

    ``rep`` sends every position to the least position of its class (letters
    ordered by symbol, then left before right). ``init`` and ``term`` are the
    representatives of the initial and terminal classes.
    """

    letters: tuple[str, ...]
    rep: dict = field(compare=False, repr=False)
    init: Position
    term: Position
    _key: tuple = field(repr=False)

    @property
    def positions(self) -> list[Position]:
        return [Position(a, e) for a in self.letters for e in (LEFT, RIGHT)]

    def find(self, pos: Position) -> Position:
        return self.rep[pos]

    def same(self, a: Position, b: Position) -> bool:
        return self.rep[a] == self.rep[b]

    @property
    def classes(self) -> list[list[Position]]:
        """Classes in order of their least element, each sorted."""
        groups: dict[Position, list[Position]] = {}
        for pos in self.positions:
            groups.setdefault(self.rep[pos], []).append(pos)
        return [groups[r] for r in sorted(groups)]

    def class_index(self, pos: Position) -> int:
        reps = sorted(set(self.rep.values()))
        return reps.index(self.rep[pos])

    def class_of(self, pos: Position) -> list[Position]:
        r = self.rep[pos]
        return [q for q in self.positions if self.rep[q] == r]

    def to_json(self) -> dict:
        classes = self.classes
        index = {c[0]: i for i, c in enumerate(classes)}
        return {
            "classes": [[str(q) for q in c] for c in classes],
            "init": index[self.init],
            "term": index[self.term],
        }


def build_rho(p: Polynomial) -> RhoPartition:
    letters = tuple(sorted(content(p)))
    index = {a: i for i, a in enumerate(letters)}
    uf = UnionFind(2 * len(letters))

    find, union = uf.find, uf.union
    words = p.words
    f0 = 2 * index[words[0][0]]
    l0 = 2 * index[words[0][-1]] + 1
    for w in words:
        union(f0, 2 * index[w[0]])
        union(l0, 2 * index[w[-1]] + 1)
        prev = index[w[0]]
        for a in w[1:]:
            cur = index[a]
            union(2 * prev + 1, 2 * cur)
            prev = cur

    # canonical representative: least position id in each class; ids follow
    # the (letter, end) order because letters are sorted
    least: dict[int, int] = {}
    roots = [find(i) for i in range(2 * len(letters))]
    for i, r in enumerate(roots):
        if r not in least:
            least[r] = i
    positions = [Position(a, e) for a in letters for e in (LEFT, RIGHT)]
    rep = {positions[i]: positions[least[r]] for i, r in enumerate(roots)}
    key = tuple(least[r] for r in roots)
    return RhoPartition(
        letters=letters,
        rep=rep,
        init=positions[least[roots[f0]]],
        term=positions[least[roots[l0]]],
        _key=key,
    )


def partitions_equal(a: RhoPartition, b: RhoPartition) -> bool:
    if a.letters != b.letters:
        raise ValueError("partitions are over different position sets")
    return a._key == b._key


def first_uncovered_generator(p: Polynomial, r: RhoPartition):
    """A generating pair of rho(p) whose ends lie in different classes of ``r``.

    Returns ``None`` when rho(p) is contained in ``r``. ``r`` must be over
    a superset of the letters of ``p``.
    """
    rep = r.rep
    for a, b, tag in _spanning_generators(p):
        if rep[a] != rep[b]:
            return a, b, tag
    return None


class GeneratorGraph:
    """Undirected graph on positions whose edges are the generating pairs.

    Adjacency lists are sorted so breadth-first search is deterministic.
    """

    def __init__(self, p: Polynomial):
        self.polynomial = p
        adj: dict[Position, set] = {
            Position(a, e): set() for a in content(p) for e in (LEFT, RIGHT)
        }
        for a, b, _ in generating_pairs(p):
            if a != b:
                adj[a].add(b)
                adj[b].add(a)
        self.adj = {k: sorted(v) for k, v in adj.items()}

    def bfs_tree(self, start: Position) -> dict:
        """Breadth-first predecessor map from ``start`` (which maps to None)."""
        if start not in self.adj:
            raise ValueError(f"position not in the content: {start}")
        prev = {start: None}
        queue = deque([start])
        while queue:
            cur = queue.popleft()
            for nxt in self.adj[cur]:
                if nxt not in prev:
                    prev[nxt] = cur
                    queue.append(nxt)
        return prev

    def path(self, start: Position, goal: Position) -> list[Position]:
        if goal not in self.adj:
            raise ValueError(f"position not in the content: {goal}")
        prev = self.bfs_tree(start)
        if goal not in prev:
            raise ValueError(f"{start} and {goal} are not rho-equivalent")
        out = [goal]
        while prev[out[-1]] is not None:
            out.append(prev[out[-1]])
        return out[::-1]


def connection_path(p: Polynomial, start: Position, goal: Position) -> list[Position]:
    """Shortest chain of generating steps from ``start`` to ``goal``.

    Consecutive positions are related by rho1, rho2, rho3 or the inverse of
    rho3; see :func:`edge_kind`.
    """
    return GeneratorGraph(p).path(start, goal)
