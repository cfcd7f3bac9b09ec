"""The five-element Brandt semigroup B2 as an additively idempotent semiring.

Nonzero elements are the 2x2 matrix units ``e_ij``. Addition returns its
argument when both arguments agree and zero otherwise; multiplication is
matrix multiplication, i.e. ``e_ij * e_kl = e_il`` when ``j == k`` and zero
otherwise. Both operations are precomputed as 5x5 tables.
"""

from __future__ import annotations

import enum
from typing import Iterable, Mapping

from .terms import Polynomial, Word


class B2(enum.IntEnum):
    ZERO = 0
    E11 = 1
    E12 = 2
    E21 = 3
    E22 = 4

    @property
    def row(self) -> int | None:
        return _INDEX[self][0] if self else None

    @property
    def col(self) -> int | None:
        return _INDEX[self][1] if self else None

    def __getitem__(self, side: int) -> int:
        # a[1] is the row index and a[2] the column index; undefined for zero
        if not self:
            raise ValueError("zero has no indices")
        return _INDEX[self][side - 1]

    def __add__(self, other):
        if not isinstance(other, B2):
            return NotImplemented
        return ADD[self][other]

    def __mul__(self, other):
        if not isinstance(other, B2):
            return NotImplemented
        return MUL[self][other]

    __radd__ = __add__

    def __str__(self) -> str:
        return to_str(self)

    def __repr__(self) -> str:
        return f"B2.{self.name}"

    @classmethod
    def unit(cls, row: int, col: int) -> "B2":
        return _UNITS[(row, col)]

    @classmethod
    def parse(cls, text: str) -> "B2":
        return from_str(text)


ZERO = B2.ZERO
ELEMENTS = tuple(B2)
NONZERO = ELEMENTS[1:]

_INDEX = {
    B2.E11: (1, 1),
    B2.E12: (1, 2),
    B2.E21: (2, 1),
    B2.E22: (2, 2),
}
_UNITS = {ij: a for a, ij in _INDEX.items()}
_NAMES = {B2.ZERO: "0", B2.E11: "e11", B2.E12: "e12", B2.E21: "e21", B2.E22: "e22"}
_BY_NAME = {v: k for k, v in _NAMES.items()}


def _add_rule(a: B2, b: B2) -> B2:
    return a if a == b else B2.ZERO


def _mul_rule(a: B2, b: B2) -> B2:
    if a and b and _INDEX[a][1] == _INDEX[b][0]:
        return _UNITS[(_INDEX[a][0], _INDEX[b][1])]
    return B2.ZERO


# plain nested tuples indexed by int value; also used by the vectorized oracle
ADD = tuple(tuple(_add_rule(a, b) for b in ELEMENTS) for a in ELEMENTS)
MUL = tuple(tuple(_mul_rule(a, b) for b in ELEMENTS) for a in ELEMENTS)


def add(a: B2, b: B2) -> B2:
    return ADD[a][b]


def mul(a: B2, b: B2) -> B2:
    return MUL[a][b]


def to_str(a: B2) -> str:
    return _NAMES[B2(a)]


def from_str(text: str) -> B2:
    try:
        return _BY_NAME[text.strip().lower()]
    except KeyError:
        raise ValueError(f"not a B2 element: {text!r}") from None


class Valuation(Mapping):
    """Assignment of B2 elements to letters over an explicit domain.

    Looking up a letter outside the domain raises ``KeyError``; there is no
    default value.
    """

    __slots__ = ("_map",)

    def __init__(self, assignment: Mapping[str, B2] | Iterable[tuple[str, B2]] = ()):
        items = dict(assignment)
        self._map = {a: B2(v) if not isinstance(v, str) else from_str(v) for a, v in items.items()}

    def __getitem__(self, letter: str) -> B2:
        try:
            return self._map[letter]
        except KeyError:
            raise KeyError(f"letter {letter!r} is outside the valuation domain") from None

    def __iter__(self):
        return iter(self._map)

    def __len__(self) -> int:
        return len(self._map)

    @property
    def domain(self) -> frozenset:
        return frozenset(self._map)

    def __repr__(self) -> str:
        inner = ", ".join(f"{a}->{to_str(v)}" for a, v in sorted(self._map.items()))
        return f"Valuation({{{inner}}})"

    def to_json(self) -> dict:
        return {a: to_str(v) for a, v in sorted(self._map.items())}

    @classmethod
    def from_json(cls, data: Mapping[str, str]) -> "Valuation":
        return cls({a: from_str(v) for a, v in data.items()})


def eval_word(w: Word, v: Mapping[str, B2]) -> B2:
    it = iter(w)
    try:
        acc = v[next(it)]
    except StopIteration:
        raise ValueError("cannot evaluate the empty word") from None
    for a in it:
        # keep looking up letters so out-of-domain letters always raise
        acc = MUL[acc][v[a]]
    return B2(acc)


def eval_poly(p: Polynomial, v: Mapping[str, B2]) -> B2:
    words = iter(p)
    acc = eval_word(next(words), v)
    for w in words:
        acc = ADD[acc][eval_word(w, v)]
    return B2(acc)


def holds(p: Polynomial, q: Polynomial, v: Mapping[str, B2]) -> bool:
    return eval_poly(p, v) == eval_poly(q, v)
