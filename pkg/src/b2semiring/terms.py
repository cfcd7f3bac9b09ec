"""Semiring polynomials over a letter alphabet.

A letter is a lowercase Latin letter optionally followed by digits (``x``,
``z2``, ``x12``). A word is a nonempty tuple of letters and a polynomial is a
nonempty set of words. Since addition is commutative and idempotent, a
polynomial is stored as a sorted, duplicate-free tuple of words.

Letters are plain ``str`` objects and words are plain tuples, so they hash and
compare without any wrapper overhead.
"""

from __future__ import annotations

import re
from typing import Iterable, Iterator, Tuple

Letter = str
Word = Tuple[str, ...]

LETTER_RE = re.compile(r"[a-z][0-9]*\Z")
_TOKEN_RE = re.compile(r"[a-z][0-9]*")
_SEEN_LETTERS: set = set()


class ParseError(ValueError):
    """Malformed polynomial text. ``offset`` is a byte offset into the input."""

    def __init__(self, message: str, offset: int, text: str = ""):
        self.offset = offset
        self.text = text
        super().__init__(f"{message} at offset {offset}")


def is_letter(symbol: str) -> bool:
    return isinstance(symbol, str) and LETTER_RE.match(symbol) is not None


def make_word(letters: Iterable[str]) -> Word:
    word = tuple(letters)
    if not word:
        raise ValueError("words must be nonempty")
    for a in word:
        if not is_letter(a):
            raise ValueError(f"not a letter: {a!r}")
    return word


def word_str(word: Word) -> str:
    return "".join(word)


class Polynomial:
    """A nonempty finite set of nonempty words, kept in canonical order."""

    __slots__ = ("words", "_hash")

    def __init__(self, words: Iterable[Iterable[str]]):
        ws = tuple(sorted({tuple(w) for w in words}))
        if not ws:
            raise ValueError("polynomials must be nonempty")
        if not ws[0]:
            raise ValueError("words must be nonempty")
        for w in ws:
            for a in w:
                if a not in _SEEN_LETTERS:
                    if not is_letter(a):
                        raise ValueError(f"not a letter: {a!r}")
                    _SEEN_LETTERS.add(a)
        self.words: tuple[Word, ...] = ws
        self._hash = hash(ws)

    @classmethod
    def _trusted(cls, words: tuple[Word, ...]) -> "Polynomial":
        # caller guarantees words are sorted, unique, nonempty
        self = object.__new__(cls)
        self.words = words
        self._hash = hash(words)
        return self

    @classmethod
    def parse(cls, text: str) -> "Polynomial":
        return parse_polynomial(text)

    @classmethod
    def of(cls, *words: Iterable[str]) -> "Polynomial":
        return cls(words)

    def __iter__(self) -> Iterator[Word]:
        return iter(self.words)

    def __len__(self) -> int:
        return len(self.words)

    def __contains__(self, word) -> bool:
        return tuple(word) in self.words

    def __eq__(self, other) -> bool:
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.words == other.words

    def __hash__(self) -> int:
        return self._hash

    def __lt__(self, other: "Polynomial") -> bool:
        return self.words < other.words

    def __add__(self, other: "Polynomial") -> "Polynomial":
        return Polynomial(self.words + other.words)

    def __mul__(self, other: "Polynomial") -> "Polynomial":
        # concatenation distributed over summands
        return Polynomial(u + v for u in self.words for v in other.words)

    def __le__(self, other: "Polynomial") -> bool:
        # syntactic containment of summands, not the semantic order
        return set(self.words) <= set(other.words)

    def __str__(self) -> str:
        return print_polynomial(self)

    def __repr__(self) -> str:
        return f"Polynomial({print_polynomial(self)!r})"

    def reversed(self) -> "Polynomial":
        return Polynomial(w[::-1] for w in self.words)

    @property
    def content(self) -> frozenset:
        return content(self)

    @property
    def length(self) -> int:
        """Total number of letter occurrences."""
        return sum(len(w) for w in self.words)


def _byte_offset(text: str, index: int) -> int:
    return len(text[:index].encode("utf-8"))


def parse_polynomial(text: str) -> Polynomial:
    """Parse ``word ('+' word)*`` into a canonical polynomial.

    Letters inside a word may be juxtaposed (``x1yz2``), separated by
    whitespace, or separated by ``*``. Tokenization is maximal munch: a letter
    takes every digit that follows it.

    >>> print(parse_polynomial("y + x1*y + x"))
    x + x1y + y
    """
    if not isinstance(text, str):
        raise TypeError("expected a string")
    words: list[Word] = []
    current: list[str] = []
    i = 0
    n = len(text)
    star_pending: int | None = None
    summand_start = 0
    if not text.strip():
        raise ParseError("empty input", _byte_offset(text, len(text)), text)
    while i < n:
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        if ch == "+":
            if star_pending is not None:
                raise ParseError("dangling '*'", _byte_offset(text, star_pending), text)
            if not current:
                raise ParseError("empty summand", _byte_offset(text, i), text)
            words.append(tuple(current))
            current = []
            i += 1
            summand_start = i
            continue
        if ch == "*":
            if not current or star_pending is not None:
                raise ParseError("unexpected '*'", _byte_offset(text, i), text)
            star_pending = i
            i += 1
            continue
        m = _TOKEN_RE.match(text, i)
        if m is None:
            if "A" <= ch <= "Z":
                raise ParseError(f"uppercase letter {ch!r}", _byte_offset(text, i), text)
            raise ParseError(f"illegal character {ch!r}", _byte_offset(text, i), text)
        current.append(m.group())
        star_pending = None
        i = m.end()
    if star_pending is not None:
        raise ParseError("dangling '*'", _byte_offset(text, star_pending), text)
    if not current:
        raise ParseError("empty summand", _byte_offset(text, max(summand_start, n)), text)
    words.append(tuple(current))
    return Polynomial(words)


def parse_word(text: str) -> Word:
    """Parse a single word; the empty string is rejected."""
    p = parse_polynomial(text)
    if len(p) != 1:
        raise ParseError("expected a single word", 0, text)
    return p.words[0]


def print_polynomial(p: Polynomial) -> str:
    return " + ".join("".join(w) for w in p.words)


def content(p: Polynomial) -> frozenset:
    return frozenset(a for w in p.words for a in w)
