"""Brute-force semantics: check an identity under every valuation into B2.

This module only uses the operation tables; it shares nothing with the
combinatorial decision procedure and serves as its independent cross-check.
"""

from __future__ import annotations

import itertools
from concurrent.futures import ThreadPoolExecutor
from typing import Iterator, Optional

import numpy as np

from .algebra import ADD, ELEMENTS, MUL, Valuation
from .terms import Polynomial, content

DEFAULT_MAX_LETTERS = 8
DEFAULT_ALPHABET = ("x", "y", "z", "t", "u", "v", "w", "s")

_ADD = np.array(ADD, dtype=np.uint8)
_MUL = np.array(MUL, dtype=np.uint8)


class TooManyLetters(ValueError):
    pass


def _letter_values(n: int, start: int, stop: int) -> np.ndarray:
    # row i holds letter i's element over valuation indices [start, stop);
    # letter 0 is the most significant base-5 digit
    idx = np.arange(start, stop, dtype=np.int64)
    out = np.empty((n, stop - start), dtype=np.uint8)
    for i in range(n):
        out[i] = (idx // 5 ** (n - 1 - i)) % 5
    return out


def _eval_poly(p: Polynomial, index: dict, vals: np.ndarray) -> np.ndarray:
    acc = None
    for w in p:
        wv = vals[index[w[0]]]
        for a in w[1:]:
            wv = _MUL[wv, vals[index[a]]]
        acc = wv if acc is None else _ADD[acc, wv]
    return acc


def _first_mismatch(p, q, letters, start, stop) -> Optional[int]:
    index = {a: i for i, a in enumerate(letters)}
    vals = _letter_values(len(letters), start, stop)
    diff = np.flatnonzero(_eval_poly(p, index, vals) != _eval_poly(q, index, vals))
    return int(start + diff[0]) if diff.size else None


def valuation_at(letters, index: int) -> Valuation:
    """The ``index``-th valuation in base-5 counter order."""
    n = len(letters)
    return Valuation(
        {a: ELEMENTS[(index // 5 ** (n - 1 - i)) % 5] for i, a in enumerate(letters)}
    )


def find_counterexample(
    p: Polynomial,
    q: Polynomial,
    max_letters: int = DEFAULT_MAX_LETTERS,
    chunk_size: int = 5**6,
    workers: int | None = None,
) -> Optional[Valuation]:
    """The first valuation (in counter order) separating ``p`` and ``q``.

    Valuations range over the joint content, sorted by symbol. The search may
    be split across ``workers`` threads; the reported counterexample is the
    same either way.
    """
    letters = sorted(content(p) | content(q))
    if len(letters) > max_letters:
        raise TooManyLetters(
            f"{len(letters)} letters exceed the oracle limit of {max_letters}"
        )
    total = 5 ** len(letters)
    bounds = [(s, min(s + chunk_size, total)) for s in range(0, total, chunk_size)]
    if workers and workers > 1 and len(bounds) > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            hits = pool.map(lambda b: _first_mismatch(p, q, letters, *b), bounds)
            found = next((h for h in hits if h is not None), None)
    else:
        found = None
        for b in bounds:
            found = _first_mismatch(p, q, letters, *b)
            if found is not None:
                break
    return None if found is None else valuation_at(letters, found)


def oracle_check(
    p: Polynomial, q: Polynomial, max_letters: int = DEFAULT_MAX_LETTERS, workers: int | None = None
) -> bool:
    return find_counterexample(p, q, max_letters, workers=workers) is None


def alphabet(size: int) -> tuple[str, ...]:
    if size <= len(DEFAULT_ALPHABET):
        return DEFAULT_ALPHABET[:size]
    return tuple(f"x{i}" for i in range(1, size + 1))


def all_words(letters, max_len: int) -> list[tuple[str, ...]]:
    """Words of length 1..max_len, shorter first, then lexicographic."""
    out = []
    for n in range(1, max_len + 1):
        out.extend(itertools.product(letters, repeat=n))
    return out


def all_polynomials(alphabet_size: int, max_summands: int, max_word_len: int) -> list[Polynomial]:
    words = all_words(alphabet(alphabet_size), max_word_len)
    out = []
    for k in range(1, max_summands + 1):
        out.extend(Polynomial(c) for c in itertools.combinations(words, k))
    return out


def enumerate_identities(
    alphabet_size: int, max_summands: int, max_word_len: int
) -> Iterator[tuple[Polynomial, Polynomial]]:
    """Every ordered pair of polynomials within the bounds, deterministically."""
    polys = all_polynomials(alphabet_size, max_summands, max_word_len)
    return itertools.product(polys, repeat=2)

