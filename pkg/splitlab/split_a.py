"""Type-A splitting: coefficients c_lambda(w) counting tableau tuples whose column words are reduced words of w."""

from __future__ import annotations

import logging
from typing import Iterable, Iterator

from core.config import Guards
from core.errors import NotCompatible
from permcore.permutation import Permutation, compatible_with, reduced_words
from polyring.mvpoly import MVPoly, product, total
from polyring.variables import alphabet
from symfunc.schur import SchurExpansion, schur_s

logger = logging.getLogger(__name__)

Column = tuple[int, ...]  # entries top to bottom, strictly increasing


def check_breaks(w: Permutation, breaks: Iterable[int]) -> tuple[int, ...]:
    """Returns breaks as a sorted tuple after checking 1 <= a_1 < ... < a_k < d and compatibility."""
    breaks = tuple(breaks)
    if list(breaks) != sorted(set(breaks)) or any(not 1 <= a < w.d for a in breaks):
        raise NotCompatible(f"Breaks {list(breaks)} must increase strictly inside 1..{w.d - 1}")
    if not compatible_with(w, breaks):
        raise NotCompatible(f"{w!r} has descents {sorted(w.descents())} outside the breaks {list(breaks)}")
    return breaks


def _splits(word: tuple[int, ...], lower: tuple[int, ...]) -> Iterator[tuple[tuple[Column, ...], ...]]:
    """Ways to read word as col(T_1) ... col(T_k), T_i having entries > lower[i]."""
    k = len(lower)

    def tableaux(pos: int, i: int, done: tuple, columns: tuple[Column, ...]) -> Iterator[tuple]:
        if pos == len(word) and i == k - 1:
            yield done + (columns,)
        if i < k - 1:
            yield from tableaux(pos, i + 1, done + (columns,), ())
        prev = columns[-1] if columns else None
        # a column reads bottom to top, so its chunk of the word strictly decreases
        end = pos
        while end < len(word) and word[end] > lower[i] and (end == pos or word[end] < word[end - 1]):
            end += 1
            col = tuple(reversed(word[pos:end]))
            if prev is not None and (len(col) > len(prev) or any(prev[r] > col[r] for r in range(len(col)))):
                continue
            yield from tableaux(end, i, done, columns + (col,))

    if k == 0:
        if not word:
            yield ()
        return
    yield from tableaux(0, 0, (), ())


def split_A(w: Permutation, breaks: Iterable[int], guards: Guards | None = None) -> SchurExpansion:
    """c_lambda(w) for S_w = sum c_lambda s_{lambda^1}(X_1) ... s_{lambda^k}(X_k), keyed by partition tuples."""
    breaks = check_breaks(w, breaks)
    lower = (0,) + breaks[:-1]
    counts: SchurExpansion = {}
    for word in sorted(reduced_words(w, guards)):
        for tabs in _splits(word, lower):
            key = tuple(tuple(len(col) for col in columns) for columns in tabs)
            counts[key] = counts.get(key, 0) + 1
    logger.debug("split_A(%s, %s): %d terms", list(w.one_line), list(breaks), len(counts))
    return counts


def block_alphabets(breaks: Iterable[int]) -> list[list]:
    """X_i = x_{a_{i-1}+1}, ..., x_{a_i}."""
    edges = (0,) + tuple(breaks)
    return [alphabet("x", edges[i] - edges[i - 1], start=edges[i - 1] + 1) for i in range(1, len(edges))]


def nonvanishing(expansion: SchurExpansion, breaks: Iterable[int]) -> SchurExpansion:
    """Drops terms with some s_{lambda^i}(X_i) = 0, i.e. more rows than variables."""
    sizes = [len(xs) for xs in block_alphabets(breaks)]
    return {
        key: c
        for key, c in expansion.items()
        if all(len(shape) <= size for shape, size in zip(key, sizes))
    }


def split_A_polynomial(expansion: SchurExpansion, breaks: Iterable[int]) -> MVPoly:
    """sum c_lambda prod_i s_{lambda^i}(X_i)."""
    blocks = block_alphabets(breaks)
    return total(
        product(schur_s(shape, variables=xs) for shape, xs in zip(key, blocks)) * c
        for key, c in expansion.items()
    )
