"""Pipe dreams and RC-graphs: tracing, reading words, compatible sequences and enumeration."""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Callable, Iterable, Iterator

from core.config import Guards, resolve
from core.errors import GuardExceeded, NotAPermutation, NotCompatible
from permcore.permutation import Permutation, ReducedWord, is_reduced, reduced_words
from polyring.mvpoly import MVPoly, product
from polyring.variables import VarId, x, y

logger = logging.getLogger(__name__)

Box = tuple[int, int]


@dataclass(frozen=True)
class PipeDream:
    """A d x d grid; boxes in crosses carry a cross, every other box an elbow pair."""

    d: int
    crosses: frozenset[Box]

    def __post_init__(self):
        crosses = frozenset((int(i), int(j)) for i, j in self.crosses)
        object.__setattr__(self, "crosses", crosses)
        for i, j in crosses:
            if i < 1 or j < 1 or i + j > self.d:
                raise NotAPermutation(f"Cross ({i},{j}) lies outside the region i+j <= {self.d}")

    def word(self) -> ReducedWord:
        """Reading word: rows top to bottom, each row right to left, cross (i,j) gives letter i+j-1."""
        ordered = sorted(self.crosses, key=lambda b: (b[0], -b[1]))
        return tuple(i + j - 1 for i, j in ordered)

    def __len__(self) -> int:
        return len(self.crosses)


@dataclass(frozen=True)
class RCGraph(PipeDream):
    permutation: Permutation = None

    @classmethod
    def of(cls, dream: PipeDream) -> RCGraph:
        w = trace(dream)
        if w.length() != len(dream.crosses):
            raise NotCompatible(f"Two pipes cross twice in {sorted(dream.crosses)}")
        return cls(dream.d, dream.crosses, w)


def trace(dream: PipeDream) -> Permutation:
    """The pipe entering row i from the left exits the top edge in column w(i)."""
    d = dream.d
    crosses = dream.crosses
    images = []
    for start in range(1, d + 1):
        row, col, heading_east = start, 1, True
        while row >= 1:
            if col > d:
                raise NotAPermutation(f"Pipe from row {start} leaves the grid on the right")
            if (row, col) in crosses:
                if heading_east:
                    col += 1
                else:
                    row -= 1
            else:
                # elbows: west -> north, south -> east
                if heading_east:
                    row -= 1
                else:
                    col += 1
                heading_east = not heading_east
        images.append(col)
    if sorted(images) != list(range(1, d + 1)):
        raise NotAPermutation(f"Pipes do not induce a bijection: {images}")
    return Permutation(tuple(images))


def is_rc_graph(dream: PipeDream) -> bool:
    return is_reduced(dream.word(), dream.d)


# ── Compatible sequences ─────────────────────────────────────


def is_compatible(word: ReducedWord, seq: Iterable[int]) -> bool:
    seq = tuple(seq)
    if len(seq) != len(word):
        return False
    for k, (u, mu) in enumerate(zip(word, seq)):
        if not 1 <= mu <= u:
            return False
        if k + 1 < len(word):
            if seq[k + 1] < mu:
                return False
            if u < word[k + 1] and not mu < seq[k + 1]:
                return False
    return True


def compatible_sequences(word: ReducedWord) -> Iterator[tuple[int, ...]]:
    """All weakly increasing mu with mu_k <= u_k, strict where the word ascends."""
    size = len(word)

    def build(k: int, upper: int) -> Iterator[tuple[int, ...]]:
        # choose mu_k <= upper, filling from the right
        if k < 0:
            yield ()
            return
        cap = min(word[k], upper)
        for mu in range(1, cap + 1):
            next_upper = mu - 1 if k > 0 and word[k - 1] < word[k] else mu
            for head in build(k - 1, next_upper):
                yield head + (mu,)

    yield from build(size - 1, max(word, default=0))


def rc_from_compatible(word: ReducedWord, seq: Iterable[int], d: int | None = None) -> RCGraph:
    """The RC-graph with crosses at (mu_k, u_k - mu_k + 1)."""
    word, seq = tuple(word), tuple(seq)
    size = d if d is not None else max(word, default=0) + 1
    if not is_reduced(word, size):
        raise NotCompatible(f"Word {list(word)} is not reduced")
    if not is_compatible(word, seq):
        raise NotCompatible(f"Sequence {list(seq)} is not compatible with {list(word)}")
    crosses = frozenset((mu, u - mu + 1) for u, mu in zip(word, seq))
    return RCGraph(size, crosses, Permutation.from_word(word, size))


# ── Enumeration ──────────────────────────────────────────────


def _by_rows(w: Permutation, max_row: int | None, limit: int) -> Iterator[frozenset[Box]]:
    """Row search: row i takes strictly decreasing letters a >= i, each a left descent of what is left."""
    d = w.d
    last_row = min(d - 1, max_row if max_row is not None else d - 1)
    count = 0

    def rows(i: int, line: list[int], pos: list[int], crosses: list[Box]) -> Iterator[frozenset[Box]]:
        nonlocal count
        if line == sorted(line):
            count += 1
            if count > limit:
                raise GuardExceeded("max_results", limit, count)
            yield frozenset(crosses)
            return
        if i > last_row:
            return
        yield from letters(i, d - 1, line, pos, crosses)

    def letters(i: int, top: int, line: list[int], pos: list[int], crosses: list[Box]) -> Iterator[frozenset[Box]]:
        # close row i: values 1..i must already be home
        if all(line[k] == k + 1 for k in range(i)):
            yield from rows(i + 1, line, pos, crosses)
        for a in range(top, i - 1, -1):
            if pos[a] > pos[a + 1]:
                # s_a * rest swaps the values a and a+1
                pa, pb = pos[a], pos[a + 1]
                line[pa - 1], line[pb - 1] = a + 1, a
                pos[a], pos[a + 1] = pb, pa
                crosses.append((i, a - i + 1))
                yield from letters(i, a - 1, line, pos, crosses)
                crosses.pop()
                line[pa - 1], line[pb - 1] = a, a + 1
                pos[a], pos[a + 1] = pa, pb

    line = list(w.one_line)
    pos = [0] * (d + 2)
    for idx, v in enumerate(line, 1):
        pos[v] = idx
    yield from rows(1, line, pos, [])


def _by_words(w: Permutation, guards: Guards) -> set[frozenset[Box]]:
    found = set()
    for word in reduced_words(w, guards):
        for seq in compatible_sequences(word):
            found.add(frozenset((mu, u - mu + 1) for u, mu in zip(word, seq)))
    return found


def enumerate_rc(
    w: Permutation,
    guards: Guards | None = None,
    method: str = "rows",
    max_row: int | None = None,
) -> set[RCGraph]:
    """All RC-graphs of w; max_row keeps only those with crosses in rows <= max_row."""
    guards = resolve(guards)
    if method == "rows":
        cross_sets = set(_by_rows(w, max_row, guards.max_results))
    elif method == "words":
        cross_sets = _by_words(w, guards)
        if max_row is not None:
            cross_sets = {c for c in cross_sets if all(i <= max_row for i, _ in c)}
    else:
        raise ValueError(f"Unknown enumeration method: {method}")
    logger.debug("enumerate_rc(%r, %s): %d graphs", w, method, len(cross_sets))
    return {RCGraph(w.d, c, w) for c in cross_sets}


# ── Weights and rendering ────────────────────────────────────


def cross_weight(
    crosses: Iterable[Box],
    double: bool = True,
    row_var: Callable[[int], VarId] = x,
    col_var: Callable[[int], VarId] = y,
) -> MVPoly:
    """prod over crosses (i,j) of (x_i - y_j), or of x_i alone when double is False."""
    if double:
        return product(MVPoly.var(row_var(i)) - MVPoly.var(col_var(j)) for i, j in crosses)
    return product(MVPoly.var(row_var(i)) for i, _ in crosses)


def render(dream: PipeDream) -> str:
    """ASCII grid: '+' for a cross, '%' for an elbow pair, '.' below the antidiagonal."""
    lines = []
    for i in range(1, dream.d + 1):
        cells = []
        for j in range(1, dream.d + 1):
            if (i, j) in dream.crosses:
                cells.append("+")
            elif i + j <= dream.d:
                cells.append("%")
            else:
                cells.append(".")
        lines.append(" ".join(cells))
    return "\n".join(lines)
