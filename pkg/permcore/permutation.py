"""Permutations in one-line notation, reduced words, diagrams and weak-order factorizations."""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Callable, Iterable, Iterator

from core.config import Guards, resolve
from core.errors import NotAPermutation

logger = logging.getLogger(__name__)

ReducedWord = tuple[int, ...]


@dataclass(frozen=True)
class Permutation:
    """w in S_d stored as (w(1), ..., w(d)). Products compose as functions: (uv)(i) = u(v(i))."""

    one_line: tuple[int, ...]

    def __post_init__(self):
        line = tuple(int(v) for v in self.one_line)
        if sorted(line) != list(range(1, len(line) + 1)):
            raise NotAPermutation(f"Not a permutation of 1..{len(line)}: {list(line)}")
        object.__setattr__(self, "one_line", line)

    # ── Constructors ──────────────────────────────────────────

    @classmethod
    def identity(cls, d: int) -> Permutation:
        return cls(tuple(range(1, d + 1)))

    @classmethod
    def longest(cls, d: int) -> Permutation:
        return cls(tuple(range(d, 0, -1)))

    @classmethod
    def simple(cls, i: int, d: int) -> Permutation:
        return cls.identity(d).times_generator(i)

    @classmethod
    def from_word(cls, word: Iterable[int], d: int) -> Permutation:
        """Returns s_{a1} s_{a2} ... s_{al} in S_d."""
        w = cls.identity(d)
        for a in word:
            w = w.times_generator(a)
        return w

    # ── Group structure ───────────────────────────────────────

    @property
    def d(self) -> int:
        return len(self.one_line)

    def __call__(self, i: int) -> int:
        return self.one_line[i - 1] if i <= self.d else i

    def __mul__(self, other: Permutation) -> Permutation:
        size = max(self.d, other.d)
        return Permutation(tuple(self(other(i)) for i in range(1, size + 1)))

    def inverse(self) -> Permutation:
        inv = [0] * self.d
        for i, v in enumerate(self.one_line, 1):
            inv[v - 1] = i
        return Permutation(tuple(inv))

    def times_generator(self, i: int) -> Permutation:
        """Right multiplication by s_i: swaps positions i and i+1."""
        if not 1 <= i < self.d:
            raise NotAPermutation(f"s_{i} is not a generator of S_{self.d}")
        line = list(self.one_line)
        line[i - 1], line[i] = line[i], line[i - 1]
        return Permutation(tuple(line))

    def generators(self) -> range:
        return range(1, self.d)

    def identity_like(self) -> Permutation:
        return Permutation.identity(self.d)

    def padded(self, d: int) -> Permutation:
        if d < self.d:
            return self.truncated(d)
        return Permutation(self.one_line + tuple(range(self.d + 1, d + 1)))

    def truncated(self, d: int) -> Permutation:
        if not self.fixes_beyond(d):
            raise NotAPermutation(f"{list(self.one_line)} does not lie in S_{d}")
        return Permutation(self.one_line[:d])

    def fixes_beyond(self, m: int) -> bool:
        """True iff w lies in the parabolic subgroup S_m (fixes every i > m)."""
        return all(self.one_line[i - 1] == i for i in range(m + 1, self.d + 1))

    def shift(self, m: int) -> Permutation:
        """Returns 1^m x w in S_{m+d}."""
        return Permutation(tuple(range(1, m + 1)) + tuple(v + m for v in self.one_line))

    # ── Statistics ────────────────────────────────────────────

    def length(self) -> int:
        line = self.one_line
        return sum(1 for i in range(self.d) for j in range(i + 1, self.d) if line[i] > line[j])

    def descents(self) -> set[int]:
        """Right descents: i with l(w s_i) < l(w)."""
        line = self.one_line
        return {i for i in range(1, self.d) if line[i - 1] > line[i]}

    def left_descents(self) -> set[int]:
        return self.inverse().descents()

    def weak_prefixes(self) -> list[Permutation]:
        return _weak_prefixes(self, lambda u: u.length(), lambda u: u.generators(), lambda u, g: u.times_generator(g))

    def __repr__(self) -> str:
        return f"Permutation({list(self.one_line)})"


# ── Words and diagrams ───────────────────────────────────────


def length(w) -> int:
    return w.length()


def is_reduced(word: Iterable[int], d: int) -> bool:
    word = tuple(word)
    return Permutation.from_word(word, d).length() == len(word)


def diagram(w: Permutation) -> set[tuple[int, int]]:
    """Returns D(w) = {(i, j) : w(i) > j and w^-1(j) > i}."""
    inv = w.inverse()
    return {
        (i, j)
        for i in range(1, w.d + 1)
        for j in range(1, w.d + 1)
        if w(i) > j and inv(j) > i
    }


def canonical_reduced_word(w: Permutation) -> ReducedWord:
    """Row reading of D(w): boxes of row i are numbered i, i+1, ... from the right."""
    boxes = diagram(w)
    word: list[int] = []
    for i in range(1, w.d + 1):
        count = sum(1 for (r, _c) in boxes if r == i)
        word.extend(range(i + count - 1, i - 1, -1))
    return tuple(word)


def reduced_words(w, guards: Guards | None = None, kind: str | None = None) -> set[ReducedWord]:
    """All reduced words of w.

    For signed permutations pass kind "B" (letters 0..n-1) or "D" (letter -1 stands for s_0-hat).
    """
    if kind is None:
        length_of, descents_of = (lambda u: u.length()), (lambda u: u.descents())
    else:
        length_of, descents_of = (lambda u: u.length(kind)), (lambda u: u.type_descents(kind))
    guards = resolve(guards)
    guards.check("max_length", length_of(w))
    memo: dict = {}

    def words(u) -> set[ReducedWord]:
        if u in memo:
            return memo[u]
        desc = descents_of(u)
        found = set() if desc else {()}
        for g in sorted(desc):
            for prefix in words(u.times_generator(g)):
                found.add(prefix + (g,))
        memo[u] = found
        return found

    result = words(w)
    logger.debug("reduced_words: %d words of length %d", len(result), length_of(w))
    return result


# ── Weak order and factorizations ────────────────────────────


def _weak_prefixes(w, length_fn, generators_fn, times) -> list:
    """All u with l(u) + l(u^-1 w) = l(w), found by climbing from the identity."""
    total = length_fn(w)
    start = w.identity_like()
    seen = {start}
    frontier = [start]
    while frontier:
        nxt = []
        for u in frontier:
            lu = length_fn(u)
            for g in generators_fn(u):
                up = times(u, g)
                if up in seen or length_fn(up) != lu + 1:
                    continue
                if lu + 1 + length_fn(up.inverse() * w) == total:
                    seen.add(up)
                    nxt.append(up)
        frontier = nxt
    return sorted(seen, key=lambda u: (length_fn(u), u.one_line))


def factorizations(
    w,
    constraints: list[Callable[[object], bool]],
    guards: Guards | None = None,
    prefixes: Callable | None = None,
) -> set[tuple]:
    """Length-additive factorizations w = u_1 ... u_k with u_i satisfying constraints[i]."""
    guards = resolve(guards)
    guards.check("max_length", w.length())
    prefixes = prefixes or (lambda u: u.weak_prefixes())
    slots = len(constraints)
    if slots == 0:
        return {()} if w == w.identity_like() else set()

    def rec(rest, k: int) -> Iterator[tuple]:
        if k == slots - 1:
            if constraints[k](rest):
                yield (rest,)
            return
        for u in prefixes(rest):
            if constraints[k](u):
                for tail in rec(u.inverse() * rest, k + 1):
                    yield (u,) + tail

    result = set(rec(w, 0))
    logger.debug("factorizations: %d for %r over %d slots", len(result), w, slots)
    return result


def in_parabolic(m: int) -> Callable[[Permutation], bool]:
    """Slot constraint u in S_m."""
    return lambda u: u.fixes_beyond(m)


def compatible_with(w, breaks: Iterable[int]) -> bool:
    """True iff every right descent s_i (i >= 1) of w lies in breaks."""
    allowed = set(breaks)
    return all(i in allowed for i in w.descents() if i >= 1)
