"""Partial permutations (0/1 matrices with at most one 1 per row and column) and their minimal embeddings."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, permutations
from typing import Iterator

from core.errors import NotAPermutation
from permcore.permutation import Permutation


@dataclass(frozen=True)
class PartialPermutation:
    rows: int
    cols: int
    ones: frozenset[tuple[int, int]]

    def __post_init__(self):
        ones = frozenset((int(r), int(c)) for r, c in self.ones)
        object.__setattr__(self, "ones", ones)
        if self.rows < 0 or self.cols < 0:
            raise NotAPermutation(f"Negative shape {self.rows}x{self.cols}")
        used_rows = [r for r, _ in ones]
        used_cols = [c for _, c in ones]
        if len(set(used_rows)) != len(used_rows) or len(set(used_cols)) != len(used_cols):
            raise NotAPermutation(f"Two 1s share a row or column: {sorted(ones)}")
        for r, c in ones:
            if not (1 <= r <= self.rows and 1 <= c <= self.cols):
                raise NotAPermutation(f"Entry ({r},{c}) outside {self.rows}x{self.cols}")

    @classmethod
    def from_matrix(cls, matrix: list[list[int]], cols: int | None = None) -> PartialPermutation:
        rows = len(matrix)
        width = cols if cols is not None else (len(matrix[0]) if matrix else 0)
        ones = {(i + 1, j + 1) for i, row in enumerate(matrix) for j, v in enumerate(row) if v}
        return cls(rows, width, frozenset(ones))

    @classmethod
    def nw_block(cls, w: Permutation, a: int, b: int) -> PartialPermutation:
        """The northwest a x b submatrix of the permutation matrix of w."""
        return cls(a, b, frozenset((i, w(i)) for i in range(1, a + 1) if w(i) <= b))

    def to_matrix(self) -> list[list[int]]:
        return [
            [1 if (i, j) in self.ones else 0 for j in range(1, self.cols + 1)]
            for i in range(1, self.rows + 1)
        ]

    @property
    def rank(self) -> int:
        return len(self.ones)

    def row_image(self, r: int) -> int | None:
        for i, c in self.ones:
            if i == r:
                return c
        return None

    def col_preimage(self, c: int) -> int | None:
        for r, j in self.ones:
            if j == c:
                return r
        return None

    def __repr__(self) -> str:
        return f"PartialPermutation({self.rows}x{self.cols}, {sorted(self.ones)})"


def embed_partial(rho: PartialPermutation) -> Permutation:
    """Returns the minimal-length completion of rho in S_{a+b}.

    Empty rows of rho take columns b+1, b+2, ... in order; rows a+1, ... take the
    unused columns in increasing order.
    """
    a, b = rho.rows, rho.cols
    images: list[int] = []
    next_right = b + 1
    for r in range(1, a + 1):
        c = rho.row_image(r)
        if c is None:
            c = next_right
            next_right += 1
        images.append(c)
    used = set(images)
    images.extend(c for c in range(1, a + b + 1) if c not in used)
    return Permutation(tuple(images))


def partial_length(rho: PartialPermutation) -> int:
    return embed_partial(rho).length()


def all_partial_permutations(a: int, b: int) -> Iterator[PartialPermutation]:
    for k in range(min(a, b) + 1):
        for rows in combinations(range(1, a + 1), k):
            for cols in permutations(range(1, b + 1), k):
                yield PartialPermutation(a, b, frozenset(zip(rows, cols)))
