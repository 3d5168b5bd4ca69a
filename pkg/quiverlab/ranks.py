"""Rank conditions r = {r_ij}, the lace array s(r), expected codimension, and block geometry."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product as cartesian
from typing import Iterator

from core.errors import DimensionMismatch, RankViolation
from polyring.variables import VarId

LaceArray = dict[tuple[int, int], int]


@dataclass(frozen=True)
class RankConditions:
    """r_ij for 0 <= i <= j <= n, stored as rows[i][j - i]."""

    n: int
    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        rows = tuple(tuple(int(v) for v in row) for row in self.rows)
        object.__setattr__(self, "rows", rows)
        if len(rows) != self.n + 1 or any(len(rows[i]) != self.n + 1 - i for i in range(self.n + 1)):
            raise DimensionMismatch(f"Rank triangle for n={self.n} has the wrong shape: {[list(r) for r in rows]}")
        if any(v < 0 for row in rows for v in row):
            raise RankViolation({"i": None, "j": None, "message": "negative rank"})

    @classmethod
    def from_mapping(cls, n: int, values: dict[tuple[int, int], int]) -> RankConditions:
        return cls(n, tuple(tuple(values.get((i, j), 0) for j in range(i, n + 1)) for i in range(n + 1)))

    def r(self, i: int, j: int) -> int:
        """r_ij, with out-of-range indices read as 0."""
        if i < 0 or j > self.n or i > j:
            return 0
        return self.rows[i][j - i]

    @property
    def sizes(self) -> tuple[int, ...]:
        return tuple(self.r(k, k) for k in range(self.n + 1))

    @property
    def d(self) -> int:
        return sum(self.sizes)

    # ── Block geometry of the d x d grid ─────────────────────

    def row_strip(self, i: int) -> range:
        """Rows of strip i (height r_ii), 1-based."""
        start = sum(self.sizes[:i]) + 1
        return range(start, start + self.r(i, i))

    def col_strip(self, j: int) -> range:
        """Columns of strip j (width r_{n-j,n-j}), 1-based."""
        widths = [self.r(self.n - t, self.n - t) for t in range(self.n + 1)]
        start = sum(widths[:j]) + 1
        return range(start, start + widths[j])

    def block(self, i: int, j: int) -> tuple[range, range]:
        return self.row_strip(i), self.col_strip(j)

    def hom_region(self) -> frozenset[tuple[int, int]]:
        """Boxes of the union of blocks M_ij with i + j <= n - 2."""
        boxes = set()
        for i in range(self.n + 1):
            for j in range(self.n - 1 - i):
                rows, cols = self.block(i, j)
                boxes.update((a, b) for a in rows for b in cols)
        return frozenset(boxes)

    def row_strip_of(self, row: int) -> tuple[int, int]:
        """(strip i, position alpha within the strip) of a global row."""
        for i in range(self.n + 1):
            rows = self.row_strip(i)
            if row in rows:
                return i, row - rows.start + 1
        raise DimensionMismatch(f"Row {row} outside the {self.d}x{self.d} grid")

    def col_strip_of(self, col: int) -> tuple[int, int]:
        for j in range(self.n + 1):
            cols = self.col_strip(j)
            if col in cols:
                return j, col - cols.start + 1
        raise DimensionMismatch(f"Column {col} outside the {self.d}x{self.d} grid")

    def row_var(self, row: int) -> VarId:
        """Row alpha of strip i carries x^i_alpha."""
        i, alpha = self.row_strip_of(row)
        return VarId("x", i, alpha)

    def col_var(self, col: int) -> VarId:
        """Column beta (from the left) of strip j carries y^(n-j)_beta."""
        j, beta = self.col_strip_of(col)
        return VarId("y", self.n - j, beta)


def validate(r: RankConditions) -> dict | None:
    """Returns None if r occurs, else a report of the first violated inequality."""
    for span in range(1, r.n + 1):
        for i in range(r.n + 1 - span):
            j = i + span
            bound = min(r.r(i, j - 1), r.r(i + 1, j))
            if r.r(i, j) > bound:
                return {
                    "i": i,
                    "j": j,
                    "message": f"r_{i}{j} = {r.r(i, j)} > min(r_{i}{j - 1}, r_{i + 1}{j}) = {bound}",
                }
    for (i, j), s in lace_array(r).items():
        if s < 0:
            return {"i": i, "j": j, "message": f"lace count s_{i}{j} = {s} < 0"}
    return None


def require_valid(r: RankConditions) -> RankConditions:
    violation = validate(r)
    if violation:
        raise RankViolation(violation)
    return r


def lace_array(r: RankConditions) -> LaceArray:
    """s_ij = r_ij - r_{i-1,j} - r_{i,j+1} + r_{i-1,j+1}."""
    return {
        (i, j): r.r(i, j) - r.r(i - 1, j) - r.r(i, j + 1) + r.r(i - 1, j + 1)
        for i in range(r.n + 1)
        for j in range(i, r.n + 1)
    }


def expected_codim(r: RankConditions) -> int:
    """d(r) = sum_{i<j} (r_{i,j-1} - r_ij)(r_{i+1,j} - r_ij)."""
    return sum(
        (r.r(i, j - 1) - r.r(i, j)) * (r.r(i + 1, j) - r.r(i, j))
        for i in range(r.n + 1)
        for j in range(i + 1, r.n + 1)
    )


def shift_ranks(r: RankConditions, m: int) -> RankConditions:
    """m + r: every r_ij raised by m."""
    return RankConditions(r.n, tuple(tuple(v + m for v in row) for row in r.rows))


def all_rank_conditions(n: int, max_rank: int, max_total: int | None = None) -> Iterator[RankConditions]:
    """Every occurring r with 0 <= r_ii <= max_rank (and d(r) <= max_total if given), in a fixed order."""
    for diagonal in cartesian(range(max_rank + 1), repeat=n + 1):
        if max_total is not None and sum(diagonal) > max_total:
            continue
        values = {(k, k): v for k, v in enumerate(diagonal)}
        yield from _fill(n, values, 1)


def _fill(n: int, values: dict, span: int) -> Iterator[RankConditions]:
    if span > n:
        r = RankConditions.from_mapping(n, values)
        if validate(r) is None:
            yield r
        return
    cells = [(i, i + span) for i in range(n + 1 - span)]
    bounds = [min(values[(i, j - 1)], values[(i + 1, j)]) for i, j in cells]
    for choice in cartesian(*(range(b + 1) for b in bounds)):
        extended = dict(values)
        extended.update(zip(cells, choice))
        yield from _fill(n, extended, span + 1)
