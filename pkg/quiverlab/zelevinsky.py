"""Zelevinsky permutations v(r), the Hom permutation, and the block class S_d(r)."""

from __future__ import annotations

import logging
from collections import Counter

from core.config import Guards, resolve
from core.errors import InvariantViolation
from permcore.permutation import Permutation
from quiverlab.ranks import RankConditions, expected_codim, lace_array, require_valid
from rcgraph.pipedream import PipeDream, trace

logger = logging.getLogger(__name__)


def zelevinsky(r: RankConditions) -> Permutation:
    """v(r): s_{n-j,i} points per block M_ij, placed as far southeast as possible.

    The rows left over in strip i fill block M_{i,n-i-1} along its main diagonal.
    """
    require_valid(r)
    n, s = r.n, lace_array(r)
    images: dict[int, int] = {}
    free_cols = set(range(1, r.d + 1))

    for i in range(n, -1, -1):
        free_rows = set(r.row_strip(i))
        for j in range(n, -1, -1):
            if n - j > i:
                continue
            count = s[(n - j, i)]
            if not count:
                continue
            rows = sorted(free_rows)[-count:]
            cols = sorted(c for c in r.col_strip(j) if c in free_cols)[-count:]
            if len(rows) != count or len(cols) != count:
                raise InvariantViolation(f"Block M_{i}{j} cannot hold {count} points")
            for a, b in zip(rows, cols):
                images[a] = b
            free_rows.difference_update(rows)
            free_cols.difference_update(cols)
        if free_rows:
            _fill_diagonal(r, i, free_rows, free_cols, images)

    if sorted(images.values()) != list(range(1, r.d + 1)) or len(images) != r.d:
        raise InvariantViolation(f"Zelevinsky placement is not a permutation: {images}")
    v = Permutation(tuple(images[a] for a in range(1, r.d + 1)))
    logger.debug("zelevinsky: v(r) = %s", list(v.one_line))
    return v


def _fill_diagonal(r: RankConditions, i: int, free_rows: set[int], free_cols: set[int], images: dict[int, int]) -> None:
    j = r.n - i - 1
    if j < 0:
        raise InvariantViolation(f"Rows {sorted(free_rows)} of the last strip were left empty")
    cols = sorted(c for c in r.col_strip(j) if c in free_cols)
    rows = sorted(free_rows)
    if len(cols) != len(rows):
        raise InvariantViolation(f"Block M_{i}{j} has {len(cols)} free columns for {len(rows)} rows")
    for a, b in zip(rows, cols):
        images[a] = b
    free_cols.difference_update(cols)


def hom_permutation(r: RankConditions) -> Permutation:
    """v(Hom): the dominant permutation whose diagram is the Hom region."""
    return trace(PipeDream(r.d, r.hom_region()))


def length_identity_check(r: RankConditions) -> bool:
    """l(v(r)) = |Hom region| + d(r)."""
    v = zelevinsky(r)
    return v.length() == len(r.hom_region()) + expected_codim(r)


# ── Block class S_d(r) ───────────────────────────────────────


def block_counts(w: Permutation, r: RankConditions) -> Counter:
    """Number of points of w in each block M_ij."""
    counts: Counter = Counter()
    for a in range(1, w.d + 1):
        i, _ = r.row_strip_of(a)
        j, _ = r.col_strip_of(w(a))
        counts[(i, j)] += 1
    return counts


def enumerate_block_class(r: RankConditions, guards: Guards | None = None) -> set[Permutation]:
    """All w in S_d with the same number of points as v(r) in every block."""
    resolve(guards).check("max_dim", r.d)
    target = block_counts(zelevinsky(r), r)
    row_strip = [0] + [r.row_strip_of(a)[0] for a in range(1, r.d + 1)]
    col_strip = [0] + [r.col_strip_of(b)[0] for b in range(1, r.d + 1)]
    found: set[Permutation] = set()

    def place(a: int, line: list[int], used: set[int], left: Counter) -> None:
        if a > r.d:
            found.add(Permutation(tuple(line)))
            return
        i = row_strip[a]
        for b in range(1, r.d + 1):
            key = (i, col_strip[b])
            if b in used or left[key] == 0:
                continue
            left[key] -= 1
            used.add(b)
            line.append(b)
            place(a + 1, line, used, left)
            line.pop()
            used.discard(b)
            left[key] += 1

    place(1, [], set(), Counter(target))
    logger.debug("enumerate_block_class: |S_d(r)| = %d", len(found))
    return found


def minimal_block_elements(r: RankConditions, guards: Guards | None = None) -> list[Permutation]:
    """The minimum-length elements of S_d(r); a single element, v(r), when the characterization holds."""
    members = enumerate_block_class(r, guards)
    shortest = min(w.length() for w in members)
    return sorted((w for w in members if w.length() == shortest), key=lambda w: w.one_line)
