"""Lacing diagrams: tuples of partial permutations between columns of vertices, and their enumeration."""

from __future__ import annotations

import logging
from dataclasses import dataclass
from itertools import combinations, permutations
from typing import Iterator

from core.config import Guards, resolve
from core.errors import DimensionMismatch
from permcore.partial import PartialPermutation, partial_length
from quiverlab.ranks import LaceArray, RankConditions, expected_codim, lace_array

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class LacingDiagram:
    """Columns 0..n of sizes[k] vertices; maps[k-1] joins column k-1 to column k.

    maps[k-1] has a 1 at (s, t) when vertex s of column k-1 is joined to vertex t of column k.
    """

    sizes: tuple[int, ...]
    maps: tuple[PartialPermutation, ...]

    def __post_init__(self):
        object.__setattr__(self, "sizes", tuple(self.sizes))
        object.__setattr__(self, "maps", tuple(self.maps))
        if len(self.maps) != max(len(self.sizes) - 1, 0):
            raise DimensionMismatch(f"{len(self.sizes)} columns need {len(self.sizes) - 1} maps, got {len(self.maps)}")
        for k, w in enumerate(self.maps, 1):
            if (w.rows, w.cols) != (self.sizes[k - 1], self.sizes[k]):
                raise DimensionMismatch(
                    f"w_{k} is {w.rows}x{w.cols}, expected {self.sizes[k - 1]}x{self.sizes[k]}"
                )

    @property
    def n(self) -> int:
        return len(self.sizes) - 1

    def length(self) -> int:
        """l(W): total length of the minimal embeddings of the w_k."""
        return sum(partial_length(w) for w in self.maps)

    def laces(self) -> list[tuple[int, tuple[int, ...]]]:
        """Every lace as (start column, vertices visited), sorted."""
        found = []
        for start in range(self.n + 1):
            incoming = set() if start == 0 else {t for _, t in self.maps[start - 1].ones}
            for v in range(1, self.sizes[start] + 1):
                if v in incoming:
                    continue
                path = [v]
                for k in range(start + 1, self.n + 1):
                    nxt = self.maps[k - 1].row_image(path[-1])
                    if nxt is None:
                        break
                    path.append(nxt)
                found.append((start, tuple(path)))
        return sorted(found)


def lace_counts(W: LacingDiagram) -> LaceArray:
    """(i, j) -> number of laces from column i to column j."""
    counts = {(i, j): 0 for i in range(W.n + 1) for j in range(i, W.n + 1)}
    for start, path in W.laces():
        counts[(start, start + len(path) - 1)] += 1
    return counts


def enumerate_lacing(
    r: RankConditions,
    minimal_only: bool = False,
    guards: Guards | None = None,
) -> set[LacingDiagram]:
    """All lacing diagrams with lace counts s(r); with minimal_only, those with l(W) = d(r)."""
    guards = resolve(guards)
    s = lace_array(r)
    sizes = r.sizes
    bound = expected_codim(r) if minimal_only else None
    found: set[LacingDiagram] = set()
    expanded = 0

    def columns(k: int, origins: tuple[int, ...], maps: tuple, length: int) -> Iterator[LacingDiagram]:
        nonlocal expanded
        expanded += 1
        guards.check("max_results", expanded)
        # origins[v-1] is the start column of the lace through vertex v of column k-1
        if k > r.n:
            if all(origins.count(i) == s[(i, r.n)] for i in range(r.n + 1)):
                yield LacingDiagram(sizes, maps)
            return
        rows, cols = sizes[k - 1], sizes[k]
        by_origin: dict[int, list[int]] = {}
        for v, i in enumerate(origins, 1):
            by_origin.setdefault(i, []).append(v)
        keep = {i: len(vs) - s[(i, k - 1)] for i, vs in by_origin.items()}
        if any(c < 0 for c in keep.values()):
            return
        if cols - sum(keep.values()) != sum(s[(k, j)] for j in range(k, r.n + 1)):
            return
        for chosen in _continuing(by_origin, keep):
            for targets in permutations(range(1, cols + 1), len(chosen)):
                w = PartialPermutation(rows, cols, frozenset(zip(chosen, targets)))
                total = length + partial_length(w)
                if bound is not None and total > bound:
                    continue
                tags = [k] * cols
                for v, t in zip(chosen, targets):
                    tags[t - 1] = origins[v - 1]
                yield from columns(k + 1, tuple(tags), maps + (w,), total)

    if r.n == 0:
        found.add(LacingDiagram(sizes, ()))
    else:
        for W in columns(1, (0,) * sizes[0], (), 0):
            if bound is not None and W.length() != bound:
                continue
            found.add(W)

    if minimal_only and not found:
        logger.warning("No minimal lacing diagram for ranks %s", [list(row) for row in r.rows])
    logger.debug("enumerate_lacing(minimal_only=%s): %d diagrams", minimal_only, len(found))
    return found


def _continuing(by_origin: dict[int, list[int]], keep: dict[int, int]) -> Iterator[tuple[int, ...]]:
    """Sorted vertex tuples that pick keep[i] vertices from each origin class i."""
    groups = sorted(by_origin)

    def pick(idx: int, acc: tuple[int, ...]) -> Iterator[tuple[int, ...]]:
        if idx == len(groups):
            yield tuple(sorted(acc))
            return
        i = groups[idx]
        for subset in combinations(by_origin[i], keep[i]):
            yield from pick(idx + 1, acc + subset)

    yield from pick(0, ())


def minimal_lacing(r: RankConditions, guards: Guards | None = None) -> list[LacingDiagram]:
    """W_min(r) in a fixed order (by the sorted 1-positions of each w_k)."""
    return sorted(
        enumerate_lacing(r, minimal_only=True, guards=guards),
        key=lambda W: tuple(tuple(sorted(w.ones)) for w in W.maps),
    )
