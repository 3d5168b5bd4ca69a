"""Pipe dreams over lacing diagrams: the maps-to relation, local NW RC-graphs, and the embedding W_min(r) -> RC(v(r))."""

from __future__ import annotations

import logging

from core.errors import DimensionMismatch, InvariantViolation, NotMinimal
from permcore.partial import PartialPermutation, embed_partial
from permcore.permutation import canonical_reduced_word, diagram
from quiverlab.lacing import LacingDiagram, lace_counts
from quiverlab.ranks import RankConditions, expected_codim, lace_array
from quiverlab.zelevinsky import zelevinsky
from rcgraph.pipedream import Box, PipeDream, RCGraph, rc_from_compatible, trace

logger = logging.getLogger(__name__)


def _exit_column(crosses: frozenset[Box], top: int, bottom: int, col: int) -> int | None:
    """Follows a pipe backwards from the top edge of (top, col) down through rows top..bottom.

    Returns the column where it leaves the bottom edge of row bottom, or None if it leaves on the left.
    """
    row, heading_south = top, True
    while row <= bottom:
        if col < 1:
            return None
        if (row, col) in crosses:
            if heading_south:
                row += 1
            else:
                col -= 1
        else:
            # elbows: north -> west, east -> south
            if heading_south:
                col -= 1
            else:
                row += 1
            heading_south = not heading_south
    return col


def maps_to(D: PipeDream, W: LacingDiagram, r: RankConditions) -> bool:
    """True iff inside each row strip k-1 the pipes realize w_k.

    The pipe entering the top of strip k-1 at the s-th column from the right of column strip n-k+1
    must leave its bottom at the t-th column from the right of column strip n-k exactly when w_k(s,t) = 1.
    """
    if D.d != r.d:
        raise DimensionMismatch(f"Pipe dream has size {D.d}, ranks need {r.d}")
    if W.sizes != r.sizes:
        raise DimensionMismatch(f"Lacing diagram columns {list(W.sizes)} do not match ranks {list(r.sizes)}")
    n = r.n
    for k in range(1, n + 1):
        rows = r.row_strip(k - 1)
        if not rows:
            continue
        source, target = r.col_strip(n - k + 1), r.col_strip(n - k)
        realized = set()
        for s in range(1, len(source) + 1):
            out = _exit_column(D.crosses, rows.start, rows.stop - 1, source.stop - s)
            if out is not None and out in target:
                realized.add((s, target.stop - out))
        if realized != set(W.maps[k - 1].ones):
            return False
    return True


def local_rc(rho: PartialPermutation) -> RCGraph:
    """RC-graph of the minimal embedding of rho with every cross in the NW a x b rectangle.

    Built from the canonical reduced word, the letters of the t-th nonempty diagram row getting t.
    """
    full = embed_partial(rho)
    word = canonical_reduced_word(full)
    row_sizes = [sum(1 for (i, _) in diagram(full) if i == row) for row in range(1, full.d + 1)]
    seq: list[int] = []
    run = 0
    for size in row_sizes:
        if size:
            run += 1
            seq.extend([run] * size)
    graph = rc_from_compatible(word, seq, full.d)
    if graph.permutation != full:
        raise InvariantViolation(f"Local RC-graph of {rho!r} traces to {graph.permutation!r}")
    outside = [(i, j) for i, j in graph.crosses if i > rho.rows or j > rho.cols]
    if outside:
        raise InvariantViolation(f"Local RC-graph of {rho!r} has crosses {sorted(outside)} outside its NW rectangle")
    return graph


def theorem1_embed(W: LacingDiagram, r: RankConditions) -> RCGraph:
    """The RC-graph of v(r) that W is sent to.

    Crosses fill the Hom region; for k = 1..n the local RC-graph of w_k, rotated by 180 degrees,
    sits in block M_{k-1,n-k}; everything else is an elbow.
    """
    if W.sizes != r.sizes:
        raise DimensionMismatch(f"Lacing diagram columns {list(W.sizes)} do not match ranks {list(r.sizes)}")
    if lace_counts(W) != lace_array(r):
        raise NotMinimal("Lacing diagram does not have the lace counts of r")
    codim = expected_codim(r)
    if W.length() != codim:
        raise NotMinimal(f"l(W) = {W.length()} but d(r) = {codim}")

    n = r.n
    crosses = set(r.hom_region())
    for k in range(1, n + 1):
        w = W.maps[k - 1]
        a, b = w.rows, w.cols
        rows, cols = r.block(k - 1, n - k)
        for i, j in local_rc(w).crosses:
            crosses.add((rows.start + a - i, cols.start + b - j))

    v = zelevinsky(r)
    dream = PipeDream(r.d, frozenset(crosses))
    if trace(dream) != v:
        raise InvariantViolation(f"Embedded pipe dream traces to {trace(dream)!r}, not v(r) = {v!r}")
    if len(crosses) != v.length():
        raise InvariantViolation(f"Embedded pipe dream has {len(crosses)} crosses, l(v(r)) = {v.length()}")
    if not maps_to(dream, W, r):
        raise InvariantViolation("Embedded pipe dream does not map to its lacing diagram")
    return RCGraph(r.d, dream.crosses, v)
