from __future__ import annotations

from itertools import permutations

import pytest

from core.errors import DimensionMismatch, NotAPermutation, NotCompatible, NotMinimal
from permcore.partial import PartialPermutation, all_partial_permutations, embed_partial
from permcore.permutation import Permutation
from quiverlab.lacing import LacingDiagram
from rcgraph.embedding import local_rc, maps_to, theorem1_embed
from rcgraph.pipedream import (
    PipeDream,
    RCGraph,
    compatible_sequences,
    enumerate_rc,
    is_compatible,
    is_rc_graph,
    rc_from_compatible,
    render,
    trace,
)

HOM_2342 = frozenset(
    {(a, b) for a in (1, 2) for b in range(1, 7)} | {(a, b) for a in (3, 4, 5) for b in (1, 2)}
)
EMBEDDED_2342 = HOM_2342 | {(2, 7), (2, 8), (5, 3), (5, 4), (5, 5), (5, 6), (7, 1), (8, 1), (9, 1)}


# ── Pipe dreams ──────────────────────────────────────────────


def test_trace_single_cross() -> None:
    assert trace(PipeDream(2, frozenset({(1, 1)}))).one_line == (2, 1)
    assert trace(PipeDream(3, frozenset())).one_line == (1, 2, 3)


def test_cross_outside_region_rejected() -> None:
    with pytest.raises(NotAPermutation):
        PipeDream(2, frozenset({(2, 1)}))


def test_double_crossing_is_not_rc() -> None:
    dream = PipeDream(3, frozenset({(1, 1), (1, 2), (2, 1)}))
    assert dream.word() == (2, 1, 2)
    assert is_rc_graph(dream)
    dream = PipeDream(3, frozenset({(1, 2), (2, 1)}))
    assert dream.word() == (2, 2)
    assert not is_rc_graph(dream)
    with pytest.raises(NotCompatible):
        RCGraph.of(dream)


def test_compatible_sequences_of_121() -> None:
    assert set(compatible_sequences((1, 2, 1))) == set()
    assert not is_compatible((1, 2, 1), (1, 2, 1))
    assert set(compatible_sequences((2, 1, 2))) == {(1, 1, 2)}


def test_rc_from_compatible() -> None:
    graph = rc_from_compatible((2, 1, 2), (1, 1, 2), 3)
    assert graph.crosses == frozenset({(1, 2), (1, 1), (2, 1)})
    assert graph.permutation == Permutation((3, 2, 1))
    with pytest.raises(NotCompatible):
        rc_from_compatible((1, 1), (1, 1), 3)


def test_rc_count_matches_schubert_evaluation() -> None:
    # S_{1432}(1,1,1) = 5
    assert len(enumerate_rc(Permutation((1, 4, 3, 2)))) == 5
    assert len(enumerate_rc(Permutation((1, 2, 3)))) == 1


@pytest.mark.parametrize("line", list(permutations(range(1, 5))))
def test_row_search_matches_word_oracle(line) -> None:
    w = Permutation(line)
    rows = enumerate_rc(w, method="rows")
    words = enumerate_rc(w, method="words")
    assert rows == words
    for graph in rows:
        assert trace(graph) == w
        assert len(graph.crosses) == w.length()


def test_max_row_restriction() -> None:
    w = Permutation((1, 3, 2))
    assert {g.crosses for g in enumerate_rc(w, max_row=1)} == {frozenset({(1, 2)})}


def test_render_marks_crosses() -> None:
    text = render(PipeDream(3, frozenset({(1, 1)})))
    assert text.splitlines() == ["+ % .", "% . .", ". . ."]


# ── Local RC-graphs and the embedding ────────────────────────


def test_local_rc_of_embedded_example() -> None:
    rho = PartialPermutation(3, 4, frozenset({(2, 1), (3, 4)}))
    graph = local_rc(rho)
    assert graph.crosses == frozenset({(1, 1), (1, 2), (1, 3), (1, 4), (2, 2), (2, 3)})
    rho = PartialPermutation(3, 4, frozenset({(2, 1), (3, 2)}))
    assert local_rc(rho).crosses == frozenset({(1, 1), (1, 2), (1, 3), (1, 4)})


@pytest.mark.parametrize("a,b", [(1, 1), (2, 2), (2, 3), (3, 2), (3, 3)])
def test_local_rc_stays_in_rectangle(a: int, b: int) -> None:
    for rho in all_partial_permutations(a, b):
        graph = local_rc(rho)
        assert graph.permutation == embed_partial(rho)
        assert all(i <= a and j <= b for i, j in graph.crosses)


def test_theorem1_embed_of_2342_lacing(ranks_2342, lacing_2342) -> None:
    graph = theorem1_embed(lacing_2342, ranks_2342)
    assert graph.crosses == EMBEDDED_2342
    assert len(graph.crosses) == 27
    assert graph.permutation.one_line == (7, 10, 3, 4, 11, 1, 5, 6, 8, 2, 9)


def test_maps_to(ranks_2342, lacing_2342) -> None:
    assert maps_to(PipeDream(11, EMBEDDED_2342), lacing_2342, ranks_2342)
    assert not maps_to(PipeDream(11, frozenset()), lacing_2342, ranks_2342)
    with pytest.raises(DimensionMismatch):
        maps_to(PipeDream(5, frozenset()), lacing_2342, ranks_2342)


def test_theorem1_embed_rejects_non_minimal(ranks_2342) -> None:
    # dropping the lace from column 0 to column 1 changes the lace counts
    bad = LacingDiagram(
        (2, 3, 4, 2),
        (
            PartialPermutation(2, 3, frozenset()),
            PartialPermutation(3, 4, frozenset({(2, 1), (3, 2)})),
            PartialPermutation(4, 2, frozenset({(1, 1)})),
        ),
    )
    with pytest.raises(NotMinimal):
        theorem1_embed(bad, ranks_2342)
