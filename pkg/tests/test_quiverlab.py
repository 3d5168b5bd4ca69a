from __future__ import annotations

import pytest
from hypothesis import given, settings, strategies as st

from core.config import Guards
from core.errors import DimensionMismatch, GuardExceeded, RankViolation
from permcore.partial import PartialPermutation
from polyring.mvpoly import MVPoly, rename
from polyring.variables import VarId
from quiverlab.lacing import LacingDiagram, enumerate_lacing, lace_counts, minimal_lacing
from quiverlab.quiver_poly import (
    collapse_y,
    component_check,
    hom_product,
    quiver_coeffs,
    quiver_cycle_expansion,
    quiver_poly,
    stability_check,
    strip_relabeling,
)
from quiverlab.ranks import (
    RankConditions,
    all_rank_conditions,
    expected_codim,
    lace_array,
    require_valid,
    shift_ranks,
    validate,
)
from quiverlab.zelevinsky import (
    block_counts,
    hom_permutation,
    length_identity_check,
    enumerate_block_class,
    minimal_block_elements,
    zelevinsky,
)
from rcgraph.embedding import maps_to, theorem1_embed
from rcgraph.pipedream import enumerate_rc
from symfunc.schubert import schubert_double

V_2342 = (7, 10, 3, 4, 11, 1, 5, 6, 8, 2, 9)

SMALL = [r for n in (1, 2) for r in all_rank_conditions(n, 2)]


def _x(block: int, pos: int) -> MVPoly:
    return MVPoly.var(VarId("x", block, pos))


def _y(block: int, pos: int) -> MVPoly:
    return MVPoly.var(VarId("y", block, pos))


# ── Rank conditions ──────────────────────────────────────────


def test_rank_shape_checked() -> None:
    with pytest.raises(DimensionMismatch):
        RankConditions(1, ((1, 0),))
    with pytest.raises(RankViolation):
        RankConditions(1, ((1, -1), (1,)))


def test_2342_lace_array(ranks_2342) -> None:
    s = lace_array(ranks_2342)
    expected = {(0, 0): 1, (0, 1): 1, (1, 1): 0, (0, 2): 0, (1, 2): 1, (2, 2): 2, (0, 3): 0, (1, 3): 1, (2, 3): 0, (3, 3): 1}
    assert s == expected
    assert validate(ranks_2342) is None


def test_2342_codim_and_geometry(ranks_2342) -> None:
    r = ranks_2342
    assert expected_codim(r) == 9
    assert r.sizes == (2, 3, 4, 2)
    assert r.d == 11
    assert r.row_strip(1) == range(3, 6)
    assert r.col_strip(1) == range(3, 7)
    assert len(r.hom_region()) == 18
    assert r.row_var(4) == VarId("x", 1, 2)
    assert r.col_var(7) == VarId("y", 1, 1)


def test_validate_reports_violation() -> None:
    r = RankConditions(1, ((1, 2), (3,)))
    violation = validate(r)
    assert violation["i"] == 0 and violation["j"] == 1
    with pytest.raises(RankViolation):
        require_valid(r)


def test_validate_reports_negative_lace_count() -> None:
    # every rank inequality holds in the second triangle, but s_11 = 1 - 1 - 1 + 0
    r = RankConditions(2, ((1, 1, 1), (1, 1), (1,)))
    assert validate(r) is None
    r = RankConditions(2, ((2, 1, 0), (1, 1), (2,)))
    assert validate(r) is not None


def test_shift_ranks(tiny_ranks) -> None:
    shifted = shift_ranks(tiny_ranks, 2)
    assert shifted.rows == ((3, 2), (3,))
    assert expected_codim(shifted) == expected_codim(tiny_ranks)


def test_all_rank_conditions_are_valid() -> None:
    found = list(all_rank_conditions(1, 2))
    assert len(found) == len(set(found))
    assert all(validate(r) is None for r in found)
    # (r00, r11) each 0..2 and r01 <= min of them
    assert len(found) == sum(min(a, b) + 1 for a in range(3) for b in range(3))


# ── Lacing diagrams ──────────────────────────────────────────


def test_lacing_shape_checked() -> None:
    with pytest.raises(DimensionMismatch):
        LacingDiagram((1, 2), (PartialPermutation(2, 1, frozenset()),))


def test_2342_laces(lacing_2342) -> None:
    W = lacing_2342
    assert W.length() == 9
    assert W.laces() == [
        (0, (1, 1)),
        (0, (2,)),
        (1, (2, 1, 1)),
        (1, (3, 2)),
        (2, (3,)),
        (2, (4,)),
        (3, (2,)),
    ]


def test_2342_wmin_contains_drawn_diagram(ranks_2342, lacing_2342) -> None:
    wmin = minimal_lacing(ranks_2342)
    assert lacing_2342 in wmin
    for W in wmin:
        assert lace_counts(W) == lace_array(ranks_2342)
        assert W.length() == 9


@pytest.mark.parametrize("r", SMALL)
def test_minimal_lacing_is_subset_of_all(r) -> None:
    every = enumerate_lacing(r)
    minimal = set(minimal_lacing(r))
    assert minimal <= every
    assert minimal
    shortest = min(W.length() for W in every)
    assert shortest == expected_codim(r)
    assert minimal == {W for W in every if W.length() == shortest}


def test_lacing_guard(ranks_2342) -> None:
    with pytest.raises(GuardExceeded):
        enumerate_lacing(ranks_2342, guards=Guards(max_results=1))


def test_lacing_guard_counts_search_nodes(tiny_ranks) -> None:
    # one diagram, but the search visits two columns to find it
    assert len(minimal_lacing(tiny_ranks)) == 1
    with pytest.raises(GuardExceeded) as excinfo:
        minimal_lacing(tiny_ranks, Guards(max_results=1))
    assert excinfo.value.value == 2


def test_n0_has_one_empty_diagram() -> None:
    r = RankConditions(0, ((3,),))
    assert minimal_lacing(r) == [LacingDiagram((3,), ())]


# ── Zelevinsky permutation ───────────────────────────────────


def test_2342_zelevinsky(ranks_2342) -> None:
    v = zelevinsky(ranks_2342)
    assert v.one_line == V_2342
    assert v.length() == 27
    assert length_identity_check(ranks_2342)


def test_tiny_zelevinsky(tiny_ranks) -> None:
    assert zelevinsky(tiny_ranks).one_line == (2, 1)
    assert zelevinsky(RankConditions(1, ((1, 1), (1,)))).one_line == (1, 2)
    assert zelevinsky(RankConditions(1, ((2, 1), (2,)))).one_line == (1, 3, 2, 4)


def test_zelevinsky_rejects_bad_ranks() -> None:
    with pytest.raises(RankViolation):
        zelevinsky(RankConditions(1, ((1, 2), (3,))))


@pytest.mark.parametrize("r", SMALL)
def test_length_identity_small(r) -> None:
    assert length_identity_check(r)


def test_hom_permutation_is_dominant(ranks_2342) -> None:
    v_hom = hom_permutation(ranks_2342)
    assert v_hom.length() == 18


BLOCK_CLASS_D6 = [r for n in range(6) for r in all_rank_conditions(n, 6, max_total=6)]
LONG_THIN = [r for n in range(3, 6) for r in all_rank_conditions(n, 1)]


def _assert_unique_minimum(r: RankConditions) -> None:
    v = zelevinsky(r)
    assert minimal_block_elements(r) == [v]
    assert sum(block_counts(v, r).values()) == r.d


@pytest.mark.parametrize("r", LONG_THIN)
def test_zelevinsky_is_unique_minimum_for_long_thin_quivers(r) -> None:
    _assert_unique_minimum(r)


@pytest.mark.slow
@pytest.mark.parametrize("r", BLOCK_CLASS_D6)
def test_zelevinsky_is_unique_minimum_of_block_class(r) -> None:
    _assert_unique_minimum(r)


def test_block_class_family_covers_n_up_to_five() -> None:
    assert {r.n for r in BLOCK_CLASS_D6} == set(range(6))
    assert RankConditions(5, ((1, 1, 1, 1, 1, 1), (1, 1, 1, 1, 1), (1, 1, 1, 1), (1, 1, 1), (1, 1), (1,))) in BLOCK_CLASS_D6


def test_block_class_of_small_ranks(tiny_ranks) -> None:
    assert enumerate_block_class(tiny_ranks) == {zelevinsky(tiny_ranks)}
    r = RankConditions(1, ((2, 1), (2,)))
    members = enumerate_block_class(r)
    v = zelevinsky(r)
    assert v in members
    assert all(w.length() >= v.length() for w in members)
    assert all(block_counts(w, r) == block_counts(v, r) for w in members)


def test_block_class_guard(ranks_2342) -> None:
    with pytest.raises(GuardExceeded):
        minimal_block_elements(ranks_2342, Guards(max_dim=6))


# ── Embedding over small families ────────────────────────────


@pytest.mark.parametrize("r", SMALL)
def test_embedding_is_injective_into_rc_graphs(r) -> None:
    v = zelevinsky(r)
    graphs = {D.crosses for D in enumerate_rc(v)}
    images = [theorem1_embed(W, r) for W in minimal_lacing(r)]
    assert len({D.crosses for D in images}) == len(images)
    for W, D in zip(minimal_lacing(r), images):
        assert D.crosses in graphs
        assert maps_to(D, W, r)


# ── Quiver polynomials ───────────────────────────────────────


def test_tiny_quiver_poly(tiny_ranks) -> None:
    assert quiver_poly(tiny_ranks) == _x(0, 1) - _y(1, 1)
    assert quiver_poly(tiny_ranks, method="divide") == _x(0, 1) - _y(1, 1)
    assert quiver_poly(RankConditions(1, ((1, 1), (1,)))) == MVPoly.const(1)


def test_determinantal_quiver_poly() -> None:
    r = RankConditions(1, ((2, 1), (2,)))
    expected = _x(0, 1) + _x(0, 2) - _y(1, 1) - _y(1, 2)
    assert quiver_poly(r) == expected
    assert quiver_poly(r, method="divide") == expected


def test_unknown_method_rejected(tiny_ranks) -> None:
    with pytest.raises(ValueError):
        quiver_poly(tiny_ranks, method="guess")


@pytest.mark.parametrize("r", [r for r in SMALL if r.n == 2 and r.d <= 5])
def test_pipes_and_divide_agree(r) -> None:
    assert quiver_poly(r, method="pipes") == quiver_poly(r, method="divide")


def test_hom_product_matches_relabeled_schubert() -> None:
    r = RankConditions(2, ((1, 0, 0), (1, 0), (1,)))
    v_hom = hom_permutation(r)
    assert v_hom.one_line == (2, 1, 3)
    assert hom_product(r) == _x(0, 1) - _y(2, 1)
    assert rename(schubert_double(v_hom, r.d), strip_relabeling(r)) == hom_product(r)


@pytest.mark.slow
def test_2342_quiver_poly_degree(ranks_2342) -> None:
    q = quiver_poly(ranks_2342)
    assert q.is_homogeneous(9)
    assert not q.is_zero()


def test_tiny_coeffs_and_component(tiny_ranks) -> None:
    assert quiver_coeffs(tiny_ranks) == {((1,),): 1}
    assert quiver_cycle_expansion(tiny_ranks) == _x(0, 1) - _x(1, 1)
    assert collapse_y(tiny_ranks, quiver_poly(tiny_ranks)) == _x(0, 1) - _x(1, 1)
    ok, report = component_check(tiny_ranks)
    assert ok
    assert report["wmin"] == 1
    assert report["codim"] == 1


@pytest.mark.slow
@pytest.mark.parametrize("r", [r for r in all_rank_conditions(2, 2)])
def test_component_formula_n2(r) -> None:
    ok, report = component_check(r)
    assert ok, report


@pytest.mark.parametrize("r", SMALL)
def test_quiver_coefficients_positive(r) -> None:
    codim = expected_codim(r)
    for key, c in quiver_coeffs(r).items():
        assert c > 0
        assert sum(sum(shape) for shape in key) == codim


N3_SPOTS = [
    RankConditions(3, ((1, 0, 0, 0), (1, 0, 0), (1, 0), (1,))),
    RankConditions(3, ((1, 1, 0, 0), (1, 0, 0), (1, 1), (1,))),
    RankConditions(3, ((1, 1, 0, 0), (1, 1, 0), (1, 0), (1,))),
    RankConditions(3, ((2, 1, 1, 0), (1, 1, 0), (1, 0), (1,))),
]


@pytest.mark.parametrize("r", N3_SPOTS)
def test_component_formula_n3(r) -> None:
    ok, report = component_check(r)
    assert ok, report
    assert report["codim"] == expected_codim(r)


def test_stability_tiny(tiny_ranks) -> None:
    assert stability_check(tiny_ranks, m_max=1, degree_bound=1)
    assert stability_check(tiny_ranks, m_max=2, degree_bound=2)


def test_stability_when_quiver_poly_is_one() -> None:
    r = RankConditions(1, ((1, 1), (1,)))
    assert expected_codim(r) == 0
    assert quiver_poly(r) == MVPoly.const(1)
    assert stability_check(r, m_max=2, degree_bound=2)


def test_stability_with_a_full_rank_first_map() -> None:
    r = RankConditions(2, ((1, 1, 0), (1, 0), (1,)))
    assert expected_codim(r) == 1
    assert stability_check(r, m_max=1, degree_bound=2)


@pytest.mark.parametrize("r", SMALL + LONG_THIN)
def test_minimal_sets_are_never_empty(r) -> None:
    assert minimal_lacing(r)
    assert minimal_block_elements(r)


@settings(max_examples=15, deadline=None)
@given(st.sampled_from([r for r in SMALL if r.n == 1]))
def test_codim_matches_quiver_poly_degree(r) -> None:
    assert quiver_poly(r).is_homogeneous(expected_codim(r))
