"""Quiver polynomials by the ratio formula, quiver coefficients, and the component-formula checks."""

from __future__ import annotations

import logging
from itertools import product as cartesian

from core.config import Guards, resolve
from core.errors import InvariantViolation
from permcore.partial import embed_partial
from polyring.mvpoly import MVPoly, exact_div, product, rename, substitute, to_string, total
from polyring.variables import VarId, alphabet, x, y
from quiverlab.lacing import minimal_lacing
from quiverlab.ranks import RankConditions, expected_codim, require_valid, shift_ranks
from quiverlab.zelevinsky import hom_permutation, zelevinsky
from rcgraph.pipedream import enumerate_rc
from symfunc.schubert import schubert_double
from symfunc.schur import SchurExpansion, super_schur
from symfunc.stanley import stanley_coefficients, stanley_double

logger = logging.getLogger(__name__)


def _strip_linear(r: RankConditions, a: int, b: int) -> MVPoly:
    return MVPoly.var(r.row_var(a)) - MVPoly.var(r.col_var(b))


def hom_product(r: RankConditions) -> MVPoly:
    """S_{v(Hom)} as the product of (x^i_alpha - y^(n-j)_beta) over the Hom region."""
    return product(_strip_linear(r, a, b) for a, b in sorted(r.hom_region()))


def strip_relabeling(r: RankConditions) -> dict[VarId, VarId]:
    """x_a -> x^i_alpha and y_b -> y^(n-j)_beta for the global rows a and columns b."""
    mapping = {x(a): r.row_var(a) for a in range(1, r.d + 1)}
    mapping.update({y(b): r.col_var(b) for b in range(1, r.d + 1)})
    return mapping


def quiver_poly(r: RankConditions, method: str = "pipes", guards: Guards | None = None) -> MVPoly:
    """Q_r(x_r; y_r) = S_{v(r)} / S_{v(Hom)} in the strip alphabets.

    "pipes" sums, over RC(v(r)), the product over crosses outside the Hom region;
    "divide" divides full double Schubert polynomials exactly.
    """
    require_valid(r)
    guards = resolve(guards)
    v = zelevinsky(r)
    hom = r.hom_region()
    if method == "pipes":
        pieces = []
        for D in enumerate_rc(v, guards=guards):
            if not hom <= D.crosses:
                raise InvariantViolation(f"RC-graph of v(r) misses Hom boxes {sorted(hom - D.crosses)}")
            pieces.append(product(_strip_linear(r, a, b) for a, b in sorted(D.crosses - hom)))
        result = total(pieces)
    elif method == "divide":
        v_hom = hom_permutation(r)
        denominator = schubert_double(v_hom, r.d, guards=guards)
        relabel = strip_relabeling(r)
        if rename(denominator, relabel) != hom_product(r):
            raise InvariantViolation("S_{v(Hom)} is not the product over the Hom region")
        quotient = exact_div(schubert_double(v, r.d, guards=guards), denominator)
        result = rename(quotient, relabel)
    else:
        raise ValueError(f"Unknown quiver polynomial method: {method}")
    codim = expected_codim(r)
    if not result.is_homogeneous(codim):
        raise InvariantViolation(f"Quiver polynomial is not homogeneous of degree d(r) = {codim}")
    logger.debug("quiver_poly(%s): %d terms", method, len(result))
    return result


# ── Quiver coefficients ──────────────────────────────────────


def quiver_coeffs(r: RankConditions, guards: Guards | None = None) -> SchurExpansion:
    """c_mu(r) = sum over W in W_min(r) of prod_k d_{w_k, mu_k}, keyed by partition tuples."""
    coeffs: SchurExpansion = {}
    for W in minimal_lacing(r, guards):
        factors = [stanley_coefficients(embed_partial(w)).items() for w in W.maps]
        for choice in cartesian(*factors):
            key = tuple(shape for shape, _ in choice)
            value = 1
            for _, c in choice:
                value *= c
            coeffs[key] = coeffs.get(key, 0) + value
    codim = expected_codim(r)
    for key, c in coeffs.items():
        if c < 0 or sum(sum(shape) for shape in key) != codim:
            raise InvariantViolation(f"c_{key}(r) = {c} breaks positivity or degree {codim}")
    return {key: c for key, c in coeffs.items() if c}


def strip_alphabet(r: RankConditions, k: int) -> list[VarId]:
    """x^k_1, ..., x^k_{r_kk}."""
    return alphabet("x", r.r(k, k), block=k)


def quiver_cycle_expansion(r: RankConditions, guards: Guards | None = None) -> MVPoly:
    """sum_mu c_mu(r) prod_k s_{mu_k}(x^{k-1} - x^k)."""
    return total(
        product(super_schur(shape, strip_alphabet(r, k - 1), strip_alphabet(r, k)) for k, shape in enumerate(key, 1)) * c
        for key, c in quiver_coeffs(r, guards).items()
    )


def collapse_y(r: RankConditions, p: MVPoly) -> MVPoly:
    """Substitutes y^j_beta -> x^j_beta."""
    return rename(p, {v: VarId("x", v.block, v.position) for v in p.variables() if v.alphabet == "y"})


def component_check(r: RankConditions, guards: Guards | None = None) -> tuple[bool, dict]:
    """Q_r(x - x) against the W_min sum of double Stanley products and the quiver-cycle expansion."""
    lhs = collapse_y(r, quiver_poly(r, guards=guards))
    wmin = minimal_lacing(r, guards)
    rhs = total(
        product(stanley_double(embed_partial(w), strip_alphabet(r, k - 1), strip_alphabet(r, k)) for k, w in enumerate(W.maps, 1))
        for W in wmin
    )
    cycle = quiver_cycle_expansion(r, guards)
    report = {
        "equal": lhs == rhs == cycle,
        "codim": expected_codim(r),
        "wmin": len(wmin),
        "lhs_terms": len(lhs),
        "rhs_terms": len(rhs),
        "cycle_terms": len(cycle),
    }
    if lhs != rhs:
        report["discrepancy"] = to_string(lhs - rhs)
    elif rhs != cycle:
        report["discrepancy"] = to_string(rhs - cycle)
    return report["equal"], report


def stability_check(r: RankConditions, m_max: int = 1, degree_bound: int = 2, guards: Guards | None = None) -> bool:
    """Low-degree coefficients of Q_{m+r} agree for m = 0..m_max once the variables new at each step are set to 0."""
    previous = quiver_poly(r, guards=guards).truncate_degree(degree_bound)
    for m in range(1, m_max + 1):
        shifted = shift_ranks(r, m)
        current = quiver_poly(shifted, guards=guards)
        zeroed = {v: 0 for v in current.variables() if v.position > _level_size(r, v, m - 1)}
        restricted = substitute(current, zeroed).truncate_degree(degree_bound)
        if restricted != previous:
            logger.debug("stability_check: Q_{%d+r} differs in degree <= %d", m, degree_bound)
            return False
        previous = current.truncate_degree(degree_bound)
    return True


def _level_size(r: RankConditions, v: VarId, m: int) -> int:
    """Size of the alphabet of v in m + r."""
    return r.r(v.block, v.block) + m
