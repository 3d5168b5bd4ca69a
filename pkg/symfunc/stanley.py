"""Stanley symmetric functions: truncations F_w(x_1..x_k), Schur coefficients d_{w,alpha}, double versions."""

from __future__ import annotations

import logging
from functools import lru_cache
from typing import Sequence

from core.config import Guards
from core.errors import InvariantViolation
from permcore.permutation import Permutation
from polyring.mvpoly import ONE, MVPoly, total
from polyring.variables import VarId, x
from rcgraph.pipedream import enumerate_rc
from symfunc.schur import SchurExpansion, schur_expand, super_schur

logger = logging.getLogger(__name__)


def _truncated_shift(w: Permutation, m: int, k: int, guards: Guards | None) -> MVPoly:
    """S_{1^m x w}(x_1..x_k, 0, 0, ...): only RC-graphs with crosses in rows <= k survive."""
    shifted = w.shift(m)
    terms: dict = {}
    for D in enumerate_rc(shifted, guards=guards, max_row=k):
        exps: dict[VarId, int] = {}
        for i, _ in D.crosses:
            exps[x(i)] = exps.get(x(i), 0) + 1
        mono = tuple(sorted(exps.items()))
        terms[mono] = terms.get(mono, 0) + 1
    return MVPoly(terms)


def stanley_single(w: Permutation, k: int, guards: Guards | None = None, verify: bool = True) -> MVPoly:
    """F_w(x_1, ..., x_k, 0, ...), computed from 1^k x w and checked against 1^(k+1) x w."""
    if k < 1:
        raise ValueError(f"Need at least one variable, got k={k}")
    if w == Permutation.identity(w.d):
        return ONE
    result = _truncated_shift(w, k, k, guards)
    if verify and _truncated_shift(w, k + 1, k, guards) != result:
        raise InvariantViolation(f"Truncated Stanley function of {w!r} is not stable at m={k}")
    return result


@lru_cache(maxsize=1024)
def _coefficients(line: tuple[int, ...]) -> tuple[tuple[tuple[int, ...], int], ...]:
    w = Permutation(line)
    ell = w.length()
    k = max(ell, 1)
    expansion = schur_expand(stanley_single(w, k), k)
    for shape, c in expansion.items():
        if c < 0 or sum(shape) != ell:
            raise InvariantViolation(f"d_(w,{shape}) = {c} for {w!r} breaks positivity or degree")
    return tuple(sorted(expansion.items()))


def stanley_coefficients(w: Permutation) -> SchurExpansion:
    """d_{w,alpha} with F_w = sum d_{w,alpha} s_alpha. Cached per permutation."""
    return dict(_coefficients(w.one_line))


def stanley_double(w: Permutation, xs: Sequence[VarId], ys: Sequence[VarId]) -> MVPoly:
    """F_w(X - Y) = sum d_{w,alpha} s_alpha(X - Y)."""
    return total(super_schur(shape, xs, ys) * c for shape, c in stanley_coefficients(w).items())
