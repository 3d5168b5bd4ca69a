"""Schur polynomials, super-Schur functions s_lambda(X - Y), and Schur expansion by peeling."""

from __future__ import annotations

import logging
from itertools import combinations, combinations_with_replacement
from typing import Sequence

from core.errors import InvariantViolation, NotSymmetric
from polyring.mvpoly import ONE, ZERO, MVPoly, swap, total
from polyring.variables import VarId, alphabet
from symfunc.partitions import Partition, make_partition, semistandard_tableaux

logger = logging.getLogger(__name__)

# Partition (or tuple of partitions) -> nonzero integer coefficient
SchurExpansion = dict


def _variables(k: int, variables: Sequence[VarId] | None) -> list[VarId]:
    return list(variables) if variables is not None else alphabet("x", k)


def schur_s(shape: Partition, k: int | None = None, variables: Sequence[VarId] | None = None) -> MVPoly:
    """s_lambda in k variables as a sum over semistandard tableaux."""
    shape = make_partition(shape)
    xs = _variables(k or 0, variables)
    if not shape:
        return ONE
    terms: dict = {}
    for tableau in semistandard_tableaux(shape, len(xs)):
        exps: dict[VarId, int] = {}
        for row in tableau:
            for entry in row:
                v = xs[entry - 1]
                exps[v] = exps.get(v, 0) + 1
        mono = tuple(sorted(exps.items()))
        terms[mono] = terms.get(mono, 0) + 1
    return MVPoly(terms)


def complete_homogeneous(m: int, xs: Sequence[VarId]) -> MVPoly:
    if m < 0:
        return ZERO
    if m == 0:
        return ONE
    terms: dict = {}
    for combo in combinations_with_replacement(sorted(xs), m):
        exps: dict[VarId, int] = {}
        for v in combo:
            exps[v] = exps.get(v, 0) + 1
        terms[tuple(sorted(exps.items()))] = 1
    return MVPoly(terms)


def elementary(m: int, xs: Sequence[VarId]) -> MVPoly:
    if m < 0 or m > len(xs):
        return ZERO
    if m == 0:
        return ONE
    return MVPoly({tuple((v, 1) for v in combo): 1 for combo in combinations(sorted(xs), m)})


def super_h(m: int, xs: Sequence[VarId], ys: Sequence[VarId]) -> MVPoly:
    """h_m(X - Y) = sum_{a+b=m} h_a(X) (-1)^b e_b(Y)."""
    if m < 0:
        return ZERO
    return total(
        complete_homogeneous(a, xs) * elementary(m - a, ys) * (-1) ** (m - a)
        for a in range(m + 1)
    )


def _determinant(matrix: list[list[MVPoly]]) -> MVPoly:
    """Laplace expansion along the first row; matrices here are at most a few rows."""
    size = len(matrix)
    if size == 0:
        return ONE
    if size == 1:
        return matrix[0][0]
    result = ZERO
    for col in range(size):
        entry = matrix[0][col]
        if entry.is_zero():
            continue
        minor = [row[:col] + row[col + 1:] for row in matrix[1:]]
        term = entry * _determinant(minor)
        result = result + term if col % 2 == 0 else result - term
    return result


def super_schur(shape: Partition, xs: Sequence[VarId], ys: Sequence[VarId]) -> MVPoly:
    """s_lambda(X - Y) by Jacobi-Trudi: det[h_{lambda_i - i + j}(X - Y)]."""
    shape = make_partition(shape)
    size = len(shape)
    cache: dict[int, MVPoly] = {}

    def h(m: int) -> MVPoly:
        if m not in cache:
            cache[m] = super_h(m, xs, ys)
        return cache[m]

    return _determinant([[h(shape[i] - i + j) for j in range(size)] for i in range(size)])


def is_symmetric(p: MVPoly, xs: Sequence[VarId]) -> bool:
    if not p.variables() <= set(xs):
        return False
    return all(swap(p, xs[i], xs[i + 1]) == p for i in range(len(xs) - 1))


def schur_expand(p: MVPoly, k: int | None = None, variables: Sequence[VarId] | None = None) -> SchurExpansion:
    """Unique expansion of a symmetric polynomial in Schur polynomials with at most k rows."""
    xs = sorted(_variables(k or 0, variables))
    if not is_symmetric(p, xs):
        raise NotSymmetric(f"Polynomial is not symmetric in {[v.name for v in xs]}")
    index = {v: i for i, v in enumerate(xs)}
    expansion: SchurExpansion = {}
    rest = p
    while not rest.is_zero():
        mono, c = rest.leading_term()
        exps = [0] * len(xs)
        for v, e in mono:
            exps[index[v]] = e
        if any(exps[i] < exps[i + 1] for i in range(len(exps) - 1)):
            raise InvariantViolation(f"Leading exponent {exps} of a symmetric polynomial is not a partition")
        shape = make_partition(exps)
        expansion[shape] = expansion.get(shape, 0) + c
        rest = rest - schur_s(shape, variables=xs) * c
    logger.debug("schur_expand: %d Schur terms", len(expansion))
    return {lam: c for lam, c in expansion.items() if c}


def from_expansion(expansion: SchurExpansion, k: int | None = None, variables: Sequence[VarId] | None = None) -> MVPoly:
    xs = _variables(k or 0, variables)
    return total(schur_s(lam, variables=xs) * c for lam, c in expansion.items())
