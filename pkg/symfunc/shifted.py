"""Circled shifted tableaux and the Schur Q- and P-functions they generate."""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Iterator

from core.config import Guards, resolve
from core.errors import GuardExceeded, InvariantViolation
from polyring.mvpoly import MVPoly
from polyring.variables import VarId, x
from symfunc.partitions import Partition, require_strict

logger = logging.getLogger(__name__)

# Entries are coded so the alphabet order 1o < 1 < 2o < 2 < ... is integer order:
# circled v -> 2v - 1, plain v -> 2v.


def circled(v: int) -> int:
    return 2 * v - 1


def plain(v: int) -> int:
    return 2 * v


def is_circled(code: int) -> bool:
    return code % 2 == 1


def value(code: int) -> int:
    return (code + 1) // 2


def parse_entry(text: str) -> int:
    """'4' -> plain 4, '4o' or '4°' -> circled 4."""
    text = text.strip()
    if text.endswith(("o", "°")):
        return circled(int(text[:-1]))
    return plain(int(text))


def entry_text(code: int) -> str:
    return f"{value(code)}o" if is_circled(code) else str(value(code))


@dataclass(frozen=True)
class CircledShiftedTableau:
    shape: Partition
    rows: tuple[tuple[int, ...], ...]

    def cells(self) -> Iterator[tuple[int, int, int]]:
        """(row, column, code); row r starts in column r."""
        for r, row in enumerate(self.rows):
            for offset, code in enumerate(row):
                yield r, r + offset, code

    def weight(self) -> dict[int, int]:
        counts: dict[int, int] = {}
        for _, _, code in self.cells():
            counts[value(code)] = counts.get(value(code), 0) + 1
        return counts


def _fits(grid: dict, r: int, c: int, code: int) -> bool:
    left = grid.get((r, c - 1))
    if left is not None and (left > code or (left == code and is_circled(code))):
        return False
    above = grid.get((r - 1, c))
    if above is not None and (above > code or (above == code and not is_circled(code))):
        return False
    return True


def is_circled_shifted_tableau(tableau: CircledShiftedTableau) -> bool:
    try:
        shape = require_strict(tableau.shape)
    except ValueError:
        return False
    if tuple(len(row) for row in tableau.rows) != shape:
        return False
    grid: dict = {}
    for r, c, code in tableau.cells():
        if code < 1 or not _fits(grid, r, c, code):
            return False
        grid[(r, c)] = code
    return True


def circled_shifted_tableaux(shape: Partition, k: int) -> Iterator[CircledShiftedTableau]:
    shape = require_strict(shape)
    cells = [(r, r + offset) for r, length in enumerate(shape) for offset in range(length)]
    grid: dict = {}

    def backtrack(pos: int) -> Iterator[CircledShiftedTableau]:
        if pos == len(cells):
            rows = tuple(tuple(grid[(r, r + o)] for o in range(length)) for r, length in enumerate(shape))
            yield CircledShiftedTableau(shape, rows)
            return
        r, c = cells[pos]
        for code in range(1, 2 * k + 1):
            if _fits(grid, r, c, code):
                grid[(r, c)] = code
                yield from backtrack(pos + 1)
                del grid[(r, c)]

    yield from backtrack(0)


def schur_Q(shape: Partition, k: int, guards: Guards | None = None) -> MVPoly:
    """Q_mu(x_1..x_k) = sum over circled shifted tableaux of x^T."""
    guards = resolve(guards)
    terms: dict = {}
    count = 0
    for tableau in circled_shifted_tableaux(shape, k):
        count += 1
        if count > guards.max_results:
            raise GuardExceeded("max_results", guards.max_results, count)
        exps: dict[VarId, int] = {x(v): e for v, e in tableau.weight().items()}
        mono = tuple(sorted(exps.items()))
        terms[mono] = terms.get(mono, 0) + 1
    logger.debug("schur_Q%s in %d variables: %d tableaux", tuple(shape), k, count)
    return MVPoly(terms)


def schur_P(shape: Partition, k: int, guards: Guards | None = None) -> MVPoly:
    """P_mu = 2^-l(mu) Q_mu; the division is exact."""
    shape = require_strict(shape)
    q = schur_Q(shape, k, guards)
    scale = 2 ** len(shape)
    if any(c % scale for _, c in q.items()):
        raise InvariantViolation(f"Q_{shape} is not divisible by {scale}")
    return MVPoly({m: c // scale for m, c in q.items()})
