"""Splitting Schubert polynomials of types B, C and D from a coefficient table of F_u / E_u."""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import Iterable

import sympy

from core.config import Guards
from core.errors import InconsistentSystem, InvariantViolation, MissingTableEntry, NotCompatible
from permcore.permutation import compatible_with, factorizations
from permcore.signed import SignedPermutation, unsigned_slot
from polyring.mvpoly import MVPoly, total
from splitlab.split_a import check_breaks, split_A
from symfunc.partitions import Partition, require_strict
from symfunc.schubert import schubert_single

logger = logging.getLogger(__name__)

KINDS = ("B", "C", "D")


@dataclass
class CoeffTable:
    """f_{u,mu} (types B and C) or e_{u,mu} (type D); a listed u with no partitions has F_u = 0."""

    entries: dict[SignedPermutation, dict[Partition, int]] = field(default_factory=dict)

    def has(self, u: SignedPermutation) -> bool:
        return u in self.entries

    def get(self, u: SignedPermutation) -> dict[Partition, int]:
        if u not in self.entries:
            raise MissingTableEntry(u)
        return self.entries[u]

    def set(self, u: SignedPermutation, mu: Partition, value: int) -> None:
        if value < 0:
            raise ValueError(f"Table entries are nonnegative, got {value} for {u!r}, {list(mu)}")
        row = self.entries.setdefault(u, {})
        if value:
            row[require_strict(mu)] = value


@dataclass(frozen=True)
class SplitResult:
    """(mu, lambda-tuple) -> integer coefficient; the series is 2^-power_of_two times the sum."""

    coefficients: dict
    power_of_two: int = 0


def _table_kind(kind: str) -> str:
    if kind not in KINDS:
        raise ValueError(f"Unknown type {kind!r}; expected one of {', '.join(KINDS)}")
    return "D" if kind == "D" else "B"


def signed_factorizations(w: SignedPermutation, kind: str, guards: Guards | None = None) -> list[tuple[SignedPermutation, SignedPermutation]]:
    """Length-additive w = u v with v in S_n, sorted by v."""
    group = _table_kind(kind)
    if group == "D" and not w.in_d():
        raise NotCompatible(f"{w!r} is not in D_{w.n}")
    pairs = factorizations(
        w,
        [lambda u: True, unsigned_slot],
        guards=guards,
        prefixes=lambda u: u.weak_prefixes(group),
    )
    return sorted(pairs, key=lambda uv: uv[1].one_line)


def split_BCD(
    w: SignedPermutation,
    breaks: Iterable[int],
    table: CoeffTable,
    kind: str = "C",
    guards: Guards | None = None,
) -> SplitResult:
    """c_{mu;lambda}(w) = f_{u,mu} c_lambda(v) summed over w = u v; type B also carries s(w)."""
    breaks = tuple(breaks)
    if not compatible_with(w, breaks):
        raise NotCompatible(f"{w!r} has descents {sorted(w.descents())} outside the breaks {list(breaks)}")
    coefficients: dict = {}
    for u, v in signed_factorizations(w, kind, guards):
        f_u = table.get(u)
        if not compatible_with(v, breaks):
            raise InvariantViolation(f"Factor v = {v!r} of a compatible {w!r} is not compatible")
        v_plain = v.to_permutation()
        check_breaks(v_plain, breaks)
        for lam, c in split_A(v_plain, breaks, guards).items():
            for mu, f in f_u.items():
                key = (mu, lam)
                coefficients[key] = coefficients.get(key, 0) + f * c
    coefficients = {key: c for key, c in coefficients.items() if c}
    power = w.sign_changes() if kind == "B" else 0
    logger.debug("split_BCD(%s, type %s): %d terms", list(w.one_line), kind, len(coefficients))
    return SplitResult(coefficients, power)


def assemble_printed(w: SignedPermutation, table: CoeffTable, kind: str = "C", guards: Guards | None = None) -> dict[Partition, MVPoly]:
    """mu -> sum over w = u v of f_{u,mu} S_v(x): the Q_mu (or P_mu) coefficients of the type-C (or D) Schubert polynomial."""
    grouped: dict[Partition, list[MVPoly]] = {}
    for u, v in signed_factorizations(w, kind, guards):
        schub = schubert_single(v.to_permutation(), guards=guards)
        for mu, f in table.get(u).items():
            grouped.setdefault(mu, []).append(schub * f)
    result = {mu: total(parts) for mu, parts in grouped.items()}
    return {mu: p for mu, p in result.items() if not p.is_zero()}


def solve_coeff_table(
    w: SignedPermutation,
    printed: dict[Partition, MVPoly],
    kind: str = "C",
    guards: Guards | None = None,
) -> CoeffTable:
    """Recovers f_{u,mu} from a printed expansion sum_mu Q_mu(Z) p_mu(x) by exact linear algebra."""
    pairs = signed_factorizations(w, kind, guards)
    group = _table_kind(kind)
    schub = {v: schubert_single(v.to_permutation(), guards=guards) for _, v in pairs}
    table = CoeffTable({u: {} for u, _ in pairs})

    for mu, target in sorted(printed.items()):
        mu = require_strict(mu)
        candidates = [(u, v) for u, v in pairs if u.length(group) == sum(mu)]
        if not candidates:
            if not target.is_zero():
                raise InconsistentSystem(f"No factor u of length {sum(mu)} can carry Q_{list(mu)}")
            continue
        monomials = sorted({m for m, _ in target.items()} | {m for _, v in candidates for m, _ in schub[v].items()})
        matrix = sympy.Matrix([[schub[v].coeff(m) for _, v in candidates] for m in monomials])
        rhs = sympy.Matrix([target.coeff(m) for m in monomials])
        try:
            solution, params = matrix.gauss_jordan_solve(rhs)
        except ValueError as exc:
            raise InconsistentSystem(f"No table reproduces the Q_{list(mu)} coefficient: {exc}") from exc
        if params.shape[0]:
            raise InconsistentSystem(f"The Q_{list(mu)} coefficient does not determine the table uniquely")
        for (u, _), value in zip(candidates, solution):
            if not value.is_integer or value < 0:
                raise InconsistentSystem(f"f_({list(u.one_line)},{list(mu)}) = {value} is not a nonnegative integer")
            table.set(u, mu, int(value))
    logger.debug("solve_coeff_table: %d rows", len(table.entries))
    return table
