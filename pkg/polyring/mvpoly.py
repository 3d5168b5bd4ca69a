"""Sparse multivariate polynomials with integer coefficients over VarId alphabets."""

from __future__ import annotations

import logging
from typing import Iterable, Mapping

from core.errors import InvariantViolation, NotDivisible
from polyring.variables import NO_BLOCK, VarId

logger = logging.getLogger(__name__)

Monomial = tuple[tuple[VarId, int], ...]

ONE_MONO: Monomial = ()


def mono_mul(a: Monomial, b: Monomial) -> Monomial:
    if not a:
        return b
    if not b:
        return a
    exps = dict(a)
    for v, e in b:
        exps[v] = exps.get(v, 0) + e
    return tuple(sorted(exps.items()))


def mono_div(a: Monomial, b: Monomial) -> Monomial | None:
    """a / b, or None if b does not divide a."""
    exps = dict(a)
    for v, e in b:
        left = exps.get(v, 0) - e
        if left < 0:
            return None
        if left:
            exps[v] = left
        else:
            del exps[v]
    return tuple(sorted(exps.items()))


def mono_degree(m: Monomial) -> int:
    return sum(e for _, e in m)


def lex_key(m: Monomial) -> tuple:
    """Sort key for lex order with x_1 > x_2 > ... (smaller VarId is more significant)."""
    return tuple((-ord(v.alphabet), -v.block, -v.position, e) for v, e in m)


class MVPoly:
    """Immutable polynomial: a mapping monomial -> nonzero int."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[Monomial, int] | None = None):
        clean: dict[Monomial, int] = {}
        for mono, c in (terms or {}).items():
            if c:
                clean[mono] = int(c)
        self._terms = clean
        self._hash = None

    # ── Constructors ──────────────────────────────────────────

    @classmethod
    def const(cls, c: int) -> MVPoly:
        return cls({ONE_MONO: c})

    @classmethod
    def var(cls, v: VarId) -> MVPoly:
        return cls({((v, 1),): 1})

    @classmethod
    def monomial(cls, exps: Mapping[VarId, int], coeff: int = 1) -> MVPoly:
        return cls({tuple(sorted((v, e) for v, e in exps.items() if e)): coeff})

    @classmethod
    def linear(cls, pairs: Iterable[tuple[VarId, int]]) -> MVPoly:
        out: dict[Monomial, int] = {}
        for v, c in pairs:
            key = ((v, 1),)
            out[key] = out.get(key, 0) + c
        return cls(out)

    # ── Access ────────────────────────────────────────────────

    @property
    def terms(self) -> dict[Monomial, int]:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def coeff(self, mono: Monomial) -> int:
        return self._terms.get(mono, 0)

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def sorted_terms(self) -> list[tuple[Monomial, int]]:
        """Terms in decreasing lex order; the canonical serialization order."""
        return sorted(self._terms.items(), key=lambda t: lex_key(t[0]), reverse=True)

    def leading_term(self) -> tuple[Monomial, int]:
        if not self._terms:
            raise ValueError("Zero polynomial has no leading term")
        mono = max(self._terms, key=lex_key)
        return mono, self._terms[mono]

    def variables(self) -> set[VarId]:
        return {v for mono in self._terms for v, _ in mono}

    def degree(self) -> int:
        return max((mono_degree(m) for m in self._terms), default=0)

    def is_homogeneous(self, degree: int | None = None) -> bool:
        degrees = {mono_degree(m) for m in self._terms}
        if degree is not None:
            return degrees <= {degree}
        return len(degrees) <= 1

    def truncate_degree(self, bound: int) -> MVPoly:
        return MVPoly({m: c for m, c in self._terms.items() if mono_degree(m) <= bound})

    # ── Arithmetic ────────────────────────────────────────────

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = MVPoly.const(other)
        if not isinstance(other, MVPoly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __add__(self, other) -> MVPoly:
        other = _coerce(other)
        out = dict(self._terms)
        for m, c in other._terms.items():
            out[m] = out.get(m, 0) + c
        return MVPoly(out)

    __radd__ = __add__

    def __neg__(self) -> MVPoly:
        return MVPoly({m: -c for m, c in self._terms.items()})

    def __sub__(self, other) -> MVPoly:
        return self + (-_coerce(other))

    def __rsub__(self, other) -> MVPoly:
        return _coerce(other) - self

    def __mul__(self, other) -> MVPoly:
        other = _coerce(other)
        out: dict[Monomial, int] = {}
        for m1, c1 in self._terms.items():
            for m2, c2 in other._terms.items():
                m = mono_mul(m1, m2)
                out[m] = out.get(m, 0) + c1 * c2
        return MVPoly(out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> MVPoly:
        result = MVPoly.const(1)
        for _ in range(k):
            result = result * self
        return result

    def __repr__(self) -> str:
        return f"MVPoly({to_string(self)})"


def _coerce(p) -> MVPoly:
    if isinstance(p, MVPoly):
        return p
    if isinstance(p, int):
        return MVPoly.const(p)
    raise TypeError(f"Cannot use {type(p).__name__} as a polynomial")


ZERO = MVPoly()
ONE = MVPoly.const(1)


# ── Ring operations ──────────────────────────────────────────


def add(p: MVPoly, q: MVPoly) -> MVPoly:
    return p + q


def mul(p: MVPoly, q: MVPoly) -> MVPoly:
    return p * q


def neg(p: MVPoly) -> MVPoly:
    return -p


def product(factors: Iterable[MVPoly]) -> MVPoly:
    result = ONE
    for f in factors:
        result = result * f
    return result


def total(polys: Iterable[MVPoly]) -> MVPoly:
    out: dict[Monomial, int] = {}
    for p in polys:
        for m, c in p.items():
            out[m] = out.get(m, 0) + c
    return MVPoly(out)


def substitute(p: MVPoly, mapping: Mapping[VarId, MVPoly | int]) -> MVPoly:
    """Simultaneous substitution; unmapped variables are left alone."""
    images = {v: _coerce(img) for v, img in mapping.items()}
    out: dict[Monomial, int] = {}
    for mono, c in p.items():
        kept: list[tuple[VarId, int]] = []
        factor = MVPoly.const(c)
        for v, e in mono:
            if v in images:
                factor = factor * (images[v] ** e)
                if factor.is_zero():
                    break
            else:
                kept.append((v, e))
        if factor.is_zero():
            continue
        rest = tuple(kept)
        for m, cc in factor.items():
            key = mono_mul(m, rest)
            out[key] = out.get(key, 0) + cc
    return MVPoly(out)


def rename(p: MVPoly, mapping: Mapping[VarId, VarId]) -> MVPoly:
    """Variable-for-variable substitution (cheaper than substitute)."""
    out: dict[Monomial, int] = {}
    for mono, c in p.items():
        exps: dict[VarId, int] = {}
        for v, e in mono:
            t = mapping.get(v, v)
            exps[t] = exps.get(t, 0) + e
        key = tuple(sorted(exps.items()))
        out[key] = out.get(key, 0) + c
    return MVPoly(out)


def swap(p: MVPoly, a: VarId, b: VarId) -> MVPoly:
    return rename(p, {a: b, b: a})


def divided_difference(p: MVPoly, i: int, letter: str = "x", block: int = NO_BLOCK) -> MVPoly:
    """(p - s_i p) / (v_i - v_{i+1}) for the variables v = letter^block.

    Each monomial v_i^a v_{i+1}^b m maps to the complete sum between the two exponents,
    so no polynomial division is needed.
    """
    vi, vj = VarId(letter, block, i), VarId(letter, block, i + 1)
    out: dict[Monomial, int] = {}
    for mono, c in p.items():
        exps = dict(mono)
        a = exps.pop(vi, 0)
        b = exps.pop(vj, 0)
        if a == b:
            continue
        rest = tuple(sorted(exps.items()))
        sign = 1 if a > b else -1
        lo, hi = min(a, b), max(a, b)
        # (v_i^hi v_j^lo - v_i^lo v_j^hi) / (v_i - v_j) = sum_k v_i^(hi-1-k) v_j^(lo+k)
        for k in range(hi - lo):
            piece = tuple((v, e) for v, e in ((vi, hi - 1 - k), (vj, lo + k)) if e)
            key = mono_mul(rest, piece)
            out[key] = out.get(key, 0) + sign * c
    return MVPoly(out)


def exact_div(p: MVPoly, q: MVPoly) -> MVPoly:
    """Returns h with p = q * h, by leading-term reduction in lex order."""
    if q.is_zero():
        raise NotDivisible(p, "Division by the zero polynomial")
    lead_q, cq = q.leading_term()
    rest = dict(p.terms)
    quotient: dict[Monomial, int] = {}
    while rest:
        mono = max(rest, key=lex_key)
        c = rest[mono]
        step = mono_div(mono, lead_q)
        if step is None or c % cq:
            raise NotDivisible(MVPoly(rest))
        factor = c // cq
        quotient[step] = quotient.get(step, 0) + factor
        for m, cc in q.items():
            key = mono_mul(m, step)
            val = rest.get(key, 0) - cc * factor
            if val:
                rest[key] = val
            else:
                rest.pop(key, None)
    return MVPoly(quotient)


def check_divided_difference(p: MVPoly, i: int, letter: str = "x", block: int = NO_BLOCK) -> MVPoly:
    """divided_difference with its defining identity asserted."""
    vi, vj = VarId(letter, block, i), VarId(letter, block, i + 1)
    result = divided_difference(p, i, letter, block)
    if result * (MVPoly.var(vi) - MVPoly.var(vj)) != p - swap(p, vi, vj):
        raise InvariantViolation(f"divided difference d_{i} is inexact")
    return result


# ── Text and bridges ─────────────────────────────────────────


def mono_to_string(m: Monomial) -> str:
    return "*".join(v.name if e == 1 else f"{v.name}^{e}" for v, e in m)


def to_string(p: MVPoly) -> str:
    if p.is_zero():
        return "0"
    parts = []
    for mono, c in p.sorted_terms():
        body = mono_to_string(mono)
        if not body:
            parts.append(str(c))
        elif c == 1:
            parts.append(body)
        elif c == -1:
            parts.append(f"-{body}")
        else:
            parts.append(f"{c}*{body}")
    return " + ".join(parts).replace("+ -", "- ")


def to_sympy(p: MVPoly):
    """Converts to a sympy expression (used as an independent oracle)."""
    import sympy

    expr = sympy.Integer(0)
    for mono, c in p.items():
        term = sympy.Integer(c)
        for v, e in mono:
            term *= sympy.Symbol(v.name) ** e
        expr += term
    return expr
