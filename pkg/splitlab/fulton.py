"""Fulton's universal rank conditions r^(n)(w) and the bijection Gamma between W_min and constrained reduced factorizations."""

from __future__ import annotations

import logging

from core.config import Guards
from core.errors import ConstraintViolated, InvariantViolation, NotMinimal
from permcore.partial import PartialPermutation, embed_partial
from permcore.permutation import Permutation, factorizations, in_parabolic
from quiverlab.lacing import LacingDiagram, lace_counts, minimal_lacing
from quiverlab.quiver_poly import component_check
from quiverlab.ranks import RankConditions, expected_codim, lace_array

logger = logging.getLogger(__name__)


def r_w(w: Permutation, p: int, q: int) -> int:
    """#{i <= p : w(i) <= q}, and 0 when p or q is not positive."""
    if p <= 0 or q <= 0:
        return 0
    return sum(1 for i in range(1, min(p, w.d) + 1) if w(i) <= q)


def rank_second_difference(w: Permutation, p: int, q: int) -> int:
    return r_w(w, p, q) - r_w(w, p - 1, q) - r_w(w, p, q - 1) + r_w(w, p - 1, q - 1)


def _fulton_entry(w: Permutation, n: int, i: int, j: int) -> int:
    if j <= n:
        return i
    if i >= n + 1:
        return 2 * n + 1 - j
    return r_w(w, 2 * n + 1 - j, i)


def _require_small(w: Permutation, n: int) -> Permutation:
    if not w.fixes_beyond(n + 1):
        raise ConstraintViolated(f"{w!r} does not lie in S_{n + 1}")
    return w.padded(n + 1)


def fulton_ranks(w: Permutation, n: int) -> RankConditions:
    """r^(n)(w) on the 2n steps 1..2n, stored as columns 0..2n-1 (step c is column c-1)."""
    w = _require_small(w, n)
    return RankConditions.from_mapping(
        2 * n - 1,
        {
            (i - 1, j - 1): _fulton_entry(w, n, i, j)
            for i in range(1, 2 * n + 1)
            for j in range(i, 2 * n + 1)
        },
    )


def fulton_lace_cases(w: Permutation, n: int) -> set[tuple[int, int]]:
    """The steps (i, j) carrying a single (i, j)-lace, from the permutation matrix of w."""
    w = _require_small(w, n)
    cases = {(w(alpha), 2 * n - alpha + 1) for alpha in range(1, n + 1) if w(alpha) <= n}
    if w(n + 1) != n + 1:
        cases.add((w(n + 1), n))
    inv = w.inverse()
    if inv(n + 1) != n + 1:
        cases.add((n + 1, 2 * n - inv(n + 1) + 1))
    return cases


def slot_size(i: int, n: int) -> int:
    """u_i must lie in S_{min(i, 2n-i)+1}."""
    return min(i, 2 * n - i) + 1


def step_size(c: int, n: int) -> int:
    """Rank of step c of r^(n)(w)."""
    return c if c <= n else 2 * n + 1 - c


# ── Gamma ────────────────────────────────────────────────────


def gamma(W: LacingDiagram) -> tuple[Permutation, ...]:
    """(w~_1^-1, ..., w~_{2n-1}^-1) in S_{n+1}; its product is the w that W is minimal for."""
    if len(W.sizes) % 2:
        raise NotMinimal(f"Lacing diagram with {len(W.sizes)} columns is not of Fulton type")
    n = len(W.sizes) // 2
    us = []
    for i, w_i in enumerate(W.maps, 1):
        full = embed_partial(w_i)
        if not full.fixes_beyond(slot_size(i, n)):
            raise NotMinimal(f"w~_{i} = {full!r} is not in S_{slot_size(i, n)}")
        us.append(full.padded(n + 1).inverse())
    w = Permutation.identity(n + 1)
    for u in us:
        w = w * u
    r = fulton_ranks(w, n)
    if lace_counts(W) != lace_array(r) or W.length() != expected_codim(r):
        raise NotMinimal(f"Lacing diagram is not minimal for r^({n})({list(w.one_line)})")
    if sum(u.length() for u in us) != w.length():
        raise InvariantViolation(f"Gamma image of a minimal diagram is not reduced for {w!r}")
    return tuple(us)


def gamma_inverse(us: tuple[Permutation, ...], w: Permutation, n: int) -> LacingDiagram:
    """The lacing diagram whose w_i is the NW block of u_i^-1 of shape step(i) x step(i+1)."""
    w = _require_small(w, n)
    if len(us) != 2 * n - 1:
        raise ConstraintViolated(f"Need {2 * n - 1} factors, got {len(us)}")
    us = tuple(u.padded(n + 1) for u in us)
    for i, u in enumerate(us, 1):
        if not u.fixes_beyond(slot_size(i, n)):
            raise ConstraintViolated(f"u_{i} = {u!r} is not in S_{slot_size(i, n)}")
    prod = Permutation.identity(n + 1)
    for u in us:
        prod = prod * u
    if prod != w:
        raise ConstraintViolated(f"Factors multiply to {prod!r}, not {w!r}")
    if sum(u.length() for u in us) != w.length():
        raise ConstraintViolated(f"Factorization of {w!r} is not reduced")

    sizes = tuple(step_size(c, n) for c in range(1, 2 * n + 1))
    maps = []
    for i, u in enumerate(us, 1):
        inv = u.inverse()
        block = PartialPermutation.nw_block(inv, sizes[i - 1], sizes[i])
        full = embed_partial(block)
        size = max(full.d, inv.d)
        if full.padded(size) != inv.padded(size):
            raise ConstraintViolated(f"u_{i}^-1 = {inv!r} is not the minimal embedding of its NW block")
        maps.append(block)
    return LacingDiagram(sizes, tuple(maps))


def constrained_factorizations(w: Permutation, n: int, guards: Guards | None = None) -> set[tuple[Permutation, ...]]:
    """Reduced factorizations w = u_1 ... u_{2n-1} with u_i in S_{min(i,2n-i)+1}."""
    w = _require_small(w, n)
    slots = [in_parabolic(slot_size(i, n)) for i in range(1, 2 * n)]
    return factorizations(w, slots, guards=guards)


def theorem2_check(w: Permutation, n: int, guards: Guards | None = None, with_component: bool = True) -> tuple[bool, dict]:
    """Gamma is a bijection W_min(r^(n)(w)) -> constrained factorizations, and the component formula holds.

    with_component=False skips the polynomial identity, which is out of reach once d(r) passes max_dim.
    """
    w = _require_small(w, n)
    r = fulton_ranks(w, n)
    wmin = minimal_lacing(r, guards)
    facts = constrained_factorizations(w, n, guards)
    images = [gamma(W) for W in wmin]
    round_trip = all(gamma_inverse(us, w, n) == W for us, W in zip(images, wmin))
    component_ok, component = component_check(r, guards) if with_component else (True, None)
    report = {
        "w": list(w.one_line),
        "n": n,
        "codim": expected_codim(r),
        "length": w.length(),
        "wmin": len(wmin),
        "factorizations": len(facts),
        "injective": len(set(images)) == len(images),
        "surjective": set(images) == facts,
        "round_trip": round_trip,
        "component": component_ok if with_component else None,
    }
    ok = (
        report["codim"] == report["length"]
        and report["injective"]
        and report["surjective"]
        and round_trip
        and component_ok
    )
    report["equal"] = ok
    if not component_ok:
        report["component_report"] = component
    logger.debug("theorem2_check(%s, n=%d): %s", list(w.one_line), n, ok)
    return ok, report
