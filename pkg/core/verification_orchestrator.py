"""Verification orchestrator: runs a named family of exhaustive checks and returns a debug report."""

from __future__ import annotations

import logging
from itertools import permutations
from typing import Callable, Iterator

from core.config import Guards, resolve
from core.errors import GuardExceeded
from permcore.permutation import Permutation
from polyring.mvpoly import to_string
from quiverlab.lacing import minimal_lacing
from quiverlab.quiver_poly import component_check, quiver_coeffs
from quiverlab.ranks import RankConditions, all_rank_conditions
from quiverlab.zelevinsky import length_identity_check, minimal_block_elements, zelevinsky
from rcgraph.embedding import theorem1_embed
from rcgraph.pipedream import enumerate_rc
from splitlab.fulton import theorem2_check
from splitlab.split_a import split_A, split_A_polynomial
from symfunc.schubert import schubert_single

logger = logging.getLogger(__name__)

Check = Callable[[object, Guards], tuple[bool, dict]]


# ── Instance families ────────────────────────────────────────


def _small_ranks(max_n: int = 2, max_rank: int = 2) -> Iterator[RankConditions]:
    for n in range(max_n + 1):
        yield from all_rank_conditions(n, max_rank)


def _characterization_ranks(max_n: int = 5, max_d: int = 6) -> Iterator[RankConditions]:
    for n in range(max_n + 1):
        yield from all_rank_conditions(n, max_d, max_total=max_d)


def _n2_ranks() -> Iterator[RankConditions]:
    yield from all_rank_conditions(2, 2)


def _s3() -> Iterator[Permutation]:
    for line in permutations(range(1, 4)):
        yield Permutation(line)


def _s4() -> Iterator[Permutation]:
    for line in permutations(range(1, 5)):
        yield Permutation(line)


# ── Checks ───────────────────────────────────────────────────


def _check_length_identity(r: RankConditions, guards: Guards) -> tuple[bool, dict]:
    v = zelevinsky(r)
    return length_identity_check(r), {"length": v.length(), "hom": len(r.hom_region())}


def _check_theorem1(r: RankConditions, guards: Guards) -> tuple[bool, dict]:
    wmin = minimal_lacing(r, guards)
    images = {theorem1_embed(W, r).crosses for W in wmin}
    hom = r.hom_region()
    rc = enumerate_rc(zelevinsky(r), guards=guards)
    hom_crossed = all(hom <= D.crosses for D in rc)
    rc_crosses = {D.crosses for D in rc}
    info = {"wmin": len(wmin), "images": len(images), "rc": len(rc)}
    return len(images) == len(wmin) and images <= rc_crosses and hom_crossed, info


def _check_characterization(r: RankConditions, guards: Guards) -> tuple[bool, dict]:
    shortest = minimal_block_elements(r, guards)
    return shortest == [zelevinsky(r)], {"minimal": [list(w.one_line) for w in shortest]}


def _check_component(r: RankConditions, guards: Guards) -> tuple[bool, dict]:
    return component_check(r, guards)


def _check_positivity(r: RankConditions, guards: Guards) -> tuple[bool, dict]:
    coeffs = quiver_coeffs(r, guards)
    ok = all(c > 0 for c in coeffs.values())
    return ok, {"terms": len(coeffs)}


def _check_fulton(w: Permutation, guards: Guards) -> tuple[bool, dict]:
    return theorem2_check(w, 2, guards)


def _check_split_a(w: Permutation, guards: Guards) -> tuple[bool, dict]:
    breaks = sorted(w.descents())
    expansion = split_A(w, breaks, guards)
    rebuilt = split_A_polynomial(expansion, breaks)
    target = schubert_single(w, guards=guards)
    info = {"breaks": breaks, "terms": len(expansion)}
    if rebuilt != target:
        info["discrepancy"] = to_string(rebuilt - target)
    return rebuilt == target, info


FAMILIES: dict[str, tuple[Callable[[], Iterator], Check]] = {
    "length-identity": (_small_ranks, _check_length_identity),
    "theorem1": (_small_ranks, _check_theorem1),
    "characterization": (_characterization_ranks, _check_characterization),
    "component": (_n2_ranks, _check_component),
    "positivity": (_n2_ranks, _check_positivity),
    "fulton": (_s3, _check_fulton),
    "split-a": (_s4, _check_split_a),
}


def _label(instance) -> object:
    if isinstance(instance, RankConditions):
        return {"n": instance.n, "r": [list(row) for row in instance.rows]}
    return list(instance.one_line)


def run_sweep(family: str, progress_callback=None, guards: Guards | None = None) -> dict:
    """Run every instance of a verification family.

    Returns the debug report: instance and pass counts, failing instances, and per-instance errors.
    GuardExceeded aborts the sweep and carries the partial report as `report`; any other
    error is recorded against its instance.
    """
    if family not in FAMILIES:
        raise ValueError(f"Unknown verification family: {family}")
    guards = resolve(guards)
    generate, check = FAMILIES[family]

    debug = {
        "family": family,
        "instances": 0,
        "passed": 0,
        "failed": [],
        "errors": [],
    }

    try:
        instances = list(generate())
        if progress_callback:
            progress_callback(f"Checking {len(instances)} instances of {family}...", 0.0)

        for idx, instance in enumerate(instances, 1):
            debug["instances"] += 1
            try:
                ok, info = check(instance, guards)
            except GuardExceeded:
                debug["aborted_at"] = _label(instance)
                raise
            except (ValueError, AssertionError) as e:
                debug["errors"].append({"instance": _label(instance), "error": type(e).__name__, "message": str(e)})
                continue
            if ok:
                debug["passed"] += 1
            else:
                debug["failed"].append({"instance": _label(instance), "info": info})

            if progress_callback:
                progress_callback(f"{idx}/{len(instances)} {family} instances checked", idx / len(instances))

        logger.info("sweep %s: %d/%d passed", family, debug["passed"], debug["instances"])
        debug["ok"] = debug["passed"] == debug["instances"]

    except Exception as e:
        debug["error"] = str(e)
        e.report = debug
        logger.info("sweep %s aborted after %d instances: %s", family, debug["instances"], e)
        raise e

    return debug
