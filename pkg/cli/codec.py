"""JSON encodings of the data objects. Every encoder emits a canonical order so output is byte-stable."""

from __future__ import annotations

import json

from core.errors import DimensionMismatch
from permcore.partial import PartialPermutation
from permcore.permutation import Permutation
from permcore.signed import SignedPermutation
from polyring.mvpoly import MVPoly
from polyring.variables import parse_var
from quiverlab.lacing import LacingDiagram
from quiverlab.ranks import RankConditions
from rcgraph.pipedream import PipeDream
from splitlab.split_bcd import CoeffTable, SplitResult
from symfunc.partitions import make_partition
from symfunc.schur import SchurExpansion


def dumps(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"


def load_text(text: str):
    """Parses JSON, reporting malformed input as a domain error."""
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise DimensionMismatch(f"Malformed JSON: {exc}") from exc


def _require(data, key: str):
    if not isinstance(data, dict) or key not in data:
        raise DimensionMismatch(f"Expected an object with key {key!r}")
    return data[key]


# ── Permutations ─────────────────────────────────────────────


def perm_to_json(w: Permutation) -> list[int]:
    return list(w.one_line)


def perm_from_json(data) -> Permutation:
    return Permutation(tuple(data))


def signed_to_json(w: SignedPermutation) -> list[int]:
    return list(w.one_line)


def signed_from_json(data) -> SignedPermutation:
    return SignedPermutation(tuple(data))


def partial_to_json(rho: PartialPermutation) -> dict:
    return {"rows": rho.rows, "cols": rho.cols, "ones": [list(p) for p in sorted(rho.ones)]}


def partial_from_json(data) -> PartialPermutation:
    return PartialPermutation(
        int(_require(data, "rows")),
        int(_require(data, "cols")),
        frozenset(tuple(p) for p in _require(data, "ones")),
    )


# ── Quiver data ──────────────────────────────────────────────


def ranks_to_json(r: RankConditions) -> dict:
    return {"n": r.n, "r": [list(row) for row in r.rows]}


def ranks_from_json(data) -> RankConditions:
    return RankConditions(int(_require(data, "n")), tuple(tuple(row) for row in _require(data, "r")))


def lace_array_to_json(n: int, s: dict) -> list[list[int]]:
    """Same triangle layout as the ranks: row i lists s_ii, ..., s_in."""
    return [[s[(i, j)] for j in range(i, n + 1)] for i in range(n + 1)]


def lacing_to_json(W: LacingDiagram) -> dict:
    return {"sizes": list(W.sizes), "maps": [partial_to_json(w) for w in W.maps]}


def lacing_from_json(data) -> LacingDiagram:
    """Accepts {"sizes", "maps"} or a bare list of partial permutations (n >= 1)."""
    if isinstance(data, list):
        maps = tuple(partial_from_json(item) for item in data)
        if not maps:
            raise DimensionMismatch("A bare list of maps needs at least one map; use {\"sizes\", \"maps\"}")
        sizes = (maps[0].rows,) + tuple(w.cols for w in maps)
        return LacingDiagram(sizes, maps)
    return LacingDiagram(
        tuple(_require(data, "sizes")),
        tuple(partial_from_json(item) for item in _require(data, "maps")),
    )


def pipedream_to_json(D: PipeDream) -> dict:
    return {"d": D.d, "crosses": [list(b) for b in sorted(D.crosses)]}


def pipedream_from_json(data) -> PipeDream:
    return PipeDream(int(_require(data, "d")), frozenset(tuple(b) for b in _require(data, "crosses")))


# ── Polynomials and expansions ───────────────────────────────


def poly_to_json(p: MVPoly) -> dict:
    return {
        "terms": [
            {"mono": {v.name: e for v, e in mono}, "coeff": str(c)}
            for mono, c in p.sorted_terms()
        ]
    }


def poly_from_json(data) -> MVPoly:
    terms: dict = {}
    for term in _require(data, "terms"):
        mono = tuple(sorted((parse_var(name), int(e)) for name, e in term["mono"].items() if int(e)))
        terms[mono] = terms.get(mono, 0) + int(term["coeff"])
    return MVPoly(terms)


def _shape_to_json(key) -> list:
    return [list(part) if isinstance(part, tuple) else part for part in key]


def expansion_to_json(expansion: SchurExpansion) -> dict:
    """Keys may be partitions or tuples of partitions."""
    return {
        "terms": [
            {"partition": _shape_to_json(key), "coeff": c}
            for key, c in sorted(expansion.items())
        ]
    }


def expansion_from_json(data) -> SchurExpansion:
    out: SchurExpansion = {}
    for term in _require(data, "terms"):
        shape = term["partition"]
        if shape and isinstance(shape[0], list):
            key = tuple(make_partition(part) for part in shape)
        else:
            key = make_partition(shape)
        out[key] = out.get(key, 0) + int(term["coeff"])
    return out


def printed_to_json(printed: dict) -> dict:
    return {"terms": [{"mu": list(mu), "poly": poly_to_json(p)} for mu, p in sorted(printed.items())]}


def printed_from_json(data) -> dict:
    return {make_partition(t["mu"]): poly_from_json(t["poly"]) for t in _require(data, "terms")}


def table_to_json(table: CoeffTable) -> dict:
    entries = []
    for u in sorted(table.entries, key=lambda u: u.one_line):
        row = table.entries[u]
        if not row:
            entries.append({"u": signed_to_json(u), "mu": [], "value": 0})
        for mu, value in sorted(row.items()):
            entries.append({"u": signed_to_json(u), "mu": list(mu), "value": value})
    return {"entries": entries}


def table_from_json(data) -> CoeffTable:
    table = CoeffTable()
    for entry in _require(data, "entries"):
        table.set(signed_from_json(entry["u"]), tuple(entry["mu"]), int(entry["value"]))
    return table


def split_to_json(result: SplitResult) -> dict:
    return {
        "power_of_two": result.power_of_two,
        "terms": [
            {"mu": list(mu), "lambda": [list(shape) for shape in lam], "coeff": c}
            for (mu, lam), c in sorted(result.coefficients.items())
        ],
    }
