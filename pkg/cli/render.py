"""ASCII renderings for pipe dreams, lacing diagrams and polynomials."""

from __future__ import annotations

from permcore.partial import PartialPermutation
from polyring.mvpoly import MVPoly, to_string
from quiverlab.lacing import LacingDiagram
from rcgraph.pipedream import PipeDream, render


def render_pipedream(D: PipeDream) -> str:
    return render(D)


def render_partial(rho: PartialPermutation) -> str:
    return "\n".join(" ".join(str(v) for v in row) for row in rho.to_matrix())


def render_lacing(W: LacingDiagram) -> str:
    """Bottom-justified columns of 'o' vertices, then one line per lace."""
    height = max(W.sizes, default=0)
    lines = []
    for level in range(height, 0, -1):
        lines.append("  ".join("o" if size >= level else " " for size in W.sizes).rstrip())
    lines.append("  ".join(str(k) for k in range(len(W.sizes))))
    for start, path in W.laces():
        end = start + len(path) - 1
        lines.append(f"({start},{end}): " + " - ".join(str(v) for v in path))
    return "\n".join(lines)


def render_poly(p: MVPoly) -> str:
    return to_string(p)
