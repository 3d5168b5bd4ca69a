"""Single and double Schubert polynomials."""

from __future__ import annotations

import logging
from functools import lru_cache

from core.config import Guards, resolve
from permcore.permutation import Permutation
from polyring.mvpoly import ONE, MVPoly, divided_difference, product, total
from polyring.variables import x, y

logger = logging.getLogger(__name__)


def staircase(d: int, double: bool) -> MVPoly:
    """S_{w0} = prod_{i+j<=d} (x_i - y_j), or prod x_i^{d-i} when single."""
    if not double:
        return MVPoly.monomial({x(i): d - i for i in range(1, d)})
    return product(
        MVPoly.var(x(i)) - MVPoly.var(y(j)) for i in range(1, d) for j in range(1, d - i + 1)
    )


@lru_cache(maxsize=4096)
def _by_divided_differences(line: tuple[int, ...], double: bool) -> MVPoly:
    w = Permutation(line)
    d = w.d
    if line == tuple(range(d, 0, -1)):
        return staircase(d, double)
    # S_w = d_i S_{w s_i} for any ascent i of w
    i = next(i for i in range(1, d) if line[i - 1] < line[i])
    return divided_difference(_by_divided_differences(w.times_generator(i).one_line, double), i)


def _by_pipe_dreams(w: Permutation, double: bool, guards: Guards | None) -> MVPoly:
    from rcgraph.pipedream import cross_weight, enumerate_rc

    return total(cross_weight(D.crosses, double) for D in enumerate_rc(w, guards=guards))


def _schubert(w: Permutation, d: int | None, double: bool, method: str, guards: Guards | None) -> MVPoly:
    d = w.d if d is None else d
    w = w.padded(d)
    if w == Permutation.identity(d):
        return ONE
    if method == "pipes":
        return _by_pipe_dreams(w, double, guards)
    if method != "divided":
        raise ValueError(f"Unknown Schubert method: {method}")
    # S_w does not see trailing fixed points, so recurse in the smallest S_e holding w
    effective = max(i for i in range(1, d + 1) if w(i) != i)
    resolve(guards).check("max_dim", effective)
    result = _by_divided_differences(w.truncated(effective).one_line, double)
    logger.debug("schubert %r double=%s: %d terms", w, double, len(result))
    return result


def schubert_single(w: Permutation, d: int | None = None, guards: Guards | None = None, method: str = "divided") -> MVPoly:
    return _schubert(w, d, False, method, guards)


def schubert_double(w: Permutation, d: int | None = None, guards: Guards | None = None, method: str = "divided") -> MVPoly:
    """S_w(X;Y). method="pipes" sums prod (x_i - y_j) over RC(w) instead of recursing."""
    return _schubert(w, d, True, method, guards)
