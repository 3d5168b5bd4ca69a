import json
import sys
from itertools import permutations
from pathlib import Path

import pytest

ROOT = Path(__file__).resolve().parent.parent
sys.path.insert(0, str(ROOT))

from quiverlab.lacing import LacingDiagram  # noqa: E402
from quiverlab.ranks import RankConditions  # noqa: E402
from permcore.partial import PartialPermutation  # noqa: E402
from permcore.permutation import Permutation  # noqa: E402

DATA = ROOT / "data"


@pytest.fixture
def data_dir() -> Path:
    return DATA


@pytest.fixture
def ranks_2342() -> RankConditions:
    raw = json.loads((DATA / "ranks_2342.json").read_text())
    return RankConditions(raw["n"], tuple(tuple(row) for row in raw["r"]))


@pytest.fixture
def lacing_2342() -> LacingDiagram:
    return LacingDiagram(
        (2, 3, 4, 2),
        (
            PartialPermutation(2, 3, frozenset({(1, 1)})),
            PartialPermutation(3, 4, frozenset({(2, 1), (3, 2)})),
            PartialPermutation(4, 2, frozenset({(1, 1)})),
        ),
    )


@pytest.fixture
def tiny_ranks() -> RankConditions:
    return RankConditions(1, ((1, 0), (1,)))


@pytest.fixture(autouse=True)
def _clean_guard_env(monkeypatch):
    for key in (
        "QUIVERLAB_MAX_LENGTH",
        "QUIVERLAB_MAX_DIM",
        "QUIVERLAB_MAX_RESULTS",
        "QUIVERLAB_MAX_GUARD",
    ):
        monkeypatch.delenv(key, raising=False)


def _completions(rho: PartialPermutation):
    """Every w in S_{a+b} whose NW a x b block is rho, by brute force."""
    n = rho.rows + rho.cols
    for line in permutations(range(1, n + 1)):
        w = Permutation(line)
        if PartialPermutation.nw_block(w, rho.rows, rho.cols) == rho:
            yield w


@pytest.fixture
def completions():
    return _completions
