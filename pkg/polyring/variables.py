"""Structured variable names: x_i, y_j, z_k and blocked alphabets x^i_alpha, y^i_beta."""

from __future__ import annotations

import re
from typing import NamedTuple

ALPHABETS = ("x", "y", "z")
NO_BLOCK = -1

_NAME_RE = re.compile(r"^([xyz])(\d+)(?:_(\d+))?$")


class VarId(NamedTuple):
    """Variables are ordered by alphabet (x < y < z), then block (unblocked first), then position."""

    alphabet: str
    block: int
    position: int

    @property
    def name(self) -> str:
        if self.block == NO_BLOCK:
            return f"{self.alphabet}{self.position}"
        return f"{self.alphabet}{self.block}_{self.position}"

    def __str__(self) -> str:
        return self.name


def x(position: int, block: int = NO_BLOCK) -> VarId:
    return VarId("x", block, position)


def y(position: int, block: int = NO_BLOCK) -> VarId:
    return VarId("y", block, position)


def z(position: int) -> VarId:
    return VarId("z", NO_BLOCK, position)


def parse_var(name: str) -> VarId:
    """'x3' -> x_3, 'x0_1' -> x^0_1 (block 0, position 1)."""
    m = _NAME_RE.match(name.strip())
    if not m:
        raise ValueError(f"Bad variable name: {name!r}")
    alphabet, first, second = m.groups()
    if second is None:
        return VarId(alphabet, NO_BLOCK, int(first))
    return VarId(alphabet, int(first), int(second))


def alphabet(letter: str, count: int, block: int = NO_BLOCK, start: int = 1) -> list[VarId]:
    """The variables letter_start, ..., letter_{start+count-1} of one block."""
    return [VarId(letter, block, p) for p in range(start, start + count)]
