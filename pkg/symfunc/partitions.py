"""Partitions and semistandard tableaux."""

from __future__ import annotations

from typing import Iterable, Iterator

from core.errors import NonStrictPartition

Partition = tuple[int, ...]


def make_partition(parts: Iterable[int]) -> Partition:
    """Drops zeros and checks the parts weakly decrease."""
    p = tuple(int(v) for v in parts if v)
    if any(v < 0 for v in p) or any(p[i] < p[i + 1] for i in range(len(p) - 1)):
        raise ValueError(f"Not a partition: {list(parts)}")
    return p


def is_strict(p: Partition) -> bool:
    return all(p[i] > p[i + 1] for i in range(len(p) - 1))


def require_strict(p: Partition) -> Partition:
    p = make_partition(p)
    if not is_strict(p):
        raise NonStrictPartition(f"Partition {list(p)} has repeated parts")
    return p


def conjugate(p: Partition) -> Partition:
    if not p:
        return ()
    return tuple(sum(1 for v in p if v > i) for i in range(p[0]))


def partitions_of(n: int, max_part: int | None = None) -> Iterator[Partition]:
    """All partitions of n, largest first."""
    max_part = n if max_part is None else max_part
    if n == 0:
        yield ()
        return
    for first in range(min(n, max_part), 0, -1):
        for rest in partitions_of(n - first, first):
            yield (first,) + rest


def strict_partitions_of(n: int, max_part: int | None = None) -> Iterator[Partition]:
    max_part = n if max_part is None else max_part
    if n == 0:
        yield ()
        return
    for first in range(min(n, max_part), 0, -1):
        for rest in strict_partitions_of(n - first, first - 1):
            yield (first,) + rest


def semistandard_tableaux(shape: Partition, max_entry: int, min_entry: int = 1) -> Iterator[tuple[tuple[int, ...], ...]]:
    """Fillings of shape with entries in [min_entry, max_entry], rows weak, columns strict."""
    shape = make_partition(shape)
    cells = [(r, c) for r, length in enumerate(shape) for c in range(length)]
    if len(shape) > max_entry - min_entry + 1:
        return
    tableau = [[0] * length for length in shape]

    def backtrack(pos: int) -> Iterator[tuple[tuple[int, ...], ...]]:
        if pos == len(cells):
            yield tuple(tuple(row) for row in tableau)
            return
        row, col = cells[pos]
        low = min_entry
        if col > 0:
            low = max(low, tableau[row][col - 1])
        if row > 0:
            low = max(low, tableau[row - 1][col] + 1)
        # leave room for the strictly increasing entries below
        high = max_entry - (sum(1 for length in shape[row + 1:] if length > col))
        for val in range(low, high + 1):
            tableau[row][col] = val
            yield from backtrack(pos + 1)
        tableau[row][col] = 0

    yield from backtrack(0)
