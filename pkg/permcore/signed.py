"""Signed permutations: the hyperoctahedral group B_n and its even subgroup D_n."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from core.errors import NotAPermutation
from permcore.permutation import Permutation, _weak_prefixes

HAT_ZERO = -1  # letter for s_0-hat = s_0 s_1 s_0 in type D words


@dataclass(frozen=True)
class SignedPermutation:
    one_line: tuple[int, ...]

    def __post_init__(self):
        line = tuple(int(v) for v in self.one_line)
        if sorted(abs(v) for v in line) != list(range(1, len(line) + 1)):
            raise NotAPermutation(f"Not a signed permutation of 1..{len(line)}: {list(line)}")
        object.__setattr__(self, "one_line", line)

    @classmethod
    def identity(cls, n: int) -> SignedPermutation:
        return cls(tuple(range(1, n + 1)))

    @classmethod
    def from_permutation(cls, w: Permutation) -> SignedPermutation:
        return cls(w.one_line)

    @classmethod
    def from_word(cls, word: Iterable[int], n: int) -> SignedPermutation:
        w = cls.identity(n)
        for g in word:
            w = w.times_generator(g)
        return w

    @property
    def n(self) -> int:
        return len(self.one_line)

    def __call__(self, i: int) -> int:
        if i < 0:
            return -self(-i)
        return self.one_line[i - 1] if i <= self.n else i

    def __mul__(self, other: SignedPermutation) -> SignedPermutation:
        size = max(self.n, other.n)
        return SignedPermutation(tuple(self(other(i)) for i in range(1, size + 1)))

    def inverse(self) -> SignedPermutation:
        inv = [0] * self.n
        for i, v in enumerate(self.one_line, 1):
            inv[abs(v) - 1] = i if v > 0 else -i
        return SignedPermutation(tuple(inv))

    def identity_like(self) -> SignedPermutation:
        return SignedPermutation.identity(self.n)

    def times_generator(self, g: int) -> SignedPermutation:
        """Right multiplication by s_g. g = 0 negates the first entry; g = HAT_ZERO applies s_0 s_1 s_0."""
        line = list(self.one_line)
        if g == 0:
            line[0] = -line[0]
        elif g == HAT_ZERO:
            if self.n < 2:
                raise NotAPermutation("s_0-hat needs n >= 2")
            line[0], line[1] = -line[1], -line[0]
        elif 1 <= g < self.n:
            line[g - 1], line[g] = line[g], line[g - 1]
        else:
            raise NotAPermutation(f"s_{g} is not a generator of B_{self.n}")
        return SignedPermutation(tuple(line))

    def generators(self, kind: str = "B") -> list[int]:
        first = [0] if kind == "B" else ([HAT_ZERO] if self.n >= 2 else [])
        return first + list(range(1, self.n))

    # ── Statistics ────────────────────────────────────────────

    def inversions(self) -> int:
        line = self.one_line
        return sum(1 for i in range(self.n) for j in range(i + 1, self.n) if line[i] > line[j])

    def negative_sum_pairs(self) -> int:
        line = self.one_line
        return sum(1 for i in range(self.n) for j in range(i + 1, self.n) if line[i] + line[j] < 0)

    def sign_changes(self) -> int:
        """s(w): the number of negative entries."""
        return sum(1 for v in self.one_line if v < 0)

    def length(self, kind: str = "B") -> int:
        base = self.inversions() + self.negative_sum_pairs()
        return base + self.sign_changes() if kind == "B" else base

    def in_d(self) -> bool:
        return self.sign_changes() % 2 == 0

    def is_unsigned(self) -> bool:
        return all(v > 0 for v in self.one_line)

    def to_permutation(self) -> Permutation:
        if not self.is_unsigned():
            raise NotAPermutation(f"{list(self.one_line)} changes signs")
        return Permutation(self.one_line)

    def descents(self) -> set[int]:
        """Right descents at the simple transpositions s_i, i >= 1."""
        line = self.one_line
        return {i for i in range(1, self.n) if line[i - 1] > line[i]}

    def type_descents(self, kind: str = "B") -> set[int]:
        desc = self.descents()
        if kind == "B" and self.one_line[0] < 0:
            desc.add(0)
        if kind == "D" and self.n >= 2 and self.one_line[0] + self.one_line[1] < 0:
            desc.add(HAT_ZERO)
        return desc

    def weak_prefixes(self, kind: str = "B") -> list[SignedPermutation]:
        return _weak_prefixes(
            self,
            lambda u: u.length(kind),
            lambda u: u.generators(kind),
            lambda u, g: u.times_generator(g),
        )

    def __repr__(self) -> str:
        return f"SignedPermutation({list(self.one_line)})"


def unsigned_slot(u) -> bool:
    """Slot constraint v in S_n inside B_n."""
    return u.is_unsigned()
