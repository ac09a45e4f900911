"""SplitMix64, the only source of randomness in the library.

State update and output mixing (all arithmetic mod 2**64)::

    state += 0x9E3779B97F4A7C15
    z = state
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9
    z = (z ^ (z >> 27)) * 0x94D049BB133111EB
    return z ^ (z >> 31)

``below(n)`` is ``next() % n``; the modulo bias is irrelevant at the sizes
used here and keeps the stream trivially reproducible in other languages.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence, TypeVar

MASK = (1 << 64) - 1
GOLDEN = 0x9E3779B97F4A7C15

T = TypeVar("T")


class SplitMix64:
    __slots__ = ("state",)

    def __init__(self, seed: int):
        self.state = seed & MASK

    def next(self) -> int:
        self.state = (self.state + GOLDEN) & MASK
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK
        return z ^ (z >> 31)

    def below(self, n: int) -> int:
        if n <= 0:
            raise ValueError("below() needs a positive bound")
        return self.next() % n

    def choice(self, items: Sequence[T]) -> T:
        return items[self.below(len(items))]

    def small_int(self, lo: int = -2, hi: int = 2) -> int:
        return lo + self.below(hi - lo + 1)

    def small_rational(self) -> Fraction:
        return Fraction(self.small_int(), 1)


def case_seeds(seed: int, cases: int) -> list[int]:
    """Per-case seeds: the first ``cases`` outputs of ``SplitMix64(seed)``."""
    g = SplitMix64(seed)
    return [g.next() for _ in range(cases)]
