"""Small portable pseudo-random generator.

SplitMix64: the state advances by ``0x9E3779B97F4A7C15`` (mod 2**64) and each
output is the advanced state passed through the standard SplitMix64 mixer.
``below(n)`` is ``next() % n``. ``shuffle`` is Fisher-Yates running ``i``
from ``len - 1`` down to ``1`` and swapping position ``i`` with
``below(i + 1)``. Anything re-implementing these three rules reproduces the
same draws for the same seed.
"""

from __future__ import annotations

from collections.abc import MutableSequence

_MASK = (1 << 64) - 1


class SplitMix64:
    def __init__(self, seed: int):
        self.state = seed & _MASK

    def next(self) -> int:
        self.state = (self.state + 0x9E3779B97F4A7C15) & _MASK
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK
        return z ^ (z >> 31)

    def below(self, n: int) -> int:
        if n <= 0:
            raise ValueError("below() needs a positive bound")
        return self.next() % n

    def shuffle(self, items: MutableSequence) -> None:
        for i in range(len(items) - 1, 0, -1):
            j = self.below(i + 1)
            items[i], items[j] = items[j], items[i]
